//! Bispinors, sign-of-energy projectors, and spin-energy projectors in the
//! (ω, π) frame.
//!
//! A bispinor is stored by its four lower components (ψ_0, ψ_1, ψ_{0′},
//! ψ_{1′}); operators act as ordinary 4×4 matrices on that column.

use nalgebra::{Matrix2, Matrix4, Vector4};
use spinor_core::{vector_to_hermitian, TwoSpinor, C64};

use crate::error::MassiveError;
use crate::omega::OmegaFrame;

pub type Bispinor = Vector4<C64>;
pub type BispinorOp = Matrix4<C64>;

fn czero() -> C64 {
    C64::new(0.0, 0.0)
}

/// Outer product M[A][B] = a_A b^B from a lower-index and an upper-index
/// spinor.
fn outer(a_low: [C64; 2], b_up: [C64; 2]) -> Matrix2<C64> {
    Matrix2::new(
        a_low[0] * b_up[0],
        a_low[0] * b_up[1],
        a_low[1] * b_up[0],
        a_low[1] * b_up[1],
    )
}

/// Assemble a 4×4 operator from 2×2 blocks (unprimed-unprimed, unprimed-
/// primed, primed-unprimed, primed-primed).
fn blocks(uu: Matrix2<C64>, up: Matrix2<C64>, pu: Matrix2<C64>, pp: Matrix2<C64>) -> BispinorOp {
    let mut out = Matrix4::zeros();
    for r in 0..2 {
        for c in 0..2 {
            out[(r, c)] = uu[(r, c)];
            out[(r, c + 2)] = up[(r, c)];
            out[(r + 2, c)] = pu[(r, c)];
            out[(r + 2, c + 2)] = pp[(r, c)];
        }
    }
    out
}

/// Sign-of-energy projectors Π_±(p):
///
/// ```text
/// Π_± = (1/2) [ 1                    ∓(√2/m) p_A^{B′} ]
///             [ ±(√2/m) p^B_{A′}     1                ]
/// ```
pub fn sign_energy_projectors(frame: &OmegaFrame) -> Result<(BispinorOp, BispinorOp), MassiveError> {
    let m = frame.p.m;
    if m <= 0.0 {
        return Err(MassiveError::MasslessUnsupported);
    }
    let h = vector_to_hermitian(&frame.p.p); // p^{AB′}
    // Upper-right block, rows A, columns B′: p_A^{B′} = p^{CB′} ε_{CA}.
    let p_up_block = Matrix2::new(-h[(1, 0)], -h[(1, 1)], h[(0, 0)], h[(0, 1)]);
    // Lower-left block, rows A′, columns B: p^B_{A′} = p^{BC′} ε_{C′A′},
    // transposed into (row A′, column B) orientation.
    let p_pu_block = Matrix2::new(-h[(0, 1)], -h[(1, 1)], h[(0, 0)], h[(1, 0)]);
    let s = std::f64::consts::SQRT_2 / m;
    let id = Matrix2::<C64>::identity();
    let make = |sign: f64| {
        blocks(
            id.map(|z| 0.5 * z),
            p_up_block.map(|z| -0.5 * sign * s * z),
            p_pu_block.map(|z| 0.5 * sign * s * z),
            id.map(|z| 0.5 * z),
        )
    };
    Ok((make(1.0), make(-1.0)))
}

/// Spin projectors Π^{(±)}(ω, p) built from the frame:
/// unprimed blocks ω_A π^B and −π_A ω^B, primed blocks −π̄ ω̄ and ω̄ π̄.
pub fn spin_projectors(frame: &OmegaFrame) -> (BispinorOp, BispinorOp) {
    let om = frame.omega;
    let pi = frame.pi;
    let (omc, pic) = (om.conj(), pi.conj());
    let zero = Matrix2::from_element(czero());
    let plus = blocks(
        outer(om.lowered(), [pi.c0, pi.c1]),
        zero,
        zero,
        outer(pic.lowered(), [omc.c0, omc.c1]).map(|z| -z),
    );
    let minus = blocks(
        outer(pi.lowered(), [om.c0, om.c1]).map(|z| -z),
        zero,
        zero,
        outer(omc.lowered(), [pic.c0, pic.c1]),
    );
    (plus, minus)
}

/// The four spin-energy projectors (Π_+^{(+)}, Π_−^{(+)}, Π_+^{(−)}, Π_−^{(−)}):
/// products of the sign-of-energy and spin projectors.  Each is idempotent,
/// they are mutually orthogonal, and they sum to the identity.
pub fn spin_energy_projectors(frame: &OmegaFrame) -> Result<[BispinorOp; 4], MassiveError> {
    let (e_plus, e_minus) = sign_energy_projectors(frame)?;
    let (s_plus, s_minus) = spin_projectors(frame);
    Ok([e_plus * s_plus, e_minus * s_plus, e_plus * s_minus, e_minus * s_minus])
}

/// The projection ω·W as a bispinor operator: unprimed block
/// (1/2)(π_A ω^B + ω_A π^B), primed block −(1/2)(π̄ ω̄ + ω̄ π̄).
pub fn w_omega_operator(frame: &OmegaFrame) -> BispinorOp {
    let om = frame.omega;
    let pi = frame.pi;
    let (omc, pic) = (om.conj(), pi.conj());
    let zero = Matrix2::from_element(czero());
    let uu = (outer(pi.lowered(), [om.c0, om.c1]) + outer(om.lowered(), [pi.c0, pi.c1]))
        .map(|z| 0.5 * z);
    let pp = (outer(pic.lowered(), [omc.c0, omc.c1]) + outer(omc.lowered(), [pic.c0, pic.c1]))
        .map(|z| -0.5 * z);
    blocks(uu, zero, zero, pp)
}

/// Basis bispinors (φ_+^{(+)}, φ_−^{(+)}, φ_+^{(−)}, φ_−^{(−)}):
///
/// φ_±^{(+)} = (±(m/√2) ω_A, π̄_{A′}),  φ_±^{(−)} = (π_A, ∓(m/√2) ω̄_{A′}).
pub fn basis_bispinors(frame: &OmegaFrame) -> [Bispinor; 4] {
    let c = frame.p.m / std::f64::consts::SQRT_2;
    let om_low = frame.omega.lowered();
    let pi_low = frame.pi.lowered();
    let omc_low = frame.omega.conj().lowered();
    let pic_low = frame.pi.conj().lowered();
    let make_plus = |sign: f64| {
        Vector4::new(sign * c * om_low[0], sign * c * om_low[1], pic_low[0], pic_low[1])
    };
    let make_minus = |sign: f64| {
        Vector4::new(pi_low[0], pi_low[1], -sign * c * omc_low[0], -sign * c * omc_low[1])
    };
    [make_plus(1.0), make_plus(-1.0), make_minus(1.0), make_minus(-1.0)]
}

/// The seed bispinor φ = 2(π_A, π̄_{A′}) whose projections give the basis.
pub fn seed_bispinor(pi: &TwoSpinor) -> Bispinor {
    let low = pi.lowered();
    let clow = pi.conj().lowered();
    Vector4::new(2.0 * low[0], 2.0 * low[1], 2.0 * clow[0], 2.0 * clow[1])
}

#[cfg(test)]
fn op_norm(m: &BispinorOp) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
