//! Mode operators on the truncated space.
//!
//! Per cell i and circular polarization s there is one oscillator mode per
//! tensor slot; the N-slot operators are
//!
//! ```text
//! a(s,i,N)  = N^{−1/2} Σ_slots a(s,i,1)^{(slot)}      (and its adjoint),
//! n(s,i,N)  = Σ_slots n(s,i,1)^{(slot)},
//! 1(i,N)    = N^{−1}  Σ_slots 1(i,1)^{(slot)},
//! ```
//!
//! so that [a(s,i,N), a†(s′,j,N)] = δ_ss′ δ_ij 1(i,N) away from the
//! truncation edge and Σ_i 1(i,N) is the identity exactly. Linear
//! polarization analyzers are number-operator differences of the rotated
//! modes a_θ = a₁cos θ − a₂sin θ and a_{θ+π/2}.

use num_complex::Complex64 as C64;

use epr_engine::DetectorRegion;
use spinor_core::FourVector;

use crate::error::OracleError;
use crate::ops::SparseOp;
use crate::space::{OracleSpace, Pol};

/// Single-slot annihilation operator of mode (cell, pol), including the
/// cell projector |i⟩⟨i|.
pub fn lower1(space: &OracleSpace, cell: usize, pol: Pol) -> SparseOp {
    let d = space.factor_dim;
    let mut cols: Vec<Vec<(usize, C64)>> = vec![Vec::new(); d];
    for (j, col) in cols.iter_mut().enumerate() {
        let (ci, np, nm) = space.decode1(j);
        if ci != cell {
            continue;
        }
        match pol {
            Pol::Plus if np >= 1 => {
                col.push((space.idx1(ci, np - 1, nm), C64::new((np as f64).sqrt(), 0.0)));
            }
            Pol::Minus if nm >= 1 => {
                col.push((space.idx1(ci, np, nm - 1), C64::new((nm as f64).sqrt(), 0.0)));
            }
            _ => {}
        }
    }
    SparseOp::from_cols(d, cols)
}

/// Single-slot number operator of mode (cell, pol).
pub fn number1(space: &OracleSpace, cell: usize, pol: Pol) -> SparseOp {
    let d = space.factor_dim;
    let mut cols: Vec<Vec<(usize, C64)>> = vec![Vec::new(); d];
    for (j, col) in cols.iter_mut().enumerate() {
        let (ci, np, nm) = space.decode1(j);
        if ci != cell {
            continue;
        }
        let n = match pol {
            Pol::Plus => np,
            Pol::Minus => nm,
        };
        if n > 0 {
            col.push((j, C64::new(n as f64, 0.0)));
        }
    }
    SparseOp::from_cols(d, cols)
}

/// Single-slot cell projector |i⟩⟨i| ⊗ 1 (both modes, all occupations).
pub fn cell_identity1(space: &OracleSpace, cell: usize) -> SparseOp {
    let d = space.factor_dim;
    let mut cols: Vec<Vec<(usize, C64)>> = vec![Vec::new(); d];
    for (j, col) in cols.iter_mut().enumerate() {
        if space.decode1(j).0 == cell {
            col.push((j, C64::new(1.0, 0.0)));
        }
    }
    SparseOp::from_cols(d, cols)
}

/// Embed a one-factor operator at a tensor slot (identity elsewhere).
pub fn lift(space: &OracleSpace, op1: &SparseOp, slot: usize) -> SparseOp {
    assert_eq!(op1.dim, space.factor_dim);
    assert!(slot < space.big_n);
    let stride = space.factor_dim.pow(slot as u32);
    let mut cols: Vec<Vec<(usize, C64)>> = vec![Vec::new(); space.dim];
    for (j, col) in cols.iter_mut().enumerate() {
        let digit = (j / stride) % space.factor_dim;
        for (r1, v) in &op1.cols[digit] {
            col.push((j - digit * stride + r1 * stride, *v));
        }
    }
    SparseOp::from_cols(space.dim, cols)
}

/// Sum of slot embeddings of a one-factor operator, times a real factor.
fn slot_sum(space: &OracleSpace, op1: &SparseOp, factor: f64) -> SparseOp {
    let mut acc = SparseOp::zero(space.dim);
    for s in 0..space.big_n {
        acc = acc.add(&lift(space, op1, s));
    }
    acc.scale(C64::new(factor, 0.0))
}

/// a(s,i,N).
pub fn lower(space: &OracleSpace, cell: usize, pol: Pol) -> Result<SparseOp, OracleError> {
    space.check_cell(cell)?;
    Ok(slot_sum(space, &lower1(space, cell, pol), 1.0 / (space.big_n as f64).sqrt()))
}

/// a†(s,i,N).
pub fn raise(space: &OracleSpace, cell: usize, pol: Pol) -> Result<SparseOp, OracleError> {
    Ok(lower(space, cell, pol)?.adjoint())
}

/// n(s,i,N).
pub fn number(space: &OracleSpace, cell: usize, pol: Pol) -> Result<SparseOp, OracleError> {
    space.check_cell(cell)?;
    Ok(slot_sum(space, &number1(space, cell, pol), 1.0))
}

/// 1(i,N), the commutator unit of cell i; these sum to the identity.
pub fn cell_unit(space: &OracleSpace, cell: usize) -> Result<SparseOp, OracleError> {
    space.check_cell(cell)?;
    Ok(slot_sum(space, &cell_identity1(space, cell), 1.0 / space.big_n as f64))
}

/// Single-slot annihilation of the rotated linear mode
/// a_θ = a₁cos θ − a₂sin θ = (e^{iθ}a₊ + e^{−iθ}a₋)/√2.
fn rotated_lower1(space: &OracleSpace, cell: usize, theta: f64) -> SparseOp {
    let ap = lower1(space, cell, Pol::Plus);
    let am = lower1(space, cell, Pol::Minus);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ap.scale(C64::from_polar(h, theta)).add(&am.scale(C64::from_polar(h, -theta)))
}

/// Single-slot analyzer difference n_θ − n_{θ+π/2} on one cell.
pub fn analyzer1(space: &OracleSpace, cell: usize, theta: f64) -> SparseOp {
    let at = rotated_lower1(space, cell, theta);
    let atp = rotated_lower1(space, cell, theta + std::f64::consts::FRAC_PI_2);
    at.adjoint().mul(&at).sub(&atp.adjoint().mul(&atp))
}

/// Region analyzer Y_θ(Ω, N) = Σ_{i∈Ω} Σ_slots (n_θ − n_{θ+π/2})(i)^{(slot)}.
pub fn analyzer(
    space: &OracleSpace,
    region: &DetectorRegion,
    theta: f64,
) -> Result<SparseOp, OracleError> {
    if region.mask.len() != space.cells() {
        return Err(OracleError::RegionMismatch { mask: region.mask.len(), cells: space.cells() });
    }
    let mut acc = SparseOp::zero(space.dim);
    for (i, inside) in region.mask.iter().enumerate() {
        if *inside {
            acc = acc.add(&slot_sum(space, &analyzer1(space, i, theta), 1.0));
        }
    }
    Ok(acc)
}

/// Component a ∈ {0,1,2,3} of the translation-generator-weighted
/// helicity difference W_a(N) = Σ_i (k_i)_a (n₊(i,N) − n₋(i,N)).
pub fn pl_component(space: &OracleSpace, axis: usize) -> Result<SparseOp, OracleError> {
    assert!(axis < 4);
    let mut acc = SparseOp::zero(space.dim);
    for i in 0..space.cells() {
        let k: FourVector = space.profile.grid.cells[i].0.k;
        let ka = [k.t, k.x, k.y, k.z][axis];
        let diff = number(space, i, Pol::Plus)?.sub(&number(space, i, Pol::Minus)?);
        acc = acc.add(&diff.scale(C64::new(ka, 0.0)));
    }
    Ok(acc)
}
