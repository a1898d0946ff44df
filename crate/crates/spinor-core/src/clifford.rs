//! Weyl-representation gamma matrices built from the Hermitian dictionary,
//! and numerical checks of the Clifford relation.

use nalgebra::Matrix4;

use crate::hermitian::vector_to_hermitian;
use crate::vector::FourVector;
use crate::C64;

/// γ(q) in Weyl block form,
///
/// ```text
/// γ(q) = √2 [ 0        H(q)  ]
///           [ H(q̃)     0     ]
/// ```
///
/// with q̃ = (q⁰, −q⃗) the parity flip, so that {γ(q), γ(r)} = 2 (q·r)·1.
pub fn gamma(q: &FourVector) -> Matrix4<C64> {
    let s = std::f64::consts::SQRT_2;
    let h = vector_to_hermitian(q);
    let flipped = FourVector::new(q.t, -q.x, -q.y, -q.z);
    let ht = vector_to_hermitian(&flipped);
    let mut out = Matrix4::zeros();
    for r in 0..2 {
        for c in 0..2 {
            out[(r, c + 2)] = s * h[(r, c)];
            out[(r + 2, c)] = s * ht[(r, c)];
        }
    }
    out
}

/// ∞-norm of {γ(q), γ(r)} − 2 (q·r)·1; zero up to rounding for all q, r.
pub fn clifford_check(q: &FourVector, r: &FourVector) -> f64 {
    let (gq, gr) = (gamma(q), gamma(r));
    let anti = gq * gr + gr * gq;
    let target = Matrix4::<C64>::identity().map(|z| z * 2.0 * q.dot(r));
    (anti - target).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// ∞-norm check that the commutator [γ(q), γ(r)] is traceless and
/// anti-Hermitian-split as expected for generator blocks: returns the
/// magnitude of its trace (zero up to rounding).
pub fn commutator_check(q: &FourVector, r: &FourVector) -> f64 {
    let (gq, gr) = (gamma(q), gamma(r));
    let comm = gq * gr - gr * gq;
    comm.trace().norm()
}
