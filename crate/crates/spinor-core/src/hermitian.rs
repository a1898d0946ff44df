//! The dictionary between world vectors and 2×2 Hermitian matrices.

use nalgebra::Matrix2;

use crate::error::CoreError;
use crate::vector::FourVector;
use crate::{C64, FRAC_1_SQRT_2};

/// H(v) = (1/√2)(v⁰·1 + v¹σ₁ + v²σ₂ᵀ + v³σ₃).
///
/// Explicitly
///
/// ```text
/// H = (1/√2) [ v⁰+v³      v¹+iv² ]
///            [ v¹−iv²     v⁰−v³  ]
/// ```
///
/// so that det H = (1/2) v·v and, for a flagpole k of κ = (ξ, η),
/// H(k)_{rs} = κ_r κ̄_s (row unprimed, column primed).  With that index
/// placement the spinor action κ ↦ Lκ corresponds exactly to H ↦ L H L†.
pub fn vector_to_hermitian(v: &FourVector) -> Matrix2<C64> {
    let s = FRAC_1_SQRT_2;
    Matrix2::new(
        C64::new(s * (v.t + v.z), 0.0),
        C64::new(s * v.x, s * v.y),
        C64::new(s * v.x, -s * v.y),
        C64::new(s * (v.t - v.z), 0.0),
    )
}

/// Inverse of [`vector_to_hermitian`] for Hermitian input.
///
/// Errors if the Hermiticity defect exceeds `1e-9` relative to the matrix
/// magnitude.
pub fn hermitian_to_vector(h: &Matrix2<C64>) -> Result<FourVector, CoreError> {
    let scale: f64 = h.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0e-300);
    let defect = (h[(0, 0)].im.abs())
        .max(h[(1, 1)].im.abs())
        .max((h[(0, 1)] - h[(1, 0)].conj()).norm());
    if defect > 1e-9 * scale {
        return Err(CoreError::NotHermitian(defect / scale));
    }
    Ok(hermitian_to_vector_unchecked(h))
}

/// Same linear map as [`hermitian_to_vector`] but without the Hermiticity
/// check, keeping only the real parts the inversion formula produces.
pub fn hermitian_to_vector_unchecked(h: &Matrix2<C64>) -> FourVector {
    let s = FRAC_1_SQRT_2;
    let t = s * (h[(0, 0)].re + h[(1, 1)].re);
    let z = s * (h[(0, 0)].re - h[(1, 1)].re);
    let x = s * (h[(0, 1)] + h[(1, 0)]).re;
    // H₀₁ − H₁₀ = √2 i v² for Hermitian H.
    let y = s * (h[(0, 1)] - h[(1, 0)]).im;
    FourVector::new(t, x, y, z)
}
