//! Circular/linear polarization amplitude conversions and the rotation of
//! linear amplitudes induced by a phase Θ.

use nalgebra::Matrix2;
use spinor_core::{C64, FRAC_1_SQRT_2};

/// Linear amplitudes (α₁, α₂) → circular amplitudes:
/// α(±) = (1/√2)(α₁ ± i α₂).
pub fn pol_convert(a1: C64, a2: C64) -> (C64, C64) {
    let i = C64::new(0.0, 1.0);
    (FRAC_1_SQRT_2 * (a1 + i * a2), FRAC_1_SQRT_2 * (a1 - i * a2))
}

/// Inverse of [`pol_convert`].
pub fn pol_invert(aplus: C64, aminus: C64) -> (C64, C64) {
    let i = C64::new(0.0, 1.0);
    (FRAC_1_SQRT_2 * (aplus + aminus), -i * FRAC_1_SQRT_2 * (aplus - aminus))
}

/// The 2×2 rotation by 2Θ applied to linear amplitude pairs (α₁, α₂):
/// a phase Θ on the circular amplitudes rotates the linear plane by 2Θ.
pub fn rotate_linear(theta: f64) -> Matrix2<f64> {
    let (s, c) = (2.0 * theta).sin_cos();
    Matrix2::new(c, -s, s, c)
}
