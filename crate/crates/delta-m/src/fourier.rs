//! Fourier transform of the M-shaped bump and finite-width plane waves.

use num_complex::Complex64;

use crate::shape::{integrate_against, DeltaParams};

/// δ̂(x, a, ε) = (1/2π)∫δ(k,a,ε)e^{ikx}dk, in closed form:
///
/// ```text
/// δ̂ = (8/π) · [εa + (4 − εa)cos(εx/4)] · sin²(εx/8) / (ε²x²)
/// ```
///
/// The removable singularity at x = 0 (and the whole region |εx| < 1e−4)
/// is evaluated by a series expansion.  δ̂(0) = 1/(2π) for every (a, ε),
/// and δ̂ → 1/(2π) pointwise as ε → 0.
pub fn delta_hat(x: f64, prm: &DeltaParams) -> f64 {
    let (a, e) = (prm.a, prm.eps);
    let u = e * x / 4.0;
    let amp = e * a + (4.0 - e * a) * u.cos();
    if (e * x).abs() < 1e-4 {
        // (1 − cos u)/u² = 1/2 − u²/24 + u⁴/720 − …
        let u2 = u * u;
        let series = 0.5 - u2 / 24.0 + u2 * u2 / 720.0;
        amp * series / (4.0 * std::f64::consts::PI)
    } else {
        // sin²(u/2) = (1 − cos u)/2 and ε²x² = 16u² recover the closed form
        (8.0 / std::f64::consts::PI) * amp * (0.5 * u).sin().powi(2) / (e * e * x * x)
    }
}

/// Quadrature evaluation of the same transform (oracle for tests):
/// the bump is even, so the transform reduces to a cosine integral.
pub fn delta_hat_quadrature(x: f64, prm: &DeltaParams) -> f64 {
    integrate_against(|k| (k * x).cos(), prm, 256) / (2.0 * std::f64::consts::PI)
}

/// The finite-width plane wave ⟨x|k, ε⟩ = 2π δ̂(x, a, ε) e^{ikx}.
pub fn plane_wave(x: f64, k: f64, prm: &DeltaParams) -> Complex64 {
    2.0 * std::f64::consts::PI
        * delta_hat(x, prm)
        * Complex64::from_polar(1.0, k * x)
}
