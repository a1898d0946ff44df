//! Compatibility test between scalar-pair states and the linear-EPR form.
//!
//! A helicity-diagonal two-photon state is described by functions
//! F₊(π(k)·π(k′)) and F₋(π̄(k)·π̄(k′)) that must be homogeneous of degree 2
//! under phase rotation of their argument.  The state has the maximally
//! correlated linear-polarization form precisely when
//!
//! ```text
//! F₋(π̄π̄′) = ±F₊(ππ′) · e^{2i[θ(k) + θ(k′)]}
//! ```
//!
//! for some per-momentum angle rule θ.  The residual returned here is the
//! best (over the ± sign) worst-case violation on a sample set; a strictly
//! positive residual certifies incompatibility.

use spinor_core::{contract, C64};

use crate::error::PhotonError;
use crate::momentum::NullMomentum;
use crate::pi::pi_of_k;

/// A helicity amplitude function z ↦ F(z), required to satisfy
/// F(e^{iφ}z) = e^{2iφ}F(z).
pub type HelicityFn<'a> = &'a (dyn Fn(C64) -> C64 + Sync);

/// A per-momentum polarization angle rule.
pub type AngleRule<'a> = &'a (dyn Fn(&NullMomentum) -> f64 + Sync);

fn homogeneity_residual(f: HelicityFn, z: C64) -> f64 {
    let mut worst: f64 = 0.0;
    for phi in [0.7, 1.9, -2.3] {
        let rot = C64::from_polar(1.0, phi);
        let lhs = f(rot * z);
        let rhs = C64::from_polar(1.0, 2.0 * phi) * f(z);
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

/// Worst-case violation of the linear-EPR condition over the sample pairs,
/// minimized over the overall ± sign.
pub fn linear_epr_condition(
    fplus: HelicityFn,
    fminus: HelicityFn,
    theta: AngleRule,
    samples: &[(NullMomentum, NullMomentum)],
) -> Result<f64, PhotonError> {
    let mut worst_plus: f64 = 0.0;
    let mut worst_minus: f64 = 0.0;
    for (k, kp) in samples {
        let z = contract(&pi_of_k(k)?, &pi_of_k(kp)?);
        let zbar = z.conj();
        let scale = 1.0 + fplus(z).norm().max(fminus(zbar).norm());
        let h = homogeneity_residual(fplus, z).max(homogeneity_residual(fminus, zbar));
        if h > 1e-8 * scale {
            return Err(PhotonError::HomogeneityViolated(h));
        }
        let phase = C64::from_polar(1.0, 2.0 * (theta(k) + theta(kp)));
        let rhs = fplus(z) * phase;
        let lhs = fminus(zbar);
        worst_plus = worst_plus.max((lhs - rhs).norm());
        worst_minus = worst_minus.max((lhs + rhs).norm());
    }
    Ok(worst_plus.min(worst_minus))
}
