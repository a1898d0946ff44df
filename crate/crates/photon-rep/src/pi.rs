//! The spinor field π(k) on the light cone and the phase Θ(Λ, k) picked up
//! by the little-group action.
//!
//! For a fixed phase rule k ↦ π(k) with flagpole k, the transformed spinor
//! L·π(Λ⁻¹k) also has flagpole k, so the two differ by a pure phase:
//!
//! ```text
//! L π(Λ⁻¹k) = e^{iΘ(Λ,k)} π(k).
//! ```
//!
//! Θ is read off through any spin-frame partner ω of π(k) (ω_A π^A = 1):
//! Θ = arg(ω_A (Λπ)^A), independent of the choice of partner because
//! π_A (Λπ)^A = 0.

use spinor_core::{contract, spinor_from_flagpole, TwoSpinor, C64, SL2C};

use crate::error::PhotonError;
use crate::momentum::NullMomentum;

/// Deterministic spinor square root of a null momentum:
/// flagpole(π(k)) = k, with the first nonzero component real-positive
/// (for k⃗ ∥ −z the first component vanishes and the second carries the
/// convention).
pub fn pi_of_k(k: &NullMomentum) -> Result<TwoSpinor, PhotonError> {
    Ok(spinor_from_flagpole(&k.k, 0.0)?)
}

/// A spin-frame partner of π: any ω with ω_A π^A = contract(ω, π) = 1.
/// Chooses the better-conditioned coordinate direction and rescales.
pub fn partner_of(pi: &TwoSpinor) -> Result<TwoSpinor, PhotonError> {
    let e0 = TwoSpinor::from_reals(1.0, 0.0, 0.0, 0.0);
    let e1 = TwoSpinor::from_reals(0.0, 0.0, 1.0, 0.0);
    let c0 = contract(&e0, pi);
    let c1 = contract(&e1, pi);
    let (e, c) = if c0.norm() >= c1.norm() { (e0, c0) } else { (e1, c1) };
    if c.norm() == 0.0 {
        return Err(PhotonError::Core(spinor_core::CoreError::ZeroSpinor));
    }
    Ok(e.scale(1.0 / c))
}

/// The phase Θ(Λ, k), stored modulo 2π in (−π, π].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerPhase {
    pub theta: f64,
}

impl WignerPhase {
    /// e^{iΘ} as a unit complex number.
    pub fn phase(&self) -> C64 {
        C64::from_polar(1.0, self.theta)
    }
}

/// Θ(Λ, k) from the defining relation L π(Λ⁻¹k) = e^{iΘ} π(k).
///
/// Depends only on the direction of k⃗, and satisfies the composition
/// identity Θ(L₁L₂, k) = Θ(L₁, k) + Θ(L₂, Λ₁⁻¹k) (mod 2π).
pub fn wigner_phase(l: &SL2C, k: &NullMomentum) -> Result<WignerPhase, PhotonError> {
    let pi_k = pi_of_k(k)?;
    let omega = partner_of(&pi_k)?;
    let kq = NullMomentum::new(l.inverse().act_vector(&k.k))?;
    let lam_pi = l.act(&pi_of_k(&kq)?);
    Ok(WignerPhase { theta: contract(&omega, &lam_pi).arg() })
}
