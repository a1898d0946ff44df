//! Two-spinors, ε-index gymnastics, and flagpoles.

use crate::error::CoreError;
use crate::vector::FourVector;
use crate::{C64, FRAC_1_SQRT_2};

/// A two-spinor stored by its upper-index components (κ⁰, κ¹).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinor {
    pub c0: C64,
    pub c1: C64,
}

impl TwoSpinor {
    pub fn new(c0: C64, c1: C64) -> Self {
        TwoSpinor { c0, c1 }
    }

    pub fn from_reals(r0: f64, i0: f64, r1: f64, i1: f64) -> Self {
        TwoSpinor::new(C64::new(r0, i0), C64::new(r1, i1))
    }

    /// Lower-index components κ_A = ε_{AB} κ^B with ε₀₁ = +1:
    /// κ₀ = −κ¹, κ₁ = κ⁰.
    pub fn lowered(&self) -> [C64; 2] {
        [-self.c1, self.c0]
    }

    /// Inverse of [`Self::lowered`]: given (κ₀, κ₁) return (κ⁰, κ¹) = (κ₁, −κ₀).
    pub fn from_lowered(l: [C64; 2]) -> Self {
        TwoSpinor::new(l[1], -l[0])
    }

    /// Component-wise complex conjugate (the primed-index partner κ̄).
    pub fn conj(&self) -> Self {
        TwoSpinor::new(self.c0.conj(), self.c1.conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        TwoSpinor::new(s * self.c0, s * self.c1)
    }

    pub fn add(&self, o: &TwoSpinor) -> Self {
        TwoSpinor::new(self.c0 + o.c0, self.c1 + o.c1)
    }

    /// Euclidean norm √(|κ⁰|² + |κ¹|²); vanishes only for the zero spinor.
    pub fn norm(&self) -> f64 {
        (self.c0.norm_sqr() + self.c1.norm_sqr()).sqrt()
    }

    /// The flagpole null vector of κ = (ξ, η):
    ///
    /// k = (1/√2) ( ξξ̄+ηη̄ , ξη̄+ηξ̄ , −i(ξη̄−ηξ̄) , ξξ̄−ηη̄ ).
    ///
    /// Always real, null, and future-pointing (k⁰ > 0 unless κ = 0).
    pub fn flagpole(&self) -> FourVector {
        let (xi, eta) = (self.c0, self.c1);
        let a = xi.norm_sqr();
        let b = eta.norm_sqr();
        let cross = xi * eta.conj(); // ξη̄
        FourVector::new(
            FRAC_1_SQRT_2 * (a + b),
            FRAC_1_SQRT_2 * 2.0 * cross.re,
            FRAC_1_SQRT_2 * 2.0 * cross.im,
            FRAC_1_SQRT_2 * (a - b),
        )
    }
}

/// The ε-contraction a_A b^A = a⁰b¹ − a¹b⁰ of two upper-index spinors.
///
/// Antisymmetric; vanishes exactly when a and b are proportional.
pub fn contract(a: &TwoSpinor, b: &TwoSpinor) -> C64 {
    a.c0 * b.c1 - a.c1 * b.c0
}

/// The complex "mixed flagpole" κ ⊗ λ̄ read back as a world vector:
/// same bilinear as the flagpole but with the second factor conjugated
/// from λ instead of κ.  For a spin-frame (o, ι) this yields the tetrad
/// leg m = mixed_flagpole(o, ι) with m·m̄ = −1.
pub fn mixed_flagpole(kappa: &TwoSpinor, lambda: &TwoSpinor) -> [C64; 4] {
    let (xi, eta) = (kappa.c0, kappa.c1);
    let (lc0, lc1) = (lambda.c0.conj(), lambda.c1.conj());
    let s = C64::new(FRAC_1_SQRT_2, 0.0);
    [
        s * (xi * lc0 + eta * lc1),
        s * (xi * lc1 + eta * lc0),
        s * C64::new(0.0, -1.0) * (xi * lc1 - eta * lc0),
        s * (xi * lc0 - eta * lc1),
    ]
}

/// Invert the flagpole map: find κ with the given null future-pointing
/// flagpole `k`, fixing the residual phase freedom so that the first
/// nonzero component of κ has argument `phase`.
///
/// Errors if `k` is not null within a relative tolerance of 1e−9 or not
/// future-pointing.
pub fn spinor_from_flagpole(k: &FourVector, phase: f64) -> Result<TwoSpinor, CoreError> {
    let scale = k.amax();
    if scale == 0.0 {
        return Err(CoreError::ZeroSpinor);
    }
    let norm2 = k.norm2();
    if norm2.abs() > 1e-9 * scale * scale || k.t <= 0.0 {
        return Err(CoreError::NotFutureNull { norm2, time: k.t });
    }
    // |ξ|² = (t+z)/√2, |η|² = (t−z)/√2, ξη̄ = (x+iy)/√2.
    let xi2 = ((k.t + k.z) * FRAC_1_SQRT_2).max(0.0);
    let eta2 = ((k.t - k.z) * FRAC_1_SQRT_2).max(0.0);
    let cross = C64::new(k.x, k.y) * FRAC_1_SQRT_2;
    // Branch on the larger component to avoid dividing by a tiny modulus.
    let raw = if xi2 >= eta2 {
        let xi = C64::new(xi2.sqrt(), 0.0);
        let eta = if xi2 > 0.0 { cross.conj() / xi } else { C64::new(0.0, 0.0) };
        TwoSpinor::new(xi, eta)
    } else {
        let eta = C64::new(eta2.sqrt(), 0.0);
        let xi = cross / eta;
        TwoSpinor::new(xi, eta)
    };
    // Rotate the global phase so the leading nonzero component has the
    // requested argument.
    let lead = if raw.c0.norm() >= raw.c1.norm() { raw.c0 } else { raw.c1 };
    let rot = C64::from_polar(1.0, phase - lead.arg());
    Ok(raw.scale(rot))
}
