//! Projections of the Pauli-Lubanski vector: eigenvalues, gauge freedom,
//! and explicit 2×2 matrices in the (ω, π) spin basis.

use nalgebra::Matrix2;
use spinor_core::{contract, FourVector, TwoSpinor, C64};

use crate::error::MassiveError;
use crate::momentum::MassiveMomentum;
use crate::omega::OmegaFrame;

/// Eigenvalues ±(1/2)√((t·p)² − t²p²) of the projection t·W.
///
/// The radicand is non-negative for physical inputs; |values| ≤ 1e−12
/// are clamped to 0 (t ∥ p cancels exactly only in real arithmetic, and
/// the square root would amplify the roundoff to ~1e−8), anything below
/// −1e−12 is an error.
pub fn pl_eigenvalues(t: &FourVector, p: &MassiveMomentum) -> Result<(f64, f64), MassiveError> {
    let tp = t.dot(&p.p);
    let mut rad = tp * tp - t.norm2() * p.p.norm2();
    if rad.abs() <= 1e-12 {
        rad = 0.0;
    } else if rad < 0.0 {
        return Err(MassiveError::NegativeRadicand(rad));
    }
    let lam = 0.5 * rad.sqrt();
    Ok((lam, -lam))
}

/// Componentwise change of the eigenvalues under t → t + θp (identically
/// zero analytically: the projection has the gauge freedom t ~ t + θp).
pub fn gauge_shift_check(
    t: &FourVector,
    theta: f64,
    p: &MassiveMomentum,
) -> Result<f64, MassiveError> {
    let (a1, a2) = pl_eigenvalues(t, p)?;
    let shifted = *t + theta * p.p;
    let (b1, b2) = pl_eigenvalues(&shifted, p)?;
    Ok((a1 - b1).abs().max((a2 - b2).abs()))
}

/// Null directions of the frame on which the Pauli-Lubanski vector is
/// projected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirSpec {
    /// t^a = ω^A ω̄^{A′}: yields (1/2)·diag(1, −1) for every mass.
    OmegaOmegaBar,
    /// t^a = π^A ω̄^{A′}: yields the lowering matrix (m/√2)·E₂₁.
    PiOmegaBar,
    /// t^a = ω^A π̄^{A′}: yields the raising matrix (m/√2)·E₁₂.
    OmegaPiBar,
}

/// The spin-basis matrix of the Pauli-Lubanski vector contracted with a
/// null direction of the frame.
///
/// The vector of matrices W_a has entries built from the frame:
///
/// ```text
/// W_a = (1/2) [ π_A π̄_{A′} − (m²/2) ω_A ω̄_{A′}     −m√2 π_A ω̄_{A′}         ]
///             [ −m√2 ω_A π̄_{A′}                      (m²/2) ω ω̄ − π π̄      ]
/// ```
///
/// Contracting the free spinor pair with μ^A ν̄^{A′} (μ, ν ∈ {ω, π}) gives
/// a 2×2 complex matrix acting on the spin label.
pub fn pl_matrix_omega(frame: &OmegaFrame, direction: DirSpec) -> Matrix2<C64> {
    let (mu, nu) = match direction {
        DirSpec::OmegaOmegaBar => (frame.omega, frame.omega),
        DirSpec::PiOmegaBar => (frame.pi, frame.omega),
        DirSpec::OmegaPiBar => (frame.omega, frame.pi),
    };
    let m = frame.p.m;
    // μ^A κ_A = −contract(μ, κ)
    let mu_pi = -contract(&mu, &frame.pi);
    let mu_om = -contract(&mu, &frame.omega);
    let nu_pi = (-contract(&nu, &frame.pi)).conj();
    let nu_om = (-contract(&nu, &frame.omega)).conj();
    let e00 = 0.5 * (mu_pi * nu_pi - C64::new(m * m / 2.0, 0.0) * mu_om * nu_om);
    let e01 = 0.5 * C64::new(-m * std::f64::consts::SQRT_2, 0.0) * mu_pi * nu_om;
    let e10 = 0.5 * C64::new(-m * std::f64::consts::SQRT_2, 0.0) * mu_om * nu_pi;
    Matrix2::new(e00, e01, e10, -e00)
}

/// The massless counterpart: W_a(k) = (1/2)·diag(1, −1)·k_a, returned as
/// the four covariant components (index a = 0..3).  Every projection is
/// diagonal, so all such observables commute.
pub fn pl_matrix_massless(pi: &TwoSpinor) -> [Matrix2<C64>; 4] {
    let k = pi.flagpole();
    let k_cov = [k.t, -k.x, -k.y, -k.z];
    k_cov.map(|ka| {
        Matrix2::new(
            C64::new(0.5 * ka, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(-0.5 * ka, 0.0),
        )
    })
}
