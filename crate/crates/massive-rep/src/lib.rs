//! Spin for massive particles built on null directions.
//!
//! A future-pointing momentum p with p·p = m² > 0 splits into two null
//! directions: p = π π̄ + (m²/2) ω ω̄, where ω_A π^A = 1.  The pair (ω, π)
//! is a momentum-dependent spin-frame; every spin observable here — the
//! Pauli-Lubanski projections, the spin-energy projectors, the 2×2 unitary
//! U(Λ, p) implementing the little-group action — is written directly in
//! terms of that frame.  The payoff is the error-correction experiment at
//! the end: amplitudes referred to a principal null direction of Λ keep
//! their spin–momentum entropy under the corresponding boost exactly,
//! while helicity-referred amplitudes decohere.

pub mod bispinor;
pub mod error;
pub mod momentum;
pub mod omega;
pub mod pauli_lubanski;
pub mod pst;
pub mod wigner;

pub use bispinor::{basis_bispinors, spin_energy_projectors, w_omega_operator, Bispinor};
pub use error::MassiveError;
pub use momentum::MassiveMomentum;
pub use omega::{omega_from_pi, omega_from_tau, pi_partner, reconstruct_momentum, OmegaFrame};
pub use pauli_lubanski::{
    gauge_shift_check, pl_eigenvalues, pl_matrix_massless, pl_matrix_omega, DirSpec,
};
pub use pst::{pst_experiment, Gaussian3, MomentumGrid, MomentumSpinState};
pub use wigner::{principal_null_spinors, wigner_u, GaugeSpec, WignerU};
