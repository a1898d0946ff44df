//! Two-spinor algebra over Minkowski space.
//!
//! A two-spinor κ = (κ⁰, κ¹) ∈ ℂ² carries the fundamental representation of
//! SL(2,ℂ).  Spinor indices are raised and lowered with the antisymmetric
//! ε-spinor (ε₀₁ = +1), and a real future-pointing null vector — the flagpole —
//! is attached to every nonzero spinor through
//!
//! ```text
//! k_a = (1/√2) ( ξξ̄+ηη̄ , ξη̄+ηξ̄ , −i(ξη̄−ηξ̄) , ξξ̄−ηη̄ )
//! ```
//!
//! The bridge between world vectors and spinor matrices is the Hermitian form
//! H(v) = (1/√2)(v⁰·1 + v¹σ₁ + v²σ₂ + v³σ₃), under which the SL(2,ℂ) action
//! H ↦ L H L† induces a proper orthochronous Lorentz transformation of v.
//! The crate provides that two-to-one covering map, spin-frames (o, ι) with
//! o_A ι^A = 1, the associated null tetrad (l, n, m, m̄) and Minkowski tetrad
//! (t, x, y, z), and a numerical check of the Clifford relation
//! {γ(q), γ(r)} = 2 q·r.

pub mod clifford;
pub mod error;
pub mod frame;
pub mod hermitian;
pub mod sl2c;
pub mod spinor;
pub mod vector;

pub use clifford::{clifford_check, commutator_check, gamma};
pub use error::CoreError;
pub use frame::{MinkowskiTetrad, NullTetrad, SpinFrame};
pub use hermitian::{hermitian_to_vector, vector_to_hermitian};
pub use sl2c::SL2C;
pub use spinor::{contract, mixed_flagpole, spinor_from_flagpole, TwoSpinor};
pub use vector::FourVector;

/// Complex scalar used throughout the workspace.
pub type C64 = num_complex::Complex64;

/// 1/√2, the ubiquitous normalization of the vector/matrix dictionary.
pub const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;
