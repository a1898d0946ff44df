//! Massless helicity layer: spinor fields π(k) on the light cone, the
//! phases Θ(Λ, k) governing how polarization frames respond to SL(2,ℂ),
//! reference-vector spin-frames, circular/linear amplitude conversions,
//! and two-photon momentum kernels with their transformation law.

pub mod error;
pub mod kernel;
pub mod linear_epr;
pub mod momentum;
pub mod pi;
pub mod polarization;
pub mod twistor;

pub use error::PhotonError;
pub use kernel::{
    antisymmetry_defect, read_csv, transform_kernel, write_csv, EPRKernel, KernelData,
    KernelRule, LightconeGrid, Packet, SymmetryTag,
};
pub use linear_epr::linear_epr_condition;
pub use momentum::NullMomentum;
pub use pi::{partner_of, pi_of_k, wigner_phase, WignerPhase};
pub use polarization::{pol_convert, pol_invert, rotate_linear};
pub use twistor::twistor_omega;
