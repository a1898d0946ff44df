//! Closed-form predictions for two-photon detection statistics: the
//! probability that the photon pair lands in a region pair, polarization
//! correlation averages of the form −P·cos 2(α−β), CHSH functionals, and
//! the norm formulas for pair states over finite tensor powers of the
//! oscillator vacuum.

pub mod cutoff;
pub mod engine;
pub mod error;
pub mod norms;
pub mod region;

pub use cutoff::CutoffProfile;
pub use engine::{chsh, epr_average, probability_p, ChshReport, DetectionWeights, RepChoice};
pub use error::EprError;
pub use norms::{psi2_norm, scalar_norm_example, two_photon_norm};
pub use region::DetectorRegion;
