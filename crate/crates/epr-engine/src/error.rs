//! Error type for the correlation engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EprError {
    #[error("total detection weight is zero")]
    ZeroDenominator,
    #[error("kernel is not tagged antisymmetric")]
    NotAntisymmetric,
    #[error("operation requires the finite-N representation choice")]
    NotReducible,
    #[error("cutoff profile has {amps} amplitudes for {cells} grid cells")]
    ProfileMismatch { amps: usize, cells: usize },
    #[error("region mask has {mask} entries for {cells} grid cells")]
    RegionMismatch { mask: usize, cells: usize },
    #[error("tensor power must satisfy N ≥ {min}, got {n}")]
    BadPower { n: u32, min: u32 },
    #[error(transparent)]
    Photon(#[from] photon_rep::PhotonError),
}
