//! Error type for the oscillator oracle.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    /// The truncated state space would exceed the hard dimension budget.
    #[error("state space dimension {dim} exceeds the limit {max}")]
    DimensionOverflow { dim: usize, max: usize },
    /// Pair-creation operators need room for two quanta per mode.
    #[error("occupation cutoff n_max = {0} is below the minimum of 2")]
    TruncationTooLow(usize),
    /// The tensor power N must be at least 1.
    #[error("tensor power must be at least 1")]
    ZeroPower,
    /// A cell index outside the momentum grid.
    #[error("cell index {index} out of range for {cells} cells")]
    CellOutOfRange { index: usize, cells: usize },
    /// A detector mask built over a different grid.
    #[error("region mask has {mask} entries but the grid has {cells} cells")]
    RegionMismatch { mask: usize, cells: usize },
    /// Expectation values are taken in a state of zero norm.
    #[error("state has zero norm")]
    ZeroNorm,
    /// A nominally real expectation came out complex.
    #[error("expectation value has non-negligible imaginary part {0:.3e}")]
    NotReal(f64),
    #[error(transparent)]
    Photon(#[from] photon_rep::PhotonError),
    #[error(transparent)]
    Engine(#[from] epr_engine::EprError),
}
