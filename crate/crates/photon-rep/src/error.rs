//! Error type for the massless layer.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PhotonError {
    #[error("momentum is not null within tolerance: k·k = {0}")]
    NotNull(f64),
    #[error("momentum is not future-pointing: k⁰ = {0}")]
    NotFuture(f64),
    #[error("reference vector is not a future unit timelike vector: R·R = {0}")]
    NonTimelikeR(f64),
    #[error("grid cell set is not closed under the supplied transformation")]
    GridNotClosed,
    #[error("kernel has zero norm")]
    ZeroKernel,
    #[error("helicity function is not homogeneous of degree 2 in phase: residual {0}")]
    HomogeneityViolated(f64),
    #[error("grid cell at the origin of momentum space")]
    ZeroCell,
    #[error(transparent)]
    Core(#[from] spinor_core::CoreError),
    #[error("kernel file i/o: {0}")]
    Io(String),
}
