//! Error type for the massive-representation layer.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MassiveError {
    #[error("zero spinor has no associated null direction")]
    ZeroSpinor,
    #[error("momentum is not on the m>0 mass shell: |p·p − m²| = {0:.3e}")]
    BadMomentum(f64),
    #[error("omega is not normalized against p: |p·(ωω̄) − 1| = {0:.3e}")]
    BadNormalization(f64),
    #[error("eigenvalue radicand is negative beyond tolerance: {0:.3e}")]
    NegativeRadicand(f64),
    #[error("operation requires m > 0")]
    MasslessUnsupported,
    #[error("gauge is undefined at this momentum (t·p = 0 or missing null direction)")]
    GaugeUndefined,
    #[error("state is not normalized: Σ w |f|² = {0:.6e}")]
    NotNormalized(f64),
}
