//! Error type for the delta-sequence toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DeltaError {
    #[error("parameters must be strictly positive: a = {a}, eps = {eps}")]
    BadParams { a: f64, eps: f64 },
    #[error("measure density must be strictly positive, got {0}")]
    NonpositiveDensity(f64),
}
