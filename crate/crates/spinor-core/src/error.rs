//! Error type shared by the constructors of this crate.

use thiserror::Error;

/// Failure modes of spinor/vector constructors and inversions.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoreError {
    /// A matrix expected to lie in SL(2,ℂ) has determinant ≉ 1.
    #[error("matrix is not in SL(2,C): |det - 1| = {0:.3e}")]
    NotUnimodular(f64),
    /// A vector expected to be null and future-pointing is not.
    #[error("vector is not future-pointing null: v·v = {norm2:.3e}, v0 = {time:.3e}")]
    NotFutureNull { norm2: f64, time: f64 },
    /// The zero spinor has no flagpole direction / normalization.
    #[error("zero spinor is not admissible here")]
    ZeroSpinor,
    /// A pair (o, ι) failed the spin-frame normalization o_A ι^A = 1.
    #[error("pair is not a spin-frame: |o_A iota^A - 1| = {0:.3e}")]
    NotSpinFrame(f64),
    /// A matrix expected to be Hermitian is not, within tolerance.
    #[error("matrix is not Hermitian: defect {0:.3e}")]
    NotHermitian(f64),
}
