//! Future-pointing null momenta.

use spinor_core::FourVector;

use crate::error::PhotonError;

/// A future-pointing null 4-momentum: k·k = 0 within 1e−10·(k⁰)², k⁰ > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullMomentum {
    pub k: FourVector,
}

impl NullMomentum {
    pub fn new(k: FourVector) -> Result<Self, PhotonError> {
        if k.t <= 0.0 {
            return Err(PhotonError::NotFuture(k.t));
        }
        let n2 = k.norm2();
        if n2.abs() > 1e-10 * k.t * k.t {
            return Err(PhotonError::NotNull(n2));
        }
        Ok(NullMomentum { k })
    }

    /// The null momentum with spatial part k⃗ and energy |k⃗|.
    pub fn from_spatial(k3: [f64; 3]) -> Result<Self, PhotonError> {
        let r = (k3[0] * k3[0] + k3[1] * k3[1] + k3[2] * k3[2]).sqrt();
        NullMomentum::new(FourVector::new(r, k3[0], k3[1], k3[2]))
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.k.x, self.k.y, self.k.z]
    }
}
