//! On-shell massive momenta.

use spinor_core::FourVector;

use crate::error::MassiveError;

/// A future-pointing momentum on the mass shell p·p = m², m > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassiveMomentum {
    pub p: FourVector,
    pub m: f64,
}

impl MassiveMomentum {
    /// Validate |p·p − m²| ≤ 1e−8·m² and p⁰ > 0.
    pub fn new(p: FourVector, m: f64) -> Result<Self, MassiveError> {
        let defect = (p.norm2() - m * m).abs();
        if !(m > 0.0) || defect > 1e-8 * m * m || p.t <= 0.0 {
            return Err(MassiveError::BadMomentum(defect));
        }
        Ok(MassiveMomentum { p, m })
    }

    /// The rest momentum (m, 0, 0, 0).
    pub fn at_rest(m: f64) -> Self {
        MassiveMomentum { p: FourVector::new(m, 0.0, 0.0, 0.0), m }
    }

    /// Put a spatial momentum p⃗ on the shell: p⁰ = √(m² + |p⃗|²).
    pub fn on_shell(m: f64, p3: [f64; 3]) -> Self {
        let e = (m * m + p3[0] * p3[0] + p3[1] * p3[1] + p3[2] * p3[2]).sqrt();
        MassiveMomentum { p: FourVector::new(e, p3[0], p3[1], p3[2]), m }
    }
}
