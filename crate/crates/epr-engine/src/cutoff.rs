//! Vacuum amplitude profiles over light-cone grids and the cutoff
//! function χ they induce.

use photon_rep::LightconeGrid;

use crate::error::EprError;

/// Nonnegative amplitudes O₀(k) on the cells of a grid, normalized so that
/// Σ w |O₀|² = 1 on-grid.  The induced cutoff is χ(k) = |O₀(k)|²/max|O₀|²,
/// which always lies in [0, 1].
#[derive(Debug, Clone)]
pub struct CutoffProfile {
    pub grid: LightconeGrid,
    pub amps: Vec<f64>,
}

impl CutoffProfile {
    /// Normalize the supplied nonnegative amplitudes on the grid.
    pub fn new(grid: LightconeGrid, amps: Vec<f64>) -> Result<Self, EprError> {
        if amps.len() != grid.len() {
            return Err(EprError::ProfileMismatch { amps: amps.len(), cells: grid.len() });
        }
        let total: f64 = grid
            .cells
            .iter()
            .zip(&amps)
            .map(|((_, w), o)| w * o * o)
            .sum();
        if total <= 0.0 {
            return Err(EprError::ZeroDenominator);
        }
        let s = total.sqrt();
        Ok(CutoffProfile { grid, amps: amps.into_iter().map(|o| o / s).collect() })
    }

    /// Uniform profile: χ ≡ 1 exactly.
    pub fn uniform(grid: LightconeGrid) -> Result<Self, EprError> {
        let n = grid.len();
        CutoffProfile::new(grid, vec![1.0; n])
    }

    /// Isotropic Gaussian in |k⃗ − c|, normalized on-grid; σ tunes the
    /// flatness of χ.
    pub fn gaussian(grid: LightconeGrid, center: [f64; 3], sigma: f64) -> Result<Self, EprError> {
        let amps: Vec<f64> = grid
            .cells
            .iter()
            .map(|(k, _)| {
                let s = k.spatial();
                let d2: f64 =
                    (0..3).map(|i| (s[i] - center[i]) * (s[i] - center[i])).sum();
                (-d2 / (4.0 * sigma * sigma)).exp()
            })
            .collect();
        CutoffProfile::new(grid, amps)
    }

    /// |Σ w|O₀|² − 1|: the on-grid normalization residual.
    pub fn normalization_residual(&self) -> f64 {
        let total: f64 = self
            .grid
            .cells
            .iter()
            .zip(&self.amps)
            .map(|((_, w), o)| w * o * o)
            .sum();
        (total - 1.0).abs()
    }

    /// χ(k) per cell: |O₀|² scaled by its maximum.
    pub fn chi(&self) -> Vec<f64> {
        let m2 = self.amps.iter().map(|o| o * o).fold(0.0, f64::max);
        self.amps.iter().map(|o| o * o / m2).collect()
    }

    /// |O₀|² per cell.
    pub fn intensity(&self) -> Vec<f64> {
        self.amps.iter().map(|o| o * o).collect()
    }
}
