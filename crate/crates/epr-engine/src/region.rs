//! Detector regions as measurable cell sets on a light-cone grid.

use photon_rep::LightconeGrid;

use crate::error::EprError;

/// A subset of grid cells (deterministic membership).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectorRegion {
    pub mask: Vec<bool>,
}

impl DetectorRegion {
    pub fn from_mask(grid: &LightconeGrid, mask: Vec<bool>) -> Result<Self, EprError> {
        if mask.len() != grid.len() {
            return Err(EprError::RegionMismatch { mask: mask.len(), cells: grid.len() });
        }
        Ok(DetectorRegion { mask })
    }

    pub fn from_predicate<F: Fn([f64; 3]) -> bool>(grid: &LightconeGrid, pred: F) -> Self {
        DetectorRegion { mask: grid.cells.iter().map(|(k, _)| pred(k.spatial())).collect() }
    }

    /// All cells with |k⃗ − c| < radius.
    pub fn ball(grid: &LightconeGrid, center: [f64; 3], radius: f64) -> Self {
        DetectorRegion::from_predicate(grid, |s| {
            let d2: f64 = (0..3).map(|i| (s[i] - center[i]) * (s[i] - center[i])).sum();
            d2 < radius * radius
        })
    }

    /// All cells with n⃗·k⃗ > offset.
    pub fn half_space(grid: &LightconeGrid, normal: [f64; 3], offset: f64) -> Self {
        DetectorRegion::from_predicate(grid, |s| {
            s[0] * normal[0] + s[1] * normal[1] + s[2] * normal[2] > offset
        })
    }

    pub fn all(grid: &LightconeGrid) -> Self {
        DetectorRegion { mask: vec![true; grid.len()] }
    }

    pub fn empty(grid: &LightconeGrid) -> Self {
        DetectorRegion { mask: vec![false; grid.len()] }
    }

    pub fn complement(&self) -> Self {
        DetectorRegion { mask: self.mask.iter().map(|b| !b).collect() }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        DetectorRegion {
            mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect(),
        }
    }

    /// Cells in self but not in other.
    pub fn minus(&self, other: &Self) -> Self {
        DetectorRegion {
            mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a && !*b).collect(),
        }
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.mask.iter().zip(&other.mask).all(|(a, b)| !(*a && *b))
    }

    pub fn count(&self) -> usize {
        self.mask.iter().filter(|b| **b).count()
    }
}
