//! The truncated state space: M momentum cells, two circular-polarization
//! oscillator modes per cell with occupations 0..=n_max, raised to tensor
//! power N.
//!
//! Cell kets |i⟩ are orthonormal; quadrature weights enter through the
//! vacuum amplitudes, not through the operator dictionary. One factor has
//! dimension M·(n_max+1)², the full space (M·(n_max+1)²)^N.

use epr_engine::CutoffProfile;

use crate::error::OracleError;

/// Hard budget on the total state-space dimension.
pub const MAX_DIM: usize = 2_000_000;

/// Circular polarization label of an oscillator mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pol {
    Plus,
    Minus,
}

/// Truncated oscillator space over a cutoff profile.
#[derive(Debug, Clone)]
pub struct OracleSpace {
    /// Momentum grid and vacuum amplitude profile O₀.
    pub profile: CutoffProfile,
    /// Highest occupation kept per mode.
    pub n_max: usize,
    /// Tensor power N.
    pub big_n: usize,
    /// Dimension of one tensor factor.
    pub factor_dim: usize,
    /// Total dimension factor_dim^N.
    pub dim: usize,
}

impl OracleSpace {
    pub fn new(profile: CutoffProfile, n_max: usize, big_n: usize) -> Result<Self, OracleError> {
        if n_max < 2 {
            return Err(OracleError::TruncationTooLow(n_max));
        }
        if big_n < 1 {
            return Err(OracleError::ZeroPower);
        }
        let cells = profile.grid.len();
        let levels = n_max + 1;
        let factor_dim = cells * levels * levels;
        let mut dim: usize = 1;
        for _ in 0..big_n {
            dim = dim
                .checked_mul(factor_dim)
                .filter(|d| *d <= MAX_DIM)
                .ok_or(OracleError::DimensionOverflow { dim: usize::MAX, max: MAX_DIM })?;
        }
        if dim > MAX_DIM {
            return Err(OracleError::DimensionOverflow { dim, max: MAX_DIM });
        }
        Ok(OracleSpace { profile, n_max, big_n, factor_dim, dim })
    }

    pub fn cells(&self) -> usize {
        self.profile.grid.len()
    }

    pub fn levels(&self) -> usize {
        self.n_max + 1
    }

    /// Index of the one-factor basis state |cell; n₊, n₋⟩.
    pub fn idx1(&self, cell: usize, n_plus: usize, n_minus: usize) -> usize {
        let l = self.levels();
        (cell * l + n_plus) * l + n_minus
    }

    /// Inverse of idx1: (cell, n₊, n₋).
    pub fn decode1(&self, idx: usize) -> (usize, usize, usize) {
        let l = self.levels();
        (idx / (l * l), (idx / l) % l, idx % l)
    }

    /// Digit of a full basis index at a given tensor slot.
    pub fn slot_digit(&self, idx: usize, slot: usize) -> usize {
        (idx / self.factor_dim.pow(slot as u32)) % self.factor_dim
    }

    /// True if every mode occupation in every slot is at most n_max − 1,
    /// so one more raising operator cannot touch the truncation edge.
    pub fn below_truncation(&self, idx: usize) -> bool {
        (0..self.big_n).all(|s| {
            let (_, np, nm) = self.decode1(self.slot_digit(idx, s));
            np < self.n_max && nm < self.n_max
        })
    }

    pub fn check_cell(&self, cell: usize) -> Result<(), OracleError> {
        if cell >= self.cells() {
            return Err(OracleError::CellOutOfRange { index: cell, cells: self.cells() });
        }
        Ok(())
    }
}
