//! States: the profile vacuum and the two-photon pair state built from a
//! momentum kernel.

use num_complex::Complex64 as C64;

use photon_rep::EPRKernel;

use crate::build::{lower, number, raise};
use crate::error::OracleError;
use crate::ops::SparseOp;
use crate::space::{OracleSpace, Pol};

/// A dense state vector over the truncated space.
#[derive(Debug, Clone)]
pub struct FockState {
    pub amps: Vec<C64>,
}

impl FockState {
    pub fn zero(dim: usize) -> Self {
        FockState { amps: vec![C64::new(0.0, 0.0); dim] }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// ⟨self, other⟩, antilinear in self.
    pub fn dot(&self, other: &[C64]) -> C64 {
        self.amps.iter().zip(other).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn apply(&self, op: &SparseOp) -> FockState {
        FockState { amps: op.apply(&self.amps) }
    }
}

/// |0, N⟩: each factor carries the profile amplitude √w_i O₀(k_i) on the
/// zero-occupation state of cell i, so ‖|0, N⟩‖² = (Σ w|O₀|²)^N = 1.
pub fn vacuum(space: &OracleSpace) -> FockState {
    let mut v1 = vec![C64::new(0.0, 0.0); space.factor_dim];
    for (i, ((_, w), o)) in space
        .profile
        .grid
        .cells
        .iter()
        .zip(&space.profile.amps)
        .enumerate()
    {
        v1[space.idx1(i, 0, 0)] = C64::new(w.sqrt() * o, 0.0);
    }
    let mut amps = vec![C64::new(0.0, 0.0); space.dim];
    for (j, amp) in amps.iter_mut().enumerate() {
        let mut a = C64::new(1.0, 0.0);
        for s in 0..space.big_n {
            a *= v1[space.slot_digit(j, s)];
        }
        *amp = a;
    }
    FockState { amps }
}

/// Ψ(N)|0, N⟩ with Ψ(N) = Σ_ij ψ(k_i, k_j) a†₊(i,N) a†₋(j,N): kernel
/// point values only, the quadrature weights live in the vacuum.
pub fn pair_state(space: &OracleSpace, ker: &EPRKernel) -> Result<FockState, OracleError> {
    let cells = space.cells();
    if ker.grid.len() != cells {
        return Err(OracleError::CellOutOfRange { index: ker.grid.len(), cells });
    }
    let m = ker.matrix()?;
    let vac = vacuum(space);
    let raise_p: Vec<SparseOp> =
        (0..cells).map(|i| raise(space, i, Pol::Plus)).collect::<Result<_, _>>()?;
    let raise_m: Vec<SparseOp> =
        (0..cells).map(|j| raise(space, j, Pol::Minus)).collect::<Result<_, _>>()?;
    let mut out = FockState::zero(space.dim);
    for j in 0..cells {
        if m.iter().all(|row| row[j].norm_sqr() == 0.0) {
            continue;
        }
        let vj = raise_m[j].apply(&vac.amps);
        for (i, rp) in raise_p.iter().enumerate() {
            let psi = m[i][j];
            if psi.norm_sqr() == 0.0 {
                continue;
            }
            let vij = rp.apply(&vj);
            for (acc, term) in out.amps.iter_mut().zip(&vij) {
                *acc += psi * term;
            }
        }
    }
    Ok(out)
}

/// ‖Ψ(N)|0, N⟩‖² by direct contraction in the truncated space.
pub fn pair_norm_sqr(space: &OracleSpace, ker: &EPRKernel) -> Result<f64, OracleError> {
    Ok(pair_state(space, ker)?.norm_sqr())
}

/// Residual of a|0, N⟩ = n|0, N⟩ = 0 over all modes: the vacuum is
/// annihilated by every lowering and number operator.
pub fn vacuum_annihilation_residual(space: &OracleSpace) -> Result<f64, OracleError> {
    let vac = vacuum(space);
    let mut worst = 0.0f64;
    for i in 0..space.cells() {
        for pol in [Pol::Plus, Pol::Minus] {
            worst = worst.max(vac.apply(&lower(space, i, pol)?).norm_sqr().sqrt());
            worst = worst.max(vac.apply(&number(space, i, pol)?).norm_sqr().sqrt());
        }
    }
    Ok(worst)
}
