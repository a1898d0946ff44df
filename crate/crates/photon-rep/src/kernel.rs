//! Two-photon momentum kernels ψ(k, k′) on light-cone grids, their behavior
//! under SL(2,ℂ), and the antisymmetry defect that measures how far a
//! transformed kernel drifts from its original exchange symmetry.
//!
//! Kernels are carried either as grid arrays of point values or as
//! closed-form rules.  Transforming a grid array requires the cell set to
//! be closed under k ↦ Λk (a permutation); rules transform by composition
//! and work for every Λ.

use rayon::prelude::*;
use spinor_core::{contract, FourVector, C64, SL2C};

use crate::error::PhotonError;
use crate::momentum::NullMomentum;
use crate::pi::{pi_of_k, wigner_phase};

const INV_CUBE_2PI: f64 = 1.0 / (2.0 * std::f64::consts::PI);

fn invariant_weight(k3: [f64; 3], volume: f64) -> Result<f64, PhotonError> {
    let r = (k3[0] * k3[0] + k3[1] * k3[1] + k3[2] * k3[2]).sqrt();
    if r <= 0.0 {
        return Err(PhotonError::ZeroCell);
    }
    Ok(volume * INV_CUBE_2PI.powi(3) / (2.0 * r))
}

/// A finite family of light-cone cells with invariant-measure weights
/// w = Δ³k / ((2π)³ · 2|k⃗|).
#[derive(Debug, Clone)]
pub struct LightconeGrid {
    pub cells: Vec<(NullMomentum, f64)>,
}

impl LightconeGrid {
    /// Cells at the given spatial momenta, all sharing one coordinate
    /// cell volume.
    pub fn from_momenta(k3s: &[[f64; 3]], volume: f64) -> Result<Self, PhotonError> {
        let mut cells = Vec::with_capacity(k3s.len());
        for k3 in k3s {
            cells.push((NullMomentum::from_spatial(*k3)?, invariant_weight(*k3, volume)?));
        }
        Ok(LightconeGrid { cells })
    }

    /// n³ midpoint cells of a cube of half-width `half` around `center`.
    pub fn cubic(center: [f64; 3], half: f64, n: usize) -> Result<Self, PhotonError> {
        let step = 2.0 * half / n as f64;
        let vol = step * step * step;
        let mut k3s = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    k3s.push([
                        center[0] - half + (i as f64 + 0.5) * step,
                        center[1] - half + (j as f64 + 0.5) * step,
                        center[2] - half + (k as f64 + 0.5) * step,
                    ]);
                }
            }
        }
        let mut grid = LightconeGrid { cells: Vec::with_capacity(k3s.len()) };
        for k3 in k3s {
            grid.cells.push((NullMomentum::from_spatial(k3)?, invariant_weight(k3, vol)?));
        }
        Ok(grid)
    }

    /// Cells along the +z axis at the given energies (unit cell volume).
    pub fn axis_z(energies: &[f64]) -> Result<Self, PhotonError> {
        let k3s: Vec<[f64; 3]> = energies.iter().map(|&e| [0.0, 0.0, e]).collect();
        LightconeGrid::from_momenta(&k3s, 1.0)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Index of the cell matching `k` within a relative tolerance, if any.
    pub fn find(&self, k: &FourVector) -> Option<usize> {
        let scale = 1.0 + k.t.abs();
        self.cells.iter().position(|(c, _)| (c.k - *k).amax() <= 1e-9 * scale)
    }
}

/// Isotropic Gaussian packet g(k⃗) = exp(−|k⃗ − c|²/(4σ²)) used to build
/// product kernels.
#[derive(Debug, Clone, Copy)]
pub struct Packet {
    pub center: [f64; 3],
    pub sigma: f64,
}

impl Packet {
    pub fn eval(&self, k: &NullMomentum) -> f64 {
        let s = k.spatial();
        let d2: f64 = (0..3).map(|i| (s[i] - self.center[i]) * (s[i] - self.center[i])).sum();
        (-d2 / (4.0 * self.sigma * self.sigma)).exp()
    }
}

/// Closed-form kernel rules, closed under SL(2,ℂ) transformation.
#[derive(Debug, Clone)]
pub enum KernelRule {
    /// ψ(k,k′) = f(k)g(k′) − f(k′)g(k): antisymmetric by construction.
    ProductAntisym { f: Packet, g: Packet },
    /// ψ(k,k′) = (π_A(k) π^A(k′))²: symmetric (the square of an
    /// antisymmetric contraction).
    ScalarSquare,
    /// ψ(Λk, Λk′) · e^{−2iΘ(Λ,Λk)} e^{+2iΘ(Λ,Λk′)}.
    Transformed { base: Box<KernelRule>, l: SL2C },
}

impl KernelRule {
    pub fn eval(&self, k: &NullMomentum, kp: &NullMomentum) -> Result<C64, PhotonError> {
        match self {
            KernelRule::ProductAntisym { f, g } => {
                let v = f.eval(k) * g.eval(kp) - f.eval(kp) * g.eval(k);
                Ok(C64::new(v, 0.0))
            }
            KernelRule::ScalarSquare => {
                let z = contract(&pi_of_k(k)?, &pi_of_k(kp)?);
                Ok(z * z)
            }
            KernelRule::Transformed { base, l } => {
                let lk = NullMomentum::new(l.act_vector(&k.k))?;
                let lkp = NullMomentum::new(l.act_vector(&kp.k))?;
                let th = wigner_phase(l, &lk)?.theta;
                let thp = wigner_phase(l, &lkp)?.theta;
                let phase = C64::from_polar(1.0, -2.0 * th + 2.0 * thp);
                Ok(base.eval(&lk, &lkp)? * phase)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryTag {
    Antisymmetric,
    General,
}

#[derive(Debug, Clone)]
pub enum KernelData {
    Grid(Vec<Vec<C64>>),
    Rule(KernelRule),
}

/// A two-photon kernel over a light-cone grid.
#[derive(Debug, Clone)]
pub struct EPRKernel {
    pub grid: LightconeGrid,
    pub data: KernelData,
    pub tag: SymmetryTag,
}

impl EPRKernel {
    pub fn from_rule(grid: LightconeGrid, rule: KernelRule, tag: SymmetryTag) -> Self {
        EPRKernel { grid, data: KernelData::Rule(rule), tag }
    }

    pub fn from_matrix(
        grid: LightconeGrid,
        psi: Vec<Vec<C64>>,
        tag: SymmetryTag,
    ) -> Result<Self, PhotonError> {
        let n = grid.len();
        if psi.len() != n || psi.iter().any(|row| row.len() != n) {
            return Err(PhotonError::Io(format!("kernel matrix is not {n}×{n}")));
        }
        Ok(EPRKernel { grid, data: KernelData::Grid(psi), tag })
    }

    /// The antisymmetrized product kernel f⊗g − g⊗f.
    pub fn product_antisym(grid: LightconeGrid, f: Packet, g: Packet) -> Self {
        EPRKernel::from_rule(
            grid,
            KernelRule::ProductAntisym { f, g },
            SymmetryTag::Antisymmetric,
        )
    }

    /// The symmetric scalar-pair kernel (π(k)·π(k′))².
    pub fn scalar_f2(grid: LightconeGrid) -> Self {
        EPRKernel::from_rule(grid, KernelRule::ScalarSquare, SymmetryTag::General)
    }

    /// The coincident-momentum kernel: a diagonal delta that is regular at
    /// zero, so its diagonal point value is the constant c itself (not a
    /// 1/weight spike).
    pub fn same_momentum_psi2(grid: LightconeGrid, c: f64) -> Self {
        let n = grid.len();
        let mut psi = vec![vec![C64::new(0.0, 0.0); n]; n];
        for (i, row) in psi.iter_mut().enumerate() {
            row[i] = C64::new(c, 0.0);
        }
        EPRKernel { grid, data: KernelData::Grid(psi), tag: SymmetryTag::General }
    }

    /// ψ at a cell pair.
    pub fn value(&self, i: usize, j: usize) -> Result<C64, PhotonError> {
        match &self.data {
            KernelData::Grid(m) => Ok(m[i][j]),
            KernelData::Rule(r) => r.eval(&self.grid.cells[i].0, &self.grid.cells[j].0),
        }
    }

    /// The full matrix of point values, rows in parallel.
    pub fn matrix(&self) -> Result<Vec<Vec<C64>>, PhotonError> {
        match &self.data {
            KernelData::Grid(m) => Ok(m.clone()),
            KernelData::Rule(r) => (0..self.grid.len())
                .into_par_iter()
                .map(|i| {
                    (0..self.grid.len())
                        .map(|j| r.eval(&self.grid.cells[i].0, &self.grid.cells[j].0))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect(),
        }
    }

    /// Evaluate onto a grid array (freezes a rule kernel).
    pub fn materialize(&self) -> Result<EPRKernel, PhotonError> {
        Ok(EPRKernel {
            grid: self.grid.clone(),
            data: KernelData::Grid(self.matrix()?),
            tag: self.tag,
        })
    }

    /// √(Σ_ij w_i w_j |ψ_ij|²): the quadrature L² norm.
    pub fn grid_norm(&self) -> Result<f64, PhotonError> {
        let m = self.matrix()?;
        let mut s = 0.0;
        for (i, (_, wi)) in self.grid.cells.iter().enumerate() {
            for (j, (_, wj)) in self.grid.cells.iter().enumerate() {
                s += wi * wj * m[i][j].norm_sqr();
            }
        }
        Ok(s.sqrt())
    }
}

/// The transformed kernel ψ′(k,k′) = ψ(Λk,Λk′) e^{−2iΘ(Λ,Λk)} e^{+2iΘ(Λ,Λk′)}.
///
/// Rule kernels transform by composition; grid kernels require the cell
/// set to be closed under k ↦ Λk with matching weights.  The symmetry tag
/// drops to `General`: exchange symmetry is generally not preserved.
pub fn transform_kernel(ker: &EPRKernel, l: &SL2C) -> Result<EPRKernel, PhotonError> {
    match &ker.data {
        KernelData::Rule(rule) => Ok(EPRKernel {
            grid: ker.grid.clone(),
            data: KernelData::Rule(KernelRule::Transformed {
                base: Box::new(rule.clone()),
                l: *l,
            }),
            tag: SymmetryTag::General,
        }),
        KernelData::Grid(m) => {
            let n = ker.grid.len();
            // the image cell index σ(i) of Λk_i, plus its phase
            let mut sigma = Vec::with_capacity(n);
            let mut phases = Vec::with_capacity(n);
            for (k, w) in &ker.grid.cells {
                let lk = l.act_vector(&k.k);
                let idx = ker.grid.find(&lk).ok_or(PhotonError::GridNotClosed)?;
                if (ker.grid.cells[idx].1 - w).abs() > 1e-9 * w {
                    return Err(PhotonError::GridNotClosed);
                }
                sigma.push(idx);
                let th = wigner_phase(l, &NullMomentum::new(lk)?)?.theta;
                phases.push(th);
            }
            let mut out = vec![vec![C64::new(0.0, 0.0); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let phase = C64::from_polar(1.0, -2.0 * phases[i] + 2.0 * phases[j]);
                    out[i][j] = m[sigma[i]][sigma[j]] * phase;
                }
            }
            Ok(EPRKernel {
                grid: ker.grid.clone(),
                data: KernelData::Grid(out),
                tag: SymmetryTag::General,
            })
        }
    }
}

/// ‖ψ + ψᵀ‖₂ / ‖ψ‖₂ in the weighted grid norm: 0 for an antisymmetric
/// kernel, exactly 2 for a symmetric one.
pub fn antisymmetry_defect(ker: &EPRKernel) -> Result<f64, PhotonError> {
    let m = ker.matrix()?;
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, (_, wi)) in ker.grid.cells.iter().enumerate() {
        for (j, (_, wj)) in ker.grid.cells.iter().enumerate() {
            num += wi * wj * (m[i][j] + m[j][i]).norm_sqr();
            den += wi * wj * m[i][j].norm_sqr();
        }
    }
    if den <= 0.0 {
        return Err(PhotonError::ZeroKernel);
    }
    Ok((num / den).sqrt())
}

/// Write the kernel's point values as CSV rows
/// (kx, ky, kz, kx′, ky′, kz′, Re ψ, Im ψ).
pub fn write_csv(ker: &EPRKernel, path: &std::path::Path) -> Result<(), PhotonError> {
    let m = ker.matrix()?;
    let mut w = csv::Writer::from_path(path).map_err(|e| PhotonError::Io(e.to_string()))?;
    w.write_record(["kx", "ky", "kz", "kxp", "kyp", "kzp", "re_psi", "im_psi"])
        .map_err(|e| PhotonError::Io(e.to_string()))?;
    for (i, (ki, _)) in ker.grid.cells.iter().enumerate() {
        for (j, (kj, _)) in ker.grid.cells.iter().enumerate() {
            let a = ki.spatial();
            let b = kj.spatial();
            let rec = [a[0], a[1], a[2], b[0], b[1], b[2], m[i][j].re, m[i][j].im];
            w.write_record(rec.iter().map(|x| format!("{x:.17e}")))
                .map_err(|e| PhotonError::Io(e.to_string()))?;
        }
    }
    w.flush().map_err(|e| PhotonError::Io(e.to_string()))
}

/// Read a kernel written by [`write_csv`].  Cells are reconstructed in
/// order of first appearance with unit-coordinate-volume invariant
/// weights; the symmetry tag is `General`.
pub fn read_csv(path: &std::path::Path) -> Result<EPRKernel, PhotonError> {
    let mut rdr = csv::Reader::from_path(path).map_err(|e| PhotonError::Io(e.to_string()))?;
    let mut k3s: Vec<[f64; 3]> = Vec::new();
    let mut entries: Vec<(usize, usize, C64)> = Vec::new();
    let index_of = |k3: [f64; 3], k3s: &mut Vec<[f64; 3]>| -> usize {
        let scale = 1.0 + k3.iter().map(|x| x.abs()).fold(0.0, f64::max);
        match k3s.iter().position(|c| {
            (c[0] - k3[0]).abs().max((c[1] - k3[1]).abs()).max((c[2] - k3[2]).abs())
                <= 1e-12 * scale
        }) {
            Some(i) => i,
            None => {
                k3s.push(k3);
                k3s.len() - 1
            }
        }
    };
    for rec in rdr.records() {
        let rec = rec.map_err(|e| PhotonError::Io(e.to_string()))?;
        let f: Vec<f64> = rec
            .iter()
            .map(|s| s.parse::<f64>().map_err(|e| PhotonError::Io(e.to_string())))
            .collect::<Result<_, _>>()?;
        if f.len() != 8 {
            return Err(PhotonError::Io(format!("expected 8 columns, got {}", f.len())));
        }
        let i = index_of([f[0], f[1], f[2]], &mut k3s);
        let j = index_of([f[3], f[4], f[5]], &mut k3s);
        entries.push((i, j, C64::new(f[6], f[7])));
    }
    let grid = LightconeGrid::from_momenta(&k3s, 1.0)?;
    let n = grid.len();
    let mut psi = vec![vec![C64::new(0.0, 0.0); n]; n];
    for (i, j, v) in entries {
        psi[i][j] = v;
    }
    EPRKernel::from_matrix(grid, psi, SymmetryTag::General)
}
