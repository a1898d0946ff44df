//! Column-sparse complex operators on the truncated space, with just
//! enough algebra (sums, products, adjoints, commutators) to build mode
//! operators and take expectation values.

use std::collections::BTreeMap;

use num_complex::Complex64 as C64;

/// A sparse linear operator stored by columns: cols[j] lists the nonzero
/// entries (row, value) of the image of basis vector j, sorted by row.
#[derive(Debug, Clone)]
pub struct SparseOp {
    pub dim: usize,
    pub cols: Vec<Vec<(usize, C64)>>,
}

const DROP_TOL: f64 = 0.0;

impl SparseOp {
    pub fn zero(dim: usize) -> Self {
        SparseOp { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        SparseOp {
            dim,
            cols: (0..dim).map(|j| vec![(j, C64::new(1.0, 0.0))]).collect(),
        }
    }

    pub fn from_cols(dim: usize, cols: Vec<Vec<(usize, C64)>>) -> Self {
        assert_eq!(cols.len(), dim);
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|(r, _)| *r);
                c
            })
            .collect();
        SparseOp { dim, cols }
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![C64::new(0.0, 0.0); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            let a = v[j];
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (r, val) in col {
                out[*r] += val * a;
            }
        }
        out
    }

    pub fn scale(&self, c: C64) -> Self {
        SparseOp {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * c)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseOp) -> Self {
        assert_eq!(self.dim, other.dim);
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, C64> = BTreeMap::new();
                for (r, v) in a.iter().chain(b) {
                    *acc.entry(*r).or_insert(C64::new(0.0, 0.0)) += v;
                }
                acc.into_iter().filter(|(_, v)| v.norm() > DROP_TOL).collect()
            })
            .collect();
        SparseOp { dim: self.dim, cols }
    }

    pub fn sub(&self, other: &SparseOp) -> Self {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    /// Matrix product self·other.
    pub fn mul(&self, other: &SparseOp) -> Self {
        assert_eq!(self.dim, other.dim);
        let cols = other
            .cols
            .iter()
            .map(|bcol| {
                let mut acc: BTreeMap<usize, C64> = BTreeMap::new();
                for (k, b) in bcol {
                    for (r, a) in &self.cols[*k] {
                        *acc.entry(*r).or_insert(C64::new(0.0, 0.0)) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| v.norm() > DROP_TOL).collect()
            })
            .collect();
        SparseOp { dim: self.dim, cols }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut cols: Vec<Vec<(usize, C64)>> = vec![Vec::new(); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((j, v.conj()));
            }
        }
        SparseOp::from_cols(self.dim, cols)
    }

    pub fn commutator(&self, other: &SparseOp) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Column j as a dense vector.
    pub fn column(&self, j: usize) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); self.dim];
        for (r, v) in &self.cols[j] {
            out[*r] = *v;
        }
        out
    }

    /// Largest entrywise difference to another operator.
    pub fn max_abs_diff(&self, other: &SparseOp) -> f64 {
        assert_eq!(self.dim, other.dim);
        let mut worst = 0.0f64;
        for j in 0..self.dim {
            let a = self.column(j);
            let b = other.column(j);
            for (x, y) in a.iter().zip(&b) {
                worst = worst.max((x - y).norm());
            }
        }
        worst
    }
}
