//! Spin–momentum entropy under boosts: the error-correction experiment.
//!
//! An amplitude f(s, p) on a momentum grid is transformed cellwise by
//! U(Λ, p); the reduced spin density matrix ρ(s,s′) = Σ w f f̄ generally
//! gains entropy because U depends on p.  With the frame referred to a
//! principal null direction of Λ, U is a momentum-independent diagonal
//! phase and the entropy is exactly preserved.

use nalgebra::Matrix2;
use rayon::prelude::*;
use spinor_core::{C64, SL2C};

use crate::error::MassiveError;
use crate::momentum::MassiveMomentum;
use crate::wigner::{wigner_u, GaugeSpec};

/// Isotropic complex-amplitude profile g(p⃗) = exp(−|p⃗ − c|²/(4σ²)).
#[derive(Debug, Clone, Copy)]
pub struct Gaussian3 {
    pub center: [f64; 3],
    pub sigma: f64,
}

impl Gaussian3 {
    pub fn eval(&self, p3: [f64; 3]) -> f64 {
        let d2: f64 =
            (0..3).map(|i| (p3[i] - self.center[i]) * (p3[i] - self.center[i])).sum();
        (-d2 / (4.0 * self.sigma * self.sigma)).exp()
    }
}

/// A cubic momentum grid on the mass shell with invariant-measure weights
/// w = Δ³p / ((2π)³ · 2E(p)).
#[derive(Debug, Clone)]
pub struct MomentumGrid {
    pub mass: f64,
    pub cells: Vec<([f64; 3], f64)>,
}

impl MomentumGrid {
    /// n³ cells centered on `center`, cube half-width `half`, midpoint rule.
    /// Cell centers never hit p⃗ = 0 exactly when n is even or center ≠ 0.
    pub fn cubic(mass: f64, center: [f64; 3], half: f64, n: usize) -> Self {
        let step = 2.0 * half / n as f64;
        let vol = step * step * step;
        let norm = (2.0 * std::f64::consts::PI).powi(3);
        let mut cells = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let p3 = [
                        center[0] - half + (i as f64 + 0.5) * step,
                        center[1] - half + (j as f64 + 0.5) * step,
                        center[2] - half + (k as f64 + 0.5) * step,
                    ];
                    let e = (mass * mass + p3[0] * p3[0] + p3[1] * p3[1] + p3[2] * p3[2]).sqrt();
                    cells.push((p3, vol / (norm * 2.0 * e)));
                }
            }
        }
        MomentumGrid { mass, cells }
    }
}

/// A normalized product amplitude f(s, p) = F(s) · g(p⃗) with g evaluated
/// on demand (so resampling at Λ⁻¹p needs no interpolation).
#[derive(Debug, Clone)]
pub struct MomentumSpinState {
    pub grid: MomentumGrid,
    pub spin: [C64; 2],
    pub profile: Gaussian3,
    norm: f64,
}

impl MomentumSpinState {
    /// Normalize so Σ_cells w (|f(+)|² + |f(−)|²) = 1.
    pub fn product(
        grid: MomentumGrid,
        spin: [C64; 2],
        profile: Gaussian3,
    ) -> Result<Self, MassiveError> {
        let spin_norm2 = spin[0].norm_sqr() + spin[1].norm_sqr();
        let total: f64 = grid
            .cells
            .iter()
            .map(|(p3, w)| {
                let g = profile.eval(*p3);
                w * spin_norm2 * g * g
            })
            .sum();
        if total <= 0.0 {
            return Err(MassiveError::NotNormalized(total));
        }
        Ok(MomentumSpinState { grid, spin, profile, norm: 1.0 / total.sqrt() })
    }

    /// The closed-form amplitude at any momentum (not just grid cells).
    pub fn amplitude(&self, s: usize, p3: [f64; 3]) -> C64 {
        self.norm * self.spin[s] * self.profile.eval(p3)
    }
}

/// Von Neumann entropy in bits of a 2×2 Hermitian density matrix
/// (normalized by its trace; 0·log 0 = 0).
pub fn entropy_bits(rho: &Matrix2<C64>) -> f64 {
    let tr = rho[(0, 0)].re + rho[(1, 1)].re;
    let a = rho[(0, 0)].re / tr;
    let c = rho[(1, 1)].re / tr;
    let b2 = rho[(0, 1)].norm_sqr() / (tr * tr);
    let disc = ((a - c) * (a - c) + 4.0 * b2).sqrt();
    let lam = [(a + c + disc) / 2.0, (a + c - disc) / 2.0];
    -lam.iter().filter(|&&x| x > 1e-300).map(|x| x * x.log2()).sum::<f64>()
}

fn accumulate_rho(contribs: Vec<Matrix2<C64>>) -> Matrix2<C64> {
    // fixed-order reduction keeps the result bit-reproducible
    let mut rho = Matrix2::zeros();
    for c in contribs {
        rho += c;
    }
    rho
}

/// Reduced spin density matrix before and after the transformation,
/// returned as von Neumann entropies in bits.
pub fn pst_experiment(
    state: &MomentumSpinState,
    l: &SL2C,
    gauge: &GaugeSpec,
) -> Result<(f64, f64), MassiveError> {
    let m = state.grid.mass;
    let l_inv = l.inverse();

    let before: Vec<Matrix2<C64>> = state
        .grid
        .cells
        .par_iter()
        .map(|(p3, w)| {
            let f = [state.amplitude(0, *p3), state.amplitude(1, *p3)];
            density_contrib(&f, *w)
        })
        .collect();
    let rho_before = accumulate_rho(before);

    let after: Vec<Matrix2<C64>> = state
        .grid
        .cells
        .par_iter()
        .map(|(p3, w)| -> Result<Matrix2<C64>, MassiveError> {
            let p = MassiveMomentum::on_shell(m, *p3);
            let u = wigner_u(l, &p, gauge)?.u;
            let q = l_inv.act_vector(&p.p);
            let fq = [state.amplitude(0, [q.x, q.y, q.z]), state.amplitude(1, [q.x, q.y, q.z])];
            let f = [
                u[(0, 0)] * fq[0] + u[(0, 1)] * fq[1],
                u[(1, 0)] * fq[0] + u[(1, 1)] * fq[1],
            ];
            Ok(density_contrib(&f, *w))
        })
        .collect::<Result<_, _>>()?;
    let rho_after = accumulate_rho(after);

    Ok((entropy_bits(&rho_before), entropy_bits(&rho_after)))
}

fn density_contrib(f: &[C64; 2], w: f64) -> Matrix2<C64> {
    Matrix2::new(
        w * f[0] * f[0].conj(),
        w * f[0] * f[1].conj(),
        w * f[1] * f[0].conj(),
        w * f[1] * f[1].conj(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test_state(n: usize) -> MomentumSpinState {
        let grid = MomentumGrid::cubic(1.0, [0.0, 0.0, 1.5], 1.2, n);
        let spin = [C64::new(0.8, 0.1), C64::new(0.3, -0.5)];
        let profile = Gaussian3 { center: [0.0, 0.0, 1.5], sigma: 0.45 };
        MomentumSpinState::product(grid, spin, profile).unwrap()
    }

    #[test]
    fn identity_preserves_entropy() {
        let state = test_state(6);
        let (e0, e1) = pst_experiment(&state, &SL2C::identity(), &GaugeSpec::Helicity).unwrap();
        assert!(e0.abs() < 1e-12);
        assert!((e1 - e0).abs() < 1e-10);
    }

    #[test]
    fn helicity_gauge_decoheres_product_state() {
        let state = test_state(8);
        let l = SL2C::boost([1.0, 0.0, 0.0], 1.0);
        let (e0, e1) = pst_experiment(&state, &l, &GaugeSpec::Helicity).unwrap();
        assert!(e0.abs() < 1e-12);
        assert!(e1 > 1e-3, "entropy_after = {e1}");
    }

    #[test]
    fn principal_null_gauge_preserves_entropy() {
        let state = test_state(8);
        let l = SL2C::boost([1.0, 0.0, 0.0], 1.0);
        let tau = crate::wigner::principal_null_spinors(&l)[0];
        let gauge = GaugeSpec::PrincipalNull {
            tau: [tau.c0.re, tau.c0.im, tau.c1.re, tau.c1.im],
        };
        let (e0, e1) = pst_experiment(&state, &l, &gauge).unwrap();
        assert!(e0.abs() < 1e-12);
        assert!((e1 - e0).abs() < 1e-10, "entropy changed: {e0} -> {e1}");
    }
}
