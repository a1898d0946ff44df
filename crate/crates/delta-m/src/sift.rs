//! Sifting limits, ordered-limit schedules, measure-weighted deltas, and
//! plane-wave normalization.

use rayon::prelude::*;

use crate::convolve::delta_convolve;
use crate::error::DeltaError;
use crate::shape::{delta_eval, integrate_against, DeltaParams};

/// One row per width: (eps, ∫f(k)δ(k,a,eps)dk).
#[derive(Debug, Clone)]
pub struct SiftingTable {
    pub rows: Vec<(f64, f64)>,
}

impl SiftingTable {
    /// Extrapolated limit of the value column.
    pub fn limit(&self) -> f64 {
        aitken_limit(&self.rows.iter().map(|r| r.1).collect::<Vec<_>>())
    }
}

/// Evaluate ∫f δ over a schedule of widths (in parallel, assembled in
/// schedule order).  The limit is (f(0−)+f(0+))/2 for f with one-sided
/// limits at 0.
pub fn sifting_test<F: Fn(f64) -> f64 + Sync>(f: F, a: f64, eps_schedule: &[f64]) -> SiftingTable {
    let rows: Vec<(f64, f64)> = eps_schedule
        .par_iter()
        .map(|&e| {
            let prm = DeltaParams::new(a, e).expect("schedule widths must be positive");
            (e, integrate_against(&f, &prm, 64))
        })
        .collect();
    SiftingTable { rows }
}

/// Aitken Δ² extrapolation applied to the last three entries (falls back
/// to the last entry when the sequence is too short or already flat).
pub fn aitken_limit(seq: &[f64]) -> f64 {
    match seq.len() {
        0 => f64::NAN,
        1 | 2 => *seq.last().unwrap(),
        n => {
            let (x0, x1, x2) = (seq[n - 3], seq[n - 2], seq[n - 1]);
            let den = (x2 - x1) - (x1 - x0);
            if den.abs() < 1e-14 * (1.0 + x2.abs()) {
                x2
            } else {
                x2 - (x2 - x1) * (x2 - x1) / den
            }
        }
    }
}

/// An ordered double limit: for each outer width ε, the inner width runs
/// through ε·ratios (inner limit extrapolated first, then the outer).
pub fn ordered_limit<F: Fn(f64, f64) -> f64 + Sync>(
    f: F,
    outer: &[f64],
    ratios: &[f64],
) -> (Vec<f64>, f64) {
    let per_outer: Vec<f64> = outer
        .par_iter()
        .map(|&e| {
            let inner: Vec<f64> = ratios.iter().map(|&r| f(e, e * r)).collect();
            aitken_limit(&inner)
        })
        .collect();
    let lim = aitken_limit(&per_outer);
    (per_outer, lim)
}

/// The measure-weighted bump δ_μ(p, p′, ε) = ρ(p′)⁻¹ δ(p−p′, aρ(p), ε):
/// its diagonal value is a for every p, and sifting against the measure
/// ρ(p′)dp′ reproduces the half-sum of one-sided limits at p.
pub fn measure_delta<R: Fn(f64) -> f64>(
    p: f64,
    pprime: f64,
    prm: &DeltaParams,
    rho: R,
) -> Result<f64, DeltaError> {
    let rp = rho(p);
    if rp <= 0.0 {
        return Err(DeltaError::NonpositiveDensity(rp));
    }
    let rpp = rho(pprime);
    if rpp <= 0.0 {
        return Err(DeltaError::NonpositiveDensity(rpp));
    }
    let scaled = DeltaParams::new(prm.a * rp, prm.eps)
        .map_err(|_| DeltaError::NonpositiveDensity(rp))?;
    Ok(delta_eval(p - pprime, &scaled) / rpp)
}

/// Finite-width plane-wave overlaps ⟨k, ε_n | k′, ε_m⟩ = 2π·(δ_n ∗ δ_m)(k−k′)
/// with the standard normalization a = 1/(2π), evaluated over an ordered
/// schedule (inner width = ratio·outer width for each outer width).
///
/// Returns (off-diagonal values, diagonal values) per outer width; the
/// diagonal tends to 1 while for |k−k′| larger than the widths the
/// off-diagonal vanishes identically (compact supports).
pub fn plane_wave_norm(
    k: f64,
    kprime: f64,
    outer: &[f64],
    ratio: f64,
) -> (Vec<f64>, Vec<f64>) {
    let two_pi = 2.0 * std::f64::consts::PI;
    let value = |d: f64, e: f64| {
        // inner limit first, over a geometric inner-width run.  While the
        // inner support stays inside the outer bump's central linear
        // segment the error is an exact linear-plus-quadratic polynomial
        // in the inner width (the fixed origin value contributes the
        // quadratic term), so a three-point quadratic fit removes it.
        let n = DeltaParams::standard(e).expect("positive width");
        let v: Vec<f64> = [1.0, 0.5, 0.25]
            .iter()
            .map(|&s| {
                let m = DeltaParams::standard(e * ratio * s).expect("positive width");
                two_pi * delta_convolve(d, &n, &m)
            })
            .collect();
        // constant term of the quadratic through (1, v0), (1/2, v1), (1/4, v2)
        (v[0] - 6.0 * v[1] + 8.0 * v[2]) / 3.0
    };
    let off: Vec<f64> = outer.iter().map(|&e| value(k - kprime, e)).collect();
    let diag: Vec<f64> = outer.iter().map(|&e| value(0.0, e)).collect();
    (off, diag)
}
