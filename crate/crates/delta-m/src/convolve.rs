//! Exact convolution of two M-shaped bumps.
//!
//! The integrand k′ ↦ δ(k−k′, n)·δ(k′, m) is piecewise quadratic with
//! breakpoints where either factor changes branch, so one Simpson step per
//! smooth piece evaluates the convolution exactly (up to rounding).

use crate::shape::{delta_eval, simpson, DeltaParams};

/// (δ_n ∗ δ_m)(k) = ∫ δ(k−k′, n) δ(k′, m) dk′, exact.
pub fn delta_convolve(k: f64, n: &DeltaParams, m: &DeltaParams) -> f64 {
    let lo = (-m.eps / 2.0).max(k - n.eps / 2.0);
    let hi = (m.eps / 2.0).min(k + n.eps / 2.0);
    if lo >= hi {
        return 0.0;
    }
    let mut cuts: Vec<f64> = Vec::with_capacity(12);
    cuts.push(lo);
    cuts.push(hi);
    for b in m.breakpoints() {
        if b > lo && b < hi {
            cuts.push(b);
        }
    }
    for b in n.breakpoints() {
        let c = k - b;
        if c > lo && c < hi {
            cuts.push(c);
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let f = |kp: f64| delta_eval(k - kp, n) * delta_eval(kp, m);
    let mut s = 0.0;
    for w in cuts.windows(2) {
        if w[1] > w[0] {
            s += simpson(&f, w[0], w[1], 1);
        }
    }
    s
}

/// ∫ (δ_n ∗ δ_m)(k) dk, exact: the convolution is piecewise cubic with
/// breakpoints at all pairwise sums of the factors' breakpoints, and one
/// Simpson step per piece is exact for cubics.
pub fn convolve_integral(n: &DeltaParams, m: &DeltaParams) -> f64 {
    let mut cuts: Vec<f64> = Vec::with_capacity(25);
    for b in n.breakpoints() {
        for c in m.breakpoints() {
            cuts.push(b + c);
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    let mut s = 0.0;
    for w in cuts.windows(2) {
        if w[1] > w[0] {
            s += simpson(|k| delta_convolve(k, n, m), w[0], w[1], 1);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::{delta_hat, delta_hat_quadrature};
    use crate::shape::integrate_against;

    #[test]
    fn convolution_has_unit_integral() {
        let n = DeltaParams::standard(0.5).unwrap();
        let m = DeltaParams::standard(0.3).unwrap();
        assert!((convolve_integral(&n, &m) - 1.0).abs() < 1e-9);
        let n = DeltaParams::new(3.0, 1.1).unwrap();
        let m = DeltaParams::triangular(0.7).unwrap();
        assert!((convolve_integral(&n, &m) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn convolution_is_symmetric_in_the_widths() {
        let n = DeltaParams::standard(0.5).unwrap();
        let m = DeltaParams::standard(0.21).unwrap();
        for k in [-0.3, -0.05, 0.0, 0.11, 0.27] {
            let a = delta_convolve(k, &n, &m);
            let b = delta_convolve(k, &m, &n);
            assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()), "k={k}");
        }
    }

    #[test]
    fn narrow_second_factor_recovers_the_first() {
        let n = DeltaParams::standard(0.5).unwrap();
        for k in [-0.2, 0.0, 0.07, 0.19] {
            let want = delta_eval(k, &n);
            let mut gap_prev = f64::INFINITY;
            for i in 3..7 {
                let m = DeltaParams::standard(10.0f64.powi(-i)).unwrap();
                let gap = (delta_convolve(k, &n, &m) - want).abs();
                assert!(gap <= gap_prev + 1e-12, "k={k}");
                gap_prev = gap;
            }
            assert!(gap_prev < 1e-4, "k={k} gap={gap_prev}");
        }
    }

    #[test]
    fn fourier_of_convolution_factorizes() {
        // transform of the convolution = 2π · product of the transforms
        let n = DeltaParams::standard(0.5).unwrap();
        let m = DeltaParams::standard(0.3).unwrap();
        for x in [0.0, 0.9, 2.7, -4.1, 11.0] {
            // quadrature transform of δ* over its support, piece by piece
            let mut cuts: Vec<f64> = Vec::new();
            for b in n.breakpoints() {
                for c in m.breakpoints() {
                    cuts.push(b + c);
                }
            }
            cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut q = 0.0;
            for w in cuts.windows(2) {
                q += crate::shape::simpson(
                    |k| delta_convolve(k, &n, &m) * (k * x).cos(),
                    w[0],
                    w[1],
                    64,
                );
            }
            q /= 2.0 * std::f64::consts::PI;
            let want = 2.0 * std::f64::consts::PI * delta_hat(x, &n) * delta_hat(x, &m);
            assert!((q - want).abs() < 1e-8, "x={x}: {q} vs {want}");
        }
    }

    #[test]
    fn quadrature_transform_oracle_consistency() {
        // sanity anchor for the oracle itself
        let n = DeltaParams::standard(0.5).unwrap();
        let direct = integrate_against(|k| (1.3 * k).cos(), &n, 256) / (2.0 * std::f64::consts::PI);
        assert!((direct - delta_hat_quadrature(1.3, &n)).abs() < 1e-14);
    }
}
