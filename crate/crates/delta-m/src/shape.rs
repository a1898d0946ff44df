//! The M-shaped bump: a compactly supported, piecewise-linear,
//! unit-integral function whose value at the origin is a free parameter.
//!
//! ```text
//!            0                                 k <  −ε/2
//!            (4k/ε + 2)(2/ε − a/2)      −ε/2 ≤ k < −ε/4
//! δ(k,a,ε) = −(4k/ε)(2/ε − 3a/2) + a    −ε/4 ≤ k <  0
//!            (4k/ε)(2/ε − 3a/2) + a        0 ≤ k <  ε/4
//!            (−4k/ε + 2)(2/ε − a/2)      ε/4 ≤ k <  ε/2
//!            0                            ε/2 ≤ k
//! ```
//!
//! For every a, ε > 0: δ(0) = a, ∫δ dk = 1, δ is even and continuous.
//! The choice a = 4/ε collapses the two humps and recovers the ordinary
//! triangular bump; a = 1/(2π) is the normalization used by the
//! plane-wave machinery.

use crate::error::DeltaError;

/// Height at the origin and support width of one bump.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaParams {
    pub a: f64,
    pub eps: f64,
}

impl DeltaParams {
    pub fn new(a: f64, eps: f64) -> Result<Self, DeltaError> {
        if a <= 0.0 || eps <= 0.0 || !a.is_finite() || !eps.is_finite() {
            return Err(DeltaError::BadParams { a, eps });
        }
        Ok(DeltaParams { a, eps })
    }

    /// The standard normalization a = 1/(2π) used for plane waves.
    pub fn standard(eps: f64) -> Result<Self, DeltaError> {
        DeltaParams::new(0.5 / std::f64::consts::PI, eps)
    }

    /// The triangular special case a = 4/ε.
    pub fn triangular(eps: f64) -> Result<Self, DeltaError> {
        DeltaParams::new(4.0 / eps, eps)
    }

    /// Interior breakpoints of the piecewise-linear graph.
    pub fn breakpoints(&self) -> [f64; 5] {
        let e = self.eps;
        [-e / 2.0, -e / 4.0, 0.0, e / 4.0, e / 2.0]
    }
}

/// The six-branch piecewise-linear value.
pub fn delta_eval(k: f64, prm: &DeltaParams) -> f64 {
    let (a, e) = (prm.a, prm.eps);
    let q = 4.0 * k / e;
    if k < -e / 2.0 {
        0.0
    } else if k < -e / 4.0 {
        (q + 2.0) * (2.0 / e - a / 2.0)
    } else if k < 0.0 {
        -q * (2.0 / e - 1.5 * a) + a
    } else if k < e / 4.0 {
        q * (2.0 / e - 1.5 * a) + a
    } else if k < e / 2.0 {
        (-q + 2.0) * (2.0 / e - a / 2.0)
    } else {
        0.0
    }
}

/// Composite Simpson rule with `panels` panels (exact for cubics on each
/// panel pair when the integrand is polynomial).
pub(crate) fn simpson<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, panels: usize) -> f64 {
    let n = panels.max(1);
    let h = (hi - lo) / n as f64;
    let mut s = 0.0;
    for i in 0..n {
        let a = lo + i as f64 * h;
        let b = a + h;
        s += (h / 6.0) * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
    }
    s
}

/// Integrate a function against the bump, piece by piece.
pub fn integrate_against<F: Fn(f64) -> f64>(f: F, prm: &DeltaParams, panels: usize) -> f64 {
    let bp = prm.breakpoints();
    let mut s = 0.0;
    for w in bp.windows(2) {
        s += simpson(|k| f(k) * delta_eval(k, prm), w[0], w[1], panels);
    }
    s
}

/// ∫δ dk, computed exactly (Simpson on linear pieces).
pub fn total_integral(prm: &DeltaParams) -> f64 {
    integrate_against(|_| 1.0, prm, 1)
}

/// ∫δ² dk, computed exactly (Simpson on quadratic pieces); grows without
/// bound as ε → 0 at fixed a-rule.
pub fn square_integral(prm: &DeltaParams) -> f64 {
    let bp = prm.breakpoints();
    let mut s = 0.0;
    for w in bp.windows(2) {
        let v = simpson(|k| delta_eval(k, prm).powi(2), w[0], w[1], 1);
        s += v;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_value_is_a() {
        for (a, e) in [(1.0, 0.5), (0.2, 3.0), (7.0, 0.01)] {
            let prm = DeltaParams::new(a, e).unwrap();
            assert_eq!(delta_eval(0.0, &prm), a);
        }
    }

    #[test]
    fn vanishes_outside_support() {
        let prm = DeltaParams::new(1.0, 0.5).unwrap();
        for k in [-0.26, -1.0, 0.25, 0.4, 2.0] {
            assert_eq!(delta_eval(k, &prm), 0.0, "k = {k}");
        }
    }

    #[test]
    fn unit_integral() {
        for (a, e) in [(1.0, 0.5), (0.2, 3.0), (7.0, 0.01), (8.0, 0.5)] {
            let prm = DeltaParams::new(a, e).unwrap();
            assert!((total_integral(&prm) - 1.0).abs() < 1e-12, "a={a} e={e}");
        }
    }

    #[test]
    fn even_and_continuous() {
        let prm = DeltaParams::new(0.7, 1.3).unwrap();
        for k in [0.01, 0.17, 0.31, 0.52, 0.64, 0.649] {
            assert!((delta_eval(k, &prm) - delta_eval(-k, &prm)).abs() < 1e-13);
        }
        for b in prm.breakpoints() {
            let h = 1e-9;
            let jump = (delta_eval(b + h, &prm) - delta_eval(b - h, &prm)).abs();
            assert!(jump < 1e-6, "jump {jump} at {b}");
        }
    }

    #[test]
    fn triangular_case_collapses_the_humps() {
        let prm = DeltaParams::triangular(0.5).unwrap();
        assert_eq!(prm.a, 8.0);
        // zero outside [−ε/4, ε/4], linear tent inside
        assert!(delta_eval(0.2, &prm).abs() < 1e-12);
        assert!((delta_eval(0.125, &prm)).abs() < 1e-12);
        assert!((delta_eval(0.0625, &prm) - 4.0).abs() < 1e-12);
        assert!((total_integral(&prm) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn square_integral_diverges_along_shrinking_widths() {
        let mut prev = 0.0;
        let first = square_integral(&DeltaParams::standard(1.0).unwrap());
        for i in 0..12 {
            let prm = DeltaParams::standard(2.0f64.powi(-i)).unwrap();
            let v = square_integral(&prm);
            assert!(v > prev, "not monotone at i={i}");
            prev = v;
        }
        assert!(prev > 100.0 * first, "growth too slow: {prev} vs {first}");
    }
}
