//! Two-qubit miniature of the construction: a maximally entangled vector
//! is cyclic for the observables of one factor alone, and the same
//! observable algebra acting on either factor sweeps out the same orbit
//! of Bell states. The CHSH functional over rotated observables reaches
//! 2√2 on this vector.

use num_complex::Complex64 as C64;

type Vec4 = [C64; 4];
type Mat2 = [[f64; 2]; 2];

const A_OBS: Mat2 = [[1.0, 0.0], [0.0, -1.0]];
const B_OBS: Mat2 = [[0.0, 1.0], [1.0, 0.0]];

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn zero4() -> Vec4 {
    [C64::new(0.0, 0.0); 4]
}

/// Basis order |q₁ q₂⟩ with index 2·q₁ + q₂.
fn apply_first(m: &Mat2, v: &Vec4) -> Vec4 {
    let mut out = zero4();
    for q1 in 0..2 {
        for q2 in 0..2 {
            for r1 in 0..2 {
                out[2 * r1 + q2] += c(m[r1][q1]) * v[2 * q1 + q2];
            }
        }
    }
    out
}

fn apply_second(m: &Mat2, v: &Vec4) -> Vec4 {
    let mut out = zero4();
    for q1 in 0..2 {
        for q2 in 0..2 {
            for r2 in 0..2 {
                out[2 * q1 + r2] += c(m[r2][q2]) * v[2 * q1 + q2];
            }
        }
    }
    out
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn dot(a: &Vec4, b: &Vec4) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn dist(a: &Vec4, b: &Vec4) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Distance between the rays of two unit vectors.
fn ray_dist(a: &Vec4, b: &Vec4) -> f64 {
    (1.0 - dot(a, b).norm()).abs()
}

/// The four Bell states in the order swept out by (1, A, B, AB) ⊗ 1.
fn bell() -> [Vec4; 4] {
    let h = c(std::f64::consts::FRAC_1_SQRT_2);
    let mut psi_p = zero4();
    psi_p[1] = h;
    psi_p[2] = h;
    let mut psi_m = zero4();
    psi_m[1] = h;
    psi_m[2] = -h;
    let mut phi_p = zero4();
    phi_p[0] = h;
    phi_p[3] = h;
    let mut phi_m = zero4();
    phi_m[0] = h;
    phi_m[3] = -h;
    [psi_p, psi_m, phi_p, phi_m]
}

/// Summary of the two-qubit demonstration.
#[derive(Debug, Clone, Copy)]
pub struct CyclicReport {
    /// max vector distance over the four first-factor orbit identities.
    pub orbit_residual: f64,
    /// max ray distance between the first- and second-factor orbits.
    pub second_factor_residual: f64,
    /// CHSH value over rotated observables (2√2 on this vector).
    pub chsh: f64,
}

/// Run the demonstration: orbit identities and the CHSH value.
pub fn cyclic_vacuum_demo() -> CyclicReport {
    let [psi_p, psi_m, phi_p, phi_m] = bell();
    let ab = mat_mul(&A_OBS, &B_OBS);

    // (1, A, B, AB) acting on the first factor sweeps the Bell basis
    let orbit_first = [
        psi_p,
        apply_first(&A_OBS, &psi_p),
        apply_first(&B_OBS, &psi_p),
        apply_first(&ab, &psi_p),
    ];
    let targets = [psi_p, psi_m, phi_p, phi_m];
    let orbit_residual = orbit_first
        .iter()
        .zip(&targets)
        .map(|(got, want)| dist(got, want))
        .fold(0.0, f64::max);

    // the same operators on the second factor reach the same rays
    let orbit_second = [
        psi_p,
        apply_second(&A_OBS, &psi_p),
        apply_second(&B_OBS, &psi_p),
        apply_second(&ab, &psi_p),
    ];
    let second_factor_residual = orbit_second
        .iter()
        .zip(&targets)
        .map(|(got, want)| ray_dist(got, want))
        .fold(0.0, f64::max);

    // rotated observables O(t) = cos t·A + sin t·B on each factor
    let obs = |t: f64| -> Mat2 { [[t.cos(), t.sin()], [t.sin(), -t.cos()]] };
    let corr = |a: f64, b: f64| -> f64 {
        let v = apply_second(&obs(b), &apply_first(&obs(a), &psi_p));
        dot(&psi_p, &v).re
    };
    let pi = std::f64::consts::PI;
    let (a1, a2, b1, b2) = (0.0, pi / 2.0, pi / 4.0, -pi / 4.0);
    let es = [corr(a1, b1), corr(a1, b2), corr(a2, b1), corr(a2, b2)];
    let total: f64 = es.iter().sum();
    let chsh = es.iter().map(|e| (total - 2.0 * e).abs()).fold(0.0, f64::max);

    CyclicReport { orbit_residual, second_factor_residual, chsh }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_identities_are_exact() {
        let r = cyclic_vacuum_demo();
        assert!(r.orbit_residual < 1e-15, "{}", r.orbit_residual);
        assert!(r.second_factor_residual < 1e-15, "{}", r.second_factor_residual);
    }

    #[test]
    fn chsh_reaches_the_quantum_bound() {
        let r = cyclic_vacuum_demo();
        assert!((r.chsh - 2.0 * 2f64.sqrt()).abs() < 1e-12, "{}", r.chsh);
    }

    #[test]
    fn correlation_pattern_is_minus_cosine_of_the_angle_sum() {
        // ⟨O(a) ⊗ O(b)⟩ = −cos(a + b) on this vector
        let [psi_p, ..] = bell();
        let obs = |t: f64| -> Mat2 {
            [[t.cos(), t.sin()], [t.sin(), -t.cos()]]
        };
        for (a, b) in [(0.1, 0.2), (1.0, -0.4), (2.2, 0.9)] {
            let v = apply_second(&obs(b), &apply_first(&obs(a), &psi_p));
            let e = dot(&psi_p, &v).re;
            assert!((e + (a + b).cos()).abs() < 1e-14, "({a}, {b}): {e}");
        }
    }
}
