//! The 2×2 unitary little-group matrix U(Λ, p) acting on spin amplitudes,
//! and principal null directions of SL(2,ℂ) elements.

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};
use spinor_core::{contract, spinor_from_flagpole, FourVector, TwoSpinor, C64, SL2C};

use crate::error::MassiveError;
use crate::momentum::MassiveMomentum;
use crate::omega::OmegaFrame;

/// How the ω-spinor field over momenta is chosen.
///
/// `Helicity`: τ(p) is the null direction along p⃗ (momentum-dependent).
/// `PrincipalNull`: one fixed τ for all momenta; when τ is an eigenvector
/// of L the resulting U(Λ, p) is diagonal and momentum-independent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GaugeSpec {
    Helicity,
    PrincipalNull { tau: [f64; 4] },
}

impl GaugeSpec {
    /// The seed null spinor at momentum p.
    pub fn tau_at(&self, p: &FourVector) -> Result<TwoSpinor, MassiveError> {
        match self {
            GaugeSpec::Helicity => {
                let r = p.spatial_norm();
                if r <= 0.0 {
                    return Err(MassiveError::GaugeUndefined);
                }
                let n = FourVector::new(r, p.x, p.y, p.z);
                spinor_from_flagpole(&n, 0.0).map_err(|_| MassiveError::GaugeUndefined)
            }
            GaugeSpec::PrincipalNull { tau } => {
                let t = TwoSpinor::from_reals(tau[0], tau[1], tau[2], tau[3]);
                if t.norm() == 0.0 {
                    return Err(MassiveError::GaugeUndefined);
                }
                Ok(t)
            }
        }
    }

    /// The (ω, π) frame the gauge assigns to p.
    pub fn frame_at(&self, p: &MassiveMomentum) -> Result<OmegaFrame, MassiveError> {
        let tau = self.tau_at(&p.p)?;
        OmegaFrame::from_tau(&tau, p)
    }
}

/// The unitary spin rotation attached to (Λ, p).
#[derive(Debug, Clone, Copy)]
pub struct WignerU {
    pub u: Matrix2<C64>,
    pub p: MassiveMomentum,
    pub l: SL2C,
}

impl WignerU {
    /// ∞-norm of U†U − 1.
    pub fn unitarity_defect(&self) -> f64 {
        let d = self.u.adjoint() * self.u - Matrix2::identity();
        d.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// |det U − 1|.
    pub fn det_defect(&self) -> f64 {
        let det = self.u[(0, 0)] * self.u[(1, 1)] - self.u[(0, 1)] * self.u[(1, 0)];
        (det - C64::new(1.0, 0.0)).norm()
    }
}

/// Build U(Λ, p) from the gauge's frames at p and Λ⁻¹p:
///
/// ```text
/// U = [ conj(ω(p)·Λπ)         −(m/√2) conj(ω(p)·Λω) ]
///     [ (m/√2) ω(p)·Λω         ω(p)·Λπ              ]
/// ```
///
/// where Λπ = L π(Λ⁻¹p), Λω = L ω(Λ⁻¹p) and the dot is the ε-contraction.
pub fn wigner_u(
    l: &SL2C,
    p: &MassiveMomentum,
    gauge: &GaugeSpec,
) -> Result<WignerU, MassiveError> {
    let q_vec = l.inverse().act_vector(&p.p);
    let q = MassiveMomentum::new(q_vec, p.m)?;
    let frame_p = gauge.frame_at(p)?;
    let frame_q = gauge.frame_at(&q)?;
    let lam_pi = l.act(&frame_q.pi);
    let lam_om = l.act(&frame_q.omega);
    let a = contract(&frame_p.omega, &lam_pi);
    let b = contract(&frame_p.omega, &lam_om);
    let c = p.m / std::f64::consts::SQRT_2;
    let u = Matrix2::new(a.conj(), -c * b.conj(), c * b, a);
    Ok(WignerU { u, p: *p, l: *l })
}

/// Eigen-directions of L: one or two null spinors τ with L τ ∥ τ.
///
/// Diagonalizable L yields two directions; a parabolic (defective) L
/// yields one.  ±identity yields the two coordinate directions.
pub fn principal_null_spinors(l: &SL2C) -> Vec<TwoSpinor> {
    let m = l.matrix();
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    if b.norm() < 1e-14 && c.norm() < 1e-14 && (a - d).norm() < 1e-14 {
        // ±identity: every direction is principal; return the frame pair.
        return vec![
            TwoSpinor::from_reals(1.0, 0.0, 0.0, 0.0),
            TwoSpinor::from_reals(0.0, 0.0, 1.0, 0.0),
        ];
    }
    let tr = a + d;
    let disc = tr * tr - C64::new(4.0, 0.0); // det = 1
    let lambdas: Vec<C64> = if disc.norm() < 1e-12 {
        vec![tr * 0.5]
    } else {
        let s = disc.sqrt();
        vec![(tr + s) * 0.5, (tr - s) * 0.5]
    };
    lambdas
        .into_iter()
        .map(|lam| {
            // rows of (L − λ) are proportional; an eigenvector is
            // orthogonal-in-determinant to either row.
            let v1 = TwoSpinor::new(b, lam - a);
            let v2 = TwoSpinor::new(lam - d, c);
            let v = if v1.norm() >= v2.norm() { v1 } else { v2 };
            normalize_direction(&v)
        })
        .collect()
}

/// Unit norm with real-positive leading component.
fn normalize_direction(v: &TwoSpinor) -> TwoSpinor {
    let n = v.norm();
    let lead = if v.c0.norm() >= v.c1.norm() { v.c0 } else { v.c1 };
    let phase = C64::from_polar(1.0 / n, -lead.arg());
    v.scale(phase)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(l: &SL2C, tau: &TwoSpinor) -> f64 {
        let lt = l.act(tau);
        // ‖Lτ − λτ‖ with λ read off the dominant component
        let lam = if tau.c0.norm() >= tau.c1.norm() { lt.c0 / tau.c0 } else { lt.c1 / tau.c1 };
        let r0 = lt.c0 - lam * tau.c0;
        let r1 = lt.c1 - lam * tau.c1;
        (r0.norm() + r1.norm()) / tau.norm()
    }

    #[test]
    fn identity_gives_identity_u() {
        let p = MassiveMomentum::on_shell(1.4, [0.2, -0.3, 0.8]);
        let u = wigner_u(&SL2C::identity(), &p, &GaugeSpec::Helicity).unwrap();
        let d = u.u - Matrix2::identity();
        assert!(d.iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-10);
    }

    #[test]
    fn u_is_unitary_unit_det() {
        let p = MassiveMomentum::on_shell(0.9, [1.2, 0.1, -0.6]);
        let l = SL2C::boost([0.3, 0.9, -0.1], 0.8).mul(&SL2C::rotation([1.0, -0.2, 0.4], 1.3));
        for gauge in [
            GaugeSpec::Helicity,
            GaugeSpec::PrincipalNull { tau: [1.0, 0.2, -0.4, 0.8] },
        ] {
            let u = wigner_u(&l, &p, &gauge).unwrap();
            assert!(u.unitarity_defect() < 1e-10, "{gauge:?}");
            assert!(u.det_defect() < 1e-10, "{gauge:?}");
        }
    }

    #[test]
    fn eigen_tau_gives_momentum_independent_diagonal_u() {
        let l = SL2C::boost_z(0.9).mul(&SL2C::rotation_z(0.7));
        let taus = principal_null_spinors(&l);
        let tau = taus[0];
        let gauge = GaugeSpec::PrincipalNull {
            tau: [tau.c0.re, tau.c0.im, tau.c1.re, tau.c1.im],
        };
        let mut phases = Vec::new();
        for p3 in [[0.3, 0.1, -0.4], [1.2, -0.8, 0.5], [0.0, 2.0, 0.3]] {
            let p = MassiveMomentum::on_shell(1.1, p3);
            let u = wigner_u(&l, &p, &gauge).unwrap().u;
            assert!(u[(0, 1)].norm() < 1e-9 && u[(1, 0)].norm() < 1e-9);
            phases.push(u[(0, 0)].arg());
        }
        for w in phases.windows(2) {
            assert!((w[0] - w[1]).abs() < 1e-9, "phases {phases:?}");
        }
    }

    #[test]
    fn principal_null_diagonal_and_parabolic() {
        let taus = principal_null_spinors(&SL2C::boost_z(1.0));
        assert_eq!(taus.len(), 2);
        assert!(taus[0].c1.norm() < 1e-12 || taus[1].c1.norm() < 1e-12);
        let par = SL2C::new(nalgebra::Matrix2::new(
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
        ))
        .unwrap();
        let taus = principal_null_spinors(&par);
        assert_eq!(taus.len(), 1);
        assert!(residual(&par, &taus[0]) < 1e-9);
    }

    #[test]
    fn principal_null_random_residuals() {
        let l = SL2C::boost([0.4, -0.2, 0.9], 0.6).mul(&SL2C::rotation([0.1, 1.0, 0.3], 2.1));
        for tau in principal_null_spinors(&l) {
            assert!(residual(&l, &tau) < 1e-9);
        }
    }

    #[test]
    fn gauge_spec_serde_round_trip() {
        let g = GaugeSpec::PrincipalNull { tau: [1.0, 0.0, 0.5, -0.5] };
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.contains("principal_null"));
        let back: GaugeSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        let h: GaugeSpec = serde_json::from_str("{\"type\":\"helicity\"}").unwrap();
        assert_eq!(h, GaugeSpec::Helicity);
    }
}
