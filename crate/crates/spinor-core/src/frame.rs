//! Spin-frames and the null / Minkowski tetrads they generate.

use nalgebra::{Matrix2, Matrix4};

use crate::error::CoreError;
use crate::spinor::{contract, mixed_flagpole, TwoSpinor};
use crate::vector::FourVector;
use crate::{C64, FRAC_1_SQRT_2};

/// A normalized spinor dyad (o, ι) with o_A ι^A = 1.
#[derive(Debug, Clone, Copy)]
pub struct SpinFrame {
    pub o: TwoSpinor,
    pub iota: TwoSpinor,
}

/// The null tetrad (l, n, m, m̄) of a spin-frame: l and n are the real
/// flagpoles of o and ι, m is the complex mixed leg o ⊗ ῑ.
#[derive(Debug, Clone, Copy)]
pub struct NullTetrad {
    pub l: FourVector,
    pub n: FourVector,
    pub m: [C64; 4],
}

/// The orthonormal Minkowski tetrad (t, x, y, z) built from a null tetrad:
/// t = (l+n)/√2, z = (l−n)/√2, x = √2 Re m, y = −√2 Im m.
#[derive(Debug, Clone, Copy)]
pub struct MinkowskiTetrad {
    pub t: FourVector,
    pub x: FourVector,
    pub y: FourVector,
    pub z: FourVector,
}

impl SpinFrame {
    /// Validate o_A ι^A = 1 within 1e−9.
    pub fn new(o: TwoSpinor, iota: TwoSpinor) -> Result<Self, CoreError> {
        let c = contract(&o, &iota);
        let defect = (c - C64::new(1.0, 0.0)).norm();
        if defect > 1e-9 {
            return Err(CoreError::NotSpinFrame(defect));
        }
        Ok(SpinFrame { o, iota })
    }

    /// The standard frame o = (1, 0), ι = (0, 1).
    pub fn standard() -> Self {
        SpinFrame {
            o: TwoSpinor::from_reals(1.0, 0.0, 0.0, 0.0),
            iota: TwoSpinor::from_reals(0.0, 0.0, 1.0, 0.0),
        }
    }

    /// The null tetrad of the frame.
    pub fn null_tetrad(&self) -> NullTetrad {
        NullTetrad {
            l: self.o.flagpole(),
            n: self.iota.flagpole(),
            m: mixed_flagpole(&self.o, &self.iota),
        }
    }

    /// The orthonormal Minkowski tetrad of the frame.
    pub fn minkowski_tetrad(&self) -> MinkowskiTetrad {
        self.null_tetrad().minkowski()
    }

    /// o_A ι_B − ι_A o_B as a 2×2 matrix of lowered components; equals the
    /// ε-spinor [[0, 1], [−1, 0]] for every spin-frame.
    pub fn epsilon_identity(&self) -> Matrix2<C64> {
        let ol = self.o.lowered();
        let il = self.iota.lowered();
        Matrix2::new(
            ol[0] * il[0] - il[0] * ol[0],
            ol[0] * il[1] - il[0] * ol[1],
            ol[1] * il[0] - il[1] * ol[0],
            ol[1] * il[1] - il[1] * ol[1],
        )
    }
}

impl NullTetrad {
    pub fn minkowski(&self) -> MinkowskiTetrad {
        let s = FRAC_1_SQRT_2;
        let sqrt2 = std::f64::consts::SQRT_2;
        let re = FourVector::new(self.m[0].re, self.m[1].re, self.m[2].re, self.m[3].re);
        let im = FourVector::new(self.m[0].im, self.m[1].im, self.m[2].im, self.m[3].im);
        MinkowskiTetrad {
            t: s * (self.l + self.n),
            z: s * (self.l - self.n),
            x: sqrt2 * re,
            y: -sqrt2 * im,
        }
    }

    /// Minkowski pairing of the complex legs: m·m̄ (= −1), m·m (= 0), l·n (= 1).
    pub fn m_dot_mbar(&self) -> C64 {
        let mb: Vec<C64> = self.m.iter().map(|z| z.conj()).collect();
        complex_dot(&self.m, &[mb[0], mb[1], mb[2], mb[3]])
    }

    pub fn m_dot_m(&self) -> C64 {
        complex_dot(&self.m, &self.m)
    }

    /// g reconstructed from the null legs: l⊗n + n⊗l − m⊗m̄ − m̄⊗m.
    pub fn metric(&self) -> Matrix4<f64> {
        let mut g = Matrix4::zeros();
        let la = self.l.to_array();
        let na = self.n.to_array();
        for a in 0..4 {
            for b in 0..4 {
                let mm = self.m[a] * self.m[b].conj() + self.m[a].conj() * self.m[b];
                g[(a, b)] = la[a] * na[b] + na[a] * la[b] - mm.re;
            }
        }
        g
    }
}

impl MinkowskiTetrad {
    /// g reconstructed from the orthonormal legs: t⊗t − x⊗x − y⊗y − z⊗z.
    pub fn metric(&self) -> Matrix4<f64> {
        let mut g = Matrix4::zeros();
        let (t, x, y, z) =
            (self.t.to_array(), self.x.to_array(), self.y.to_array(), self.z.to_array());
        for a in 0..4 {
            for b in 0..4 {
                g[(a, b)] = t[a] * t[b] - x[a] * x[b] - y[a] * y[b] - z[a] * z[b];
            }
        }
        g
    }
}

/// η = diag(1, −1, −1, −1).
pub fn minkowski_metric() -> Matrix4<f64> {
    Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, -1.0, -1.0, -1.0))
}

fn complex_dot(a: &[C64; 4], b: &[C64; 4]) -> C64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn standard_frame_gives_unit_axes() {
        let f = SpinFrame::standard();
        let mt = f.minkowski_tetrad();
        for (leg, a) in [(mt.t, 0), (mt.x, 1), (mt.y, 2), (mt.z, 3)] {
            let e = FourVector::basis(a);
            for b in 0..4 {
                assert_relative_eq!(leg.component(b), e.component(b), epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn null_tetrad_pairings() {
        let o = TwoSpinor::from_reals(0.9, 0.3, -0.2, 0.5);
        // build ι with contract(o, ι) = 1: pick any χ not ∝ o and normalize
        let chi = TwoSpinor::from_reals(0.1, -0.7, 1.3, 0.2);
        let c = contract(&o, &chi);
        let iota = chi.scale(c.inv());
        let f = SpinFrame::new(o, iota).unwrap();
        let nt = f.null_tetrad();
        assert_relative_eq!(nt.l.dot(&nt.n), 1.0, max_relative = 1e-12);
        assert!(nt.m_dot_m().norm() < 1e-12);
        assert!((nt.m_dot_mbar() + C64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(nt.l.norm2().abs() < 1e-12);
        assert!(nt.n.norm2().abs() < 1e-12);
    }

    #[test]
    fn both_metric_reconstructions_agree_with_eta() {
        let o = TwoSpinor::from_reals(1.1, -0.6, 0.4, 0.8);
        let chi = TwoSpinor::from_reals(-0.3, 0.2, 0.9, -1.1);
        let iota = chi.scale(contract(&o, &chi).inv());
        let f = SpinFrame::new(o, iota).unwrap();
        let eta = minkowski_metric();
        assert!((f.null_tetrad().metric() - eta).amax() < 1e-12);
        assert!((f.minkowski_tetrad().metric() - eta).amax() < 1e-12);
    }

    #[test]
    fn epsilon_identity_holds() {
        let o = TwoSpinor::from_reals(0.4, 1.2, -0.8, 0.1);
        let chi = TwoSpinor::from_reals(1.0, 0.0, 0.3, -0.9);
        let iota = chi.scale(contract(&o, &chi).inv());
        let f = SpinFrame::new(o, iota).unwrap();
        let eps = f.epsilon_identity();
        let expect = Matrix2::new(
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(-1.0, 0.0),
            C64::new(0.0, 0.0),
        );
        assert!((eps - expect).norm() < 1e-12);
    }
}
