//! SL(2,ℂ) elements and the two-to-one covering of the restricted
//! Lorentz group.

use nalgebra::{Matrix2, Matrix4};

use crate::error::CoreError;
use crate::hermitian::{hermitian_to_vector_unchecked, vector_to_hermitian};
use crate::spinor::TwoSpinor;
use crate::vector::FourVector;
use crate::C64;

/// An element L ∈ SL(2,ℂ), det L = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SL2C {
    m: Matrix2<C64>,
}

impl SL2C {
    /// Wrap a matrix, checking |det − 1| ≤ 1e−9.
    pub fn new(m: Matrix2<C64>) -> Result<Self, CoreError> {
        let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        let defect = (det - C64::new(1.0, 0.0)).norm();
        if defect > 1e-9 {
            return Err(CoreError::NotUnimodular(defect));
        }
        Ok(SL2C { m })
    }

    /// Wrap a matrix of determinant d ≠ 0 after rescaling by d^{−1/2}.
    pub fn from_matrix_rescaled(m: Matrix2<C64>) -> Result<Self, CoreError> {
        let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        if det.norm() < 1e-300 {
            return Err(CoreError::NotUnimodular(1.0));
        }
        let s = det.sqrt().inv();
        SL2C::new(m.map(|z| z * s))
    }

    pub fn identity() -> Self {
        SL2C { m: Matrix2::identity() }
    }

    /// The central element −1 (covers the identity Lorentz transformation).
    pub fn minus_identity() -> Self {
        SL2C { m: -Matrix2::<C64>::identity() }
    }

    /// Rotation by angle ψ about the unit axis n̂, in the convention where
    /// the covered world rotation turns x towards y for n̂ = ẑ, ψ > 0:
    /// L = cos(ψ/2)·1 + i sin(ψ/2) n̂·σ⃗.
    pub fn rotation(axis: [f64; 3], angle: f64) -> Self {
        let n = normalize3(axis);
        let (c, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
        let i = C64::new(0.0, 1.0);
        let ns = pauli_dot(n);
        SL2C { m: Matrix2::identity().map(|z: C64| z * c) + ns.map(|z| i * s * z) }
    }

    /// Rotation about the z-axis: L = diag(e^{iψ/2}, e^{−iψ/2}).
    pub fn rotation_z(angle: f64) -> Self {
        SL2C::rotation([0.0, 0.0, 1.0], angle)
    }

    /// Boost with rapidity χ along the unit direction n̂:
    /// L = exp((χ/2) n̂·σ⃗) = cosh(χ/2)·1 + sinh(χ/2) n̂·σ⃗.
    pub fn boost(dir: [f64; 3], rapidity: f64) -> Self {
        let n = normalize3(dir);
        let (c, s) = ((rapidity / 2.0).cosh(), (rapidity / 2.0).sinh());
        let ns = pauli_dot(n);
        SL2C { m: Matrix2::identity().map(|z: C64| z * c) + ns.map(|z| z * s) }
    }

    /// Boost along the z-axis: L = diag(e^{χ/2}, e^{−χ/2}).
    pub fn boost_z(rapidity: f64) -> Self {
        SL2C::boost([0.0, 0.0, 1.0], rapidity)
    }

    pub fn matrix(&self) -> &Matrix2<C64> {
        &self.m
    }

    pub fn mul(&self, other: &SL2C) -> SL2C {
        SL2C { m: self.m * other.m }
    }

    pub fn inverse(&self) -> SL2C {
        // For det = 1 the inverse is the adjugate.
        SL2C {
            m: Matrix2::new(self.m[(1, 1)], -self.m[(0, 1)], -self.m[(1, 0)], self.m[(0, 0)]),
        }
    }

    pub fn neg(&self) -> SL2C {
        SL2C { m: -self.m }
    }

    /// Action on upper-index spinor components: κ ↦ L κ.
    pub fn act(&self, s: &TwoSpinor) -> TwoSpinor {
        TwoSpinor::new(
            self.m[(0, 0)] * s.c0 + self.m[(0, 1)] * s.c1,
            self.m[(1, 0)] * s.c0 + self.m[(1, 1)] * s.c1,
        )
    }

    /// Action on a world vector through H(Λv) = L H(v) L†.
    pub fn act_vector(&self, v: &FourVector) -> FourVector {
        let h = vector_to_hermitian(v);
        let out = self.m * h * self.m.adjoint();
        hermitian_to_vector_unchecked(&out)
    }

    /// The covered Lorentz matrix Λ(L), columns Λ e_a.
    ///
    /// Proper (det Λ = 1) and orthochronous (Λ⁰₀ ≥ 1); satisfies
    /// Λ(L₁L₂) = Λ(L₁)Λ(L₂) and Λ(−L) = Λ(L).
    pub fn lorentz_of(&self) -> Matrix4<f64> {
        let mut out = Matrix4::zeros();
        for a in 0..4 {
            let col = self.act_vector(&FourVector::basis(a));
            for b in 0..4 {
                out[(b, a)] = col.component(b);
            }
        }
        out
    }
}

/// Apply a 4×4 Lorentz matrix to a vector.
pub fn apply_lorentz(l: &Matrix4<f64>, v: &FourVector) -> FourVector {
    let mut out = [0.0; 4];
    let a = v.to_array();
    for (r, o) in out.iter_mut().enumerate() {
        *o = (0..4).map(|c| l[(r, c)] * a[c]).sum();
    }
    FourVector::from_array(out)
}

fn normalize3(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    assert!(n > 0.0, "axis must be nonzero");
    [v[0] / n, v[1] / n, v[2] / n]
}

/// n̂·σ⃗ for a real unit 3-vector.
fn pauli_dot(n: [f64; 3]) -> Matrix2<C64> {
    Matrix2::new(
        C64::new(n[2], 0.0),
        C64::new(n[0], -n[1]),
        C64::new(n[0], n[1]),
        C64::new(-n[2], 0.0),
    )
}
