//! Real Minkowski four-vectors with signature (+,−,−,−).

use std::ops::{Add, Mul, Neg, Sub};

/// A real world-vector v = (v⁰, v¹, v², v³) = (t, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const ZERO: FourVector = FourVector { t: 0.0, x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector { t, x, y, z }
    }

    /// Unit basis vector e_a, a = 0..3.
    pub fn basis(a: usize) -> Self {
        let mut v = FourVector::ZERO;
        match a {
            0 => v.t = 1.0,
            1 => v.x = 1.0,
            2 => v.y = 1.0,
            3 => v.z = 1.0,
            _ => panic!("basis index must be 0..=3"),
        }
        v
    }

    /// Minkowski inner product q·r = q⁰r⁰ − qⁱrⁱ.
    pub fn dot(&self, other: &FourVector) -> f64 {
        self.t * other.t - self.x * other.x - self.y * other.y - self.z * other.z
    }

    /// Invariant square v·v.
    pub fn norm2(&self) -> f64 {
        self.dot(self)
    }

    /// Euclidean length of the spatial part |v⃗|.
    pub fn spatial_norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Component access by index, a = 0..3.
    pub fn component(&self, a: usize) -> f64 {
        match a {
            0 => self.t,
            1 => self.x,
            2 => self.y,
            3 => self.z,
            _ => panic!("component index must be 0..=3"),
        }
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        FourVector::new(a[0], a[1], a[2], a[3])
    }

    /// Largest absolute component, used for relative tolerances.
    pub fn amax(&self) -> f64 {
        self.t.abs().max(self.x.abs()).max(self.y.abs()).max(self.z.abs())
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, v: FourVector) -> FourVector {
        FourVector::new(self * v.t, self * v.x, self * v.y, self * v.z)
    }
}
