//! Quaternions and octonions.
//!
//! Quaternion multiplication follows `i² = j² = k² = ijk = -1`. Octonions are
//! pairs of quaternions with the Cayley–Dickson product
//!
//! ```text
//! (h0, h1)(h2, h3) = (h0 h2 - h3 conj(h1), conj(h0) h3 + h2 h1)
//! ```
//!
//! and basis `(1,0), (i,0), (j,0), (k,0), (0,1), (0,i), (0,j), (0,k)`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CliffordError, Result};
use crate::matrix::Matrix;

/// Allowed `| |w| - 1 |` for an axis.
pub const AXIS_TOLERANCE: f64 = 1e-12;
/// Allowed `| |h| - 1 |` for a rotation quaternion.
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// `x0 + x1 i + x2 j + x3 k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

/// Conjugate, norm and (when it exists) inverse of an element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjNormInv<T> {
    pub conjugate: T,
    pub norm: f64,
    pub inverse: Option<T>,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    pub fn from_array([x0, x1, x2, x3]: [f64; 4]) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    /// The pure quaternion `x1 i + x2 j + x3 k`.
    pub fn pure([x1, x2, x3]: [f64; 3]) -> Self {
        Quaternion { x0: 0.0, x1, x2, x3 }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    /// Imaginary part as a 3-vector.
    pub fn vector(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(s * self.x0, s * self.x1, s * self.x2, s * self.x3)
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.x0, -self.x1, -self.x2, -self.x3)
    }

    /// Real part of `h · conj(h)`.
    pub fn norm_squared(self) -> f64 {
        (self * self.conj()).x0
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// `conj(h) / |h|²`, absent for zero.
    pub fn inverse(self) -> Option<Self> {
        let n2 = self.norm_squared();
        (n2 > 0.0).then(|| self.conj().scale(1.0 / n2))
    }

    pub fn conj_norm_inv(self) -> ConjNormInv<Self> {
        ConjNormInv { conjugate: self.conj(), norm: self.norm(), inverse: self.inverse() }
    }

    /// `exp(a·φ(w)) = cos a + φ(w) sin a`.
    pub fn exp(aa: &AxisAngle) -> Self {
        let (s, c) = aa.angle.sin_cos();
        let [w1, w2, w3] = aa.axis;
        Quaternion::new(c, w1 * s, w2 * s, w3 * s)
    }

    /// `x ↦ h x conj(h)`, a rotation of `R³` by twice the angle of `h` about its axis.
    pub fn rotate(self, x: [f64; 3]) -> Result<[f64; 3]> {
        let norm = self.norm();
        if (norm - 1.0).abs() > UNIT_TOLERANCE || !norm.is_finite() {
            return Err(CliffordError::NonUnitQuaternion(norm));
        }
        Ok((self * Quaternion::pure(x) * self.conj()).vector())
    }

    /// The complex 2×2 matrix `[[x0 + x1 i, x2 + x3 i], [-x2 + x3 i, x0 - x1 i]]`.
    pub fn phi0_embed(self) -> Matrix<Complex64> {
        let Quaternion { x0, x1, x2, x3 } = self;
        let rows =
            [[Complex64::new(x0, x1), Complex64::new(x2, x3)], [Complex64::new(-x2, x3), Complex64::new(x0, -x1)]];
        Matrix::from_rows(&rows).expect("rectangular")
    }

    /// The real 4×4 left-regular style matrix of the quaternion.
    pub fn phi1_embed(self) -> Matrix<f64> {
        let Quaternion { x0, x1, x2, x3 } = self;
        let rows = [[x0, -x1, x3, -x2], [x1, x0, -x2, -x3], [-x3, x2, x0, -x1], [x2, x3, x1, x0]];
        Matrix::from_rows(&rows).expect("rectangular")
    }
}

impl Add for Quaternion {
    type Output = Self;

    fn add(self, r: Self) -> Self {
        Quaternion::new(self.x0 + r.x0, self.x1 + r.x1, self.x2 + r.x2, self.x3 + r.x3)
    }
}

impl Sub for Quaternion {
    type Output = Self;

    fn sub(self, r: Self) -> Self {
        Quaternion::new(self.x0 - r.x0, self.x1 - r.x1, self.x2 - r.x2, self.x3 - r.x3)
    }
}

impl Neg for Quaternion {
    type Output = Self;

    fn neg(self) -> Self {
        Quaternion::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl Mul for Quaternion {
    type Output = Self;

    fn mul(self, r: Self) -> Self {
        let (a0, a1, a2, a3) = (self.x0, self.x1, self.x2, self.x3);
        let (b0, b1, b2, b3) = (r.x0, r.x1, r.x2, r.x3);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.x0, self.x1, self.x2, self.x3)
    }
}

/// A rotation angle `a ∈ (-π, π]` with a unit axis `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    angle: f64,
    axis: [f64; 3],
}

impl AxisAngle {
    /// Reduces `angle` into `(-π, π]` and checks that `axis` has unit length.
    pub fn new(angle: f64, axis: [f64; 3]) -> Result<Self> {
        let len = axis.iter().map(|w| w * w).sum::<f64>().sqrt();
        if !angle.is_finite() || !len.is_finite() || (len - 1.0).abs() > AXIS_TOLERANCE {
            return Err(CliffordError::NonUnitAxis(len));
        }
        let mut a = angle.rem_euclid(TAU);
        if a > PI {
            a -= TAU;
        }
        Ok(AxisAngle { angle: a, axis })
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }
}

/// A pair of quaternions.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    pub a: Quaternion,
    pub b: Quaternion,
}

impl Octonion {
    pub const ZERO: Octonion = Octonion::new(Quaternion::ZERO, Quaternion::ZERO);
    pub const ONE: Octonion = Octonion::new(Quaternion::ONE, Quaternion::ZERO);

    pub const fn new(a: Quaternion, b: Quaternion) -> Self {
        Octonion { a, b }
    }

    /// Basis element `k` (0 is the unit, 1..=7 the imaginary units).
    pub fn basis(k: usize) -> Self {
        let mut coords = [0.0; 8];
        coords[k] = 1.0;
        Octonion::from_array(coords)
    }

    pub fn from_array(x: [f64; 8]) -> Self {
        Octonion { a: Quaternion::new(x[0], x[1], x[2], x[3]), b: Quaternion::new(x[4], x[5], x[6], x[7]) }
    }

    pub fn to_array(self) -> [f64; 8] {
        let [a0, a1, a2, a3] = self.a.to_array();
        let [b0, b1, b2, b3] = self.b.to_array();
        [a0, a1, a2, a3, b0, b1, b2, b3]
    }

    pub fn scale(self, s: f64) -> Self {
        Octonion::new(self.a.scale(s), self.b.scale(s))
    }

    /// `(conj(h0), -h1)`: negates all seven imaginary coordinates.
    pub fn conj(self) -> Self {
        Octonion::new(self.a.conj(), -self.b)
    }

    /// Real part of `x · conj(x)`.
    pub fn norm_squared(self) -> f64 {
        (self * self.conj()).a.x0
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn inverse(self) -> Option<Self> {
        let n2 = self.norm_squared();
        (n2 > 0.0).then(|| self.conj().scale(1.0 / n2))
    }

    pub fn conj_norm_inv(self) -> ConjNormInv<Self> {
        ConjNormInv { conjugate: self.conj(), norm: self.norm(), inverse: self.inverse() }
    }
}

impl Add for Octonion {
    type Output = Self;

    fn add(self, r: Self) -> Self {
        Octonion::new(self.a + r.a, self.b + r.b)
    }
}

impl Sub for Octonion {
    type Output = Self;

    fn sub(self, r: Self) -> Self {
        Octonion::new(self.a - r.a, self.b - r.b)
    }
}

impl Neg for Octonion {
    type Output = Self;

    fn neg(self) -> Self {
        Octonion::new(-self.a, -self.b)
    }
}

impl Mul for Octonion {
    type Output = Self;

    fn mul(self, r: Self) -> Self {
        let (h0, h1, h2, h3) = (self.a, self.b, r.a, r.b);
        Octonion::new(h0 * h2 - h3 * h1.conj(), h0.conj() * h3 + h2 * h1)
    }
}
