//! Scalar rings for matrix entries: `ℝ`, `ℂ`, `ℍ` and the complexified quaternions.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::division::Quaternion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternion,
    #[serde(rename = "CxH")]
    ComplexQuaternion,
}

/// An associative unital ring that is also a finite-dimensional real vector space.
///
/// Multiplication need not commute; matrix code keeps operand order.
pub trait Ring:
    Copy
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const KIND: RingKind;
    /// Real dimension of the ring.
    const REAL_DIM: usize;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(x: f64) -> Self;

    /// Appends the `REAL_DIM` real coordinates of `self` in a fixed order.
    fn push_real_coords(&self, out: &mut Vec<f64>);

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Ring for f64 {
    const KIND: RingKind = RingKind::Real;
    const REAL_DIM: usize = 1;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_real(x: f64) -> Self {
        x
    }

    fn push_real_coords(&self, out: &mut Vec<f64>) {
        out.push(*self);
    }
}

impl Ring for Complex64 {
    const KIND: RingKind = RingKind::Complex;
    const REAL_DIM: usize = 2;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }

    fn push_real_coords(&self, out: &mut Vec<f64>) {
        out.extend([self.re, self.im]);
    }
}

impl Ring for Quaternion {
    const KIND: RingKind = RingKind::Quaternion;
    const REAL_DIM: usize = 4;

    fn zero() -> Self {
        Quaternion::ZERO
    }

    fn one() -> Self {
        Quaternion::ONE
    }

    fn from_real(x: f64) -> Self {
        Quaternion::new(x, 0.0, 0.0, 0.0)
    }

    fn push_real_coords(&self, out: &mut Vec<f64>) {
        out.extend(self.to_array());
    }
}

/// `re + im·i` with quaternion parts and a central imaginary unit `i`
/// that commutes with `î`, `ĵ`, `k̂`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexQuaternion {
    pub re: Quaternion,
    pub im: Quaternion,
}

impl ComplexQuaternion {
    /// The central unit `i`.
    pub const I: ComplexQuaternion = ComplexQuaternion { re: Quaternion::ZERO, im: Quaternion::ONE };

    pub const fn new(re: Quaternion, im: Quaternion) -> Self {
        ComplexQuaternion { re, im }
    }

    pub const fn from_quaternion(h: Quaternion) -> Self {
        ComplexQuaternion { re: h, im: Quaternion::ZERO }
    }

    /// `i·h`.
    pub const fn imaginary(h: Quaternion) -> Self {
        ComplexQuaternion { re: Quaternion::ZERO, im: h }
    }
}

impl From<Quaternion> for ComplexQuaternion {
    fn from(h: Quaternion) -> Self {
        ComplexQuaternion::from_quaternion(h)
    }
}

impl Add for ComplexQuaternion {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        ComplexQuaternion { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for ComplexQuaternion {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        ComplexQuaternion { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for ComplexQuaternion {
    type Output = Self;

    fn neg(self) -> Self {
        ComplexQuaternion { re: -self.re, im: -self.im }
    }
}

impl Mul for ComplexQuaternion {
    type Output = Self;

    /// `(a + bi)(c + di) = (ac - bd) + (ad + bc)i`.
    fn mul(self, rhs: Self) -> Self {
        let (a, b, c, d) = (self.re, self.im, rhs.re, rhs.im);
        ComplexQuaternion { re: a * c - b * d, im: a * d + b * c }
    }
}

impl Ring for ComplexQuaternion {
    const KIND: RingKind = RingKind::ComplexQuaternion;
    const REAL_DIM: usize = 8;

    fn zero() -> Self {
        ComplexQuaternion::default()
    }

    fn one() -> Self {
        ComplexQuaternion::from_quaternion(Quaternion::ONE)
    }

    fn from_real(x: f64) -> Self {
        ComplexQuaternion::from_quaternion(Quaternion::from_real(x))
    }

    fn push_real_coords(&self, out: &mut Vec<f64>) {
        self.re.push_real_coords(out);
        self.im.push_real_coords(out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_unit_squares_to_minus_one() {
        let i = ComplexQuaternion::I;
        assert_eq!(i * i, -ComplexQuaternion::one());
        let x = ComplexQuaternion::new(Quaternion::new(1.0, 2.0, -3.0, 4.0), Quaternion::new(0.0, -1.0, 5.0, 2.0));
        assert_eq!(i * x, x * i);
    }

    #[test]
    fn quaternion_units_do_not_commute_inside() {
        let a = ComplexQuaternion::from_quaternion(Quaternion::I);
        let b = ComplexQuaternion::from_quaternion(Quaternion::J);
        assert_eq!(a * b, ComplexQuaternion::from_quaternion(Quaternion::K));
        assert_eq!(b * a, ComplexQuaternion::from_quaternion(-Quaternion::K));
    }

    #[test]
    fn coordinates() {
        let mut out = Vec::new();
        ComplexQuaternion::imaginary(Quaternion::J).push_real_coords(&mut out);
        assert_eq!(out, vec![0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    }
}
