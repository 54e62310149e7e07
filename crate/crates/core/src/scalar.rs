//! Coefficient types for multivectors.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Ground field of a multivector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// A commutative coefficient ring.
///
/// Integer and rational types give exact arithmetic for golden tests; `f64`
/// and `Complex<f64>` are the numeric workhorses.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    const FIELD: Field;

    /// Absolute value as a double, used for tolerance comparisons.
    fn magnitude(&self) -> f64;
}

macro_rules! real_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            const FIELD: Field = Field::Real;

            fn magnitude(&self) -> f64 {
                (*self as f64).abs()
            }
        }
    )*};
}

real_scalar!(i64, i128, f64);

impl Scalar for Ratio<i64> {
    const FIELD: Field = Field::Real;

    fn magnitude(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }
}

impl Scalar for Ratio<i128> {
    const FIELD: Field = Field::Real;

    fn magnitude(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }
}

impl<T> Scalar for Complex<T>
where
    T: Scalar + num_traits::Num,
{
    const FIELD: Field = Field::Complex;

    fn magnitude(&self) -> f64 {
        self.re.magnitude().hypot(self.im.magnitude())
    }
}
