//! Isomorphism type of the real Clifford algebra `Cl(p, q)` from `n = p + q`
//! and `(p - q) mod 8`.
//!
//! | n    | (p-q) mod 8 | algebra                         |
//! |------|-------------|---------------------------------|
//! | even | 0, 2        | `ℝ^{m×m}`, `m = 2^{n/2}`        |
//! | even | 4, 6        | `ℍ^{m×m}`, `m = 2^{(n-2)/2}`    |
//! | odd  | 1           | `diag₂(ℝ^{m×m})`, `m = 2^{(n-1)/2}` |
//! | odd  | 3, 7        | `ℂ^{m×m}`, `m = 2^{(n-1)/2}`    |
//! | odd  | 5           | `diag₂(ℍ^{m×m})`, `m = 2^{(n-3)/2}` |

use serde::{Deserialize, Serialize};

use crate::blade::Signature;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseRing {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternion,
}

impl BaseRing {
    pub fn real_dim(self) -> u64 {
        match self {
            BaseRing::Real => 1,
            BaseRing::Complex => 2,
            BaseRing::Quaternion => 4,
        }
    }
}

/// `base^{size×size}`, or `diag₂` of it when `doubled`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
pub struct AlgebraDescriptor {
    pub base: BaseRing,
    pub size: u64,
    pub doubled: bool,
}

impl AlgebraDescriptor {
    pub fn real_dimension(&self) -> u64 {
        self.base.real_dim() * self.size * self.size * if self.doubled { 2 } else { 1 }
    }
}

impl Serialize for AlgebraDescriptor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("AlgebraDescriptor", 4)?;
        s.serialize_field("base", &self.base)?;
        s.serialize_field("size", &self.size)?;
        s.serialize_field("doubled", &self.doubled)?;
        s.serialize_field("real_dim", &self.real_dimension())?;
        s.end()
    }
}

pub fn descriptor_real_dimension(d: &AlgebraDescriptor) -> u64 {
    d.real_dimension()
}

/// Classifies `Cl(p, q)`; `p + q = 0` is rejected.
pub fn classify(p: usize, q: usize) -> Result<AlgebraDescriptor> {
    let n = Signature::new(p, q)?.n() as u32;
    let residue = (p as i64 - q as i64).rem_euclid(8);
    let pow = |e: u32| 1u64 << e;
    let (base, size, doubled) = if n.is_multiple_of(2) {
        match residue {
            0 | 2 => (BaseRing::Real, pow(n / 2), false),
            4 | 6 => (BaseRing::Quaternion, pow((n - 2) / 2), false),
            _ => unreachable!("p - q is even when n is even"),
        }
    } else {
        match residue {
            1 => (BaseRing::Real, pow((n - 1) / 2), true),
            3 | 7 => (BaseRing::Complex, pow((n - 1) / 2), false),
            5 => (BaseRing::Quaternion, pow((n - 3) / 2), true),
            _ => unreachable!("p - q is odd when n is odd"),
        }
    };
    Ok(AlgebraDescriptor { base, size, doubled })
}
