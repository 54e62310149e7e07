//! Basis blades as bitmasks over generator indices, and their signed product.
//!
//! Bit `i` of a mask is set iff generator `e_i` is a factor of the blade, so the
//! blade with index `j` in the binary convention is the subset of set bits of
//! `j`. The unsigned part of a product is the symmetric difference `a ^ b`; the
//! sign comes from reordering the concatenated generator word into ascending
//! order and from the metric on the repeated generators.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CliffordError, Result};

/// Largest supported generator count. Masks are `u32` and `2^n` must fit a `usize`.
pub const MAX_GENERATORS: usize = 30;

/// A sign in `{-1, +1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^count`.
    #[inline]
    pub fn from_parity(count: u32) -> Self {
        if count & 1 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    #[inline]
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(value: i64) -> Option<Self> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    /// `+x` or `-x` for any negatable value.
    #[inline]
    pub fn apply<T: Neg<Output = T>>(self, value: T) -> T {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.to_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = i64::deserialize(deserializer)?;
        Sign::from_i64(value).ok_or_else(|| serde::de::Error::custom(format!("sign must be 1 or -1, got {value}")))
    }
}

/// The `(p, q)` metric: generator `j` squares to `+1` when `j < p` and to `-1` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 {
            return Err(CliffordError::EmptySignature);
        }
        if n > MAX_GENERATORS {
            return Err(CliffordError::TooManyGenerators { n, max: MAX_GENERATORS });
        }
        Ok(Signature { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Number of generators, `p + q`.
    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(&self) -> usize {
        1 << self.n()
    }

    /// Square of generator `j`.
    pub fn eta_at(&self, j: usize) -> Sign {
        if j < self.p {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// The metric vector `(eta_0, ..., eta_{n-1})`.
    pub fn eta(&self) -> Vec<Sign> {
        (0..self.n()).map(|j| self.eta_at(j)).collect()
    }

    /// Mask of the generators that square to `-1`.
    pub fn negative_mask(&self) -> u32 {
        full_mask(self.n()) & !full_mask(self.p)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// `(p, q)` signature as a function, for symmetry with the other constructors.
pub fn make_signature(p: usize, q: usize) -> Result<Signature> {
    Signature::new(p, q)
}

/// A basis blade of an `n`-generator algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade {
    mask: u32,
    n: u8,
}

impl Blade {
    pub fn new(mask: u32, n: usize) -> Result<Self> {
        if n > MAX_GENERATORS {
            return Err(CliffordError::TooManyGenerators { n, max: MAX_GENERATORS });
        }
        if u64::from(mask) >= 1u64 << n {
            return Err(CliffordError::IndexOutOfRange { index: mask.into(), n });
        }
        Ok(Blade { mask, n: n as u8 })
    }

    /// The scalar blade `e_∅`.
    pub fn scalar(n: usize) -> Result<Self> {
        Blade::new(0, n)
    }

    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        Blade::new(mask_from_indices(indices, n)?, n)
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn grade(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Generator indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        set_bits(self.mask).collect()
    }
}

/// A blade together with a sign; the blade-level product never produces zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    pub sign: Sign,
    pub blade: Blade,
}

impl SignedBlade {
    pub fn new(sign: Sign, blade: Blade) -> Self {
        SignedBlade { sign, blade }
    }
}

/// Ascending iterator over the set bit positions of `mask`.
pub(crate) fn set_bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// Decodes a binary-convention index into its generator set.
pub fn index_codec(j: u64, n: usize) -> Result<Vec<usize>> {
    if n > MAX_GENERATORS {
        return Err(CliffordError::TooManyGenerators { n, max: MAX_GENERATORS });
    }
    if j >= 1u64 << n {
        return Err(CliffordError::IndexOutOfRange { index: j, n });
    }
    Ok(set_bits(j as u32).collect())
}

/// Inverse of [`index_codec`]. Repeated indices are rejected.
pub fn mask_from_indices(indices: &[usize], n: usize) -> Result<u32> {
    if n > MAX_GENERATORS {
        return Err(CliffordError::TooManyGenerators { n, max: MAX_GENERATORS });
    }
    let mut mask = 0u32;
    for &i in indices {
        if i >= n {
            return Err(CliffordError::IndexOutOfRange { index: i as u64, n });
        }
        let bit = 1u32 << i;
        if mask & bit != 0 {
            return Err(CliffordError::IndexOutOfRange { index: i as u64, n });
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Sign picked up by moving every generator of `b` past the generators of `a`
/// that sit strictly above it: `(-1)^{#{(i, j) : i in a, j in b, i > j}}`.
#[inline]
pub fn reorder_sign(a: u32, b: u32) -> Sign {
    let mut swaps = 0;
    let mut shifted = a >> 1;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    Sign::from_parity(swaps)
}

/// Full sign of `e_a · e_b` given the mask of negative-square generators.
#[inline]
pub fn product_sign(a: u32, b: u32, negative_mask: u32) -> Sign {
    reorder_sign(a, b) * Sign::from_parity((a & b & negative_mask).count_ones())
}

/// Product of two basis blades: `e_a · e_b = sign · e_{a ^ b}`.
pub fn blade_product(a: Blade, b: Blade, sig: &Signature) -> Result<SignedBlade> {
    let n = sig.n();
    for blade in [a, b] {
        if blade.n() != n {
            return Err(CliffordError::DimensionMismatch { expected: n, found: blade.n() });
        }
    }
    let sign = product_sign(a.mask, b.mask, sig.negative_mask());
    Ok(SignedBlade { sign, blade: Blade { mask: a.mask ^ b.mask, n: a.n } })
}

/// The unsigned shadow of the blade product on binary indices.
pub fn star(i: u64, j: u64, n: usize) -> Result<u64> {
    if n > MAX_GENERATORS {
        return Err(CliffordError::TooManyGenerators { n, max: MAX_GENERATORS });
    }
    let bound = 1u64 << n;
    for index in [i, j] {
        if index >= bound {
            return Err(CliffordError::IndexOutOfRange { index, n });
        }
    }
    Ok(i ^ j)
}
