//! Basis orderings and the orientation of the sorting permutation.
//!
//! Products are always computed on binary indices (the index *is* the mask).
//! The grade-lex ordering lists blades by ascending grade and, within a grade,
//! by lexicographic order of the ascending generator tuple:
//! `{0,1} < {0,2} < {0,3} < {1,2} < ...`. This is the layout of the printed
//! Minkowski multiplication tables.
//!
//! A second within-grade tie-break, the *grade-word* order, compares the bit
//! word `eps_{n-1} ... eps_0` lexicographically, which is plain numeric order of
//! the mask. The orientation of the basis permutation is reported for that
//! ordering by [`permutation_orientation`]; see [`grade_lex_orientation`] for
//! the grade-lex one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blade::{Sign, MAX_GENERATORS};
use crate::error::{CliffordError, Result};

/// Coefficient layout of a dense multivector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Convention {
    #[serde(rename = "binary")]
    Binary,
    #[default]
    #[serde(rename = "grade-lex")]
    GradeLex,
}

impl Convention {
    pub fn as_str(&self) -> &'static str {
        match self {
            Convention::Binary => "binary",
            Convention::GradeLex => "grade-lex",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary" => Ok(Convention::Binary),
            "grade-lex" => Ok(Convention::GradeLex),
            other => Err(CliffordError::InvalidDocument(format!("unknown convention `{other}`"))),
        }
    }
}

/// A convention together with its position/mask tables.
///
/// `masks[k]` is the blade mask stored at coefficient position `k`, and
/// `positions[mask]` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingConvention {
    kind: Convention,
    n: usize,
    masks: Vec<u32>,
    positions: Vec<u32>,
}

impl OrderingConvention {
    pub fn new(kind: Convention, n: usize) -> Result<Self> {
        check_n(n)?;
        let masks = match kind {
            Convention::Binary => (0..1u32 << n).collect(),
            Convention::GradeLex => grade_lex_masks(n),
        };
        let positions = invert(&masks);
        Ok(OrderingConvention { kind, n, masks, positions })
    }

    pub fn kind(&self) -> Convention {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Position-to-mask table. The identity for [`Convention::Binary`].
    pub fn permutation(&self) -> &[u32] {
        &self.masks
    }

    #[inline]
    pub fn mask_at(&self, position: usize) -> u32 {
        self.masks[position]
    }

    #[inline]
    pub fn position_of(&self, mask: u32) -> usize {
        self.positions[mask as usize] as usize
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_GENERATORS {
        return Err(CliffordError::TooManyGenerators { n, max: MAX_GENERATORS });
    }
    Ok(())
}

fn invert(masks: &[u32]) -> Vec<u32> {
    let mut positions = vec![0u32; masks.len()];
    for (k, &m) in masks.iter().enumerate() {
        positions[m as usize] = k as u32;
    }
    positions
}

/// Masks in grade-lex order: grade ascending, then ascending-tuple lexicographic.
pub(crate) fn grade_lex_masks(n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << n);
    for k in 0..=n {
        // k-combinations of 0..n in lexicographic order
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            out.push(combo.iter().fold(0u32, |m, &i| m | 1 << i));
            let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
                break;
            };
            combo[i] += 1;
            for t in i + 1..k {
                combo[t] = combo[t - 1] + 1;
            }
        }
    }
    out
}

/// Masks in grade-word order: grade ascending, then numeric mask value.
pub(crate) fn grade_word_masks(n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << n);
    let limit = 1u64 << n;
    out.push(0);
    for k in 1..=n {
        // Gosper's hack walks the masks of popcount k in increasing order
        let mut m: u64 = (1 << k) - 1;
        while m < limit {
            out.push(m as u32);
            let low = m & m.wrapping_neg();
            let ripple = m + low;
            m = (((ripple ^ m) >> 2) / low) | ripple;
        }
    }
    out
}

/// The grade-lex ordering of the `2^n` blades.
pub fn grade_lex_permutation(n: usize) -> Result<OrderingConvention> {
    if n == 0 {
        return Err(CliffordError::EmptySignature);
    }
    OrderingConvention::new(Convention::GradeLex, n)
}

/// Parity of a permutation of `0..len` given as a lookup table, by cycle decomposition.
///
/// `perm` must be a bijection; this is not re-checked.
pub fn permutation_parity(perm: &[u32]) -> Sign {
    let len = perm.len();
    let mut seen = vec![0u64; len.div_ceil(64)];
    let mut cycles = 0usize;
    for start in 0..len {
        if seen[start / 64] >> (start % 64) & 1 == 1 {
            continue;
        }
        cycles += 1;
        let mut at = start;
        while seen[at / 64] >> (at % 64) & 1 == 0 {
            seen[at / 64] |= 1 << (at % 64);
            at = perm[at] as usize;
        }
    }
    Sign::from_parity(((len - cycles) & 1) as u32)
}

/// Orientation of the basis permutation `U_n` that sorts the canonical basis by
/// grade and then by the bit word `eps_{n-1} ... eps_0`.
///
/// Negative for `n in {3, 4, 5, 8, 9, 16, 17}` when `n <= 20`.
pub fn permutation_orientation(n: usize) -> Result<Sign> {
    if n == 0 {
        return Err(CliffordError::EmptySignature);
    }
    check_n(n)?;
    Ok(permutation_parity(&grade_word_masks(n)))
}

/// Orientation of the grade-lex (ascending tuple) permutation.
pub fn grade_lex_orientation(n: usize) -> Result<Sign> {
    Ok(permutation_parity(grade_lex_permutation(n)?.permutation()))
}
