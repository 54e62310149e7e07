//! Dense multivectors and the geometric product.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::blade::{product_sign, Sign, Signature};
use crate::error::{CliffordError, Result};
use crate::ordering::{Convention, OrderingConvention};
use crate::scalar::{Field, Scalar};

/// Largest generator count accepted by [`product_table`] unless a larger cap is passed.
pub const DEFAULT_TABLE_CAP: usize = 8;

/// A Clifford algebra element stored as `2^n` coefficients in a given convention.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T> {
    sig: Signature,
    convention: Convention,
    coeffs: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(sig: Signature, convention: Convention) -> Self {
        Multivector { sig, convention, coeffs: vec![T::zero(); sig.blade_count()] }
    }

    pub fn from_coeffs(sig: Signature, convention: Convention, coeffs: Vec<T>) -> Result<Self> {
        let expected = sig.blade_count();
        if coeffs.len() != expected {
            return Err(CliffordError::LengthMismatch { expected, found: coeffs.len() });
        }
        Ok(Multivector { sig, convention, coeffs })
    }

    /// `value · e_∅`.
    pub fn scalar(sig: Signature, convention: Convention, value: T) -> Self {
        let mut out = Self::zero(sig, convention);
        out.coeffs[0] = value;
        out
    }

    /// The basis element stored at coefficient `position` of `convention`.
    pub fn basis(sig: Signature, convention: Convention, position: usize) -> Result<Self> {
        let mut out = Self::zero(sig, convention);
        let slot = out
            .coeffs
            .get_mut(position)
            .ok_or(CliffordError::IndexOutOfRange { index: position as u64, n: sig.n() })?;
        *slot = T::one();
        Ok(out)
    }

    /// Places `v[j]` on the generator blade `{j}`.
    pub fn embed_vector(v: &[T], sig: Signature, convention: Convention) -> Result<Self> {
        if v.len() != sig.n() {
            return Err(CliffordError::LengthMismatch { expected: sig.n(), found: v.len() });
        }
        let ord = OrderingConvention::new(convention, sig.n())?;
        let mut out = Self::zero(sig, convention);
        for (j, value) in v.iter().enumerate() {
            out.coeffs[ord.position_of(1 << j)] = value.clone();
        }
        Ok(out)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn field(&self) -> Field {
        T::FIELD
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, position: usize) -> &T {
        &self.coeffs[position]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero)
    }

    pub fn ordering(&self) -> OrderingConvention {
        OrderingConvention::new(self.convention, self.sig.n()).expect("signature already bounds n")
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch(self.sig.p(), self.sig.q(), other.sig.p(), other.sig.q()));
        }
        if self.convention != other.convention {
            return Err(CliffordError::ConventionMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map(|c| factor.clone() * c.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Multivector {
            sig: self.sig,
            convention: self.convention,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Multivector<U> {
        Multivector { sig: self.sig, convention: self.convention, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// The geometric product `self · other`.
    ///
    /// Every pair of nonzero coefficients contributes `sign(a, b) x_a y_b` to the
    /// coefficient of `a ^ b`. Exact for exact scalar types.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let ord = self.ordering();
        let negative = self.sig.negative_mask();
        let rhs: Vec<(u32, &T)> =
            other.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (ord.mask_at(j), c)).collect();
        let mut out = vec![T::zero(); self.coeffs.len()];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let a = ord.mask_at(i);
            for &(b, y) in &rhs {
                let term = x.clone() * y.clone();
                let slot = &mut out[ord.position_of(a ^ b)];
                *slot = match product_sign(a, b, negative) {
                    Sign::Plus => slot.clone() + term,
                    Sign::Minus => slot.clone() - term,
                };
            }
        }
        Ok(Multivector { sig: self.sig, convention: self.convention, coeffs: out })
    }

    /// Keeps only the grade-`k` part.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        let n = self.sig.n();
        if k > n {
            return Err(CliffordError::GradeOutOfRange { k, n });
        }
        let ord = self.ordering();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if ord.mask_at(i).count_ones() as usize == k { c.clone() } else { T::zero() })
            .collect();
        Ok(Multivector { sig: self.sig, convention: self.convention, coeffs })
    }

    /// The same element laid out in `target`.
    pub fn reindex(&self, target: Convention) -> Self {
        if target == self.convention {
            return self.clone();
        }
        let n = self.sig.n();
        let from = self.ordering();
        let to = OrderingConvention::new(target, n).expect("signature already bounds n");
        let mut coeffs = vec![T::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[to.position_of(from.mask_at(i))] = c.clone();
        }
        Multivector { sig: self.sig, convention: target, coeffs }
    }

    /// Generator coefficients `(x_0, ..., x_{n-1})` of a pure 1-vector.
    pub fn vector_part(&self) -> Result<Vec<T>> {
        let ord = self.ordering();
        if let Some(i) = (0..self.coeffs.len()).find(|&i| ord.mask_at(i).count_ones() != 1 && !self.coeffs[i].is_zero())
        {
            return Err(CliffordError::NotAVector(i));
        }
        Ok((0..self.sig.n()).map(|j| self.coeffs[ord.position_of(1 << j)].clone()).collect())
    }

    /// Coefficient-wise comparison: `|a_k - b_k| <= rel_tol · max(1, |a|_∞, |b|_∞)`.
    pub fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        if self.sig != other.sig || self.convention != other.convention {
            return false;
        }
        let scale = self.coeffs.iter().chain(&other.coeffs).map(Scalar::magnitude).fold(1.0_f64, f64::max);
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| (a.clone() - b.clone()).magnitude() <= rel_tol * scale)
    }

    /// Splits the product of two 1-vectors into its symmetric (scalar) and
    /// antisymmetric (bivector) halves:
    ///
    /// `½(xy + yx) = (Σ_i x_i η_i y_i) e_∅` and
    /// `½(xy - yx) = Σ_{i<j} (x_i y_j - y_i x_j) e_{i,j}`.
    pub fn polarize(x: &Self, y: &Self) -> Result<(Self, Self)> {
        x.check_compatible(y)?;
        let xs = x.vector_part()?;
        let ys = y.vector_part()?;
        let sig = x.sig;
        let ord = x.ordering();

        let dot = xs
            .iter()
            .zip(&ys)
            .enumerate()
            .fold(T::zero(), |acc, (i, (a, b))| acc + sig.eta_at(i).apply(a.clone() * b.clone()));
        let symmetric = Self::scalar(sig, x.convention, dot);

        let mut antisymmetric = Self::zero(sig, x.convention);
        let n = sig.n();
        for i in 0..n {
            for j in i + 1..n {
                let wedge = xs[i].clone() * ys[j].clone() - ys[i].clone() * xs[j].clone();
                antisymmetric.coeffs[ord.position_of(1 << i | 1 << j)] = wedge;
            }
        }
        Ok((symmetric, antisymmetric))
    }
}

/// Coefficient positions of the grade-`k` blades in a convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeSpaceView {
    pub k: usize,
    pub members: Vec<usize>,
}

pub fn grade_space(n: usize, k: usize, convention: Convention) -> Result<GradeSpaceView> {
    if k > n {
        return Err(CliffordError::GradeOutOfRange { k, n });
    }
    let ord = OrderingConvention::new(convention, n)?;
    let members = (0..1usize << n).filter(|&i| ord.mask_at(i).count_ones() as usize == k).collect();
    Ok(GradeSpaceView { k, members })
}

/// A signed basis index: `+k` means `e_k`, `-k` means `-e_k`. `-0` is `-e_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedIndex {
    pub sign: Sign,
    pub index: u32,
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign, self.index)
    }
}

impl FromStr for SignedIndex {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || CliffordError::InvalidDocument(format!("bad signed index `{s}`"));
        let (sign, digits) = match s.as_bytes().first() {
            Some(b'+') => (Sign::Plus, &s[1..]),
            Some(b'-') => (Sign::Minus, &s[1..]),
            _ => return Err(bad()),
        };
        let index = digits.parse().map_err(|_| bad())?;
        Ok(SignedIndex { sign, index })
    }
}

/// The `2^n × 2^n` multiplication table of the basis in a given convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTable {
    sig: Signature,
    convention: Convention,
    size: usize,
    entries: Vec<SignedIndex>,
}

impl ProductTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn get(&self, i: usize, j: usize) -> SignedIndex {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[SignedIndex]> {
        self.entries.chunks(self.size)
    }

    /// One line per row, cells `+k`/`-k` separated by commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() * 4);
        for row in self.rows() {
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&cell.to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for ProductTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ProductTable", 4)?;
        s.serialize_field("p", &self.sig.p())?;
        s.serialize_field("q", &self.sig.q())?;
        s.serialize_field("convention", &self.convention)?;
        s.serialize_field("entries", &self.rows().collect::<Vec<_>>())?;
        s.end()
    }
}

/// Builds the signed basis multiplication table. Fails when `n > cap`.
pub fn product_table(sig: Signature, convention: Convention, cap: usize) -> Result<ProductTable> {
    let n = sig.n();
    if n > cap {
        return Err(CliffordError::OverCap { n, cap });
    }
    let ord = OrderingConvention::new(convention, n)?;
    let size = sig.blade_count();
    let negative = sig.negative_mask();
    let mut entries = Vec::with_capacity(size * size);
    for i in 0..size {
        let a = ord.mask_at(i);
        for j in 0..size {
            let b = ord.mask_at(j);
            entries.push(SignedIndex { sign: product_sign(a, b, negative), index: ord.position_of(a ^ b) as u32 });
        }
    }
    Ok(ProductTable { sig, convention, size, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn mv(s: Signature, coeffs: &[i64]) -> Multivector<i64> {
        Multivector::from_coeffs(s, Convention::GradeLex, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn unit_is_identity() {
        let s = sig(2, 1);
        let one = Multivector::scalar(s, Convention::GradeLex, 1i64);
        let y = mv(s, &[3, -1, 4, 1, -5, 9, 2, -6]);
        assert_eq!(one.geometric_product(&y).unwrap(), y);
        assert_eq!(y.geometric_product(&one).unwrap(), y);
    }

    #[test]
    fn minkowski_vector_product() {
        let s = sig(1, 3);
        let x = Multivector::embed_vector(&[1i64, 2, 0, 0], s, Convention::GradeLex).unwrap();
        let y = Multivector::embed_vector(&[3i64, 0, 1, 0], s, Convention::GradeLex).unwrap();
        let z = x.geometric_product(&y).unwrap();
        let mut expected = [0i64; 16];
        expected[0] = 3;
        expected[5] = -6;
        expected[6] = 1;
        expected[8] = 2;
        assert_eq!(z.coeffs(), &expected);
        assert_eq!(z.grade_project(0).unwrap(), Multivector::scalar(s, Convention::GradeLex, 3));
    }

    #[test]
    fn second_generator_squares_to_minus_one() {
        let s = sig(1, 3);
        let e2 = Multivector::<i64>::basis(s, Convention::GradeLex, 2).unwrap();
        assert_eq!(e2.geometric_product(&e2).unwrap(), Multivector::scalar(s, Convention::GradeLex, -1));
    }

    #[test]
    fn mismatches_are_errors() {
        let a = Multivector::<i64>::zero(sig(1, 3), Convention::GradeLex);
        let b = Multivector::<i64>::zero(sig(3, 1), Convention::GradeLex);
        let c = Multivector::<i64>::zero(sig(1, 3), Convention::Binary);
        assert!(matches!(a.geometric_product(&b), Err(CliffordError::SignatureMismatch(..))));
        assert_eq!(a.geometric_product(&c), Err(CliffordError::ConventionMismatch));
        assert!(Multivector::from_coeffs(sig(1, 1), Convention::Binary, vec![0i64; 3]).is_err());
    }

    #[test]
    fn grade_projection() {
        let s = sig(1, 3);
        let e5 = Multivector::<i64>::basis(s, Convention::GradeLex, 5).unwrap();
        assert_eq!(e5.grade_project(2).unwrap(), e5);
        assert!(e5.grade_project(1).unwrap().is_zero());
        assert!(matches!(e5.grade_project(5), Err(CliffordError::GradeOutOfRange { .. })));
    }

    #[test]
    fn embed_vector_positions() {
        let s = sig(1, 3);
        let v = Multivector::embed_vector(&[1i64, 0, 0, 0], s, Convention::GradeLex).unwrap();
        assert_eq!(v, Multivector::basis(s, Convention::GradeLex, 1).unwrap());
        let v = Multivector::embed_vector(&[0i64, 0, 0, 1], s, Convention::GradeLex).unwrap();
        assert_eq!(v, Multivector::basis(s, Convention::GradeLex, 4).unwrap());
        let v = Multivector::embed_vector(&[1i64, 1, 1], sig(3, 0), Convention::GradeLex).unwrap();
        assert_eq!(v.coeffs(), &[0, 1, 1, 1, 0, 0, 0, 0]);
        assert!(Multivector::embed_vector(&[1i64, 1], sig(3, 0), Convention::GradeLex).is_err());
    }

    #[test]
    fn polarize_examples() {
        type Q = num_rational::Ratio<i64>;
        let gl = Convention::GradeLex;
        let s = sig(1, 3);
        let e1 = Multivector::<Q>::basis(s, gl, 1).unwrap();
        let e2 = Multivector::<Q>::basis(s, gl, 2).unwrap();
        let (sym, anti) = Multivector::polarize(&e1, &e1).unwrap();
        assert_eq!(sym, Multivector::scalar(s, gl, Q::from_integer(1)));
        assert!(anti.is_zero());
        let (sym, anti) = Multivector::polarize(&e1, &e2).unwrap();
        assert!(sym.is_zero());
        assert_eq!(anti, Multivector::basis(s, gl, 5).unwrap());

        let s = sig(3, 1);
        let e4 = Multivector::<Q>::basis(s, gl, 4).unwrap();
        let (sym, anti) = Multivector::polarize(&e4, &e4).unwrap();
        assert_eq!(sym, Multivector::scalar(s, gl, Q::from_integer(-1)));
        assert!(anti.is_zero());

        let e5 = Multivector::<Q>::basis(s, gl, 5).unwrap();
        assert_eq!(Multivector::polarize(&e5, &e4), Err(CliffordError::NotAVector(5)));
    }

    #[test]
    fn reindex_examples() {
        let s = sig(2, 2);
        let e3 = Multivector::<i64>::basis(s, Convention::Binary, 3).unwrap();
        assert_eq!(e3.reindex(Convention::GradeLex), Multivector::basis(s, Convention::GradeLex, 5).unwrap());
        let one = Multivector::scalar(s, Convention::Binary, 1i64);
        assert_eq!(one.reindex(Convention::GradeLex).coeffs()[0], 1);
        let top = Multivector::<i64>::basis(s, Convention::Binary, 15).unwrap();
        assert_eq!(top.reindex(Convention::GradeLex).coeffs()[15], 1);
        assert_eq!(e3.reindex(Convention::GradeLex).reindex(Convention::Binary), e3);
    }

    #[test]
    fn small_tables() {
        let t = product_table(sig(1, 0), Convention::GradeLex, DEFAULT_TABLE_CAP).unwrap();
        assert_eq!(t.to_csv(), "+0,+1\n+1,+0\n");
        let t = product_table(sig(0, 1), Convention::Binary, DEFAULT_TABLE_CAP).unwrap();
        assert_eq!(t.to_csv(), "+0,+1\n+1,-0\n");
        assert!(matches!(
            product_table(sig(5, 4), Convention::GradeLex, DEFAULT_TABLE_CAP),
            Err(CliffordError::OverCap { n: 9, cap: 8 })
        ));
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"p":0,"q":1,"convention":"binary","entries":[[{"sign":1,"index":0},{"sign":1,"index":1}],[{"sign":1,"index":1},{"sign":-1,"index":0}]]}"#
        );
    }

    #[test]
    fn signed_index_strings() {
        let minus_zero: SignedIndex = "-0".parse().unwrap();
        assert_eq!(minus_zero, SignedIndex { sign: Sign::Minus, index: 0 });
        assert_eq!(minus_zero.to_string(), "-0");
        assert!("5".parse::<SignedIndex>().is_err());
        assert!("+x".parse::<SignedIndex>().is_err());
    }

    #[test]
    fn grade_spaces() {
        for k in 0..=4 {
            let view = grade_space(4, k, Convention::GradeLex).unwrap();
            let binom = [1, 4, 6, 4, 1][k];
            assert_eq!(view.members.len(), binom);
        }
        assert_eq!(grade_space(4, 2, Convention::GradeLex).unwrap().members, vec![5, 6, 7, 8, 9, 10]);
        assert!(grade_space(3, 4, Convention::Binary).is_err());
    }
}
