//! Dense matrices over a [`Ring`], real-coordinate flattening and rank.

use crate::error::{CliffordError, Result};
use crate::ring::Ring;

/// Pivots with absolute value at or below this are treated as zero by [`real_rank`].
pub const RANK_TOLERANCE: f64 = 1e-9;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows<Row: AsRef<[R]>>(rows: &[Row]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(CliffordError::ShapeMismatch(rows.len(), cols, rows.len(), row.len()));
            }
            entries.extend_from_slice(row);
        }
        Ok(Matrix { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CliffordError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(R, R) -> R) -> Self {
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| f(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    /// Matrix product `self · other`; entry products keep their left/right order.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(CliffordError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(R::zero(), |acc, t| acc + self.get(i, t) * other.get(t, j))
        }))
    }

    /// Left multiplication by a ring element: `(s·M)_{ij} = s·M_{ij}`.
    pub fn scale(&self, s: R) -> Self {
        self.map(|x| s * x)
    }

    pub fn map<S>(&self, f: impl Fn(R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|&x| f(x)).collect() }
    }

    /// Max-abs difference of real coordinates is at most `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> Result<bool> {
        self.same_shape(other)?;
        let a = self.flatten_real();
        let b = other.flatten_real();
        Ok(a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol))
    }

    /// Row-major real coordinates, `REAL_DIM` per entry.
    pub fn flatten_real(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.entries.len() * R::REAL_DIM);
        for x in &self.entries {
            x.push_real_coords(&mut out);
        }
        out
    }

    /// Real dimension of the space of all matrices of this shape.
    pub fn ambient_real_dim(&self) -> usize {
        self.rows * self.cols * R::REAL_DIM
    }
}

/// Rank of a set of real vectors by Gaussian elimination with partial pivoting.
pub fn real_rank(vectors: &[Vec<f64>], tol: f64) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let width = first.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != width) {
        return Err(CliffordError::LengthMismatch { expected: width, found: bad.len() });
    }
    let mut rows: Vec<Vec<f64>> = vectors.to_vec();
    let mut rank = 0;
    for col in 0..width {
        if rank == rows.len() {
            break;
        }
        let (pivot, magnitude) = (rank..rows.len())
            .map(|r| (r, rows[r][col].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty range");
        if magnitude <= tol {
            continue;
        }
        rows.swap(rank, pivot);
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let factor = row[col] / pivot_row[col];
            if factor != 0.0 {
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= factor * p;
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// A pair of equally shaped square matrices, the blocks of `diag(A, B)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Diag2Pair<R> {
    a: Matrix<R>,
    b: Matrix<R>,
}

impl<R: Ring> Diag2Pair<R> {
    pub fn new(a: Matrix<R>, b: Matrix<R>) -> Result<Self> {
        if !a.is_square() || a.rows != b.rows || a.cols != b.cols {
            return Err(CliffordError::ShapeMismatch(a.rows, a.cols, b.rows, b.cols));
        }
        Ok(Diag2Pair { a, b })
    }

    pub fn a(&self) -> &Matrix<R> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<R> {
        &self.b
    }

    /// Blockwise product, `diag(A, B)·diag(C, D) = diag(AC, BD)`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        Diag2Pair::new(self.a.matmul(&other.a)?, self.b.matmul(&other.b)?)
    }
}

/// The block-diagonal `2m × 2m` matrix `[[A, 0], [0, B]]`.
pub fn diag2_embed<R: Ring>(pair: &Diag2Pair<R>) -> Matrix<R> {
    let m = pair.a.rows;
    Matrix::from_fn(2 * m, 2 * m, |i, j| match (i < m, j < m) {
        (true, true) => pair.a.get(i, j),
        (false, false) => pair.b.get(i - m, j - m),
        _ => R::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::division::Quaternion;
    use num_complex::Complex64;

    #[test]
    fn quaternion_entries_keep_order() {
        let i = Matrix::from_rows(&[[Quaternion::I]]).unwrap();
        let j = Matrix::from_rows(&[[Quaternion::J]]).unwrap();
        assert_eq!(i.matmul(&j).unwrap(), Matrix::from_rows(&[[Quaternion::K]]).unwrap());
        assert_eq!(j.matmul(&i).unwrap(), Matrix::from_rows(&[[-Quaternion::K]]).unwrap());
    }

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        assert_eq!(Matrix::identity(2).matmul(&m).unwrap(), m);
        let c = Matrix::from_rows(&[[Complex64::new(0.0, 1.0), Complex64::new(2.0, -1.0)]]).unwrap();
        assert_eq!(Matrix::identity(1).matmul(&c).unwrap(), c);
    }

    #[test]
    fn off_diagonal_unit_squares_to_minus_identity() {
        let z = Quaternion::ZERO;
        let hat_i = Matrix::from_rows(&[[z, Quaternion::I], [Quaternion::I, z]]).unwrap();
        assert_eq!(hat_i.matmul(&hat_i).unwrap(), Matrix::identity(2).neg());
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::<f64>::zeros(2, 3);
        let b = Matrix::<f64>::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(CliffordError::ShapeMismatch(2, 3, 2, 3))));
        assert!(a.add(&Matrix::zeros(3, 2)).is_err());
        assert!(Matrix::from_rows(&[vec![1.0, 2.0], vec![3.0]]).is_err());
        assert!(Diag2Pair::new(Matrix::<f64>::identity(2), Matrix::identity(3)).is_err());
    }

    #[test]
    fn flattening() {
        let id = Matrix::<Complex64>::identity(2);
        assert_eq!(id.flatten_real(), vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert_eq!(Matrix::<Complex64>::identity(4).ambient_real_dim(), 32);
        assert_eq!(Matrix::<Quaternion>::identity(2).ambient_real_dim(), 16);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(real_rank(&[vec![1.0, 0.0], vec![0.0, 1.0]], RANK_TOLERANCE).unwrap(), 2);
        assert_eq!(real_rank(&[vec![1.0, 0.0], vec![2.0, 0.0]], RANK_TOLERANCE).unwrap(), 1);
        assert_eq!(real_rank(&[], RANK_TOLERANCE).unwrap(), 0);
        assert_eq!(real_rank(&[vec![0.0; 3]], RANK_TOLERANCE).unwrap(), 0);
        assert!(real_rank(&[vec![1.0], vec![1.0, 2.0]], RANK_TOLERANCE).is_err());
    }

    #[test]
    fn diag2() {
        let pair = Diag2Pair::new(Matrix::from_rows(&[[2.0]]).unwrap(), Matrix::from_rows(&[[5.0]]).unwrap()).unwrap();
        assert_eq!(diag2_embed(&pair), Matrix::from_rows(&[[2.0, 0.0], [0.0, 5.0]]).unwrap());
        let other =
            Diag2Pair::new(Matrix::from_rows(&[[3.0]]).unwrap(), Matrix::from_rows(&[[-1.0]]).unwrap()).unwrap();
        let lhs = diag2_embed(&pair).matmul(&diag2_embed(&other)).unwrap();
        assert_eq!(lhs, diag2_embed(&pair.matmul(&other).unwrap()));
        let images = [(1.0, 0.0), (0.0, 1.0)].map(|(a, b)| {
            let p = Diag2Pair::new(Matrix::from_rows(&[[a]]).unwrap(), Matrix::from_rows(&[[b]]).unwrap()).unwrap();
            diag2_embed(&p).flatten_real()
        });
        assert_eq!(real_rank(&images, RANK_TOLERANCE).unwrap(), 2);
    }
}
