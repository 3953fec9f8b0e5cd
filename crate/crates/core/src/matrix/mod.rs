//! Dense matrices over a [`Field`].
//!
//! A map `n → m` is an `n × m` matrix acting on row vectors, so the
//! diagrammatic composite "`f` then `g`" is the ordinary product `F·G`.

pub(crate) mod bareiss;
mod chains;
mod elimination;

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Involution};

pub use chains::{ascent, descent};
pub use elimination::{FullRankFactorization, Rref};

/// Relative pivot threshold for floating-point rank: an entry counts as zero
/// when its magnitude is at most this times the largest entry magnitude.
pub const FLOAT_RANK_RTOL: f64 = 1e-9;

/// Frobenius distance under which two floating-point matrices are equal.
pub const FLOAT_EQ_TOL: f64 = 1e-8;

/// Which dagger a matrix category carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DaggerMode {
    /// `Aᵀ(i,j) = A(j,i)`.
    Transpose,
    /// `A*(i,j) = conj(A(j,i))`.
    ConjugateTranspose,
}

impl DaggerMode {
    pub fn involution(self) -> Involution {
        match self {
            DaggerMode::Transpose => Involution::Identity,
            DaggerMode::ConjugateTranspose => Involution::Conjugation,
        }
    }
}

impl fmt::Display for DaggerMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DaggerMode::Transpose => "transpose",
            DaggerMode::ConjugateTranspose => "conjugate-transpose",
        })
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Parse(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from its rows. An empty list is the `0×0` matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged rows".into()));
        }
        let n = rows.len();
        Matrix::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Integer entries, for tests and examples.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix::from_fn(rows.len(), cols, |i, j| T::from_i64(rows[i][j]))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Field>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The adjoint under `mode`: entry `(i,j)` is the involution of `(j,i)`.
    pub fn dagger(&self, mode: DaggerMode) -> Self {
        let inv = mode.involution();
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).involve(inv))
    }

    pub fn is_self_adjoint(&self, mode: DaggerMode) -> bool {
        self.is_square() && self.approx_eq(&self.dagger(mode))
    }

    /// The diagrammatic composite `self` then `other`, i.e. `self · other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Left-to-right product of a chain of matrices.
    pub fn product(factors: &[&Self]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .expect("product of an empty chain has no shape");
        rest.iter()
            .try_fold((*first).clone(), |acc, m| acc.matmul(m))
    }

    /// `A^k`, with `A^0 = I`.
    pub fn pow(&self, k: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "pow",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.matmul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.matmul(&base)?;
            }
        }
        Ok(result)
    }

    fn zip_with(&self, other: &Self, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", T::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "sub", T::sub)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn max_magnitude(&self) -> f64 {
        self.data.iter().map(Field::magnitude).fold(0.0, f64::max)
    }

    /// Frobenius norm of `self − other`; `None` when shapes differ.
    pub fn frobenius_distance(&self, other: &Self) -> Option<f64> {
        if self.shape() != other.shape() {
            return None;
        }
        let sum: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b).magnitude().powi(2))
            .sum();
        Some(sum.sqrt())
    }

    /// Equality in the field's comparison context: structural for exact
    /// fields, Frobenius distance at most [`FLOAT_EQ_TOL`] for floats.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// Where `self` and `other` differ: `Some(vec![])` for a shape mismatch,
    /// `Some(vec![i, j])` for the first differing entry (exact fields) or the
    /// worst one (floats past tolerance), `None` if equal.
    pub fn first_mismatch(&self, other: &Self) -> Option<Vec<usize>> {
        if self.shape() != other.shape() {
            return Some(Vec::new());
        }
        let coords = |idx: usize| vec![idx / self.cols, idx % self.cols];
        if T::EXACT {
            return self
                .data
                .iter()
                .zip(&other.data)
                .position(|(a, b)| a != b)
                .map(coords);
        }
        let dist = self.frobenius_distance(other)?;
        if dist <= FLOAT_EQ_TOL {
            return None;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b).magnitude())
            .enumerate()
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .map(|(idx, _)| coords(idx))
    }

    pub fn rank(&self) -> usize {
        T::rank(self)
    }

    /// Selects columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Selects the first `n` rows.
    pub fn top_rows(&self, n: usize) -> Self {
        Matrix::from_fn(n, self.cols, |i, j| self.get(i, j).clone())
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix::from_fn(
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }
}

impl<T: Field> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}

impl<T: Field> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational, Rational, C64};

    type Q = Matrix<Rational>;

    fn qi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn nilpotent_squares_to_zero() {
        let n = Q::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(n.pow(2).unwrap(), Q::zeros(2, 2));
    }

    #[test]
    fn zeroth_power_is_identity() {
        let a = Q::from_i64(&[&[3, 1], &[4, 1]]);
        assert_eq!(a.pow(0).unwrap(), Q::identity(2));
        assert_eq!(Q::zeros(0, 0).pow(0).unwrap(), Q::identity(0));
    }

    #[test]
    fn idempotent_powers() {
        let e = Q::from_i64(&[&[1, 1], &[0, 0]]);
        assert_eq!(e.pow(2).unwrap(), e);
        assert_eq!(e.pow(7).unwrap(), e);
    }

    #[test]
    fn pow_matches_repeated_products() {
        let a = Q::from_i64(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 2]]);
        let mut acc = Q::identity(3);
        for k in 0..6 {
            assert_eq!(a.pow(k).unwrap(), acc);
            acc = acc.matmul(&a).unwrap();
        }
    }

    #[test]
    fn matmul_checks_inner_dimensions() {
        let a = Q::zeros(2, 3);
        assert!(matches!(
            a.matmul(&Q::zeros(2, 3)),
            Err(Error::DimensionMismatch { op: "matmul", .. })
        ));
        assert!(matches!(a.pow(2), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn empty_products() {
        let tall = Q::zeros(3, 0);
        let wide = Q::zeros(0, 2);
        let p = tall.matmul(&wide).unwrap();
        assert_eq!(p.shape(), (3, 2));
        assert!(p.is_zero());
        assert_eq!(wide.matmul(&Q::zeros(2, 0)).unwrap().shape(), (0, 0));
    }

    #[test]
    fn daggers_of_row_i_one() {
        let f = Matrix::from_rows(vec![vec![qi(0, 1), qi(1, 0)]]).unwrap();
        let t = f.dagger(DaggerMode::Transpose);
        assert_eq!(
            t,
            Matrix::from_rows(vec![vec![qi(0, 1)], vec![qi(1, 0)]]).unwrap()
        );
        let c = f.dagger(DaggerMode::ConjugateTranspose);
        assert_eq!(
            c,
            Matrix::from_rows(vec![vec![qi(0, -1)], vec![qi(1, 0)]]).unwrap()
        );
        assert_eq!(c.dagger(DaggerMode::ConjugateTranspose), f);
    }

    #[test]
    fn float_equality_uses_frobenius_tolerance() {
        let a = Matrix::<C64>::identity(2);
        let mut b = a.clone();
        b.set(0, 1, C64::new(1e-10, 0.0));
        assert!(a.approx_eq(&b));
        b.set(1, 0, C64::new(0.0, 1e-6));
        assert_eq!(a.first_mismatch(&b), Some(vec![1, 0]));
    }

    #[test]
    fn exact_mismatch_reports_first_entry() {
        let a = Q::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Q::from_i64(&[&[1, 2], &[5, 4]]);
        assert_eq!(a.first_mismatch(&b), Some(vec![1, 0]));
        assert_eq!(a.first_mismatch(&Q::zeros(2, 3)), Some(vec![]));
    }

    mod laws {
        use super::*;
        use proptest::prelude::*;

        fn gauss_matrix(
            rows: usize,
            cols: usize,
        ) -> impl Strategy<Value = Matrix<GaussianRational>> {
            proptest::collection::vec((-3i64..=3, -3i64..=3), rows * cols).prop_map(move |v| {
                Matrix::new(rows, cols, v.into_iter().map(|(a, b)| qi(a, b)).collect()).unwrap()
            })
        }

        fn triple() -> impl Strategy<Value = (Matrix<GaussianRational>, Matrix<GaussianRational>)> {
            (1usize..4, 1usize..4, 1usize..4)
                .prop_flat_map(|(n, k, m)| (gauss_matrix(n, k), gauss_matrix(k, m)))
        }

        proptest! {
            #[test]
            fn dagger_is_a_contravariant_involution((a, b) in triple()) {
                for mode in [DaggerMode::Transpose, DaggerMode::ConjugateTranspose] {
                    let ab = a.matmul(&b).unwrap();
                    prop_assert_eq!(ab.dagger(mode), b.dagger(mode).matmul(&a.dagger(mode)).unwrap());
                    prop_assert_eq!(a.dagger(mode).dagger(mode), a.clone());
                    let n = a.rows();
                    prop_assert_eq!(Matrix::<GaussianRational>::identity(n).dagger(mode), Matrix::identity(n));
                }
            }
        }
    }
}
