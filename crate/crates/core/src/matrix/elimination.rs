use super::{Matrix, FLOAT_RANK_RTOL};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Rref<T: Field> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

/// `A = left · right` with `left` of full column rank and `right` of full
/// row rank.
#[derive(Debug, Clone, PartialEq)]
pub struct FullRankFactorization<T: Field> {
    pub left: Matrix<T>,
    pub right: Matrix<T>,
}

impl<T: Field> FullRankFactorization<T> {
    pub fn rank(&self) -> usize {
        self.left.cols()
    }
}

impl<T: Field> Matrix<T> {
    fn pivot_tolerance(&self) -> f64 {
        self.pivot_tolerance_at_scale(0.0)
    }

    fn pivot_tolerance_at_scale(&self, scale: f64) -> f64 {
        if T::EXACT {
            0.0
        } else {
            FLOAT_RANK_RTOL * self.max_magnitude().max(scale)
        }
    }

    /// Rank with float entries at or below `FLOAT_RANK_RTOL · max(scale,
    /// max|a_ij|)` treated as zero. Use when `self` is derived from a
    /// larger matrix whose rounding error it inherits.
    pub fn rank_at_scale(&self, scale: f64) -> usize {
        if T::EXACT {
            self.rank()
        } else {
            self.rref_with_tolerance(self.pivot_tolerance_at_scale(scale))
                .pivots
                .len()
        }
    }

    /// Gauss-Jordan elimination. Exact fields take the first nonzero pivot;
    /// floats use partial pivoting and treat entries at or below
    /// `FLOAT_RANK_RTOL · max|a_ij|` as zero.
    pub fn rref(&self) -> Rref<T> {
        self.rref_with_tolerance(self.pivot_tolerance())
    }

    fn rref_with_tolerance(&self, tol: f64) -> Rref<T> {
        let (rows, cols) = self.shape();
        let mut m = self.clone();
        let negligible = |x: &T| {
            if T::EXACT {
                x.is_zero()
            } else {
                x.magnitude() <= tol
            }
        };
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let candidate = if T::EXACT {
                (r..rows).find(|&i| !m.get(i, c).is_zero())
            } else {
                (r..rows)
                    .filter(|&i| !negligible(m.get(i, c)))
                    .max_by(|&a, &b| m.get(a, c).magnitude().total_cmp(&m.get(b, c).magnitude()))
            };
            let Some(p) = candidate else {
                for i in r..rows {
                    m.set(i, c, T::zero());
                }
                continue;
            };
            m.swap_rows(p, r);
            let scale = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..cols {
                let v = m.get(r, j).mul(&scale);
                m.set(r, j, v);
            }
            m.set(r, c, T::one());
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let v = m.get(i, j).sub(&factor.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
                m.set(i, c, T::zero());
            }
            pivots.push(c);
            r += 1;
        }
        if !T::EXACT {
            for i in r..rows {
                for j in 0..cols {
                    m.set(i, j, T::zero());
                }
            }
        }
        Rref { reduced: m, pivots }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Two-sided inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "inverse",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let Rref { reduced, pivots } = aug.rref_with_tolerance(self.pivot_tolerance());
        if pivots.len() < n || !pivots.iter().copied().take(n).eq(0..n) {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    /// Some `X` with `self · X = rhs`, free variables set to zero; `None`
    /// when the system is inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "solve",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let n = self.cols;
        let aug = self.hstack(rhs)?;
        let Rref { reduced, pivots } = aug.rref_with_tolerance(self.pivot_tolerance());
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(n, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, reduced.get(i, n + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// `A = F·G` where `G` is the nonzero rows of the RREF of `A` and `F`
    /// the columns of `A` at the pivot positions. The zero matrix factors
    /// through the zero object: `F` is `rows×0`, `G` is `0×cols`.
    pub fn full_rank_factorization(&self) -> FullRankFactorization<T> {
        self.full_rank_factorization_at_scale(0.0)
    }

    /// [`Matrix::full_rank_factorization`] with the float threshold of
    /// [`Matrix::rank_at_scale`].
    pub fn full_rank_factorization_at_scale(&self, scale: f64) -> FullRankFactorization<T> {
        let Rref { reduced, pivots } =
            self.rref_with_tolerance(self.pivot_tolerance_at_scale(scale));
        FullRankFactorization {
            left: self.select_columns(&pivots),
            right: reduced.top_rows(pivots.len()),
        }
    }

    /// A basis (as rows) of `{v : v·A = 0}`, the kernel of `A` acting on
    /// row vectors.
    pub fn left_null_space(&self) -> Self {
        self.left_null_space_at_scale(0.0)
    }

    /// [`Matrix::left_null_space`] with the float threshold of
    /// [`Matrix::rank_at_scale`].
    pub fn left_null_space_at_scale(&self, scale: f64) -> Self {
        let t = self.transpose();
        let Rref { reduced, pivots } = t.rref_with_tolerance(self.pivot_tolerance_at_scale(scale));
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        Matrix::from_fn(free.len(), n, |b, j| {
            let f = free[b];
            if j == f {
                return T::one();
            }
            match pivots.iter().position(|&p| p == j) {
                Some(i) => reduced.get(i, f).neg(),
                None => T::zero(),
            }
        })
    }
}
