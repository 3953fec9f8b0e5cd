//! Ascent and descent of a square matrix: where the null-space chain
//! `N(A⁰) ⊆ N(A¹) ⊆ …` and the range chain `R(A⁰) ⊇ R(A¹) ⊇ …` stop
//! growing or shrinking. Both chains are monotone, so comparing dimensions
//! decides equality of consecutive spaces. Float ranks of `A^k` are taken
//! relative to `max|a_ij|^k` so that rounding noise in a vanishing power
//! is not mistaken for rank.

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Field;

fn require_square<T: Field>(a: &Matrix<T>, op: &'static str) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            op,
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// Least `k` with `dim N(A^k) = dim N(A^{k+1})`, measured on explicit
/// null-space bases.
pub fn ascent<T: Field>(a: &Matrix<T>) -> Result<usize> {
    require_square(a, "ascent")?;
    let mut power = Matrix::identity(a.rows());
    let mut nullity = power.left_null_space().rows();
    let mut scale = 1.0;
    for k in 0..=a.rows() {
        let next = power.matmul(a)?;
        scale *= a.max_magnitude();
        let next_nullity = next.left_null_space_at_scale(scale).rows();
        if next_nullity == nullity {
            return Ok(k);
        }
        power = next;
        nullity = next_nullity;
    }
    Err(Error::Inconsistent(
        "null-space chain did not stabilise within n steps".into(),
    ))
}

/// Least `k` with `dim R(A^k) = dim R(A^{k+1})`, measured as the number of
/// Gauss-Jordan pivots of each power.
pub fn descent<T: Field>(a: &Matrix<T>) -> Result<usize> {
    require_square(a, "descent")?;
    let mut power = Matrix::identity(a.rows());
    let mut dim = a.rows();
    let mut scale = 1.0;
    for k in 0..=a.rows() {
        let next = power.matmul(a)?;
        scale *= a.max_magnitude();
        let next_dim = next.rank_at_scale(scale);
        if next_dim == dim {
            return Ok(k);
        }
        power = next;
        dim = next_dim;
    }
    Err(Error::Inconsistent(
        "range chain did not stabilise within n steps".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Matrix<Rational>;

    #[test]
    fn nilpotent_jordan_block() {
        // nullity chain 0,1,2,2 and rank chain 2,1,0,0
        let n = Q::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(ascent(&n).unwrap(), 2);
        assert_eq!(descent(&n).unwrap(), 2);
    }

    #[test]
    fn identity_and_idempotent() {
        assert_eq!(ascent(&Q::identity(3)).unwrap(), 0);
        assert_eq!(descent(&Q::identity(3)).unwrap(), 0);
        let e = Q::from_i64(&[&[1, 1], &[0, 0]]);
        assert_eq!(ascent(&e).unwrap(), 1);
        assert_eq!(descent(&e).unwrap(), 1);
    }

    #[test]
    fn empty_matrix_is_stable_immediately() {
        assert_eq!(ascent(&Q::zeros(0, 0)).unwrap(), 0);
    }

    #[test]
    fn rectangular_is_rejected() {
        assert!(matches!(
            ascent(&Q::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }
}
