//! Drazin inverses, Drazin indices and group inverses of square matrices.

use crate::category::MatrixCategory;
use crate::error::{Error, Result};
use crate::matrix::{DaggerMode, Matrix};
use crate::scalar::Field;
use crate::verifier::verify_drazin_in;

/// The Drazin inverse `x^D` of a square matrix and its index `ind^D(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DrazinResult<T: Field> {
    pub inverse: Matrix<T>,
    pub index: usize,
    /// Floating-point only: internal cross-checks that missed tolerance.
    pub warnings: Vec<String>,
}

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

/// Least `k` with `rank(A^{k+1}) = rank(A^k)`. Float ranks of `A^k` are
/// taken relative to `max|a_ij|^k`.
pub fn drazin_index<T: Field>(a: &Matrix<T>) -> Result<usize> {
    require_square(a, "drazin_index")?;
    let mut power = Matrix::identity(a.rows());
    let mut rank = a.rows();
    let mut scale = 1.0;
    for k in 0..=a.rows() {
        let next = power.matmul(a)?;
        scale *= a.max_magnitude();
        let next_rank = next.rank_at_scale(scale);
        if next_rank == rank {
            return Ok(k);
        }
        power = next;
        rank = next_rank;
    }
    Err(Error::Inconsistent(
        "rank chain did not stabilise within n steps".into(),
    ))
}

/// Cline's recursion. With `A = F·G` a full-rank factorization and
/// `B = G·F`, `A^D = F·(B^D)²·G` and `ind(A) = ind(B) + 1` for singular `A`.
/// Float ranks throughout are taken relative to the scale of the input.
fn cline<T: Field>(a: &Matrix<T>, scale: f64) -> Result<(Matrix<T>, usize)> {
    let n = a.rows();
    let frf = a.full_rank_factorization_at_scale(scale);
    let r = frf.rank();
    if r == n {
        return Ok((a.inverse()?, 0));
    }
    if r == 0 {
        return Ok((Matrix::zeros(n, n), 1));
    }
    let b = frf.right.matmul(&frf.left)?;
    let (b_drazin, b_index) = cline(&b, scale)?;
    let b_drazin_sq = b_drazin.matmul(&b_drazin)?;
    let inverse = Matrix::product(&[&frf.left, &b_drazin_sq, &frf.right])?;
    Ok((inverse, b_index + 1))
}

/// The Drazin inverse of a square matrix.
///
/// Every square matrix over a field has one. The index reported is taken
/// from the rank chain and must agree with the recursion depth. The result
/// is checked against `[D.1]`–`[D.3]`, with `[D.1]` holding first at the
/// reported index. In exact mode any failed check is an
/// [`Error::Inconsistent`]; in float mode it becomes a warning.
pub fn drazin_inverse<T: Field>(a: &Matrix<T>) -> Result<DrazinResult<T>> {
    require_square(a, "drazin_inverse")?;
    let (inverse, depth_index) = cline(a, a.max_magnitude())?;
    let index = drazin_index(a)?;
    let mut problems = Vec::new();
    if index != depth_index {
        problems.push(format!(
            "rank-chain index {index} but recursion depth gives {depth_index}"
        ));
    }
    let report = verify_drazin_in(
        &MatrixCategory::new(DaggerMode::Transpose),
        a,
        &inverse,
        index,
    )?;
    if !report.passed() || report.minimal_index != Some(index) {
        problems.push(format!(
            "Drazin axioms: failed {:?}, minimal index {:?} vs {index}",
            report.failed(),
            report.minimal_index
        ));
    }
    let mut warnings = Vec::new();
    for msg in problems {
        if T::EXACT {
            return Err(Error::Inconsistent(msg));
        }
        warnings.push(msg);
    }
    Ok(DrazinResult {
        inverse,
        index,
        warnings,
    })
}

/// The group inverse, which exists exactly when the Drazin index is at
/// most 1 and then equals the Drazin inverse.
pub fn group_inverse<T: Field>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let r = drazin_inverse(a)?;
    if r.index <= 1 {
        Ok(r.inverse)
    } else {
        Err(Error::NoGroupInverse { index: r.index })
    }
}
