//! Dagger-Drazin, dagger-group and Moore-Penrose inverses.
//!
//! Everything is computed from ordinary Drazin inverses of the two positive
//! maps `ff†` and `f†f`:
//!
//! ```text
//! f^∂      = f†(ff†)^D = (f†f)^D f†
//! ind^∂(f) = max(ind^D(ff†), ind^D(f†f))
//! ```

use crate::category::{Category, DaggerCategory, DrazinCategory, MatrixCategory};
use crate::drazin::drazin_inverse;
use crate::error::{Error, Result};
use crate::matrix::{DaggerMode, Matrix};
use crate::scalar::Field;
use crate::verifier::{dagger_d1_at, verify_dagger_drazin_in};

/// `f^∂` and `ind^∂(f)` in an arbitrary Drazin dagger category.
#[derive(Debug, Clone, PartialEq)]
pub struct DaggerDrazin<M> {
    pub inverse: M,
    pub index: usize,
    pub warnings: Vec<String>,
}

/// Exact categories fail hard on a broken internal check; approximate ones
/// collect a warning instead.
fn flag<C: Category>(cat: &C, warnings: &mut Vec<String>, msg: String) -> Result<()> {
    if cat.is_exact() {
        Err(Error::Inconsistent(msg))
    } else {
        warnings.push(msg);
        Ok(())
    }
}

/// The dagger-Drazin inverse of any map in a Drazin dagger category.
///
/// Both construction formulas are evaluated and compared, the result is run
/// through the axiom checker, and `[D†.1]` is confirmed to fail one step
/// below the reported index.
pub fn dagger_drazin_in<C>(cat: &C, f: &C::Map) -> Result<DaggerDrazin<C::Map>>
where
    C: DaggerCategory + DrazinCategory,
{
    let fd = cat.dagger(f);
    let (p_d, p_index) = cat.drazin(&cat.compose(f, &fd)?)?;
    let (q_d, q_index) = cat.drazin(&cat.compose(&fd, f)?)?;
    let inverse = cat.compose(&fd, &p_d)?;
    let index = p_index.max(q_index);
    let mut warnings = Vec::new();

    if let Some(at) = cat.first_mismatch(&inverse, &cat.compose(&q_d, &fd)?) {
        flag(
            cat,
            &mut warnings,
            format!("f†(ff†)^D and (f†f)^D f† differ at {at:?}"),
        )?;
    }
    let report = verify_dagger_drazin_in(cat, f, &inverse, index)?;
    if !report.passed() {
        let failed = report.failed().join(", ");
        flag(
            cat,
            &mut warnings,
            format!("dagger-Drazin axioms fail: {failed}"),
        )?;
    }
    if index > 0 && dagger_d1_at(cat, f, &inverse, index - 1)?.is_none() {
        flag(
            cat,
            &mut warnings,
            format!("[D†.1] already holds at {}", index - 1),
        )?;
    }
    Ok(DaggerDrazin {
        inverse,
        index,
        warnings,
    })
}

/// The dagger-Drazin inverse `f^∂` of a matrix, of dual type `cols × rows`.
#[derive(Debug, Clone, PartialEq)]
pub struct DaggerDrazinResult<T: Field> {
    pub inverse: Matrix<T>,
    pub index: usize,
    pub mode: DaggerMode,
    pub warnings: Vec<String>,
}

pub fn dagger_drazin<T: Field>(f: &Matrix<T>, mode: DaggerMode) -> Result<DaggerDrazinResult<T>> {
    let r = dagger_drazin_in(&MatrixCategory::new(mode), f)?;
    Ok(DaggerDrazinResult {
        inverse: r.inverse,
        index: r.index,
        mode,
        warnings: r.warnings,
    })
}

/// The dagger-group inverse, which exists exactly when `ind^∂(f) ≤ 1` and
/// then equals `f^∂`.
pub fn dagger_group_inverse<T: Field>(f: &Matrix<T>, mode: DaggerMode) -> Result<Matrix<T>> {
    let r = dagger_drazin(f, mode)?;
    if r.index > 1 {
        return Err(Error::NoDaggerGroupInverse { index: r.index });
    }
    let fd = f.dagger(mode);
    let p = f.matmul(&fd)?;
    let q = fd.matmul(f)?;
    let c = Matrix::product(&[f, &r.inverse, &p])?;
    let d = Matrix::product(&[&q, &r.inverse, f])?;
    if T::EXACT && (c != p || d != q) {
        return Err(Error::Inconsistent(
            "derived dagger-group identities fail".into(),
        ));
    }
    Ok(r.inverse)
}

#[derive(Debug, Clone, PartialEq)]
pub enum MoorePenroseResult<T: Field> {
    Exists(Matrix<T>),
    /// `f f^∂ f ≠ f`; the witness is `f f^∂ f`.
    Nonexistent {
        dagger_drazin: Matrix<T>,
        witness: Matrix<T>,
    },
}

impl<T: Field> MoorePenroseResult<T> {
    pub fn inverse(&self) -> Option<&Matrix<T>> {
        match self {
            MoorePenroseResult::Exists(m) => Some(m),
            MoorePenroseResult::Nonexistent { .. } => None,
        }
    }
}

/// Decides existence of the Moore-Penrose inverse by testing
/// `f f^∂ f = f`; when it holds the Moore-Penrose inverse is `f^∂`.
pub fn moore_penrose<T: Field>(f: &Matrix<T>, mode: DaggerMode) -> Result<MoorePenroseResult<T>> {
    let r = dagger_drazin(f, mode)?;
    let witness = Matrix::product(&[f, &r.inverse, f])?;
    if witness.approx_eq(f) {
        if T::EXACT && r.index > 1 {
            return Err(Error::Inconsistent(format!(
                "Moore-Penrose inverse exists but dagger index is {}",
                r.index
            )));
        }
        Ok(MoorePenroseResult::Exists(r.inverse))
    } else {
        Ok(MoorePenroseResult::Nonexistent {
            dagger_drazin: r.inverse,
            witness,
        })
    }
}

/// For self-adjoint `x`, both inverses computed independently.
#[derive(Debug, Clone, PartialEq)]
pub struct SelfAdjointBridge<T: Field> {
    pub drazin: Matrix<T>,
    pub drazin_index: usize,
    pub dagger_drazin: Matrix<T>,
    pub dagger_index: usize,
}

/// Computes `x^D` and `x^∂` for a self-adjoint `x` and checks that they
/// coincide and are self-adjoint.
pub fn self_adjoint_bridge<T: Field>(
    x: &Matrix<T>,
    mode: DaggerMode,
) -> Result<SelfAdjointBridge<T>> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            op: "self_adjoint_bridge",
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if !x.is_self_adjoint(mode) {
        return Err(Error::NotSelfAdjoint);
    }
    let d = drazin_inverse(x)?;
    let dd = dagger_drazin(x, mode)?;
    let agree = d.inverse.approx_eq(&dd.inverse)
        && d.inverse.is_self_adjoint(mode)
        && dd.inverse.is_self_adjoint(mode);
    if T::EXACT && !agree {
        return Err(Error::Inconsistent(
            "x^D and x^∂ differ for self-adjoint x".into(),
        ));
    }
    Ok(SelfAdjointBridge {
        drazin: d.inverse,
        drazin_index: d.index,
        dagger_drazin: dd.inverse,
        dagger_index: dd.index,
    })
}
