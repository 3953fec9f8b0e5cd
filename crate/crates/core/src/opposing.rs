//! Opposing pairs and the cofree dagger category `X^⇄`.
//!
//! An opposing pair `(f, g): A → B` is `f: A → B` together with `g: B → A`.
//! Composition is `(f, g)(h, k) = (fh, kg)` and the dagger swaps the two
//! components. The Drazin inverse of `f` over `g` is
//!
//! ```text
//! f^{D/g} = g(fg)^D = (gf)^D g
//! ```

use serde::{Deserialize, Serialize};

use crate::category::{
    require_endo, require_type, Category, DaggerCategory, DrazinCategory, MatrixCategory,
};
use crate::dagger_inverse::dagger_drazin_in;
use crate::error::{Error, Result};
use crate::matrix::{DaggerMode, Matrix};
use crate::scalar::Field;
use crate::verifier::{verify_opposing_in, VerificationReport};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OpposingPair<M> {
    pub fwd: M,
    pub bwd: M,
}

impl<T: Field> OpposingPair<Matrix<T>> {
    /// Requires `fwd: n × m` and `bwd: m × n`.
    pub fn new(fwd: Matrix<T>, bwd: Matrix<T>) -> Result<Self> {
        if bwd.shape() != (fwd.cols(), fwd.rows()) {
            return Err(Error::DimensionMismatch {
                op: "opposing pair",
                left: fwd.shape(),
                right: bwd.shape(),
            });
        }
        Ok(OpposingPair { fwd, bwd })
    }
}

/// `X^⇄` over a base category `X`.
#[derive(Debug, Clone)]
pub struct CofreeCategory<C> {
    pub base: C,
}

impl<C> CofreeCategory<C> {
    pub fn new(base: C) -> Self {
        CofreeCategory { base }
    }
}

impl<C: Category> Category for CofreeCategory<C> {
    type Map = OpposingPair<C::Map>;

    fn dom(&self, p: &Self::Map) -> usize {
        self.base.dom(&p.fwd)
    }

    fn cod(&self, p: &Self::Map) -> usize {
        self.base.cod(&p.fwd)
    }

    fn identity(&self, object: usize) -> Self::Map {
        OpposingPair {
            fwd: self.base.identity(object),
            bwd: self.base.identity(object),
        }
    }

    fn compose(&self, p: &Self::Map, q: &Self::Map) -> Result<Self::Map> {
        Ok(OpposingPair {
            fwd: self.base.compose(&p.fwd, &q.fwd)?,
            bwd: self.base.compose(&q.bwd, &p.bwd)?,
        })
    }

    /// Prefixed with `0` for the forward component, `1` for the backward.
    fn first_mismatch(&self, a: &Self::Map, b: &Self::Map) -> Option<Vec<usize>> {
        let tag = |i: usize, at: Vec<usize>| {
            let mut v = vec![i];
            v.extend(at);
            v
        };
        self.base
            .first_mismatch(&a.fwd, &b.fwd)
            .map(|at| tag(0, at))
            .or_else(|| {
                self.base
                    .first_mismatch(&a.bwd, &b.bwd)
                    .map(|at| tag(1, at))
            })
    }

    fn tolerance(&self) -> Option<f64> {
        self.base.tolerance()
    }
}

impl<C: Category> DaggerCategory for CofreeCategory<C> {
    fn dagger(&self, p: &Self::Map) -> Self::Map {
        OpposingPair {
            fwd: p.bwd.clone(),
            bwd: p.fwd.clone(),
        }
    }
}

/// An endomorphism `(x, y)` has powers `(x^k, y^k)`, so its Drazin inverse
/// is `(x^D, y^D)` with the larger of the two indices.
impl<C: DrazinCategory> DrazinCategory for CofreeCategory<C> {
    fn drazin(&self, p: &Self::Map) -> Result<(Self::Map, usize)> {
        require_endo(self, p, "cofree drazin")?;
        let (x, i) = self.base.drazin(&p.fwd)?;
        let (y, j) = self.base.drazin(&p.bwd)?;
        Ok((OpposingPair { fwd: x, bwd: y }, i.max(j)))
    }
}

pub fn pair_compose<T: Field>(
    p: &OpposingPair<Matrix<T>>,
    q: &OpposingPair<Matrix<T>>,
) -> Result<OpposingPair<Matrix<T>>> {
    CofreeCategory::new(MatrixCategory::new(DaggerMode::Transpose)).compose(p, q)
}

pub fn pair_dagger<M: Clone>(p: &OpposingPair<M>) -> OpposingPair<M> {
    OpposingPair {
        fwd: p.bwd.clone(),
        bwd: p.fwd.clone(),
    }
}

/// `(f^{D/g}, g^{D/f})` with `ind^D(f, g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OpposingDrazinResult<M> {
    pub f_over_g: M,
    pub g_over_f: M,
    pub index: usize,
    pub warnings: Vec<String>,
}

impl<M: Clone> OpposingDrazinResult<M> {
    pub fn as_pair(&self) -> OpposingPair<M> {
        OpposingPair {
            fwd: self.f_over_g.clone(),
            bwd: self.g_over_f.clone(),
        }
    }
}

fn flag<C: Category>(cat: &C, warnings: &mut Vec<String>, msg: String) -> Result<()> {
    if cat.is_exact() {
        Err(Error::Inconsistent(msg))
    } else {
        warnings.push(msg);
        Ok(())
    }
}

/// The Drazin inverse of `f` over `g` and of `g` over `f`, with both
/// construction formulas compared, `(fg)^D = g^{D/f} f^{D/g}` and
/// `(gf)^D = f^{D/g} g^{D/f}` checked, and the axioms verified at the
/// reported index.
pub fn opposing_drazin_in<C: DrazinCategory>(
    cat: &C,
    f: &C::Map,
    g: &C::Map,
) -> Result<OpposingDrazinResult<C::Map>> {
    require_type(cat, g, (cat.cod(f), cat.dom(f)), "opposing_drazin")?;
    let (fg_d, fg_index) = cat.drazin(&cat.compose(f, g)?)?;
    let (gf_d, gf_index) = cat.drazin(&cat.compose(g, f)?)?;
    let f_over_g = cat.compose(g, &fg_d)?;
    let g_over_f = cat.compose(f, &gf_d)?;
    let index = fg_index.max(gf_index);
    let mut warnings = Vec::new();

    let checks = [
        ("g(fg)^D = (gf)^D g", &f_over_g, cat.compose(&gf_d, g)?),
        ("f(gf)^D = (fg)^D f", &g_over_f, cat.compose(&fg_d, f)?),
        (
            "(fg)^D = g^{D/f} f^{D/g}",
            &fg_d,
            cat.compose(&g_over_f, &f_over_g)?,
        ),
        (
            "(gf)^D = f^{D/g} g^{D/f}",
            &gf_d,
            cat.compose(&f_over_g, &g_over_f)?,
        ),
    ];
    for (name, lhs, rhs) in checks {
        if let Some(at) = cat.first_mismatch(lhs, &rhs) {
            flag(cat, &mut warnings, format!("{name} fails at {at:?}"))?;
        }
    }
    let report = verify_opposing_in(cat, f, g, &f_over_g, &g_over_f, index)?;
    if !report.passed() || report.minimal_index != Some(index) {
        flag(
            cat,
            &mut warnings,
            format!(
                "opposing axioms: failed {:?}, minimal index {:?} vs {index}",
                report.failed(),
                report.minimal_index
            ),
        )?;
    }
    Ok(OpposingDrazinResult {
        f_over_g,
        g_over_f,
        index,
        warnings,
    })
}

pub fn opposing_drazin<T: Field>(
    p: &OpposingPair<Matrix<T>>,
) -> Result<OpposingDrazinResult<Matrix<T>>> {
    opposing_drazin_in(&MatrixCategory::new(DaggerMode::Transpose), &p.fwd, &p.bwd)
}

pub fn verify_opposing<T: Field>(
    p: &OpposingPair<Matrix<T>>,
    cand: &OpposingPair<Matrix<T>>,
    k_max: usize,
) -> Result<VerificationReport> {
    let cat = MatrixCategory::new(DaggerMode::Transpose);
    verify_opposing_in(&cat, &p.fwd, &p.bwd, &cand.fwd, &cand.bwd, k_max)
}

/// The opposing Drazin inverse computed in the base category next to the
/// dagger-Drazin inverse computed in the cofree category.
#[derive(Debug, Clone, PartialEq)]
pub struct CofreeEquivalence<M> {
    pub opposing: OpposingDrazinResult<M>,
    pub dagger_drazin: OpposingPair<M>,
    pub dagger_index: usize,
}

/// Computes `(f, g)^∂` in `X^⇄` by the generic dagger-Drazin construction
/// and checks that it coincides with `(f^{D/g}, g^{D/f})`, indices included.
pub fn cofree_equivalence_in<C: DrazinCategory + Clone>(
    base: &C,
    p: &OpposingPair<C::Map>,
) -> Result<CofreeEquivalence<C::Map>> {
    let opposing = opposing_drazin_in(base, &p.fwd, &p.bwd)?;
    let cofree = CofreeCategory::new(base.clone());
    let dd = dagger_drazin_in(&cofree, p)?;
    let same = cofree.equal(&dd.inverse, &opposing.as_pair()) && dd.index == opposing.index;
    if !same && base.is_exact() {
        return Err(Error::Inconsistent(format!(
            "cofree dagger-Drazin inverse (index {}) differs from opposing Drazin inverse (index {})",
            dd.index, opposing.index
        )));
    }
    Ok(CofreeEquivalence {
        opposing,
        dagger_drazin: dd.inverse,
        dagger_index: dd.index,
    })
}

pub fn cofree_equivalence<T: Field>(
    p: &OpposingPair<Matrix<T>>,
) -> Result<CofreeEquivalence<Matrix<T>>> {
    cofree_equivalence_in(&MatrixCategory::new(DaggerMode::Transpose), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dagger_inverse::dagger_drazin;
    use crate::drazin::drazin_inverse;
    use crate::scalar::Rational;

    type Q = Matrix<Rational>;
    const T: DaggerMode = DaggerMode::Transpose;

    fn pair(f: Q, g: Q) -> OpposingPair<Q> {
        OpposingPair::new(f, g).unwrap()
    }

    #[test]
    fn shapes_are_checked() {
        assert!(OpposingPair::new(Q::zeros(2, 3), Q::zeros(2, 3)).is_err());
        assert!(OpposingPair::new(Q::zeros(2, 3), Q::zeros(3, 2)).is_ok());
    }

    #[test]
    fn composition_and_dagger() {
        let cat = CofreeCategory::new(MatrixCategory::<Rational>::new(T));
        let p = pair(Q::from_i64(&[&[1, 2]]), Q::from_i64(&[&[3], &[4]]));
        assert_eq!(cat.compose(&p, &cat.identity(2)).unwrap(), p);
        assert_eq!(pair_dagger(&pair_dagger(&p)), p);
        let q = pair(
            Q::from_i64(&[&[1, 0], &[1, 1]]),
            Q::from_i64(&[&[2, 0], &[0, 1]]),
        );
        let pq = pair_compose(&p, &q).unwrap();
        assert_eq!(pq.fwd, Q::from_i64(&[&[3, 2]]));
        assert_eq!(pq.bwd, Q::from_i64(&[&[6], &[4]]));
        assert_eq!(
            pair_dagger(&pq),
            pair_compose(&pair_dagger(&q), &pair_dagger(&p)).unwrap()
        );
    }

    #[test]
    fn endomorphism_with_identity_recovers_drazin() {
        let x = Q::from_i64(&[&[2, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        let r = opposing_drazin(&pair(x.clone(), Q::identity(3))).unwrap();
        let d = drazin_inverse(&x).unwrap();
        assert_eq!(r.f_over_g, d.inverse);
        assert_eq!(r.g_over_f, x.matmul(&d.inverse).unwrap());
        assert_eq!(r.index, d.index);
    }

    #[test]
    fn identity_pair() {
        let r = opposing_drazin(&pair(Q::identity(2), Q::identity(2))).unwrap();
        assert_eq!(r.as_pair(), pair(Q::identity(2), Q::identity(2)));
        assert_eq!(r.index, 0);
        let e = cofree_equivalence(&pair(Q::identity(2), Q::identity(2))).unwrap();
        assert_eq!(e.dagger_index, 0);
    }

    #[test]
    fn dagger_pair_gives_dagger_drazin() {
        let f = Q::from_i64(&[&[1, 2, 0], &[2, 4, 0]]);
        let r = opposing_drazin(&pair(f.clone(), f.transpose())).unwrap();
        let dd = dagger_drazin(&f, T).unwrap();
        assert_eq!(r.f_over_g, dd.inverse);
        assert_eq!(r.g_over_f, dd.inverse.transpose());
        assert_eq!(r.index, dd.index);
        let e = cofree_equivalence(&pair(f.clone(), f.transpose())).unwrap();
        assert_eq!(
            e.dagger_drazin,
            pair(dd.inverse.clone(), dd.inverse.transpose())
        );
    }

    #[test]
    fn nilpotent_pair_with_zero_candidate() {
        let n = Q::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let p = pair(n.clone(), n.clone());
        let zero = pair(Q::zeros(3, 3), Q::zeros(3, 3));
        let r = verify_opposing(&p, &zero, 3).unwrap();
        assert!(r.passed());
        // N² has index 2 here.
        assert_eq!(r.minimal_index, Some(2));
        assert_eq!(
            r.minimal_index,
            Some(drazin_inverse(&n.pow(2).unwrap()).unwrap().index)
        );
    }

    #[test]
    fn mismatch_location_names_component() {
        let cat = CofreeCategory::new(MatrixCategory::<Rational>::new(T));
        let a = pair(Q::identity(2), Q::identity(2));
        let b = pair(Q::identity(2), Q::zeros(2, 2));
        assert_eq!(cat.first_mismatch(&a, &b), Some(vec![1, 0, 0]));
    }
}
