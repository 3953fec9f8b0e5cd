//! Small categories with natural-number objects, optionally carrying a
//! dagger and Drazin inverses of endomorphisms.
//!
//! The axiom checks in [`crate::verifier`] are written once against these
//! traits and run unchanged over matrices, opposing pairs and partial
//! injections.

use std::fmt;
use std::marker::PhantomData;

use crate::drazin;
use crate::error::{Error, Result};
use crate::matrix::{DaggerMode, Matrix, FLOAT_EQ_TOL};
use crate::scalar::Field;

pub trait Category {
    type Map: Clone + fmt::Debug;

    fn dom(&self, f: &Self::Map) -> usize;
    fn cod(&self, f: &Self::Map) -> usize;
    fn identity(&self, object: usize) -> Self::Map;

    /// The diagrammatic composite `fg`: first `f`, then `g`.
    fn compose(&self, f: &Self::Map, g: &Self::Map) -> Result<Self::Map>;

    /// Location of the first difference between two parallel maps, `None`
    /// when equal. An empty location means the types differ.
    fn first_mismatch(&self, a: &Self::Map, b: &Self::Map) -> Option<Vec<usize>>;

    /// Comparison tolerance, `None` when equality is exact.
    fn tolerance(&self) -> Option<f64> {
        None
    }

    /// Whether equality is exact. Approximate categories downgrade internal
    /// consistency failures to warnings.
    fn is_exact(&self) -> bool {
        self.tolerance().is_none()
    }

    fn equal(&self, a: &Self::Map, b: &Self::Map) -> bool {
        self.first_mismatch(a, b).is_none()
    }

    fn is_endo(&self, f: &Self::Map) -> bool {
        self.dom(f) == self.cod(f)
    }

    fn compose_all(&self, maps: &[&Self::Map]) -> Result<Self::Map> {
        let (first, rest) = maps.split_first().expect("empty composite");
        rest.iter()
            .try_fold((*first).clone(), |acc, m| self.compose(&acc, m))
    }

    /// `x^k` for an endomorphism, `x^0` being the identity.
    fn power(&self, x: &Self::Map, k: usize) -> Result<Self::Map> {
        let mut acc = self.identity(self.dom(x));
        for _ in 0..k {
            acc = self.compose(&acc, x)?;
        }
        Ok(acc)
    }
}

pub trait DaggerCategory: Category {
    fn dagger(&self, f: &Self::Map) -> Self::Map;
}

/// A category in which the Drazin inverse of an endomorphism can be
/// computed (not merely checked).
pub trait DrazinCategory: Category {
    /// `(x^D, ind^D(x))` for an endomorphism `x`.
    fn drazin(&self, x: &Self::Map) -> Result<(Self::Map, usize)>;
}

/// `MAT(𝕂)`: objects are natural numbers, a map `n → m` is an `n × m`
/// matrix, and the dagger is fixed by `mode`.
pub struct MatrixCategory<T> {
    pub mode: DaggerMode,
    field: PhantomData<T>,
}

impl<T> MatrixCategory<T> {
    pub fn new(mode: DaggerMode) -> Self {
        MatrixCategory {
            mode,
            field: PhantomData,
        }
    }
}

impl<T> Clone for MatrixCategory<T> {
    fn clone(&self) -> Self {
        MatrixCategory::new(self.mode)
    }
}

impl<T: Field> Category for MatrixCategory<T> {
    type Map = Matrix<T>;

    fn dom(&self, f: &Matrix<T>) -> usize {
        f.rows()
    }

    fn cod(&self, f: &Matrix<T>) -> usize {
        f.cols()
    }

    fn identity(&self, object: usize) -> Matrix<T> {
        Matrix::identity(object)
    }

    fn compose(&self, f: &Matrix<T>, g: &Matrix<T>) -> Result<Matrix<T>> {
        f.matmul(g)
    }

    fn first_mismatch(&self, a: &Matrix<T>, b: &Matrix<T>) -> Option<Vec<usize>> {
        a.first_mismatch(b)
    }

    fn tolerance(&self) -> Option<f64> {
        (!T::EXACT).then_some(FLOAT_EQ_TOL)
    }

    fn power(&self, x: &Matrix<T>, k: usize) -> Result<Matrix<T>> {
        x.pow(k)
    }
}

impl<T: Field> DaggerCategory for MatrixCategory<T> {
    fn dagger(&self, f: &Matrix<T>) -> Matrix<T> {
        f.dagger(self.mode)
    }
}

impl<T: Field> DrazinCategory for MatrixCategory<T> {
    fn drazin(&self, x: &Matrix<T>) -> Result<(Matrix<T>, usize)> {
        let r = drazin::drazin_inverse(x)?;
        Ok((r.inverse, r.index))
    }
}

/// Rejects anything but an endomorphism.
pub(crate) fn require_endo<C: Category>(cat: &C, x: &C::Map, op: &'static str) -> Result<()> {
    if cat.is_endo(x) {
        Ok(())
    } else {
        Err(Error::NotSquare {
            op,
            rows: cat.dom(x),
            cols: cat.cod(x),
        })
    }
}

/// Requires `cand` to be parallel to `expected_dom → expected_cod`.
pub(crate) fn require_type<C: Category>(
    cat: &C,
    cand: &C::Map,
    expected: (usize, usize),
    op: &'static str,
) -> Result<()> {
    let found = (cat.dom(cand), cat.cod(cand));
    if found == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op,
            left: expected,
            right: found,
        })
    }
}
