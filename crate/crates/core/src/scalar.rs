//! Involutive fields: exact rationals, exact Gaussian rationals, and
//! complex doubles.
//!
//! Matrix code is generic over [`Field`]. The dynamically tagged [`Scalar`]
//! exists for input handling, where the field is only known at run time.

use std::fmt;

use num::{BigInt, BigRational, Complex, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{bareiss, Matrix};

pub type Rational = BigRational;
pub type C64 = Complex<f64>;

/// Which field a scalar (or a matrix) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    /// Exact rationals.
    Q,
    /// Exact Gaussian rationals `a + b·i`.
    Qi,
    /// Complex doubles, compared with an explicit tolerance.
    C64,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Q => "Q",
            FieldKind::Qi => "Qi",
            FieldKind::C64 => "C64",
        })
    }
}

impl std::str::FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(FieldKind::Q),
            "Qi" => Ok(FieldKind::Qi),
            "C64" => Ok(FieldKind::C64),
            other => Err(Error::Parse(format!("unknown field `{other}`"))),
        }
    }
}

/// The field involution a dagger applies entrywise under the transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    Identity,
    /// `a + b·i ↦ a − b·i`. Fixes every real scalar.
    Conjugation,
}

/// An involutive field whose elements can populate a [`Matrix`].
///
/// Exact fields keep canonical representatives, so `==` is mathematical
/// equality. For [`C64`] equality is only meaningful up to a tolerance, which
/// lives in comparison contexts, not here.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: FieldKind;
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Complex conjugation; the identity on real fields.
    fn conj(&self) -> Self;

    /// Absolute value as a double. Drives pivoting and tolerances in
    /// floating-point mode.
    fn magnitude(&self) -> f64;

    /// Rank of a matrix over this field.
    fn rank(m: &Matrix<Self>) -> usize;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|r| self.mul(&r))
    }

    fn involve(&self, involution: Involution) -> Self {
        match involution {
            Involution::Identity => self.clone(),
            Involution::Conjugation => self.conj(),
        }
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Q;
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn rank(m: &Matrix<Self>) -> usize {
        bareiss::rank_rational(m)
    }
}

/// An exact Gaussian rational `re + im·i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    /// `re + im·i` from integer parts.
    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(Rational::from_i64(re), Rational::from_i64(im))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational::new(re, Zero::zero())
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            return write!(f, "{}", self.re);
        }
        if Zero::is_zero(&self.re) {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Field for GaussianRational {
    const KIND: FieldKind = FieldKind::Qi;
    const EXACT: bool = true;

    fn zero() -> Self {
        GaussianRational::from_ints(0, 0)
    }
    fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }
    fn from_i64(n: i64) -> Self {
        GaussianRational::from_ints(n, 0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, other: &Self) -> Self {
        GaussianRational::new(&self.re + &other.re, &self.im + &other.im)
    }
    fn sub(&self, other: &Self) -> Self {
        GaussianRational::new(&self.re - &other.re, &self.im - &other.im)
    }
    fn mul(&self, other: &Self) -> Self {
        GaussianRational::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }
    fn neg(&self) -> Self {
        GaussianRational::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }
    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }
    fn magnitude(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::INFINITY);
        let im = self.im.to_f64().unwrap_or(f64::INFINITY);
        re.hypot(im)
    }
    fn rank(m: &Matrix<Self>) -> usize {
        bareiss::rank_gaussian(m)
    }
}

impl Field for C64 {
    const KIND: FieldKind = FieldKind::C64;
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Field::is_zero(self)).then(|| Complex::new(1.0, 0.0) / self)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn rank(m: &Matrix<Self>) -> usize {
        m.rref().pivots.len()
    }
}

/// A scalar whose field is known only at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Q(Rational),
    Qi(GaussianRational),
    C64(C64),
}

macro_rules! dispatch_binary {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (Scalar::Q($x), Scalar::Q($y)) => Ok(Scalar::Q($body)),
            (Scalar::Qi($x), Scalar::Qi($y)) => Ok(Scalar::Qi($body)),
            (Scalar::C64($x), Scalar::C64($y)) => Ok(Scalar::C64($body)),
            (l, r) => Err(Error::KindMismatch {
                left: l.kind(),
                right: r.kind(),
            }),
        }
    };
}

macro_rules! dispatch_unary {
    ($a:expr, |$x:ident| $body:expr) => {
        match $a {
            Scalar::Q($x) => Scalar::Q($body),
            Scalar::Qi($x) => Scalar::Qi($body),
            Scalar::C64($x) => Scalar::C64($body),
        }
    };
}

impl Scalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Q(_) => FieldKind::Q,
            Scalar::Qi(_) => FieldKind::Qi,
            Scalar::C64(_) => FieldKind::C64,
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        dispatch_binary!(self, other, |a, b| Field::add(a, b))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        dispatch_binary!(self, other, |a, b| Field::sub(a, b))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        dispatch_binary!(self, other, |a, b| Field::mul(a, b))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if self.kind() == other.kind() && other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        dispatch_binary!(self, other, |a, b| Field::div(a, b)
            .expect("nonzero divisor"))
    }

    pub fn neg(&self) -> Scalar {
        dispatch_unary!(self, |a| Field::neg(a))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(dispatch_unary!(self, |a| Field::inv(a).expect("nonzero")))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(a) => Field::is_zero(a),
            Scalar::Qi(a) => Field::is_zero(a),
            Scalar::C64(a) => Field::is_zero(a),
        }
    }

    /// Applies `involution`. Conjugating a plain rational is the identity.
    pub fn conjugate(&self, involution: Involution) -> Scalar {
        dispatch_unary!(self, |a| a.involve(involution))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(a) => write!(f, "{a}"),
            Scalar::Qi(a) => write!(f, "{a}"),
            Scalar::C64(a) => write!(f, "{a}"),
        }
    }
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("`{s}` is not a rational")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (parse_int(p)?, parse_int(q)?);
            if Zero::is_zero(&q) {
                return Err(Error::Parse(format!("`{s}` has a zero denominator")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn rational_sum_is_canonical() {
        let sum = Scalar::Q(q("1/2")).add(&Scalar::Q(q("1/3"))).unwrap();
        assert_eq!(sum, Scalar::Q(q("5/6")));
        // gcd-reduced with a positive denominator
        assert_eq!(q("2/-4"), q("-1/2"));
        assert_eq!(q("-3/6").denom(), &BigInt::from(2));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Scalar::Qi(GaussianRational::i());
        assert_eq!(
            i.mul(&i).unwrap(),
            Scalar::Qi(GaussianRational::from_ints(-1, 0))
        );
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(Scalar::Q(q("0")).inv(), Err(Error::DivisionByZero));
        assert_eq!(
            Scalar::Qi(GaussianRational::zero()).inv(),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            Scalar::Q(q("1")).div(&Scalar::Q(q("0"))),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn mixed_kinds_are_rejected() {
        let err = Scalar::Q(q("1")).add(&Scalar::Qi(GaussianRational::i()));
        assert_eq!(
            err,
            Err(Error::KindMismatch {
                left: FieldKind::Q,
                right: FieldKind::Qi
            })
        );
    }

    #[test]
    fn conjugation() {
        let z = Scalar::Qi(GaussianRational::from_ints(3, 2));
        assert_eq!(
            z.conjugate(Involution::Conjugation),
            Scalar::Qi(GaussianRational::from_ints(3, -2))
        );
        assert_eq!(z.conjugate(Involution::Identity), z);
        let real = Scalar::Q(q("5/7"));
        assert_eq!(real.conjugate(Involution::Conjugation), real);
    }

    #[test]
    fn gaussian_inverse() {
        let z = GaussianRational::from_ints(1, 2);
        assert_eq!(z.mul(&z.inv().unwrap()), GaussianRational::one());
        assert_eq!(
            GaussianRational::i().inv().unwrap(),
            GaussianRational::from_ints(0, -1)
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(q(" 7 "), Rational::from_i64(7));
    }

    mod laws {
        use super::*;
        use proptest::prelude::*;

        fn gauss() -> impl Strategy<Value = GaussianRational> {
            (-20i64..20, 1i64..7, -20i64..20, 1i64..7).prop_map(|(a, b, c, d)| {
                GaussianRational::new(
                    BigRational::new(a.into(), b.into()),
                    BigRational::new(c.into(), d.into()),
                )
            })
        }

        proptest! {
            #[test]
            fn conjugation_is_an_involutive_field_automorphism(a in gauss(), b in gauss()) {
                prop_assert_eq!(a.conj().conj(), a.clone());
                prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
                prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
                prop_assert_eq!(GaussianRational::one().conj(), GaussianRational::one());
            }

            #[test]
            fn division_roundtrips_exactly(a in gauss(), b in gauss()) {
                prop_assume!(!b.is_zero());
                prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
            }
        }
    }
}
