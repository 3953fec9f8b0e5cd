//! Fraction-free (Bareiss) elimination for exact rank.
//!
//! Rows are scaled to clear denominators, giving a matrix over ℤ or ℤ[i];
//! elimination then divides only by the previous pivot, and every such
//! division is exact.

use num::{BigInt, Integer, One, Zero};

use super::Matrix;
use crate::scalar::{GaussianRational, Rational};

pub(crate) trait IntegralDomain: Clone {
    fn is_zero(&self) -> bool;
    fn zero() -> Self;
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// `self / divisor`, which the caller guarantees is exact.
    fn div_exact(&self, divisor: &Self) -> Self;
}

impl IntegralDomain for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(Zero::is_zero(&r), "inexact Bareiss division");
        q
    }
}

/// A Gaussian integer `re + im·i`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct GaussianInteger {
    re: BigInt,
    im: BigInt,
}

impl IntegralDomain for GaussianInteger {
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn zero() -> Self {
        GaussianInteger {
            re: Zero::zero(),
            im: Zero::zero(),
        }
    }
    fn one() -> Self {
        GaussianInteger {
            re: One::one(),
            im: Zero::zero(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        GaussianInteger {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        GaussianInteger {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        // (a+bi)/(c+di) = ((ac+bd) + (bc-ad)i) / (c²+d²)
        let norm = &divisor.re * &divisor.re + &divisor.im * &divisor.im;
        let re = &self.re * &divisor.re + &self.im * &divisor.im;
        let im = &self.im * &divisor.re - &self.re * &divisor.im;
        GaussianInteger {
            re: re.div_exact(&norm),
            im: im.div_exact(&norm),
        }
    }
}

/// Rank of a row-major `rows × cols` matrix over an integral domain.
pub(crate) fn fraction_free_rank<R: IntegralDomain>(
    rows: usize,
    cols: usize,
    mut a: Vec<R>,
) -> usize {
    let at = |i: usize, j: usize| i * cols + j;
    let mut prev = R::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[at(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(at(p, j), at(r, j));
            }
        }
        let pivot = a[at(r, c)].clone();
        for i in r + 1..rows {
            let lead = a[at(i, c)].clone();
            for j in c + 1..cols {
                let v = pivot.mul(&a[at(i, j)]).sub(&lead.mul(&a[at(r, j)]));
                a[at(i, j)] = v.div_exact(&prev);
            }
            a[at(i, c)] = R::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

fn lcm_of<'a>(denoms: impl Iterator<Item = &'a BigInt>) -> BigInt {
    denoms.fold(<BigInt as One>::one(), |acc, d| acc.lcm(d))
}

fn scaled_numer(x: &Rational, scale: &BigInt) -> BigInt {
    x.numer() * (scale / x.denom())
}

pub(crate) fn rank_rational(m: &Matrix<Rational>) -> usize {
    let (rows, cols) = m.shape();
    let mut data = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let row = m.row(i);
        let scale = lcm_of(row.iter().map(|x| x.denom()));
        data.extend(row.iter().map(|x| scaled_numer(x, &scale)));
    }
    fraction_free_rank(rows, cols, data)
}

pub(crate) fn rank_gaussian(m: &Matrix<GaussianRational>) -> usize {
    let (rows, cols) = m.shape();
    let mut data = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let row = m.row(i);
        let scale = lcm_of(row.iter().flat_map(|z| [z.re.denom(), z.im.denom()]));
        data.extend(row.iter().map(|z| GaussianInteger {
            re: scaled_numer(&z.re, &scale),
            im: scaled_numer(&z.im, &scale),
        }));
    }
    fraction_free_rank(rows, cols, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use proptest::prelude::*;

    fn gi(re: i64, im: i64) -> GaussianInteger {
        GaussianInteger {
            re: re.into(),
            im: im.into(),
        }
    }

    #[test]
    fn gaussian_exact_division() {
        // (1+2i)(3-i) = 5+5i
        assert_eq!(gi(5, 5).div_exact(&gi(3, -1)), gi(1, 2));
    }

    #[test]
    fn isotropic_row_has_full_rank() {
        // [i 1] is a nonzero row even though i·i + 1·1 = 0.
        let m =
            Matrix::from_rows(vec![vec![GaussianRational::i(), GaussianRational::one()]]).unwrap();
        assert_eq!(rank_gaussian(&m), 1);
    }

    #[test]
    fn denominators_are_cleared_per_row() {
        let q = |p: i64, d: i64| Rational::new(p.into(), d.into());
        let m = Matrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(3, 1), q(2, 1)]]).unwrap();
        assert_eq!(rank_rational(&m), 1);
    }

    proptest! {
        // Independent route: Gauss-Jordan over the field counts pivots.
        #[test]
        fn agrees_with_gauss_jordan_over_q(
            (rows, cols, v) in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                (Just(r), Just(c), proptest::collection::vec(-2i64..=2, r * c))
            })
        ) {
            let m = Matrix::new(rows, cols, v.into_iter().map(Rational::from_i64).collect()).unwrap();
            prop_assert_eq!(rank_rational(&m), m.rref().pivots.len());
        }

        #[test]
        fn agrees_with_gauss_jordan_over_qi(
            (rows, cols, v) in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                (Just(r), Just(c), proptest::collection::vec((-1i64..=1, -1i64..=1), r * c))
            })
        ) {
            let m = Matrix::new(
                rows,
                cols,
                v.into_iter().map(|(a, b)| GaussianRational::from_ints(a, b)).collect(),
            ).unwrap();
            prop_assert_eq!(rank_gaussian(&m), m.rref().pivots.len());
        }
    }
}
