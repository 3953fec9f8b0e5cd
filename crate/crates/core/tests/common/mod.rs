//! Seeded random instances and independent oracles shared by the
//! integration suites.

#![allow(dead_code)]

use gidkit::{Field, GaussianRational, Matrix, PartialInjection, Rational, C64};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = Matrix<Rational>;
pub type Qi = Matrix<GaussianRational>;

/// Scalars the generator knows how to draw.
pub trait Sample: Field {
    fn sample(g: &mut Gen) -> Self;
    /// A small nonzero scalar for elementary row operations.
    fn sample_nonzero(g: &mut Gen) -> Self {
        loop {
            let x = Self::sample(g);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl Sample for Rational {
    fn sample(g: &mut Gen) -> Self {
        let p = g.rng.gen_range(-3i64..=3);
        let q = *[1i64, 1, 1, 2, 3].choose(&mut g.rng).unwrap();
        Rational::new(p.into(), q.into())
    }
}

/// Half the time parts are drawn from {-1, 0, 1}, which makes isotropic
/// vectors such as `[i 1]` common.
impl Sample for GaussianRational {
    fn sample(g: &mut Gen) -> Self {
        if g.rng.gen_bool(0.5) {
            GaussianRational::from_ints(g.rng.gen_range(-1..=1), g.rng.gen_range(-1..=1))
        } else {
            GaussianRational::new(Rational::sample(g), Rational::sample(g))
        }
    }
}

impl Sample for C64 {
    fn sample(g: &mut Gen) -> Self {
        C64::new(g.rng.gen_range(-1.0..1.0), g.rng.gen_range(-1.0..1.0))
    }
}

pub struct Gen {
    pub rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn size(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn dense<T: Sample>(&mut self, rows: usize, cols: usize) -> Matrix<T> {
        Matrix::from_fn(rows, cols, |_, _| T::sample(self))
    }

    pub fn sparse<T: Sample>(&mut self, rows: usize, cols: usize) -> Matrix<T> {
        Matrix::from_fn(rows, cols, |_, _| {
            if self.rng.gen_bool(0.6) {
                T::zero()
            } else {
                T::sample(self)
            }
        })
    }

    /// `X·Y` with inner dimension at most `min(rows, cols)`.
    pub fn low_rank<T: Sample>(&mut self, rows: usize, cols: usize) -> Matrix<T> {
        let k = self.rng.gen_range(0..=rows.min(cols));
        let x = self.dense(rows, k);
        let y = self.dense(k, cols);
        x.matmul(&y).unwrap()
    }

    /// Strictly upper triangular, usually with a long superdiagonal chain.
    pub fn nilpotent<T: Sample>(&mut self, n: usize) -> Matrix<T> {
        let chain = self.rng.gen_bool(0.7);
        Matrix::from_fn(n, n, |i, j| {
            if j == i + 1 && chain {
                T::one()
            } else if j > i && self.rng.gen_bool(0.3) {
                T::sample(self)
            } else {
                T::zero()
            }
        })
    }

    /// A product of elementary matrices together with its inverse, the
    /// latter assembled from the inverse factors in reverse order.
    pub fn elementary_pair<T: Sample>(&mut self, n: usize) -> (Matrix<T>, Matrix<T>) {
        let mut p = Matrix::identity(n);
        let mut p_inv = Matrix::identity(n);
        if n < 2 {
            let c = T::sample_nonzero(self);
            let c_inv = c.inv().unwrap();
            return (p.scale(&c), p_inv.scale(&c_inv));
        }
        for _ in 0..2 * n {
            let i = self.rng.gen_range(0..n);
            let mut j = self.rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let a = T::sample_nonzero(self);
            let mut e = Matrix::identity(n);
            let mut e_inv = Matrix::identity(n);
            e.set(i, j, a.clone());
            e_inv.set(i, j, a.neg());
            p = p.matmul(&e).unwrap();
            p_inv = e_inv.matmul(&p_inv).unwrap();
        }
        (p, p_inv)
    }

    /// `P·(C ⊕ N)·P⁻¹` with `C` random and `N` nilpotent, so the Drazin
    /// index is usually the nilpotency degree of `N`.
    pub fn core_nilpotent<T: Sample>(&mut self, n: usize) -> Matrix<T> {
        let c_size = self.rng.gen_range(0..=n);
        let c: Matrix<T> = self.dense(c_size, c_size);
        let nil: Matrix<T> = self.nilpotent(n - c_size);
        let block = Matrix::from_fn(n, n, |i, j| {
            if i < c_size && j < c_size {
                c.get(i, j).clone()
            } else if i >= c_size && j >= c_size {
                nil.get(i - c_size, j - c_size).clone()
            } else {
                T::zero()
            }
        });
        let (p, p_inv) = self.elementary_pair(n);
        Matrix::product(&[&p, &block, &p_inv]).unwrap()
    }

    /// Any matrix of the given shape, drawn from a mix of strategies.
    pub fn matrix<T: Sample>(&mut self, rows: usize, cols: usize) -> Matrix<T> {
        let choices = if rows == cols { 4 } else { 3 };
        match self.rng.gen_range(0..choices) {
            0 => self.sparse(rows, cols),
            1 => self.dense(rows, cols),
            2 => self.low_rank(rows, cols),
            _ => self.core_nilpotent(rows),
        }
    }

    pub fn square<T: Sample>(&mut self, max: usize) -> Matrix<T> {
        let n = self.size(1, max);
        self.matrix(n, n)
    }

    pub fn rectangular<T: Sample>(&mut self, max: usize) -> Matrix<T> {
        let r = self.size(1, max);
        let c = self.size(1, max);
        self.matrix(r, c)
    }

    /// A random partial injection `dom → cod`.
    pub fn partial_injection(&mut self, dom: usize, cod: usize) -> PartialInjection {
        let mut targets: Vec<usize> = (0..cod).collect();
        targets.shuffle(&mut self.rng);
        let mut sources: Vec<usize> = (0..dom).collect();
        sources.shuffle(&mut self.rng);
        let defined = self.rng.gen_range(0..=dom.min(cod));
        PartialInjection::new(dom, cod, sources.into_iter().zip(targets).take(defined)).unwrap()
    }

    /// A nonzero matrix of the same shape.
    pub fn perturbation<T: Sample>(&mut self, rows: usize, cols: usize) -> Matrix<T> {
        let mut e = Matrix::zeros(rows, cols);
        let i = self.rng.gen_range(0..rows);
        let j = self.rng.gen_range(0..cols);
        e.set(i, j, T::sample_nonzero(self));
        if self.rng.gen_bool(0.5) {
            e = e.add(&self.sparse(rows, cols)).unwrap();
        }
        if e.is_zero() {
            e.set(i, j, T::one());
        }
        e
    }
}

/// Least `k` such that `A^{k+1}·X = A^k` is solvable, i.e. the column space
/// of `A^k` is reached again by `A^{k+1}`.
pub fn solve_index<T: Field>(a: &Matrix<T>) -> usize {
    let mut ak = Matrix::identity(a.rows());
    for k in 0..=a.rows() {
        let next = ak.matmul(a).unwrap();
        if next.solve(&ak).unwrap().is_some() {
            return k;
        }
        ak = next;
    }
    panic!("power chain did not stabilise");
}

/// `A^D = A^k·S` where `S` is any solution of `A^{2k+1}·S = A^k`.
pub fn shift_drazin<T: Field>(a: &Matrix<T>) -> Matrix<T> {
    let k = solve_index(a);
    let ak = a.pow(k).unwrap();
    let s = a
        .pow(2 * k + 1)
        .unwrap()
        .solve(&ak)
        .unwrap()
        .expect("A^{2k+1} S = A^k is solvable at the index");
    ak.matmul(&s).unwrap()
}

/// The mirror image: `A^D = T·A^k` where `T·A^{2k+1} = A^k`, solved through
/// transposes.
pub fn left_shift_drazin<T: Field>(a: &Matrix<T>) -> Matrix<T> {
    let k = solve_index(a);
    let ak = a.pow(k).unwrap();
    let t = a
        .pow(2 * k + 1)
        .unwrap()
        .transpose()
        .solve(&ak.transpose())
        .unwrap()
        .expect("T A^{2k+1} = A^k is solvable at the index")
        .transpose();
    t.matmul(&ak).unwrap()
}

/// Lifts a Gaussian-rational matrix into doubles.
pub fn to_c64(m: &Qi) -> Matrix<C64> {
    use num::ToPrimitive;
    m.map(|z| C64::new(z.re.to_f64().unwrap(), z.im.to_f64().unwrap()))
}
