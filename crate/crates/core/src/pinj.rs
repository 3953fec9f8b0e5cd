//! Finite sets and partial injections.
//!
//! A map `n → m` is an injective partial function from `{0..n}` to `{0..m}`;
//! the dagger is the converse. Every partial injection is a partial isometry,
//! so its dagger-Drazin inverse is its converse.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::category::{require_endo, Category, DaggerCategory, DrazinCategory};
use crate::error::{Error, Result};

/// Maps are compared extensionally: two partial injections are equal when
/// they have the same type and the same graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialInjection {
    dom: usize,
    cod: usize,
    graph: BTreeMap<usize, usize>,
}

impl PartialInjection {
    /// Validates that every point lies in range and that the pairs form an
    /// injective partial function.
    pub fn new(
        dom: usize,
        cod: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut graph = BTreeMap::new();
        let mut image = BTreeSet::new();
        for (x, y) in pairs {
            if x >= dom || y >= cod {
                return Err(Error::InvalidPartialInjection(format!(
                    "pair ({x}, {y}) out of range for {dom} → {cod}"
                )));
            }
            if let Some(prev) = graph.insert(x, y) {
                if prev != y {
                    return Err(Error::InvalidPartialInjection(format!(
                        "source {x} mapped to both {prev} and {y}"
                    )));
                }
                continue;
            }
            if !image.insert(y) {
                return Err(Error::InvalidPartialInjection(format!(
                    "target {y} hit twice"
                )));
            }
        }
        Ok(PartialInjection { dom, cod, graph })
    }

    /// The nowhere-defined map.
    pub fn empty(dom: usize, cod: usize) -> Self {
        PartialInjection {
            dom,
            cod,
            graph: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        PartialInjection {
            dom: n,
            cod: n,
            graph: (0..n).map(|x| (x, x)).collect(),
        }
    }

    /// Identity on `points`, undefined elsewhere.
    pub fn partial_identity(n: usize, points: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(n, n, points.into_iter().map(|x| (x, x)))
    }

    /// `0 ↦ 1 ↦ … ↦ n` on `{0..n}`, undefined at `n`.
    pub fn truncated_successor(n: usize) -> Self {
        PartialInjection {
            dom: n + 1,
            cod: n + 1,
            graph: (0..n).map(|x| (x, x + 1)).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.graph.get(&x).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.iter().map(|(&x, &y)| (x, y))
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// Defined everywhere and onto, between sets of equal size.
    pub fn is_bijection(&self) -> bool {
        self.dom == self.cod && self.graph.len() == self.dom
    }

    /// `f°(y) = x` exactly when `f(x) = y`.
    pub fn converse(&self) -> Self {
        PartialInjection {
            dom: self.cod,
            cod: self.dom,
            graph: self.graph.iter().map(|(&x, &y)| (y, x)).collect(),
        }
    }

    /// First `self`, then `g`; defined where both legs are.
    pub fn then(&self, g: &PartialInjection) -> Result<Self> {
        if self.cod != g.dom {
            return Err(Error::DimensionMismatch {
                op: "compose",
                left: (self.dom, self.cod),
                right: (g.dom, g.cod),
            });
        }
        Ok(PartialInjection {
            dom: self.dom,
            cod: g.cod,
            graph: self
                .graph
                .iter()
                .filter_map(|(&x, y)| g.apply(*y).map(|z| (x, z)))
                .collect(),
        })
    }

    /// Least point where the two maps disagree, including one side being
    /// undefined.
    pub fn first_difference(&self, other: &PartialInjection) -> Option<usize> {
        (0..self.dom).find(|&x| self.apply(x) != other.apply(x))
    }
}

impl fmt::Debug for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {} {{", self.dom, self.cod)?;
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}↦{y}")?;
        }
        write!(f, "}}")
    }
}

/// `compose(f, g)`, diagrammatic.
pub fn compose(f: &PartialInjection, g: &PartialInjection) -> Result<PartialInjection> {
    f.then(g)
}

pub fn converse(f: &PartialInjection) -> PartialInjection {
    f.converse()
}

/// The category of finite sets and partial injections.
#[derive(Debug, Clone, Copy, Default)]
pub struct PinjCategory;

impl Category for PinjCategory {
    type Map = PartialInjection;

    fn dom(&self, f: &PartialInjection) -> usize {
        f.dom
    }

    fn cod(&self, f: &PartialInjection) -> usize {
        f.cod
    }

    fn identity(&self, object: usize) -> PartialInjection {
        PartialInjection::identity(object)
    }

    fn compose(&self, f: &PartialInjection, g: &PartialInjection) -> Result<PartialInjection> {
        f.then(g)
    }

    fn first_mismatch(&self, a: &PartialInjection, b: &PartialInjection) -> Option<Vec<usize>> {
        if (a.dom, a.cod) != (b.dom, b.cod) {
            return Some(Vec::new());
        }
        a.first_difference(b).map(|x| vec![x])
    }
}

impl DaggerCategory for PinjCategory {
    fn dagger(&self, f: &PartialInjection) -> PartialInjection {
        f.converse()
    }
}

impl DrazinCategory for PinjCategory {
    fn drazin(&self, x: &PartialInjection) -> Result<(PartialInjection, usize)> {
        drazin_endo_pinj(x)
    }
}

/// `(f°, ind^∂(f))`: index 0 for a bijection, 1 otherwise.
pub fn dagger_drazin_pinj(f: &PartialInjection) -> (PartialInjection, usize) {
    (f.converse(), usize::from(!f.is_bijection()))
}

/// The Drazin inverse of an endomorphism.
///
/// Points split into cycles and chains that run off the domain of
/// definition. The inverse undoes `f` on the cycles and is undefined on the
/// chains. The index is the number of points on the longest chain, so `0`
/// for a permutation.
pub fn drazin_endo_pinj(f: &PartialInjection) -> Result<(PartialInjection, usize)> {
    require_endo(&PinjCategory, f, "drazin_endo_pinj")?;
    let n = f.dom;
    let mut on_cycle = vec![false; n];
    let mut index = 0;
    for (start, on) in on_cycle.iter_mut().enumerate() {
        let mut x = start;
        let mut steps = 1;
        let cyclic = loop {
            match f.apply(x) {
                Some(y) if y == start => break true,
                Some(y) => {
                    x = y;
                    steps += 1;
                }
                None => break false,
            }
        };
        if cyclic {
            *on = true;
        } else {
            index = index.max(steps);
        }
    }
    let graph = f
        .pairs()
        .filter(|&(x, _)| on_cycle[x])
        .map(|(x, y)| (y, x))
        .collect();
    Ok((
        PartialInjection {
            dom: n,
            cod: n,
            graph,
        },
        index,
    ))
}
