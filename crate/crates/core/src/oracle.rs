//! The scalarization oracle contract consumed by every enumerator.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::rational::{self, Rational};

/// A nonnegative 2-D weight, not both components zero. Weights are used
/// unnormalized; weighted-sum optima do not change under positive scaling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight([Rational; 2]);

impl Weight {
    pub fn new(w1: Rational, w2: Rational) -> Result<Self> {
        let zero = rational::zero();
        if w1 < zero || w2 < zero || (w1 == zero && w2 == zero) {
            return Err(Error::usage("weight must be nonnegative and nonzero"));
        }
        Ok(Weight([w1, w2]))
    }

    pub fn ints(w1: i64, w2: i64) -> Result<Self> {
        Weight::new(rational::int(w1), rational::int(w2))
    }

    /// `(1, 0)`: minimizes the first objective.
    pub fn first() -> Self {
        Weight([rational::one(), rational::zero()])
    }

    /// `(0, 1)`: minimizes the second objective.
    pub fn second() -> Self {
        Weight([rational::zero(), rational::one()])
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    /// `wᵀc` for a 2-D vector.
    pub fn apply(&self, c: &[Rational]) -> Rational {
        &self.0[0] * &c[0] + &self.0[1] * &c[1]
    }

    /// Key for the lexicographic weighted sum: `(wᵀc, c₁, c₂)`.
    pub fn lex_key(&self, c: &[Rational]) -> [Rational; 3] {
        [self.apply(c), c[0].clone(), c[1].clone()]
    }
}

/// Bound on the first objective in the ε-constraint problem
/// `min c₂x s.t. c₁x ⋚ ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EpsBound {
    /// No bound (`ε = +∞`).
    Unbounded,
    /// `c₁x ≤ ε`.
    AtMost(Rational),
    /// `c₁x < ε`.
    Below(Rational),
}

impl EpsBound {
    pub fn admits(&self, value: &Rational) -> bool {
        match self {
            EpsBound::Unbounded => true,
            EpsBound::AtMost(e) => value <= e,
            EpsBound::Below(e) => value < e,
        }
    }
}

/// A feasible solution: a 0/1 vector for combinatorial problems or a rational
/// coordinate vector for LPs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Solution {
    Bits(Vec<bool>),
    Coords(Vec<Rational>),
}

impl Solution {
    pub fn len(&self) -> usize {
        match self {
            Solution::Bits(b) => b.len(),
            Solution::Coords(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// An optimal solution together with its image point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub solution: Solution,
    pub point: Point,
}

/// Scalarizations of a biobjective problem over an implicit solution set.
///
/// Implementations must be deterministic. `lex_weighted_sum(w)` has to return
/// an optimum of `weighted_sum(w)` that is lexicographically minimal in
/// `(wᵀy, y₁, y₂)`; such points are always extreme.
pub trait ScalarizationOracle {
    /// A point minimizing `wᵀy` over the image set.
    fn weighted_sum(&self, w: &Weight) -> Result<Optimum>;

    /// A lexicographic minimizer of `(wᵀy, y₁, y₂)`.
    fn lex_weighted_sum(&self, w: &Weight) -> Result<Optimum>;

    /// Minimizes `y₂` subject to the bound on `y₁`, breaking ties by `y₁`.
    fn eps_constraint(&self, _bound: &EpsBound) -> Result<Optimum> {
        Err(Error::Unsupported("eps_constraint"))
    }
}

impl<O: ScalarizationOracle + ?Sized> ScalarizationOracle for &O {
    fn weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        (**self).weighted_sum(w)
    }

    fn lex_weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        (**self).lex_weighted_sum(w)
    }

    fn eps_constraint(&self, bound: &EpsBound) -> Result<Optimum> {
        (**self).eps_constraint(bound)
    }
}

/// Wraps an oracle and counts calls of each kind.
#[derive(Debug, Clone)]
pub struct CountingOracle<O> {
    inner: O,
    calls: crate::log::CallCounts,
}

impl<O: ScalarizationOracle> CountingOracle<O> {
    pub fn new(inner: O) -> Self {
        CountingOracle {
            inner,
            calls: crate::log::CallCounts::default(),
        }
    }

    pub fn calls(&self) -> crate::log::CallCounts {
        self.calls
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    pub fn ws(&mut self, w: &Weight) -> Result<Optimum> {
        self.calls.ws += 1;
        self.inner.weighted_sum(w)
    }

    pub fn lex(&mut self, w: &Weight) -> Result<Optimum> {
        self.calls.lex += 1;
        self.inner.lex_weighted_sum(w)
    }

    pub fn eps(&mut self, bound: &EpsBound) -> Result<Optimum> {
        self.calls.eps += 1;
        self.inner.eps_constraint(bound)
    }
}
