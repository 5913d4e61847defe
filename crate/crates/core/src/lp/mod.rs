//! Exact rational linear programming.
//!
//! Instances are always stated as `Ax ≥ b` over free variables; equalities
//! are encoded as pairs of opposite inequalities. [`simplex`] solves single
//! objectives with Bland's rule, [`lex`] stacks them into lexicographic LPs,
//! [`dual`] builds the facet-finding program `D₂(y)`, and [`walk`] enumerates
//! the nondominated extreme points of a biobjective LP.

pub mod dual;
pub mod lex;
pub mod simplex;
pub mod walk;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::rational::{self, Rational};

pub use dual::{build_d2, facet_from_point, lexmax_lambda, DualPair};
pub use lex::lex_lp_solve;
pub use simplex::{simplex_solve, simplex_solve_with_stats, SimplexStats};
pub use walk::{bilp_extreme_points, BilpWalk};

/// `min Cx s.t. Ax ≥ b` with `A` of shape `m × n` and `C` of shape `d × n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpInstance {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    c: Vec<Vec<Rational>>,
    n: usize,
}

impl LpInstance {
    pub fn new(
        n: usize,
        a: Vec<Vec<Rational>>,
        b: Vec<Rational>,
        c: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        for row in a.iter().chain(&c) {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        Ok(LpInstance { a, b, c, n })
    }

    /// Integer convenience constructor; each constraint is `(row, rhs)`.
    pub fn from_ints(c: &[&[i64]], constraints: &[(&[i64], i64)]) -> Result<Self> {
        let n = c
            .first()
            .map(|r| r.len())
            .or_else(|| constraints.first().map(|(r, _)| r.len()))
            .unwrap_or(0);
        let ints = |r: &[i64]| r.iter().map(|&v| rational::int(v)).collect::<Vec<_>>();
        LpInstance::new(
            n,
            constraints.iter().map(|(r, _)| ints(r)).collect(),
            constraints.iter().map(|&(_, v)| rational::int(v)).collect(),
            c.iter().map(|r| ints(r)).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn d(&self) -> usize {
        self.c.len()
    }

    pub fn a(&self) -> &[Vec<Rational>] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn c(&self) -> &[Vec<Rational>] {
        &self.c
    }

    pub fn objective(&self, k: usize) -> &[Rational] {
        &self.c[k]
    }

    /// Appends `row·x ≥ rhs`.
    pub fn push_ge(&mut self, row: Vec<Rational>, rhs: Rational) -> Result<()> {
        if row.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: row.len(),
            });
        }
        self.a.push(row);
        self.b.push(rhs);
        Ok(())
    }

    /// Appends `row·x = rhs` as two inequalities.
    pub fn push_eq(&mut self, row: Vec<Rational>, rhs: Rational) -> Result<()> {
        let neg = row.iter().map(|v| -v).collect();
        self.push_ge(row, rhs.clone())?;
        self.push_ge(neg, -rhs)
    }

    /// `Cx`.
    pub fn image(&self, x: &[Rational]) -> Point {
        Point::new(self.c.iter().map(|row| dot(row, x)).collect())
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        self.a.iter().zip(&self.b).all(|(row, rhs)| dot(row, x) >= *rhs)
    }

    /// `Σ wₖ cₖ`, the scalarized objective row.
    pub fn weighted_row(&self, w: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|j| {
                self.c
                    .iter()
                    .zip(w)
                    .fold(rational::zero(), |acc, (row, wk)| acc + wk * &row[j])
            })
            .collect()
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Result of an LP solve; `V` is the objective value (a vector for
/// lexicographic solves).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<V = Rational> {
    Optimal { x: Vec<Rational>, value: V },
    Infeasible,
    Unbounded,
}

impl<V> LpOutcome<V> {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    /// The optimal point and value, or the matching error.
    pub fn into_optimum(self) -> Result<(Vec<Rational>, V)> {
        match self {
            LpOutcome::Optimal { x, value } => Ok((x, value)),
            LpOutcome::Infeasible => Err(Error::Infeasible),
            LpOutcome::Unbounded => Err(Error::Unbounded),
        }
    }
}
