//! The program `D₂(y)` and the facet it certifies at a boundary point.
//!
//! For a biobjective LP `min Cx s.t. Ax ≥ b` and an image point `y`,
//!
//! ```text
//! maximize    bᵀu − yᵀλ
//! subject to  Aᵀu = Cᵀλ,  1ᵀλ = 1,  (u, λ) ≥ 0
//! ```
//!
//! has optimum 0 exactly when `y` lies on the boundary of the upper image.
//! Among its maximizers, the one with lexicographically largest `λ` names the
//! facet `λᵀz = bᵀu` of which `y` is the lexicographic maximum.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{dot, lex::lex_lp_solve, LpInstance, LpOutcome};
use crate::error::{Error, Result};
use crate::point::Point;
use crate::rational::{self, Rational};

/// Number of objectives handled by the dual program.
const P: usize = 2;

/// A maximizer of `D₂(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    pub u: Vec<Rational>,
    pub lambda: [Rational; 2],
    /// `bᵀu − yᵀλ`.
    pub value: Rational,
    /// `bᵀu`.
    pub rhs: Rational,
}

/// Builds `D₂(y)` as an instance over `(u, λ) ∈ Q^{m+2}`.
///
/// The rows are `Aᵀu − Cᵀλ = 0` (n pairs), then `1ᵀλ = 1` (one pair), then the
/// `m + 2` sign rows. The single objective row is the negated dual objective,
/// so minimizing it maximizes `bᵀu − yᵀλ`.
pub fn build_d2(lp: &LpInstance, y: &Point) -> Result<LpInstance> {
    if lp.d() != P {
        return Err(Error::DimensionMismatch {
            expected: P,
            found: lp.d(),
        });
    }
    if y.dim() != P {
        return Err(Error::DimensionMismatch {
            expected: P,
            found: y.dim(),
        });
    }
    let (m, n) = (lp.m(), lp.n());
    let vars = m + P;
    let mut objective: Vec<Rational> = lp.b().iter().map(|v| -v).collect();
    objective.extend(y.components().iter().cloned());
    let mut d2 = LpInstance::new(vars, Vec::new(), Vec::new(), vec![objective])?;
    for j in 0..n {
        let mut row: Vec<Rational> = lp.a().iter().map(|r| r[j].clone()).collect();
        row.extend(lp.c().iter().map(|c| -&c[j]));
        d2.push_eq(row, rational::zero())?;
    }
    let mut simplex_row = vec![rational::zero(); vars];
    for v in &mut simplex_row[m..] {
        *v = rational::one();
    }
    d2.push_eq(simplex_row, rational::one())?;
    for k in 0..vars {
        let mut row = vec![rational::zero(); vars];
        row[k] = rational::one();
        d2.push_ge(row, rational::zero())?;
    }
    Ok(d2)
}

/// A maximizer of `D₂` whose `λ` is lexicographically maximal among all
/// maximizers: pin the optimum, maximize `λ₁`, pin, maximize `λ₂`.
///
/// `b` is the primal right-hand side, needed to report `bᵀu`.
pub fn lexmax_lambda(d2: &LpInstance, b: &[Rational]) -> Result<DualPair> {
    let vars = d2.n();
    if vars < P || vars - P != b.len() {
        return Err(Error::DimensionMismatch {
            expected: b.len() + P,
            found: vars,
        });
    }
    let m = vars - P;
    let unit = |k: usize| {
        let mut row = vec![rational::zero(); vars];
        row[k] = -rational::one();
        row
    };
    let objectives = vec![d2.objective(0).to_vec(), unit(m), unit(m + 1)];
    match lex_lp_solve(d2, &objectives)? {
        LpOutcome::Optimal { x, value } => {
            let u = x[..m].to_vec();
            let rhs = dot(b, &u);
            Ok(DualPair {
                lambda: [x[m].clone(), x[m + 1].clone()],
                u,
                value: -value[0].clone(),
                rhs,
            })
        }
        LpOutcome::Infeasible => Err(Error::Internal("D2 infeasible".into())),
        LpOutcome::Unbounded => Err(Error::Unbounded),
    }
}

/// The facet `λᵀz = rhs` of the upper image supporting it at `y`, with `y`
/// its lexicographic maximum. Fails with [`Error::InvalidPoint`] if `y` is not
/// on the boundary.
pub fn facet_from_point(lp: &LpInstance, y: &Point) -> Result<([Rational; 2], Rational)> {
    let d2 = build_d2(lp, y)?;
    let pair = lexmax_lambda(&d2, lp.b())?;
    if !pair.value.is_zero() {
        return Err(Error::InvalidPoint);
    }
    Ok((pair.lambda, pair.rhs))
}
