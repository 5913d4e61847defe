//! Facet walk over the upper image of a biobjective LP.
//!
//! Starting at the extreme point that minimizes the second objective, each
//! step asks `D₂` for the facet to the left of the current point, restricts the
//! LP to that facet and solves the lexicographic weighted sum with the facet
//! normal, which lands on the facet's other endpoint. The walk stops at the
//! minimizer of the first objective. Only the current point, the target and
//! the candidate are alive at any time.

use alloc::vec;
use alloc::vec::Vec;

use super::{dual::facet_from_point, lex::lex_lp_solve, LpInstance, LpOutcome};
use crate::error::{Error, Result};
use crate::log::{CallCounts, Emission, Enumerator};
use crate::point::Point;
use crate::rational::{self, Rational};

/// Streams the nondominated extreme points of `lp`'s upper image, in order of
/// decreasing first objective.
pub fn bilp_extreme_points(lp: &LpInstance) -> Result<BilpWalk<'_>> {
    BilpWalk::new(lp)
}

#[derive(Debug)]
enum State {
    Start,
    Walking { current: Point, target: Point },
    Done,
}

/// Resumable walk state. Every lexicographic LP solved (primal and `D₂`) is
/// counted under `lex`.
#[derive(Debug)]
pub struct BilpWalk<'a> {
    lp: &'a LpInstance,
    state: State,
    emitted: usize,
    calls: CallCounts,
    retained_high_water: usize,
    facet_log: Vec<FacetStep>,
}

/// The facet computed at one walk step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetStep {
    pub from: Point,
    pub lambda: [Rational; 2],
    pub rhs: Rational,
    pub to: Point,
}

impl<'a> BilpWalk<'a> {
    pub fn new(lp: &'a LpInstance) -> Result<Self> {
        if lp.d() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: lp.d(),
            });
        }
        Ok(BilpWalk {
            lp,
            state: State::Start,
            emitted: 0,
            calls: CallCounts::default(),
            retained_high_water: 0,
            facet_log: Vec::new(),
        })
    }

    /// Largest number of image points held at once so far.
    pub fn retained_high_water(&self) -> usize {
        self.retained_high_water
    }

    /// Facets visited so far, one per step after the first emission.
    pub fn facet_steps(&self) -> &[FacetStep] {
        &self.facet_log
    }

    fn retain(&mut self, live: usize) {
        self.retained_high_water = self.retained_high_water.max(live);
    }

    /// Lexicographic weighted sum `(wᵀCx, c₁x, c₂x)` over `lp`.
    fn lws(&mut self, lp: &LpInstance, w: &[Rational]) -> Result<Point> {
        self.calls.lex += 1;
        let objectives = vec![
            lp.weighted_row(w),
            lp.objective(0).to_vec(),
            lp.objective(1).to_vec(),
        ];
        match lex_lp_solve(lp, &objectives)? {
            LpOutcome::Optimal { x, .. } => Ok(lp.image(&x)),
            LpOutcome::Infeasible => Err(Error::Infeasible),
            LpOutcome::Unbounded => Err(Error::Unbounded),
        }
    }

    fn emit(&mut self, point: Point) -> Emission {
        self.emitted += 1;
        Emission {
            index: self.emitted,
            point,
            calls: self.calls,
        }
    }

    fn start(&mut self) -> Result<Emission> {
        let lp = self.lp;
        let first = self.lws(lp, &[rational::zero(), rational::one()])?;
        self.retain(1);
        let target = self.lws(lp, &[rational::one(), rational::zero()])?;
        self.retain(2);
        self.state = if first == target {
            State::Done
        } else {
            State::Walking {
                current: first.clone(),
                target,
            }
        };
        Ok(self.emit(first))
    }

    fn step(&mut self, current: Point, target: Point) -> Result<Emission> {
        let (lambda, rhs) = facet_from_point(self.lp, &current)?;
        self.calls.lex += 1;
        let mut on_facet = self.lp.clone();
        on_facet.push_eq(self.lp.weighted_row(&lambda), rhs.clone())?;
        let next = self.lws(&on_facet, &lambda)?;
        self.retain(3);
        if next >= current {
            return Err(Error::Internal("facet walk made no progress".into()));
        }
        self.facet_log.push(FacetStep {
            from: current,
            lambda,
            rhs,
            to: next.clone(),
        });
        self.state = if next == target {
            State::Done
        } else {
            State::Walking {
                current: next.clone(),
                target,
            }
        };
        Ok(self.emit(next))
    }
}

impl Iterator for BilpWalk<'_> {
    type Item = Result<Emission>;

    fn next(&mut self) -> Option<Self::Item> {
        let out = match core::mem::replace(&mut self.state, State::Done) {
            State::Start => self.start(),
            State::Walking { current, target } => self.step(current, target),
            State::Done => return None,
        };
        Some(out)
    }
}

impl Enumerator for BilpWalk<'_> {
    fn calls(&self) -> CallCounts {
        self.calls
    }
}
