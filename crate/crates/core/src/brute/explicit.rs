use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::oracle::{EpsBound, Optimum, ScalarizationOracle, Solution, Weight};
use crate::point::Point;

/// Exhaustive oracle over an explicit list of solutions and their points.
///
/// Ties are broken by list order, so the weighted sum may return a point that
/// is not extreme (or not even nondominated) when several are optimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitSetOracle {
    entries: Vec<(Solution, Point)>,
}

impl ExplicitSetOracle {
    pub fn new(entries: Vec<(Solution, Point)>) -> Result<Self> {
        if let Some((_, p)) = entries.iter().find(|(_, p)| p.dim() != 2) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
        Ok(ExplicitSetOracle { entries })
    }

    /// Oracle over bare points; solution `i` is the one-hot vector of `i`.
    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        let n = points.len();
        ExplicitSetOracle::new(
            points
                .into_iter()
                .enumerate()
                .map(|(i, p)| {
                    let mut bits = alloc::vec![false; n];
                    bits[i] = true;
                    (Solution::Bits(bits), p)
                })
                .collect(),
        )
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.entries.iter().map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn argmin<K: Ord>(
        &self,
        admit: impl Fn(&Point) -> bool,
        key: impl Fn(&Point) -> K,
    ) -> Result<Optimum> {
        let mut best: Option<(K, usize)> = None;
        for (i, (_, p)) in self.entries.iter().enumerate() {
            if !admit(p) {
                continue;
            }
            let k = key(p);
            if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                best = Some((k, i));
            }
        }
        let (_, i) = best.ok_or(Error::Infeasible)?;
        let (solution, point) = self.entries[i].clone();
        Ok(Optimum { solution, point })
    }
}

impl ScalarizationOracle for ExplicitSetOracle {
    fn weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        self.argmin(|_| true, |p| w.apply(p.components()))
    }

    fn lex_weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        self.argmin(|_| true, |p| w.lex_key(p.components()))
    }

    fn eps_constraint(&self, bound: &EpsBound) -> Result<Optimum> {
        self.argmin(|p| bound.admits(p.x()), |p| (p.y().clone(), p.x().clone()))
    }
}
