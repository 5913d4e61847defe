//! Biobjective global minimum cut by exhaustive enumeration of bipartitions.

use alloc::vec::Vec;

use super::CostGraph;
use crate::brute::ExplicitSetOracle;
use crate::error::{Error, Result};
use crate::oracle::{EpsBound, Optimum, ScalarizationOracle, Solution, Weight};
use crate::point::Point;

pub const DEFAULT_NODE_CAP: usize = 16;

/// All `2^{n−1} − 1` proper bipartitions with node 0 on the `false` side, in
/// increasing order of the mask over nodes `1..n`.
pub fn enumerate_cuts(g: &CostGraph, cap: usize) -> Result<Vec<(Solution, Point)>> {
    let n = g.node_count();
    if n > cap {
        return Err(Error::Capacity {
            what: "cut graph nodes",
            size: n,
            cap,
        });
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let count: u64 = (1u64 << (n - 1)) - 1;
    let mut out = Vec::with_capacity(count as usize);
    for mask in 1..=count {
        let side: Vec<bool> = (0..n)
            .map(|v| v > 0 && (mask >> (v - 1)) & 1 == 1)
            .collect();
        let crossing: Vec<bool> = g.edges().iter().map(|e| side[e.u] != side[e.v]).collect();
        out.push((Solution::Bits(side), g.cost_of(&crossing)));
    }
    Ok(out)
}

pub fn mincut_eps_oracle(g: &CostGraph, cap: usize) -> Result<MincutOracle> {
    MincutOracle::new(g, cap)
}

/// Min-cut oracle; solutions are the side indicator of every node.
#[derive(Debug, Clone)]
pub struct MincutOracle {
    cuts: ExplicitSetOracle,
}

impl MincutOracle {
    pub fn new(g: &CostGraph, cap: usize) -> Result<Self> {
        Ok(MincutOracle {
            cuts: ExplicitSetOracle::new(enumerate_cuts(g, cap)?)?,
        })
    }

    pub fn cut_count(&self) -> usize {
        self.cuts.len()
    }
}

impl ScalarizationOracle for MincutOracle {
    fn weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        self.cuts.weighted_sum(w)
    }

    fn lex_weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        self.cuts.lex_weighted_sum(w)
    }

    fn eps_constraint(&self, bound: &EpsBound) -> Result<Optimum> {
        self.cuts.eps_constraint(bound)
    }
}
