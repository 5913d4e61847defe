//! Reduction from the biobjective knapsack decision problem to deciding
//! whether a given set is the complete Pareto-front of a shortest-path
//! instance.
//!
//! Chain gadget: for every item `i` the path either takes the detour
//! `v¹ᵢ → v²ᵢ → v¹ᵢ₊₁` (cost `(c¹ᵢ, 0)`) or the direct arc `v¹ᵢ → v¹ᵢ₊₁`
//! (cost `(0, c²ᵢ)`). Two extra `s`-`t` routes realize the points of `M`. The
//! front equals `M` iff no `x` has `c¹ᵀx ≤ k₁` and `c²ᵀx ≥ k₂`.

use alloc::vec::Vec;

use super::{Arc, CostDigraph};
use crate::error::{Error, Result};
use crate::point::Point;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KpInstance {
    c1: Vec<u64>,
    c2: Vec<u64>,
    k1: u64,
    k2: u64,
}

impl KpInstance {
    /// Requires positive entries, `1ᵀc¹ > k₁` and `1ᵀc² > k₂`.
    pub fn new(c1: Vec<u64>, c2: Vec<u64>, k1: u64, k2: u64) -> Result<Self> {
        if c1.len() != c2.len() {
            return Err(Error::DimensionMismatch {
                expected: c1.len(),
                found: c2.len(),
            });
        }
        if c1.is_empty() {
            return Err(Error::usage("knapsack instance needs at least one item"));
        }
        if c1.iter().chain(&c2).any(|&v| v == 0) || k1 == 0 || k2 == 0 {
            return Err(Error::usage("knapsack data must be positive integers"));
        }
        if c1.iter().sum::<u64>() <= k1 {
            return Err(Error::usage("1ᵀc¹ must exceed k₁"));
        }
        if c2.iter().sum::<u64>() <= k2 {
            return Err(Error::usage("1ᵀc² must exceed k₂"));
        }
        Ok(KpInstance { c1, c2, k1, k2 })
    }

    pub fn n(&self) -> usize {
        self.c1.len()
    }

    pub fn c1(&self) -> &[u64] {
        &self.c1
    }

    pub fn c2(&self) -> &[u64] {
        &self.c2
    }

    pub fn k1(&self) -> u64 {
        self.k1
    }

    pub fn k2(&self) -> u64 {
        self.k2
    }

    /// Whether `x` satisfies `c¹ᵀx ≤ k₁` and `c²ᵀx ≥ k₂`.
    pub fn is_feasible(&self, x: &[bool]) -> bool {
        let pick = |c: &[u64]| -> u64 { c.iter().zip(x).filter(|(_, &on)| on).map(|(v, _)| v).sum() };
        pick(&self.c1) <= self.k1 && pick(&self.c2) >= self.k2
    }

    /// The two points of `M`: `(k₁+1, 0)` and `(0, 1ᵀc² − k₂ + 1)`.
    pub fn m_points(&self) -> [Point; 2] {
        let total2: u64 = self.c2.iter().sum();
        [
            Point::xy(uint(self.k1 + 1), rational::zero()),
            Point::xy(rational::zero(), uint(total2 - self.k2 + 1)),
        ]
    }
}

fn uint(v: u64) -> Rational {
    Rational::from_integer(v.into())
}

/// Node index of `v¹ᵢ` (1-based `i`, up to `n + 1`).
pub fn chain_node(i: usize) -> usize {
    2 * (i - 1)
}

/// Node index of `v²ᵢ`.
pub fn detour_node(i: usize) -> usize {
    2 * (i - 1) + 1
}

/// Builds the gadget digraph and `M`.
///
/// Nodes are numbered in chain order `v¹₁, v²₁, …, v¹ₙ, v²ₙ, v¹ₙ₊₁`, then `v`;
/// `s = v¹₁` and `t = v¹ₙ₊₁`. Arcs are listed per item
/// (`v¹ᵢv²ᵢ`, `v¹ᵢv¹ᵢ₊₁`, `v²ᵢv¹ᵢ₊₁`), then `st`, `sv`, `vt`.
pub fn kp_to_mosp(kp: &KpInstance) -> Result<(CostDigraph, [Point; 2])> {
    let n = kp.n();
    let v = 2 * n + 1;
    let (s, t) = (chain_node(1), chain_node(n + 1));
    let zero = rational::zero;
    let mut arcs = Vec::with_capacity(3 * n + 3);
    for i in 1..=n {
        arcs.push(Arc {
            tail: chain_node(i),
            head: detour_node(i),
            cost: [uint(kp.c1[i - 1]), zero()],
        });
        arcs.push(Arc {
            tail: chain_node(i),
            head: chain_node(i + 1),
            cost: [zero(), uint(kp.c2[i - 1])],
        });
        arcs.push(Arc {
            tail: detour_node(i),
            head: chain_node(i + 1),
            cost: [zero(), zero()],
        });
    }
    let m = kp.m_points();
    arcs.push(Arc {
        tail: s,
        head: t,
        cost: [m[0].x().clone(), zero()],
    });
    arcs.push(Arc {
        tail: s,
        head: v,
        cost: [zero(), m[1].y().clone()],
    });
    arcs.push(Arc {
        tail: v,
        head: t,
        cost: [zero(), zero()],
    });
    Ok((CostDigraph::new(v + 1, arcs, s, t)?, m))
}
