//! Biobjective shortest path oracle.
//!
//! Both scalarizations run Dijkstra. The lexicographic one labels nodes with
//! triples `(ℓᵀc, c₁, c₂)` added componentwise and compared
//! lexicographically; with nonnegative costs every label is lexicographically
//! nonnegative, so label setting stays exact.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::ops::Add;

use super::CostDigraph;
use crate::error::{Error, Result};
use crate::oracle::{Optimum, ScalarizationOracle, Solution, Weight};
use crate::rational::{self, Rational};

pub fn mosp_oracle(g: &CostDigraph) -> MospOracle<'_> {
    MospOracle { g }
}

#[derive(Debug, Clone, Copy)]
pub struct MospOracle<'a> {
    g: &'a CostDigraph,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Lex3([Rational; 3]);

impl Add for &Lex3 {
    type Output = Lex3;

    fn add(self, rhs: &Lex3) -> Lex3 {
        Lex3([
            &self.0[0] + &rhs.0[0],
            &self.0[1] + &rhs.0[1],
            &self.0[2] + &rhs.0[2],
        ])
    }
}

impl MospOracle<'_> {
    /// Dijkstra from the source with arc keys from `key`; returns the arc
    /// incidence vector of a shortest source-sink path.
    fn shortest<K>(&self, zero: K, key: impl Fn(usize) -> K) -> Result<Vec<bool>>
    where
        K: Ord + Clone,
        for<'k> &'k K: Add<&'k K, Output = K>,
    {
        let g = self.g;
        let out = g.out_arcs();
        let keys: Vec<K> = (0..g.arcs().len()).map(key).collect();
        let mut dist: Vec<Option<K>> = vec![None; g.node_count()];
        let mut pred: Vec<Option<usize>> = vec![None; g.node_count()];
        let mut done = vec![false; g.node_count()];
        let mut heap = BinaryHeap::new();
        dist[g.source()] = Some(zero.clone());
        heap.push(Reverse((zero, g.source())));
        while let Some(Reverse((d, v))) = heap.pop() {
            if done[v] {
                continue;
            }
            done[v] = true;
            if v == g.sink() {
                break;
            }
            for &ai in &out[v] {
                let w = g.arcs()[ai].head;
                if done[w] {
                    continue;
                }
                let nd = &d + &keys[ai];
                if dist[w].as_ref().is_none_or(|cur| nd < *cur) {
                    dist[w] = Some(nd.clone());
                    pred[w] = Some(ai);
                    heap.push(Reverse((nd, w)));
                }
            }
        }
        if !done[g.sink()] {
            return Err(Error::Infeasible);
        }
        let mut used = vec![false; g.arcs().len()];
        let mut v = g.sink();
        while let Some(ai) = pred[v] {
            used[ai] = true;
            v = g.arcs()[ai].tail;
        }
        Ok(used)
    }

    fn optimum(&self, used: Vec<bool>) -> Optimum {
        Optimum {
            point: self.g.cost_of(&used),
            solution: Solution::Bits(used),
        }
    }
}

impl ScalarizationOracle for MospOracle<'_> {
    fn weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        let used = self.shortest(rational::zero(), |i| w.apply(&self.g.arcs()[i].cost))?;
        Ok(self.optimum(used))
    }

    fn lex_weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        let zero = Lex3([rational::zero(), rational::zero(), rational::zero()]);
        let used = self.shortest(zero, |i| Lex3(w.lex_key(&self.g.arcs()[i].cost)))?;
        Ok(self.optimum(used))
    }
}
