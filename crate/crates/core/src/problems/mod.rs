//! Concrete biobjective problems and their scalarization oracles.

pub mod gadget;
pub mod mincut;
pub mod mosp;
pub mod most;
pub mod subsetsum;

use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::rational::{self, Rational};

pub use gadget::{kp_to_mosp, KpInstance};
pub use mincut::{mincut_eps_oracle, MincutOracle};
pub use mosp::{mosp_oracle, MospOracle};
pub use most::{most_oracle, MostOracle};
pub use subsetsum::{subsetsum_front, unconstrained_front, Prop1Merge};

fn check_cost(cost: &[Rational; 2]) -> Result<()> {
    if cost.iter().any(Signed::is_negative) {
        return Err(Error::usage("costs must be nonnegative"));
    }
    Ok(())
}

pub(crate) fn add_cost(acc: &mut [Rational; 2], c: &[Rational; 2]) {
    acc[0] += &c[0];
    acc[1] += &c[1];
}

pub(crate) fn cost_point(c: [Rational; 2]) -> Point {
    let [a, b] = c;
    Point::xy(a, b)
}

pub(crate) fn zero_cost() -> [Rational; 2] {
    [rational::zero(), rational::zero()]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub cost: [Rational; 2],
}

/// A digraph with nonnegative 2-D arc costs and a source/sink pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostDigraph {
    node_count: usize,
    arcs: Vec<Arc>,
    source: usize,
    sink: usize,
}

impl CostDigraph {
    pub fn new(node_count: usize, arcs: Vec<Arc>, source: usize, sink: usize) -> Result<Self> {
        if source >= node_count || sink >= node_count {
            return Err(Error::usage("source or sink out of range"));
        }
        if source == sink {
            return Err(Error::usage("source and sink must differ"));
        }
        for a in &arcs {
            if a.tail >= node_count || a.head >= node_count {
                return Err(Error::usage("arc endpoint out of range"));
            }
            check_cost(&a.cost)?;
        }
        Ok(CostDigraph {
            node_count,
            arcs,
            source,
            sink,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Arc indices leaving each node, in arc order.
    pub fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new(); self.node_count];
        for (i, a) in self.arcs.iter().enumerate() {
            out[a.tail].push(i);
        }
        out
    }

    /// Cost of a set of arcs given as an incidence vector.
    pub fn cost_of(&self, used: &[bool]) -> Point {
        let mut acc = zero_cost();
        for (a, &u) in self.arcs.iter().zip(used) {
            if u {
                add_cost(&mut acc, &a.cost);
            }
        }
        cost_point(acc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub cost: [Rational; 2],
}

/// An undirected multigraph with nonnegative 2-D edge costs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostGraph {
    node_count: usize,
    edges: Vec<Edge>,
}

impl CostGraph {
    pub fn new(node_count: usize, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if e.u >= node_count || e.v >= node_count {
                return Err(Error::usage("edge endpoint out of range"));
            }
            if e.u == e.v {
                return Err(Error::usage("self-loops are not allowed"));
            }
            check_cost(&e.cost)?;
        }
        Ok(CostGraph { node_count, edges })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn cost_of(&self, used: &[bool]) -> Point {
        let mut acc = zero_cost();
        for (e, &u) in self.edges.iter().zip(used) {
            if u {
                add_cost(&mut acc, &e.cost);
            }
        }
        cost_point(acc)
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.node_count);
        let mut comps = self.node_count;
        for e in &self.edges {
            if uf.union(e.u, e.v) {
                comps -= 1;
            }
        }
        comps == 1
    }
}

/// Unconstrained binary problem `min (c¹ᵀx, c²ᵀx)` over `x ∈ {0,1}ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnconstrainedBi {
    c1: Vec<Rational>,
    c2: Vec<Rational>,
}

impl UnconstrainedBi {
    /// The special form `(cᵀx, −cᵀx)` with `c ∈ Nⁿ`.
    pub fn prop1(c: &[i64]) -> Result<Self> {
        if c.iter().any(|&v| v < 0) {
            return Err(Error::usage("cost vector must be nonnegative"));
        }
        Ok(UnconstrainedBi {
            c1: c.iter().map(|&v| rational::int(v)).collect(),
            c2: c.iter().map(|&v| rational::int(-v)).collect(),
        })
    }

    pub fn general(c1: Vec<Rational>, c2: Vec<Rational>) -> Result<Self> {
        if c1.len() != c2.len() {
            return Err(Error::DimensionMismatch {
                expected: c1.len(),
                found: c2.len(),
            });
        }
        Ok(UnconstrainedBi { c1, c2 })
    }

    pub fn n(&self) -> usize {
        self.c1.len()
    }

    /// Cost vector of item `i`.
    pub fn item(&self, i: usize) -> Point {
        Point::xy(self.c1[i].clone(), self.c2[i].clone())
    }

    pub fn cost_of(&self, x: &[bool]) -> Point {
        let mut acc = zero_cost();
        for (i, &on) in x.iter().enumerate() {
            if on {
                acc[0] += &self.c1[i];
                acc[1] += &self.c2[i];
            }
        }
        cost_point(acc)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: alloc::vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if already merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            core::cmp::Ordering::Less => self.parent[ra] = rb,
            core::cmp::Ordering::Greater => self.parent[rb] = ra,
            core::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn validation() {
        let c = [int(1), int(1)];
        assert!(CostDigraph::new(2, alloc::vec![], 0, 0).is_err());
        assert!(CostDigraph::new(2, alloc::vec![], 0, 2).is_err());
        let bad = Arc { tail: 0, head: 1, cost: [int(-1), int(0)] };
        assert!(CostDigraph::new(2, alloc::vec![bad], 0, 1).is_err());
        let lp = Edge { u: 1, v: 1, cost: c.clone() };
        assert!(CostGraph::new(2, alloc::vec![lp]).is_err());
        assert!(UnconstrainedBi::prop1(&[1, -2]).is_err());
    }

    #[test]
    fn connectivity() {
        let e = |u, v| Edge { u, v, cost: [int(1), int(1)] };
        assert!(CostGraph::new(3, alloc::vec![e(0, 1), e(1, 2)]).unwrap().is_connected());
        assert!(!CostGraph::new(3, alloc::vec![e(0, 1)]).unwrap().is_connected());
    }
}
