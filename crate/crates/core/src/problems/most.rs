//! Biobjective minimum spanning tree oracle (Kruskal).
//!
//! Greedy is exact for any totally ordered group of edge weights, so the
//! lexicographic scalarization just sorts edges by `(ℓᵀc, c₁, c₂)`.

use alloc::vec;
use alloc::vec::Vec;

use super::{CostGraph, UnionFind};
use crate::error::{Error, Result};
use crate::oracle::{Optimum, ScalarizationOracle, Solution, Weight};

pub fn most_oracle(g: &CostGraph) -> MostOracle<'_> {
    MostOracle { g }
}

#[derive(Debug, Clone, Copy)]
pub struct MostOracle<'a> {
    g: &'a CostGraph,
}

impl MostOracle<'_> {
    fn kruskal<K: Ord>(&self, key: impl Fn(usize) -> K) -> Result<Optimum> {
        let g = self.g;
        let mut order: Vec<(K, usize)> = (0..g.edges().len()).map(|i| (key(i), i)).collect();
        order.sort();
        let mut uf = UnionFind::new(g.node_count());
        let mut used = vec![false; g.edges().len()];
        let mut picked = 0;
        for (_, i) in order {
            let e = &g.edges()[i];
            if uf.union(e.u, e.v) {
                used[i] = true;
                picked += 1;
            }
        }
        if picked + 1 < g.node_count() {
            return Err(Error::Infeasible);
        }
        Ok(Optimum {
            point: g.cost_of(&used),
            solution: Solution::Bits(used),
        })
    }
}

impl ScalarizationOracle for MostOracle<'_> {
    fn weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        self.kruskal(|i| w.apply(&self.g.edges()[i].cost))
    }

    fn lex_weighted_sum(&self, w: &Weight) -> Result<Optimum> {
        self.kruskal(|i| w.lex_key(&self.g.edges()[i].cost))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;
    use crate::problems::Edge;
    use crate::rational::int;

    fn edge(u: usize, v: usize, c1: i64, c2: i64) -> Edge {
        Edge {
            u,
            v,
            cost: [int(c1), int(c2)],
        }
    }

    #[test]
    fn triangle_cheap_edges_win() {
        let g = CostGraph::new(3, vec![edge(0, 1, 1, 1), edge(1, 2, 1, 1), edge(0, 2, 5, 5)])
            .unwrap();
        let o = most_oracle(&g);
        for w in [Weight::first(), Weight::ints(2, 7).unwrap(), Weight::second()] {
            assert_eq!(o.weighted_sum(&w).unwrap().point, Point::ints(2, 2));
            assert_eq!(o.lex_weighted_sum(&w).unwrap().point, Point::ints(2, 2));
        }
    }

    #[test]
    fn unique_tree() {
        let g = CostGraph::new(3, vec![edge(0, 1, 1, 4), edge(1, 2, 3, 2)]).unwrap();
        let opt = most_oracle(&g).lex_weighted_sum(&Weight::ints(1, 9).unwrap()).unwrap();
        assert_eq!(opt.point, Point::ints(4, 6));
        assert_eq!(opt.solution, Solution::Bits(vec![true, true]));
    }

    #[test]
    fn lex_tie_break() {
        // Two parallel edges tie on the first objective.
        let g = CostGraph::new(2, vec![edge(0, 1, 1, 5), edge(0, 1, 1, 3)]).unwrap();
        let opt = most_oracle(&g).lex_weighted_sum(&Weight::first()).unwrap();
        assert_eq!(opt.point, Point::ints(1, 3));
    }

    #[test]
    fn disconnected() {
        let g = CostGraph::new(3, vec![edge(0, 1, 1, 1)]).unwrap();
        assert_eq!(
            most_oracle(&g).weighted_sum(&Weight::first()),
            Err(Error::Infeasible)
        );
    }
}
