//! Exhaustive ground truth for small instances.
//!
//! Everything here enumerates the whole solution set; it exists to check the
//! output-sensitive algorithms and to serve as the ε-constraint backstop for
//! problems without a polynomial ε-oracle. Size caps are explicit errors.

mod explicit;
mod linalg;
pub mod lp;

use alloc::vec;
use alloc::vec::Vec;

use crate::dominance::pareto_filter;
use crate::error::{Error, Result};
use crate::front::BiFront;
use crate::hull::hull_extremes_2d;
use crate::oracle::Solution;
use crate::point::Point;
use crate::problems::gadget::KpInstance;
use crate::problems::mincut::enumerate_cuts;
use crate::problems::{CostDigraph, CostGraph, UnconstrainedBi, UnionFind};

pub use explicit::ExplicitSetOracle;
pub use lp::brute_lp_vertices;

/// Size caps for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub path_nodes: usize,
    pub tree_nodes: usize,
    pub cut_nodes: usize,
    pub subset_items: usize,
    /// Bound on `n + m` for LP vertex enumeration.
    pub lp_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            path_nodes: 8,
            tree_nodes: 6,
            cut_nodes: 16,
            subset_items: 16,
            lp_size: 14,
        }
    }
}

/// What to enumerate.
#[derive(Debug, Clone, Copy)]
pub enum Instance<'a> {
    /// Simple source-sink paths.
    Paths(&'a CostDigraph),
    /// Spanning trees.
    Trees(&'a CostGraph),
    /// Proper bipartitions.
    Cuts(&'a CostGraph),
    /// All `x ∈ {0,1}ⁿ`.
    Subsets(&'a UnconstrainedBi),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Paths,
    Trees,
    Cuts,
    Subsets,
}

impl Instance<'_> {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Paths(_) => Kind::Paths,
            Instance::Trees(_) => Kind::Trees,
            Instance::Cuts(_) => Kind::Cuts,
            Instance::Subsets(_) => Kind::Subsets,
        }
    }
}

/// The materialized image of an instance, one point per solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageSet {
    pub kind: Kind,
    pub solutions: Vec<Solution>,
    pub points: Vec<Point>,
}

impl ImageSet {
    pub fn into_oracle(self) -> Result<ExplicitSetOracle> {
        ExplicitSetOracle::new(self.solutions.into_iter().zip(self.points).collect())
    }
}

fn cap_check(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::Capacity { what, size, cap });
    }
    Ok(())
}

pub fn enumerate_image(instance: Instance<'_>, caps: &Caps) -> Result<ImageSet> {
    let entries: Vec<(Solution, Point)> = match instance {
        Instance::Paths(g) => {
            cap_check("path graph nodes", g.node_count(), caps.path_nodes)?;
            simple_paths(g)
                .into_iter()
                .map(|used| {
                    let p = g.cost_of(&used);
                    (Solution::Bits(used), p)
                })
                .collect()
        }
        Instance::Trees(g) => {
            cap_check("tree graph nodes", g.node_count(), caps.tree_nodes)?;
            spanning_trees(g)
                .into_iter()
                .map(|used| {
                    let p = g.cost_of(&used);
                    (Solution::Bits(used), p)
                })
                .collect()
        }
        Instance::Cuts(g) => enumerate_cuts(g, caps.cut_nodes)?,
        Instance::Subsets(u) => {
            cap_check("subset items", u.n(), caps.subset_items)?;
            (0..1u64 << u.n())
                .map(|mask| {
                    let x: Vec<bool> = (0..u.n()).map(|i| mask >> i & 1 == 1).collect();
                    let p = u.cost_of(&x);
                    (Solution::Bits(x), p)
                })
                .collect()
        }
    };
    let (solutions, points) = entries.into_iter().unzip();
    Ok(ImageSet {
        kind: instance.kind(),
        solutions,
        points,
    })
}

/// Nondominated extreme points of the image.
pub fn brute_extremes(instance: Instance<'_>, caps: &Caps) -> Result<BiFront> {
    let image = enumerate_image(instance, caps)?;
    if image.points.is_empty() {
        return Err(Error::Infeasible);
    }
    hull_extremes_2d(&image.points)
}

/// The full Pareto-front of the image.
pub fn brute_front(instance: Instance<'_>, caps: &Caps) -> Result<BiFront> {
    let image = enumerate_image(instance, caps)?;
    BiFront::from_sorted(pareto_filter(&image.points)?)
}

/// Whether some `x` satisfies both knapsack conditions (exhaustive).
pub fn kp_feasible(kp: &KpInstance, caps: &Caps) -> Result<Option<Vec<bool>>> {
    cap_check("knapsack items", kp.n(), caps.subset_items)?;
    Ok((0..1u64 << kp.n())
        .map(|mask| (0..kp.n()).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
        .find(|x| kp.is_feasible(x)))
}

/// Arc incidence vectors of all simple source-sink paths, in DFS order.
fn simple_paths(g: &CostDigraph) -> Vec<Vec<bool>> {
    fn dfs(
        g: &CostDigraph,
        out: &[Vec<usize>],
        v: usize,
        visited: &mut [bool],
        used: &mut [bool],
        acc: &mut Vec<Vec<bool>>,
    ) {
        if v == g.sink() {
            acc.push(used.to_vec());
            return;
        }
        for &ai in &out[v] {
            let w = g.arcs()[ai].head;
            if visited[w] {
                continue;
            }
            visited[w] = true;
            used[ai] = true;
            dfs(g, out, w, visited, used, acc);
            used[ai] = false;
            visited[w] = false;
        }
    }
    let out = g.out_arcs();
    let mut visited = vec![false; g.node_count()];
    let mut used = vec![false; g.arcs().len()];
    let mut acc = Vec::new();
    visited[g.source()] = true;
    dfs(g, &out, g.source(), &mut visited, &mut used, &mut acc);
    acc
}

/// Edge incidence vectors of all spanning trees, by increasing edge subsets.
fn spanning_trees(g: &CostGraph) -> Vec<Vec<bool>> {
    fn rec(
        g: &CostGraph,
        start: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        acc: &mut Vec<Vec<bool>>,
    ) {
        if need == 0 {
            let mut uf = UnionFind::new(g.node_count());
            if chosen.iter().all(|&i| uf.union(g.edges()[i].u, g.edges()[i].v)) {
                let mut used = vec![false; g.edges().len()];
                for &i in chosen.iter() {
                    used[i] = true;
                }
                acc.push(used);
            }
            return;
        }
        for i in start..g.edges().len() {
            if g.edges().len() - i < need {
                break;
            }
            chosen.push(i);
            rec(g, i + 1, need - 1, chosen, acc);
            chosen.pop();
        }
    }
    let need = g.node_count().saturating_sub(1);
    let mut acc = Vec::new();
    rec(g, 0, need, &mut Vec::new(), &mut acc);
    acc
}
