//! Seeded random instances for benchmarks and tests.

use bipareto_core::lp::LpInstance;
use bipareto_core::problems::{Arc, CostDigraph, CostGraph, Edge, KpInstance};
use bipareto_core::rational::int;
use bipareto_core::Point;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` integer points in `[0, range)²`, duplicates allowed.
pub fn points<R: Rng>(rng: &mut R, n: usize, range: i64) -> Vec<Point> {
    (0..n)
        .map(|_| Point::ints(rng.gen_range(0..range), rng.gen_range(0..range)))
        .collect()
}

/// `n` points on the hyperbola-like curve `x·y ≈ r²` plus noise above it, so
/// the extreme set is large.
pub fn convex_points<R: Rng>(rng: &mut R, n: usize, range: i64) -> Vec<Point> {
    (0..n)
        .map(|_| {
            let x = rng.gen_range(1..=range);
            let y = (range * range) / x + rng.gen_range(0..3);
            Point::ints(x, y)
        })
        .collect()
}

fn cost<R: Rng>(rng: &mut R) -> [bipareto_core::Rational; 2] {
    [int(rng.gen_range(0..10)), int(rng.gen_range(0..10))]
}

/// A digraph on `n` nodes whose sink is reachable: a
/// spine `0 → … → n−1` plus random extra arcs.
pub fn digraph<R: Rng>(rng: &mut R, n: usize, extra: usize) -> CostDigraph {
    let mut arcs: Vec<Arc> = (1..n)
        .map(|v| Arc { tail: v - 1, head: v, cost: cost(rng) })
        .collect();
    for _ in 0..extra {
        let (t, h) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if t != h {
            arcs.push(Arc { tail: t, head: h, cost: cost(rng) });
        }
    }
    arcs.shuffle(rng);
    CostDigraph::new(n, arcs, 0, n - 1).expect("generated digraph is valid")
}

/// A connected multigraph on `n` nodes: a random spanning tree plus extras.
pub fn graph<R: Rng>(rng: &mut R, n: usize, extra: usize) -> CostGraph {
    let mut edges: Vec<Edge> = (1..n)
        .map(|v| Edge { u: rng.gen_range(0..v), v, cost: cost(rng) })
        .collect();
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push(Edge { u, v, cost: cost(rng) });
        }
    }
    edges.shuffle(rng);
    CostGraph::new(n, edges).expect("generated graph is valid")
}

/// A feasible biobjective LP with an ideal point over `n` variables.
///
/// Always `x ≥ 0` plus `cover` covering rows `aᵀx ≥ b` with `a ≥ 0`. With
/// `boxed` the box `x ≤ 10` is added as well and the objectives may take
/// either sign; otherwise they are nonnegative.
pub fn lp<R: Rng>(rng: &mut R, n: usize, cover: usize, boxed: bool) -> LpInstance {
    let mut rows: Vec<(Vec<i64>, i64)> = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        rows.push((e.clone(), 0));
        if boxed {
            e[i] = -1;
            rows.push((e, -10));
        }
    }
    for _ in 0..cover {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(0..5)).collect();
        let b = if a.iter().all(|&v| v == 0) { 0 } else { rng.gen_range(0..=10) };
        rows.push((a, b));
    }
    let lo = if boxed { -4 } else { 0 };
    // The second objective favours the variables the first one penalizes.
    let c1: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..5)).collect();
    let c2: Vec<i64> = c1.iter().map(|v| (4 - v + rng.gen_range(-1..=1)).clamp(lo, 4)).collect();
    let c = [c1, c2];
    let c_refs: Vec<&[i64]> = c.iter().map(Vec::as_slice).collect();
    let r_refs: Vec<(&[i64], i64)> = rows.iter().map(|(a, b)| (a.as_slice(), *b)).collect();
    LpInstance::from_ints(&c_refs, &r_refs).expect("generated LP is well formed")
}

/// A knapsack instance meeting `1ᵀc₁ > k₁` and `1ᵀc₂ > k₂`.
pub fn kp<R: Rng>(rng: &mut R, n: usize) -> KpInstance {
    // A single item needs weight at least 2 to leave room for k.
    let lo = if n == 1 { 2 } else { 1 };
    let c1: Vec<u64> = (0..n).map(|_| rng.gen_range(lo..10)).collect();
    let c2: Vec<u64> = (0..n).map(|_| rng.gen_range(lo..10)).collect();
    let k1 = rng.gen_range(1..c1.iter().sum::<u64>());
    let k2 = rng.gen_range(1..c2.iter().sum::<u64>());
    KpInstance::new(c1, c2, k1, k2).expect("generated KP meets the restrictions")
}
