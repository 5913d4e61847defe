use bipareto_core::brute::{brute_front, enumerate_image, kp_feasible, Caps, ExplicitSetOracle, Instance};
use bipareto_core::dominance::pareto_filter;
use bipareto_core::epsfront::eps_front_2d;
use bipareto_core::problems::gadget::{chain_node, detour_node};
use bipareto_core::problems::{
    kp_to_mosp, mincut_eps_oracle, most_oracle, mosp_oracle, Arc, CostDigraph, CostGraph, Edge,
    KpInstance,
};
use bipareto_core::rational::int;
use bipareto_core::{EnumerationLog, Point, ScalarizationOracle, Weight};
use proptest::prelude::*;

fn digraph(n: usize, raw: Vec<(usize, usize, i64, i64)>) -> CostDigraph {
    let mut arcs: Vec<Arc> = raw
        .into_iter()
        .filter(|&(t, h, _, _)| t < n && h < n && t != h)
        .map(|(t, h, a, b)| Arc { tail: t, head: h, cost: [int(a), int(b)] })
        .collect();
    for v in 0..n - 1 {
        arcs.push(Arc { tail: v, head: v + 1, cost: [int(5), int(5)] });
    }
    CostDigraph::new(n, arcs, 0, n - 1).unwrap()
}

fn graph(n: usize, raw: Vec<(usize, usize, i64, i64)>) -> CostGraph {
    let mut edges: Vec<Edge> = raw
        .into_iter()
        .filter(|&(u, v, _, _)| u < n && v < n && u != v)
        .map(|(u, v, a, b)| Edge { u, v, cost: [int(a), int(b)] })
        .collect();
    for v in 1..n {
        edges.push(Edge { u: v - 1, v, cost: [int(3), int(1)] });
    }
    CostGraph::new(n, edges).unwrap()
}

fn weight() -> impl Strategy<Value = Weight> {
    (0i64..5, 0i64..5)
        .prop_filter("nonzero", |&(a, b)| a + b > 0)
        .prop_map(|(a, b)| Weight::ints(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn mosp_weighted_sum_is_minimal(
        n in 2usize..8,
        raw in prop::collection::vec((0usize..8, 0usize..8, 0i64..9, 0i64..9), 0..18),
        w in weight(),
    ) {
        let g = digraph(n, raw);
        let image = enumerate_image(Instance::Paths(&g), &Caps::default()).unwrap();
        let best = image.points.iter().map(|p| w.apply(p.components())).min().unwrap();
        let o = mosp_oracle(&g);
        prop_assert_eq!(w.apply(o.weighted_sum(&w).unwrap().point.components()), best.clone());
        let lex = image.points.iter().map(|p| w.lex_key(p.components())).min().unwrap();
        prop_assert_eq!(w.lex_key(o.lex_weighted_sum(&w).unwrap().point.components()), lex);
    }

    #[test]
    fn most_matches_tree_enumeration(
        n in 2usize..7,
        raw in prop::collection::vec((0usize..6, 0usize..6, 0i64..9, 0i64..9), 0..12),
        w in weight(),
    ) {
        let g = graph(n, raw);
        let image = enumerate_image(Instance::Trees(&g), &Caps::default()).unwrap();
        let o = most_oracle(&g);
        let best = image.points.iter().map(|p| w.apply(p.components())).min().unwrap();
        prop_assert_eq!(w.apply(o.weighted_sum(&w).unwrap().point.components()), best);
        let lex = image.points.iter().map(|p| w.lex_key(p.components())).min().unwrap();
        prop_assert_eq!(w.lex_key(o.lex_weighted_sum(&w).unwrap().point.components()), lex);
    }

    #[test]
    fn eps_sweep_on_cuts(
        n in 2usize..9,
        raw in prop::collection::vec((0usize..9, 0usize..9, 0i64..9, 0i64..9), 0..16),
    ) {
        let g = graph(n, raw);
        let expected = brute_front(Instance::Cuts(&g), &Caps::default()).unwrap();
        let log = EnumerationLog::drain(eps_front_2d(mincut_eps_oracle(&g, 16).unwrap())).unwrap();
        let mut got = log.points();
        for w in got.windows(2) {
            prop_assert!(w[1].x() < w[0].x() && w[1].y() > w[0].y());
        }
        got.reverse();
        prop_assert_eq!(&got[..], expected.points());
        prop_assert_eq!(log.final_calls.eps, expected.len() as u64 + 1);
    }

    #[test]
    fn eps_sweep_on_explicit_sets(raw in prop::collection::vec((-20i64..20, -20i64..20), 1..60)) {
        let pts: Vec<Point> = raw.iter().map(|&(x, y)| Point::ints(x, y)).collect();
        let mut expected = pareto_filter(&pts).unwrap();
        let log = EnumerationLog::drain(eps_front_2d(ExplicitSetOracle::from_points(pts).unwrap())).unwrap();
        expected.reverse();
        prop_assert_eq!(log.points(), expected.clone());
        prop_assert_eq!(log.final_calls.eps, expected.len() as u64 + 1);
    }

    #[test]
    fn gadget_front_is_m_iff_no_knapsack_solution(
        items in prop::collection::vec((1u64..8, 1u64..8), 1..8),
        f1 in 0.1f64..0.9,
        f2 in 0.1f64..0.9,
    ) {
        let c1: Vec<u64> = items.iter().map(|t| t.0).collect();
        let c2: Vec<u64> = items.iter().map(|t| t.1).collect();
        let k1 = ((c1.iter().sum::<u64>() as f64 * f1) as u64).max(1);
        let k2 = ((c2.iter().sum::<u64>() as f64 * f2) as u64).max(1);
        prop_assume!(c1.iter().sum::<u64>() > k1 && c2.iter().sum::<u64>() > k2);
        let kp = KpInstance::new(c1, c2, k1, k2).unwrap();
        let (g, m) = kp_to_mosp(&kp).unwrap();
        let caps = Caps { path_nodes: 64, ..Caps::default() };
        let front = brute_front(Instance::Paths(&g), &caps).unwrap();
        let mut m_sorted = m.to_vec();
        m_sorted.sort();
        let feasible = kp_feasible(&kp, &caps).unwrap().is_some();
        prop_assert_eq!(front.points() == &m_sorted[..], !feasible);
        prop_assert!(m.iter().all(|p| front.contains(p)));
    }
}

#[test]
fn k4_trees_match_cayley_enumeration() {
    let costs = [(1, 4), (2, 2), (4, 1), (3, 3), (0, 5), (5, 0)];
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..4 {
        for v in u + 1..4 {
            edges.push(Edge { u, v, cost: [int(costs[k].0), int(costs[k].1)] });
            k += 1;
        }
    }
    let g = CostGraph::new(4, edges).unwrap();
    let image = enumerate_image(Instance::Trees(&g), &Caps::default()).unwrap();
    assert_eq!(image.points.len(), 16);
    let o = most_oracle(&g);
    for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 3)] {
        let w = Weight::ints(a, b).unwrap();
        let best = image.points.iter().map(|p| w.lex_key(p.components())).min().unwrap();
        assert_eq!(w.lex_key(o.lex_weighted_sum(&w).unwrap().point.components()), best);
    }
}

#[test]
fn gadget_examples() {
    let yes = KpInstance::new(vec![1, 2], vec![2, 3], 2, 3).unwrap();
    let (g, m) = kp_to_mosp(&yes).unwrap();
    assert_eq!(m, [Point::ints(3, 0), Point::ints(0, 3)]);
    let front = brute_front(Instance::Paths(&g), &Caps::default()).unwrap();
    assert_eq!(
        front.into_points(),
        vec![Point::ints(0, 3), Point::ints(2, 2), Point::ints(3, 0)]
    );

    let no = KpInstance::new(vec![2, 2], vec![1, 1], 1, 1).unwrap();
    let (g, m) = kp_to_mosp(&no).unwrap();
    let front = brute_front(Instance::Paths(&g), &Caps::default()).unwrap();
    assert_eq!(front.into_points(), vec![m[1].clone(), m[0].clone()]);
    assert!(kp_feasible(&no, &Caps::default()).unwrap().is_none());

    assert!(KpInstance::new(vec![1], vec![1], 1, 1).is_err());
}

/// The gadget is the item chain (a path with one triangle per item) plus the
/// arc `st` and the detour `svt`: drawing the chain along a line, both extra
/// routes attach only to its two ends, so every node stays on the outer face.
#[test]
fn gadget_is_chain_plus_two_detours() {
    for n in 1..=6usize {
        let kp = KpInstance::new(vec![2; n], vec![3; n], 1, 1).unwrap();
        let (g, _) = kp_to_mosp(&kp).unwrap();
        assert_eq!(g.node_count(), 2 * n + 2);
        assert_eq!(g.arcs().len(), 3 * n + 3);
        let has = |t: usize, h: usize| g.arcs().iter().any(|a| a.tail == t && a.head == h);
        for i in 1..=n {
            assert!(has(chain_node(i), detour_node(i)));
            assert!(has(chain_node(i), chain_node(i + 1)));
            assert!(has(detour_node(i), chain_node(i + 1)));
        }
        let (s, t, v) = (g.source(), g.sink(), 2 * n + 1);
        assert!(has(s, t) && has(s, v) && has(v, t));
        // Every other arc is inside the chain.
        let chain_arcs = g
            .arcs()
            .iter()
            .filter(|a| a.tail < 2 * n + 1 && a.head < 2 * n + 1)
            .count();
        assert_eq!(chain_arcs, 3 * n + 1);
        // Each detour node has exactly one arc in and one arc out.
        for i in 1..=n {
            let d = detour_node(i);
            assert_eq!(g.arcs().iter().filter(|a| a.head == d).count(), 1);
            assert_eq!(g.arcs().iter().filter(|a| a.tail == d).count(), 1);
        }
    }
}
