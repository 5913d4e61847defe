use bipareto_core::brute::lp::{brute_lp_lex, brute_lp_optimum};
use bipareto_core::brute::{brute_lp_vertices, Caps};
use bipareto_core::hull::hull_extremes_2d;
use bipareto_core::lp::{
    bilp_extreme_points, build_d2, lex_lp_solve, lexmax_lambda, simplex_solve_with_stats,
    LpInstance, LpOutcome,
};
use bipareto_core::rational::{frac, int};
use bipareto_core::{Error, Point, Rational};
use proptest::prelude::*;

/// Random pointed LP: nonnegativity rows plus `extra` random rows.
fn lp_strategy(max_n: usize, max_extra: usize) -> impl Strategy<Value = LpInstance> {
    (1..=max_n, 0..=max_extra).prop_flat_map(|(n, extra)| {
        (
            prop::collection::vec(prop::collection::vec(-3i64..4, n), extra),
            prop::collection::vec(-4i64..6, extra),
            prop::collection::vec(prop::collection::vec(-2i64..4, n), 2),
        )
            .prop_map(move |(rows, rhs, c)| {
                let mut a: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&v| int(v)).collect())
                    .collect();
                let mut b: Vec<Rational> = rhs.iter().map(|&v| int(v)).collect();
                for j in 0..n {
                    let mut r = vec![int(0); n];
                    r[j] = int(1);
                    a.push(r);
                    b.push(int(0));
                }
                let c = c.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
                LpInstance::new(n, a, b, c).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn simplex_matches_vertex_enumeration(lp in lp_strategy(4, 5)) {
        let obj = lp.objective(0).to_vec();
        let (out, stats) = simplex_solve_with_stats(&lp, &obj).unwrap();
        prop_assert!(stats.phase1_pivots < stats.iteration_cap);
        prop_assert!(stats.phase2_pivots < stats.iteration_cap);
        match (out, brute_lp_optimum(&lp, &obj)) {
            (LpOutcome::Optimal { x, value }, Ok(Some(v))) => {
                prop_assert_eq!(&value, &v);
                prop_assert!(lp.is_feasible(&x));
            }
            (LpOutcome::Infeasible, Ok(None)) => {}
            (LpOutcome::Unbounded, Err(Error::Unbounded)) => {}
            (a, b) => prop_assert!(false, "simplex {:?} vs brute {:?}", a, b),
        }
    }

    #[test]
    fn lex_matches_vertex_enumeration(lp in lp_strategy(3, 4)) {
        let objs = vec![lp.objective(0).to_vec(), lp.objective(1).to_vec()];
        match (lex_lp_solve(&lp, &objs).unwrap(), brute_lp_lex(&lp, &objs)) {
            (LpOutcome::Optimal { value, .. }, Ok(Some(v))) => prop_assert_eq!(value, v),
            (LpOutcome::Infeasible, Ok(None)) => {}
            (LpOutcome::Unbounded, Err(Error::Unbounded)) => {}
            (a, b) => prop_assert!(false, "lex {:?} vs brute {:?}", a, b),
        }
    }

    #[test]
    fn lex_invariant_under_row_scaling(lp in lp_strategy(3, 4), k in 1i64..5, which in 0usize..2) {
        let objs = vec![lp.objective(0).to_vec(), lp.objective(1).to_vec()];
        let mut scaled = objs.clone();
        scaled[which] = scaled[which].iter().map(|v| v * frac(k, 3)).collect();
        let a = lex_lp_solve(&lp, &objs).unwrap();
        let b = lex_lp_solve(&lp, &scaled).unwrap();
        match (a, b) {
            (LpOutcome::Optimal { x, .. }, LpOutcome::Optimal { x: y, .. }) => {
                let va: Vec<Rational> = objs.iter().map(|o| dot(o, &x)).collect();
                let vb: Vec<Rational> = objs.iter().map(|o| dot(o, &y)).collect();
                prop_assert_eq!(va, vb);
            }
            (a, b) => prop_assert_eq!(core::mem::discriminant(&a), core::mem::discriminant(&b)),
        }
    }

    #[test]
    fn walk_matches_brute(lp in lp_strategy(3, 4)) {
        let Ok(expected) = brute_lp_vertices(&lp, &Caps::default()) else {
            return Ok(());
        };
        let mut walk = bilp_extreme_points(&lp).unwrap();
        let mut got: Vec<Point> = Vec::new();
        for e in walk.by_ref() {
            got.push(e.unwrap().point);
        }
        for w in got.windows(2) {
            prop_assert!(w[1].x() < w[0].x() && w[1].y() > w[0].y());
        }
        for y in &got {
            let d2 = build_d2(&lp, y).unwrap();
            prop_assert_eq!(lexmax_lambda(&d2, lp.b()).unwrap().value, int(0));
        }
        prop_assert!(walk.retained_high_water() <= 3);
        got.reverse();
        prop_assert_eq!(got, expected.into_points());
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[test]
fn four_facet_walk_matches_hull() {
    let lp = LpInstance::from_ints(
        &[&[1, 0], &[0, 1]],
        &[(&[2, 1], 4), (&[1, 1], 3), (&[1, 2], 4), (&[1, 0], 0), (&[0, 1], 0)],
    )
    .unwrap();
    let hull = hull_extremes_2d(&[
        Point::ints(0, 4),
        Point::ints(1, 2),
        Point::ints(2, 1),
        Point::ints(4, 0),
    ])
    .unwrap();
    assert_eq!(brute_lp_vertices(&lp, &Caps::default()).unwrap(), hull);
}
