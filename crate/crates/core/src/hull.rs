//! Nondominated extreme points of a finite 2-D set.

use crate::dominance::pareto_filter;
use crate::error::{Error, Result};
use crate::front::BiFront;
use crate::point::Point;
use crate::rational::Rational;

/// Cross product of `b - a` and `c - b`; positive iff `a, b, c` turn left.
pub(crate) fn turn(a: &Point, b: &Point, c: &Point) -> Rational {
    (b.x() - a.x()) * (c.y() - b.y()) - (b.y() - a.y()) * (c.x() - b.x())
}

/// Vertices of `conv(points) + R²≥`, i.e. the strictly convex lower-left chain
/// of the nondominated points. Points in the relative interior of a hull edge
/// are not vertices and are dropped.
pub fn hull_extremes_2d<'a, I>(points: I) -> Result<BiFront>
where
    I: IntoIterator<Item = &'a Point>,
{
    let nd = pareto_filter(points)?;
    if nd.is_empty() {
        return Err(Error::usage("hull of an empty point set"));
    }
    if nd[0].dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: nd[0].dim(),
        });
    }
    let mut chain: alloc::vec::Vec<Point> = alloc::vec::Vec::with_capacity(nd.len());
    for p in nd {
        while chain.len() >= 2 {
            let n = chain.len();
            if turn(&chain[n - 2], &chain[n - 1], &p) > Rational::default() {
                break;
            }
            chain.pop();
        }
        chain.push(p);
    }
    BiFront::from_sorted(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominance::dominates_unchecked;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::ints(x, y)).collect()
    }

    /// Independent per-point test: `p` is a vertex iff nothing weakly
    /// dominates it and no segment between two other points passes on or
    /// below it.
    fn is_vertex(p: &Point, all: &[Point]) -> bool {
        if all.iter().any(|q| q != p && dominates_unchecked(q, p)) {
            return false;
        }
        for a in all.iter().filter(|a| a.x() < p.x() && a.y() > p.y()) {
            for c in all.iter().filter(|c| c.x() > p.x() && c.y() < p.y()) {
                if turn(a, p, c) <= Rational::default() {
                    return false;
                }
            }
        }
        true
    }

    fn oracle(all: &[Point]) -> Vec<Point> {
        let mut v: Vec<Point> = all.iter().filter(|p| is_vertex(p, all)).cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    #[test]
    fn examples() {
        let five = pts(&[(0, 4), (1, 2), (2, 1), (4, 0), (3, 3)]);
        let expected = pts(&[(0, 4), (1, 2), (2, 1), (4, 0)]);
        assert_eq!(oracle(&five), expected);
        assert_eq!(hull_extremes_2d(&five).unwrap().into_points(), expected);

        let collinear = pts(&[(0, 2), (1, 1), (2, 0)]);
        assert_eq!(
            hull_extremes_2d(&collinear).unwrap().into_points(),
            pts(&[(0, 2), (2, 0)])
        );
        assert_eq!(
            hull_extremes_2d(&pts(&[(5, 5)])).unwrap().into_points(),
            pts(&[(5, 5)])
        );
    }

    #[test]
    fn empty_is_usage_error() {
        assert!(matches!(hull_extremes_2d(&[]), Err(Error::Usage(_))));
    }

    proptest! {
        #[test]
        fn matches_vertex_oracle(raw in prop::collection::vec((0i64..12, 0i64..12), 1..40)) {
            let all = pts(&raw);
            let hull = hull_extremes_2d(&all).unwrap();
            prop_assert_eq!(hull.points(), &oracle(&all)[..]);
            let nd = pareto_filter(&all).unwrap();
            prop_assert!(hull.iter().all(|p| nd.contains(p)));
        }
    }
}
