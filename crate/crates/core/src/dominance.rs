//! Componentwise dominance and Pareto filtering.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::point::Point;

/// `p` dominates `q` iff `p ≤ q` componentwise and `p ≠ q`.
pub fn dominates(p: &Point, q: &Point) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(dominates_unchecked(p, q))
}

pub(crate) fn dominates_unchecked(p: &Point, q: &Point) -> bool {
    let mut strict = false;
    for (a, b) in p.components().iter().zip(q.components()) {
        if a > b {
            return false;
        }
        strict |= a < b;
    }
    strict
}

/// The minimal elements of `points`, duplicates collapsed, in lexicographic
/// order. Empty input gives empty output.
pub fn pareto_filter<'a, I>(points: I) -> Result<Vec<Point>>
where
    I: IntoIterator<Item = &'a Point>,
{
    let mut pts: Vec<Point> = points.into_iter().cloned().collect();
    let Some(dim) = pts.first().map(Point::dim) else {
        return Ok(pts);
    };
    if let Some(bad) = pts.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    pts.sort();
    pts.dedup();
    if dim == 2 {
        // After the lexicographic sort a point survives iff its second
        // component is below every earlier survivor's.
        let mut out: Vec<Point> = Vec::new();
        for p in pts {
            if out.last().is_none_or(|last| p.y() < last.y()) {
                out.push(p);
            }
        }
        return Ok(out);
    }
    let keep: Vec<bool> = pts
        .iter()
        .map(|p| !pts.iter().any(|q| dominates_unchecked(q, p)))
        .collect();
    Ok(pts
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::vec;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::ints(x, y)).collect()
    }

    #[test]
    fn dominance_examples() {
        let d = |a: (i64, i64), b: (i64, i64)| {
            dominates(&Point::ints(a.0, a.1), &Point::ints(b.0, b.1)).unwrap()
        };
        assert!(d((1, 2), (1, 3)));
        assert!(!d((1, 2), (2, 1)));
        assert!(!d((0, 0), (0, 0)));
    }

    #[test]
    fn dominance_dimension_mismatch() {
        let p = Point::new(vec![int(1)]);
        assert!(matches!(
            dominates(&p, &Point::ints(1, 1)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn filter_examples() {
        let out = pareto_filter(&pts(&[(1, 3), (2, 2), (3, 1), (2, 3)])).unwrap();
        assert_eq!(out, pts(&[(1, 3), (2, 2), (3, 1)]));
        assert_eq!(pareto_filter(&pts(&[(0, 0)])).unwrap(), pts(&[(0, 0)]));
        assert!(pareto_filter(&[]).unwrap().is_empty());
    }

    #[test]
    fn filter_matches_pairwise_oracle() {
        // Exhaustive pairwise check, independent of the sweep used above.
        let input = pts(&[(0, 5), (1, 3), (2, 2), (3, 0), (0, 3)]);
        let mut expected: Vec<Point> = input
            .iter()
            .filter(|p| !input.iter().any(|q| dominates_unchecked(q, p)))
            .cloned()
            .collect();
        expected.sort();
        assert_eq!(expected, pts(&[(0, 3), (2, 2), (3, 0)]));
        assert_eq!(pareto_filter(&input).unwrap(), expected);
    }

    #[test]
    fn filter_three_dims() {
        let p = |a, b, c| Point::new(vec![int(a), int(b), int(c)]);
        let input = vec![p(1, 2, 3), p(1, 2, 4), p(3, 2, 1), p(1, 2, 3)];
        assert_eq!(
            pareto_filter(&input).unwrap(),
            vec![p(1, 2, 3), p(3, 2, 1)]
        );
    }
}
