use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::point::Point;

/// A 2-D Pareto archive: first components strictly increasing, second
/// components strictly decreasing, hence pairwise nondominated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BiFront {
    points: Vec<Point>,
}

impl BiFront {
    pub fn new() -> Self {
        BiFront::default()
    }

    /// Wraps points that already satisfy the ordering invariants.
    pub fn from_sorted(points: Vec<Point>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.dim() != 2) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
        let ordered = points
            .windows(2)
            .all(|w| w[0].x() < w[1].x() && w[0].y() > w[1].y());
        if !ordered {
            return Err(Error::usage("points are not in front order"));
        }
        Ok(BiFront { points })
    }

    /// Archives every point of `points`.
    pub fn from_points<'a, I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Point>,
    {
        let mut front = BiFront::new();
        for p in points {
            front.insert(p.clone())?;
        }
        Ok(front)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Inserts `p` unless some archived point is `≤ p`, dropping every
    /// archived point `p` dominates. Returns whether `p` was added.
    pub fn insert(&mut self, p: Point) -> Result<bool> {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
        let le = self.points.partition_point(|q| q.x() <= p.x());
        if le > 0 && self.points[le - 1].y() <= p.y() {
            return Ok(false);
        }
        let start = self.points.partition_point(|q| q.x() < p.x());
        let end = start + self.points[start..].partition_point(|q| q.y() >= p.y());
        self.points.splice(start..end, core::iter::once(p));
        debug_assert!(self.check_invariants());
        Ok(true)
    }

    pub(crate) fn check_invariants(&self) -> bool {
        self.points
            .windows(2)
            .all(|w| w[0].x() < w[1].x() && w[0].y() > w[1].y())
    }
}

impl<'a> IntoIterator for &'a BiFront {
    type Item = &'a Point;
    type IntoIter = core::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Returns the Pareto filter of `front ∪ {p}`.
pub fn archive_insert(front: &BiFront, p: Point) -> Result<BiFront> {
    let mut out = front.clone();
    out.insert(p)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominance::pareto_filter;
    use alloc::vec;
    use proptest::prelude::*;

    fn front(v: &[(i64, i64)]) -> BiFront {
        BiFront::from_sorted(v.iter().map(|&(x, y)| Point::ints(x, y)).collect()).unwrap()
    }

    #[test]
    fn insert_examples() {
        let base = front(&[(1, 3), (3, 1)]);
        assert_eq!(
            archive_insert(&base, Point::ints(2, 2)).unwrap(),
            front(&[(1, 3), (2, 2), (3, 1)])
        );
        assert_eq!(
            archive_insert(&base, Point::ints(0, 0)).unwrap(),
            front(&[(0, 0)])
        );
        assert_eq!(archive_insert(&base, Point::ints(2, 4)).unwrap(), base);
    }

    #[test]
    fn insert_equal_x_or_y() {
        let mut f = front(&[(1, 3), (3, 1)]);
        assert!(f.insert(Point::ints(1, 2)).unwrap());
        assert_eq!(f, front(&[(1, 2), (3, 1)]));
        assert!(!f.insert(Point::ints(3, 1)).unwrap());
        assert!(!f.insert(Point::ints(4, 1)).unwrap());
        assert!(f.insert(Point::ints(2, 1)).unwrap());
        assert_eq!(f, front(&[(1, 2), (2, 1)]));
    }

    #[test]
    fn rejects_unordered() {
        assert!(BiFront::from_sorted(vec![Point::ints(1, 1), Point::ints(2, 2)]).is_err());
        let mut f = BiFront::new();
        assert!(f.insert(Point::new(vec![crate::rational::int(1)])).is_err());
    }

    proptest! {
        #[test]
        fn insert_sequence_equals_filter(raw in prop::collection::vec((-20i64..20, -20i64..20), 0..60)) {
            let pts: Vec<Point> = raw.iter().map(|&(x, y)| Point::ints(x, y)).collect();
            let mut f = BiFront::new();
            for p in &pts {
                f.insert(p.clone()).unwrap();
                prop_assert!(f.check_invariants());
            }
            prop_assert_eq!(f.into_points(), pareto_filter(&pts).unwrap());
        }

        #[test]
        fn filter_idempotent(raw in prop::collection::vec((-20i64..20, -20i64..20, -5i64..5), 0..40)) {
            let pts: Vec<Point> = raw.iter()
                .map(|&(x, y, z)| Point::new(vec![crate::rational::int(x), crate::rational::int(y), crate::rational::int(z)]))
                .collect();
            let once = pareto_filter(&pts).unwrap();
            prop_assert_eq!(pareto_filter(&once).unwrap(), once);
        }

        #[test]
        fn dominance_is_strict_partial_order(
            a in (-3i64..3, -3i64..3, 1i64..4, 1i64..4),
            b in (-3i64..3, -3i64..3, 1i64..4, 1i64..4),
            c in (-3i64..3, -3i64..3, 1i64..4, 1i64..4),
        ) {
            use crate::dominance::dominates;
            use crate::rational::frac;
            let mk = |t: (i64, i64, i64, i64)| Point::xy(frac(t.0, t.2), frac(t.1, t.3));
            let (p, q, r) = (mk(a), mk(b), mk(c));
            prop_assert!(!dominates(&p, &p).unwrap());
            if dominates(&p, &q).unwrap() {
                prop_assert!(!dominates(&q, &p).unwrap());
                if dominates(&q, &r).unwrap() {
                    prop_assert!(dominates(&p, &r).unwrap());
                }
            }
        }
    }
}
