use alloc::collections::{BTreeSet, VecDeque};

use super::{improves, lambda_for, ordered};
use crate::error::Result;
use crate::front::BiFront;
use crate::hull::hull_extremes_2d;
use crate::log::CallCounts;
use crate::oracle::{CountingOracle, ScalarizationOracle, Weight};
use crate::point::Point;

/// Nondominated extreme points using only weighted-sum calls.
pub fn da_plain<O: ScalarizationOracle>(oracle: O) -> Result<BiFront> {
    da_plain_counted(oracle).map(|(f, _)| f)
}

/// [`da_plain`] plus the number of oracle calls it made.
pub fn da_plain_counted<O: ScalarizationOracle>(oracle: O) -> Result<(BiFront, CallCounts)> {
    let mut oracle = CountingOracle::new(oracle);
    let y0 = oracle.ws(&Weight::first())?.point;
    let y1 = oracle.ws(&Weight::second())?.point;
    let mut found: BTreeSet<Point> = BTreeSet::new();
    found.insert(y0.clone());
    if y0 != y1 {
        found.insert(y1.clone());
        let mut queue: VecDeque<(Point, Point)> = VecDeque::new();
        queue.push_back(ordered(y0, y1));
        while let Some((left, right)) = queue.pop_front() {
            let lambda = lambda_for(&left, &right)?;
            let candidate = oracle.ws(&lambda)?.point;
            if !improves(&lambda, &candidate, &left) {
                continue;
            }
            found.insert(candidate.clone());
            queue.push_back(ordered(left, candidate.clone()));
            queue.push_back(ordered(candidate, right));
        }
    }
    Ok((hull_extremes_2d(&found)?, oracle.calls()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::ExplicitSetOracle;
    use crate::error::Error;
    use alloc::vec::Vec;

    fn oracle(v: &[(i64, i64)]) -> ExplicitSetOracle {
        ExplicitSetOracle::from_points(v.iter().map(|&(x, y)| Point::ints(x, y)).collect())
            .unwrap()
    }

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::ints(x, y)).collect()
    }

    #[test]
    fn five_points() {
        let f = da_plain(oracle(&[(0, 4), (1, 2), (2, 1), (4, 0), (3, 3)])).unwrap();
        assert_eq!(f.into_points(), pts(&[(0, 4), (1, 2), (2, 1), (4, 0)]));
    }

    #[test]
    fn collinear() {
        let f = da_plain(oracle(&[(0, 2), (1, 1), (2, 0)])).unwrap();
        assert_eq!(f.into_points(), pts(&[(0, 2), (2, 0)]));
        // The middle point listed first wins every tie.
        let (f, calls) = da_plain_counted(oracle(&[(1, 1), (0, 2), (2, 0)])).unwrap();
        assert_eq!(f.into_points(), pts(&[(0, 2), (2, 0)]));
        assert!(calls.ws <= 8);
    }

    #[test]
    fn singleton() {
        let (f, calls) = da_plain_counted(oracle(&[(5, 5)])).unwrap();
        assert_eq!(f.into_points(), pts(&[(5, 5)]));
        assert_eq!(calls.ws, 2);
    }

    #[test]
    fn weakly_dominated_seed() {
        // ws(1,0) returns (0,5) first; the true corner is (0,3).
        let f = da_plain(oracle(&[(0, 5), (0, 3), (3, 0)])).unwrap();
        assert_eq!(f.into_points(), pts(&[(0, 3), (3, 0)]));
    }

    #[test]
    fn infeasible() {
        assert_eq!(da_plain(oracle(&[])), Err(Error::Infeasible));
    }
}
