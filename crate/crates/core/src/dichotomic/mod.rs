//! The dichotomic weighted-sum method for biobjective combinatorial problems.
//!
//! All three variants start from the two lexicographic corner points and
//! repeatedly split a pair `(l, r)` with the weight `λ` that makes `l` and `r`
//! equally good. A weighted-sum optimum strictly better than the pair under `λ`
//! is a new point between them; otherwise the gap is certified empty.
//!
//! * [`da_plain`] only needs a weighted-sum oracle; ties may hand it
//!   nondominated points that are not extreme, which a final hull pass
//!   removes.
//! * [`da_lex`] uses the lexicographic oracle, whose answers are always
//!   extreme, so each new point is emitted as soon as it is found. It needs
//!   `2k − 1` oracle calls for `k ≥ 2` extreme points.
//! * [`da_polydelay`] holds every new point back until both gaps next to it
//!   have been probed once, which bounds the work between two emissions by
//!   two oracle calls.

mod lex;
mod plain;
mod polydelay;

use crate::error::{Error, Result};
use crate::oracle::Weight;
use crate::point::Point;

pub use lex::{da_lex, DaLex};
pub use plain::{da_plain, da_plain_counted};
pub use polydelay::{da_polydelay, DaPolyDelay};

/// `λ = (|y²₂ − y³₂|, |y²₁ − y³₁|)`, the normal of the segment through the two
/// points, so that `λᵀy² = λᵀy³`.
pub fn lambda_for(y2: &Point, y3: &Point) -> Result<Weight> {
    if y2.dim() != 2 || y3.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: if y2.dim() != 2 { y2.dim() } else { y3.dim() },
        });
    }
    if y2 == y3 {
        return Err(Error::usage("lambda_for needs two distinct points"));
    }
    use num_traits::Signed;
    Weight::new((y2.y() - y3.y()).abs(), (y2.x() - y3.x()).abs())
}

/// A queued pair in lexicographic order.
pub(crate) fn ordered(a: Point, b: Point) -> (Point, Point) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Whether `candidate` is strictly better than the pair under `λ`.
pub(crate) fn improves(lambda: &Weight, candidate: &Point, left: &Point) -> bool {
    lambda.apply(candidate.components()) < lambda.apply(left.components())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_examples() {
        let l = |a: (i64, i64), b: (i64, i64)| {
            lambda_for(&Point::ints(a.0, a.1), &Point::ints(b.0, b.1)).unwrap()
        };
        assert_eq!(l((1, 5), (4, 2)), Weight::ints(3, 3).unwrap());
        let w = l((0, 4), (1, 2));
        assert_eq!(w, Weight::ints(2, 1).unwrap());
        assert_eq!(
            w.apply(Point::ints(0, 4).components()),
            w.apply(Point::ints(1, 2).components())
        );
        assert_eq!(l((0, 4), (4, 0)), Weight::ints(4, 4).unwrap());
    }

    #[test]
    fn lambda_equal_points() {
        assert!(lambda_for(&Point::ints(1, 1), &Point::ints(1, 1)).is_err());
    }
}
