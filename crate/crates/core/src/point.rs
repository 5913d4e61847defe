use alloc::vec::Vec;
use core::fmt;

use crate::rational::{self, Rational};

/// An objective vector. Enumerators only ever build 2-D points, but dominance
/// and filtering work in any dimension.
///
/// `Ord` is the lexicographic order on components.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(components: Vec<Rational>) -> Self {
        Point(components)
    }

    pub fn xy(x: Rational, y: Rational) -> Self {
        Point(alloc::vec![x, y])
    }

    /// Integer 2-D point, handy in tests and examples.
    pub fn ints(x: i64, y: i64) -> Self {
        Point::xy(rational::int(x), rational::int(y))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_components(self) -> Vec<Rational> {
        self.0
    }

    /// First objective. Panics on an empty point.
    pub fn x(&self) -> &Rational {
        &self.0[0]
    }

    /// Second objective. Panics if `dim() < 2`.
    pub fn y(&self) -> &Rational {
        &self.0[1]
    }

    /// `wᵀp` for a weight of the same dimension.
    pub fn dot(&self, w: &[Rational]) -> Rational {
        debug_assert_eq!(w.len(), self.0.len());
        self.0
            .iter()
            .zip(w)
            .fold(rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point(self.0.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<Rational>> for Point {
    fn from(v: Vec<Rational>) -> Self {
        Point(v)
    }
}
