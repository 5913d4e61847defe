//! Incremental front construction for unconstrained binary problems.
//!
//! With `Fᵢ` the front over the first `i` items, `Fᵢ₊₁` is the Pareto filter of
//! `Fᵢ ∪ (Fᵢ + cᵢ₊₁)`. Both operands are already sorted, so each step is a
//! linear merge followed by a linear sweep.

use alloc::vec::Vec;

use super::UnconstrainedBi;
use crate::error::Result;
use crate::front::BiFront;
use crate::point::Point;

/// Snapshots `F₀, F₁, …, Fₙ` of the `(cᵀx, −cᵀx)` problem. Fails on a
/// negative entry.
pub fn subsetsum_front(c: &[i64]) -> Result<Prop1Merge> {
    Ok(Prop1Merge::new(UnconstrainedBi::prop1(c)?))
}

/// Final front of a general unconstrained problem.
pub fn unconstrained_front(problem: &UnconstrainedBi) -> BiFront {
    Prop1Merge::new(problem.clone())
        .last()
        .unwrap_or_default()
}

/// Iterator over the snapshots `F₀ … Fₙ`.
#[derive(Debug, Clone)]
pub struct Prop1Merge {
    problem: UnconstrainedBi,
    next_item: usize,
    current: Option<BiFront>,
}

impl Prop1Merge {
    pub fn new(problem: UnconstrainedBi) -> Self {
        Prop1Merge {
            problem,
            next_item: 0,
            current: None,
        }
    }
}

fn merge_step(front: &BiFront, shift: &Point) -> BiFront {
    let base = front.points();
    let moved: Vec<Point> = base
        .iter()
        .map(|p| Point::xy(p.x() + shift.x(), p.y() + shift.y()))
        .collect();
    let mut merged = Vec::with_capacity(base.len() * 2);
    let (mut i, mut j) = (0, 0);
    while i < base.len() || j < moved.len() {
        let take_base = j == moved.len() || (i < base.len() && base[i] <= moved[j]);
        let p = if take_base {
            i += 1;
            &base[i - 1]
        } else {
            j += 1;
            &moved[j - 1]
        };
        // Lexicographic order: keep p iff it strictly lowers the second
        // component (this also drops exact duplicates).
        if merged.last().is_none_or(|q: &Point| p.y() < q.y()) {
            merged.push(p.clone());
        }
    }
    BiFront::from_sorted(merged).expect("merge keeps front order")
}

impl Iterator for Prop1Merge {
    type Item = BiFront;

    fn next(&mut self) -> Option<BiFront> {
        let next = match &self.current {
            None => BiFront::from_sorted(alloc::vec![Point::ints(0, 0)]).ok()?,
            Some(f) if self.next_item < self.problem.n() => {
                let shift = self.problem.item(self.next_item);
                self.next_item += 1;
                merge_step(f, &shift)
            }
            Some(_) => return None,
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominance::pareto_filter;
    use crate::rational::frac;
    use alloc::vec;
    use proptest::prelude::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::ints(x, y)).collect()
    }

    fn all_subsets(p: &UnconstrainedBi) -> Vec<Point> {
        (0..1u32 << p.n())
            .map(|mask| {
                let x: Vec<bool> = (0..p.n()).map(|i| mask >> i & 1 == 1).collect();
                p.cost_of(&x)
            })
            .collect()
    }

    #[test]
    fn examples() {
        let last = subsetsum_front(&[1, 2]).unwrap().last().unwrap();
        assert_eq!(last.points(), &pts(&[(0, 0), (1, -1), (2, -2), (3, -3)])[..]);
        let last = subsetsum_front(&[1, 1]).unwrap().last().unwrap();
        assert_eq!(last.points(), &pts(&[(0, 0), (1, -1), (2, -2)])[..]);
        let snaps: Vec<BiFront> = subsetsum_front(&[]).unwrap().collect();
        assert_eq!(snaps.len(), 1);
        assert_eq!(snaps[0].points(), &pts(&[(0, 0)])[..]);
    }

    #[test]
    fn negative_entry() {
        assert!(subsetsum_front(&[1, -1]).is_err());
    }

    #[test]
    fn general_form() {
        let p = UnconstrainedBi::general(
            vec![frac(1, 2), frac(-1, 1), frac(3, 1)],
            vec![frac(2, 1), frac(1, 3), frac(-2, 1)],
        )
        .unwrap();
        let expected = pareto_filter(&all_subsets(&p)).unwrap();
        assert_eq!(unconstrained_front(&p).into_points(), expected);
    }

    proptest! {
        #[test]
        fn matches_brute_force(c in prop::collection::vec(0i64..9, 0..9)) {
            let p = UnconstrainedBi::prop1(&c).unwrap();
            let snaps: Vec<BiFront> = subsetsum_front(&c).unwrap().collect();
            prop_assert_eq!(snaps.len(), c.len() + 1);
            let expected = pareto_filter(&all_subsets(&p)).unwrap();
            prop_assert_eq!(snaps.last().unwrap().points(), &expected[..]);
            for (w, ci) in snaps.windows(2).zip(&c) {
                prop_assert!(w[0].iter().all(|q| w[1].contains(q)));
                if *ci > 0 {
                    prop_assert!(w[1].len() > w[0].len());
                }
            }
        }

        #[test]
        fn general_matches_brute_force(items in prop::collection::vec((-5i64..6, -5i64..6), 0..8)) {
            let p = UnconstrainedBi::general(
                items.iter().map(|t| crate::rational::int(t.0)).collect(),
                items.iter().map(|t| crate::rational::int(t.1)).collect(),
            ).unwrap();
            let expected = pareto_filter(&all_subsets(&p)).unwrap();
            prop_assert_eq!(unconstrained_front(&p).into_points(), expected);
        }
    }
}
