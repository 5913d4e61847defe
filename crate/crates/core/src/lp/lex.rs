use alloc::vec::Vec;

use super::{simplex::simplex_solve, LpInstance, LpOutcome};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Lexicographic minimization of `objectives` over `Ax ≥ b`.
///
/// Each stage is solved by the simplex and its optimal value is pinned as an
/// equality before the next stage. The returned value lists every stage's
/// optimum. `Unbounded` is reported at whichever stage it occurs.
pub fn lex_lp_solve(
    lp: &LpInstance,
    objectives: &[Vec<Rational>],
) -> Result<LpOutcome<Vec<Rational>>> {
    if objectives.is_empty() {
        return Err(Error::usage("lexicographic LP needs at least one objective"));
    }
    let mut work = lp.clone();
    let mut values = Vec::with_capacity(objectives.len());
    let mut x = Vec::new();
    for (stage, obj) in objectives.iter().enumerate() {
        match simplex_solve(&work, obj)? {
            LpOutcome::Optimal { x: xs, value } => {
                if stage + 1 < objectives.len() {
                    work.push_eq(obj.clone(), value.clone())?;
                }
                values.push(value);
                x = xs;
            }
            LpOutcome::Infeasible if stage == 0 => return Ok(LpOutcome::Infeasible),
            LpOutcome::Infeasible => {
                return Err(Error::Internal(
                    "pinned lexicographic stage became infeasible".into(),
                ))
            }
            LpOutcome::Unbounded => return Ok(LpOutcome::Unbounded),
        }
    }
    Ok(LpOutcome::Optimal { x, value: values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::simplex_solve;
    use crate::rational::int;
    use alloc::vec;

    fn region() -> LpInstance {
        LpInstance::from_ints(
            &[&[1, 0], &[0, 1]],
            &[(&[1, 1], 2), (&[1, 0], 0), (&[0, 1], 0)],
        )
        .unwrap()
    }

    #[test]
    fn second_then_first() {
        let lp = region();
        let objs = vec![lp.objective(1).to_vec(), lp.objective(0).to_vec()];
        let (x, v) = lex_lp_solve(&lp, &objs).unwrap().into_optimum().unwrap();
        assert_eq!(x, vec![int(2), int(0)]);
        assert_eq!(v, vec![int(0), int(2)]);
    }

    #[test]
    fn first_then_second() {
        let lp = region();
        let objs = vec![lp.objective(0).to_vec(), lp.objective(1).to_vec()];
        let (x, _) = lex_lp_solve(&lp, &objs).unwrap().into_optimum().unwrap();
        assert_eq!(x, vec![int(0), int(2)]);
    }

    #[test]
    fn one_stage_matches_simplex() {
        let lp = region();
        let obj = vec![int(1), int(3)];
        let single = simplex_solve(&lp, &obj).unwrap();
        let lex = lex_lp_solve(&lp, &[obj]).unwrap();
        match (single, lex) {
            (LpOutcome::Optimal { x, value }, LpOutcome::Optimal { x: lx, value: lv }) => {
                assert_eq!(x, lx);
                assert_eq!(vec![value], lv);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unbounded_later_stage() {
        let lp = region();
        let objs = vec![lp.objective(1).to_vec(), vec![int(-1), int(0)]];
        assert_eq!(lex_lp_solve(&lp, &objs).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn infeasible_first_stage() {
        let lp = LpInstance::from_ints(&[&[1]], &[(&[-1], 1), (&[1], 0)]).unwrap();
        assert_eq!(
            lex_lp_solve(&lp, &[vec![int(1)]]).unwrap(),
            LpOutcome::Infeasible
        );
    }
}
