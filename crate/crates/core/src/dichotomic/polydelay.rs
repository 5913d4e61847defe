use alloc::collections::VecDeque;

use super::{improves, lambda_for, ordered};
use crate::error::Result;
use crate::log::{CallCounts, Emission, Enumerator};
use crate::oracle::{CountingOracle, ScalarizationOracle, Weight};
use crate::point::Point;

/// Dichotomic method with polynomial delay.
///
/// Probing a pair `(l, r)` either certifies the gap or yields a new extreme
/// point `y`, which is queued as the triple `(y, l, r)` instead of being
/// emitted. Dequeuing a triple probes its two gaps `(l, y)` and `(y, r)` and
/// then emits `y`, so every main-loop iteration emits exactly one point after
/// at most two oracle calls.
pub fn da_polydelay<O: ScalarizationOracle>(oracle: O) -> DaPolyDelay<O> {
    DaPolyDelay {
        oracle: CountingOracle::new(oracle),
        stage: Stage::Seed,
        triples: VecDeque::new(),
        emitted: 0,
        iterations: 0,
    }
}

#[derive(Debug)]
enum Stage {
    Seed,
    SeedPair(Point, Point),
    Triples,
    Done,
}

/// A withheld point and the pair whose gap produced it.
#[derive(Debug, Clone)]
struct Triple {
    point: Point,
    left: Point,
    right: Point,
}

#[derive(Debug)]
pub struct DaPolyDelay<O> {
    oracle: CountingOracle<O>,
    stage: Stage,
    triples: VecDeque<Triple>,
    emitted: usize,
    iterations: usize,
}

impl<O: ScalarizationOracle> DaPolyDelay<O> {
    /// Main-loop iterations run so far; always equal to the emission count.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Probes the gap between `a` and `b`; queues a triple if it is not empty.
    fn probe(&mut self, a: Point, b: Point) -> Result<()> {
        let (left, right) = ordered(a, b);
        let lambda = lambda_for(&left, &right)?;
        let candidate = self.oracle.lex(&lambda)?.point;
        if improves(&lambda, &candidate, &left) {
            self.triples.push_back(Triple {
                point: candidate,
                left,
                right,
            });
        }
        Ok(())
    }

    fn emit(&mut self, point: Point) -> Emission {
        self.iterations += 1;
        self.emitted += 1;
        Emission {
            index: self.emitted,
            point,
            calls: self.oracle.calls(),
        }
    }

    fn advance(&mut self) -> Result<Option<Emission>> {
        match core::mem::replace(&mut self.stage, Stage::Done) {
            Stage::Seed => {
                let y0 = self.oracle.lex(&Weight::first())?.point;
                let y1 = self.oracle.lex(&Weight::second())?.point;
                if y0 != y1 {
                    self.stage = Stage::SeedPair(y0.clone(), y1);
                }
                Ok(Some(self.emit(y0)))
            }
            Stage::SeedPair(y0, y1) => {
                self.probe(y0, y1.clone())?;
                self.stage = Stage::Triples;
                Ok(Some(self.emit(y1)))
            }
            Stage::Triples => {
                let Some(t) = self.triples.pop_front() else {
                    return Ok(None);
                };
                self.probe(t.left, t.point.clone())?;
                self.probe(t.point.clone(), t.right)?;
                self.stage = Stage::Triples;
                Ok(Some(self.emit(t.point)))
            }
            Stage::Done => Ok(None),
        }
    }
}

impl<O: ScalarizationOracle> Iterator for DaPolyDelay<O> {
    type Item = Result<Emission>;

    fn next(&mut self) -> Option<Self::Item> {
        self.advance().transpose()
    }
}

impl<O: ScalarizationOracle> Enumerator for DaPolyDelay<O> {
    fn calls(&self) -> CallCounts {
        self.oracle.calls()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::ExplicitSetOracle;
    use crate::log::EnumerationLog;
    use alloc::vec::Vec;

    fn oracle(v: &[(i64, i64)]) -> ExplicitSetOracle {
        ExplicitSetOracle::from_points(v.iter().map(|&(x, y)| Point::ints(x, y)).collect())
            .unwrap()
    }

    fn sorted(log: &EnumerationLog) -> Vec<Point> {
        let mut p = log.points();
        p.sort();
        p
    }

    #[test]
    fn five_points() {
        let mut run = da_polydelay(oracle(&[(0, 4), (1, 2), (2, 1), (4, 0), (3, 3)]));
        let mut log = EnumerationLog::new();
        for e in run.by_ref() {
            log.record(e.unwrap(), 0);
        }
        assert_eq!(
            sorted(&log),
            [(0, 4), (1, 2), (2, 1), (4, 0)].map(|(x, y)| Point::ints(x, y))
        );
        assert!(log.max_inter_emission_lex() <= 2);
        assert_eq!(run.iterations(), log.len());
        assert_eq!(run.calls().lex, 7);
    }

    #[test]
    fn collinear() {
        let log = EnumerationLog::drain(da_polydelay(oracle(&[(0, 2), (1, 1), (2, 0)]))).unwrap();
        assert_eq!(sorted(&log), [Point::ints(0, 2), Point::ints(2, 0)]);
        assert!(log.inter_emission_calls().iter().all(|c| c.lex <= 2));
    }

    #[test]
    fn singleton() {
        let log = EnumerationLog::drain(da_polydelay(oracle(&[(5, 5)]))).unwrap();
        assert_eq!(log.points(), [Point::ints(5, 5)]);
        assert_eq!(log.final_calls.lex, 2);
    }
}
