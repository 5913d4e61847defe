use alloc::collections::VecDeque;

use super::{improves, lambda_for, ordered};
use crate::error::Result;
use crate::log::{CallCounts, Emission, Enumerator};
use crate::oracle::{CountingOracle, ScalarizationOracle, Weight};
use crate::point::Point;

/// Dichotomic method with a lexicographic oracle; emits each extreme point
/// when it is discovered.
pub fn da_lex<O: ScalarizationOracle>(oracle: O) -> DaLex<O> {
    DaLex {
        oracle: CountingOracle::new(oracle),
        stage: Stage::First,
        queue: VecDeque::new(),
        emitted: 0,
    }
}

#[derive(Debug)]
enum Stage {
    First,
    Second(Point),
    Split,
    Done,
}

#[derive(Debug)]
pub struct DaLex<O> {
    oracle: CountingOracle<O>,
    stage: Stage,
    queue: VecDeque<(Point, Point)>,
    emitted: usize,
}

impl<O: ScalarizationOracle> DaLex<O> {
    fn emit(&mut self, point: Point) -> Emission {
        self.emitted += 1;
        Emission {
            index: self.emitted,
            point,
            calls: self.oracle.calls(),
        }
    }

    fn advance(&mut self) -> Result<Option<Emission>> {
        loop {
            match core::mem::replace(&mut self.stage, Stage::Done) {
                Stage::First => {
                    let y0 = self.oracle.lex(&Weight::first())?.point;
                    self.stage = Stage::Second(y0.clone());
                    return Ok(Some(self.emit(y0)));
                }
                Stage::Second(y0) => {
                    let y1 = self.oracle.lex(&Weight::second())?.point;
                    if y1 == y0 {
                        return Ok(None);
                    }
                    self.queue.push_back(ordered(y0, y1.clone()));
                    self.stage = Stage::Split;
                    return Ok(Some(self.emit(y1)));
                }
                Stage::Split => {
                    let Some((left, right)) = self.queue.pop_front() else {
                        return Ok(None);
                    };
                    self.stage = Stage::Split;
                    let lambda = lambda_for(&left, &right)?;
                    let candidate = self.oracle.lex(&lambda)?.point;
                    if !improves(&lambda, &candidate, &left) {
                        continue;
                    }
                    self.queue.push_back(ordered(left, candidate.clone()));
                    self.queue.push_back(ordered(candidate.clone(), right));
                    return Ok(Some(self.emit(candidate)));
                }
                Stage::Done => return Ok(None),
            }
        }
    }
}

impl<O: ScalarizationOracle> Iterator for DaLex<O> {
    type Item = Result<Emission>;

    fn next(&mut self) -> Option<Self::Item> {
        self.advance().transpose()
    }
}

impl<O: ScalarizationOracle> Enumerator for DaLex<O> {
    fn calls(&self) -> CallCounts {
        self.oracle.calls()
    }
}
