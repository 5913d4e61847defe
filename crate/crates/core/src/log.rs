//! Oracle-call instrumentation for streaming enumerators.
//!
//! Enumerators count their own oracle calls and attach the cumulative counts
//! to every [`Emission`]. Wall-clock stamps are added by the caller, since the
//! core has no clock.

use alloc::vec::Vec;

use crate::error::Result;
use crate::point::Point;

/// A streaming enumerator: yields emissions until exhausted, and reports its
/// cumulative oracle calls at any time.
pub trait Enumerator: Iterator<Item = Result<Emission>> {
    fn calls(&self) -> CallCounts;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CallCounts {
    pub ws: u64,
    pub lex: u64,
    pub eps: u64,
}

impl CallCounts {
    pub fn total(&self) -> u64 {
        self.ws + self.lex + self.eps
    }
}

/// One emitted point with the cumulative call counts at emission time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emission {
    /// 1-based emission index.
    pub index: usize,
    pub point: Point,
    pub calls: CallCounts,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogEvent {
    pub emission: Emission,
    /// Nanoseconds since the start of the run, or 0 when untimed.
    pub elapsed_ns: u64,
}

/// The full trace of a run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationLog {
    pub events: Vec<LogEvent>,
    /// Cumulative counts when the enumerator finished.
    pub final_calls: CallCounts,
}

impl EnumerationLog {
    pub fn new() -> Self {
        EnumerationLog::default()
    }

    pub fn record(&mut self, emission: Emission, elapsed_ns: u64) {
        debug_assert_eq!(emission.index, self.events.len() + 1);
        self.events.push(LogEvent {
            emission,
            elapsed_ns,
        });
    }

    /// Drains an enumerator into a log without timing.
    pub fn drain<E: Enumerator>(mut run: E) -> Result<Self> {
        let mut log = EnumerationLog::new();
        for e in run.by_ref() {
            log.record(e?, 0);
        }
        log.final_calls = run.calls();
        Ok(log)
    }

    pub fn points(&self) -> Vec<Point> {
        self.events.iter().map(|e| e.emission.point.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Calls of each kind made between consecutive emissions (the first entry
    /// counts from the start of the run).
    pub fn inter_emission_calls(&self) -> Vec<CallCounts> {
        let mut prev = CallCounts::default();
        self.events
            .iter()
            .map(|e| {
                let c = e.emission.calls;
                let d = CallCounts {
                    ws: c.ws - prev.ws,
                    lex: c.lex - prev.lex,
                    eps: c.eps - prev.eps,
                };
                prev = c;
                d
            })
            .collect()
    }

    pub fn max_inter_emission_lex(&self) -> u64 {
        self.inter_emission_calls()
            .iter()
            .map(|c| c.lex)
            .max()
            .unwrap_or(0)
    }
}
