//! Streaming record writer.

use std::io::Write;
use std::time::Instant;

use bipareto_core::{CallCounts, Point};
use serde_json::{json, Value};

use crate::config::Format;
use crate::formats::point_strings;

pub struct Sink<W: Write> {
    out: W,
    format: Format,
    start: Option<Instant>,
    count: usize,
    last: CallCounts,
    max_gap_lex: u64,
    header_done: bool,
}

impl<W: Write> Sink<W> {
    pub fn new(out: W, format: Format, timestamps: bool) -> Self {
        Sink {
            out,
            format,
            start: timestamps.then(Instant::now),
            count: 0,
            last: CallCounts::default(),
            max_gap_lex: 0,
            header_done: false,
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Writes one emitted point; `calls` are cumulative.
    pub fn point(&mut self, point: &Point, calls: CallCounts) -> std::io::Result<()> {
        self.count += 1;
        self.max_gap_lex = self.max_gap_lex.max(calls.lex - self.last.lex);
        self.last = calls;
        let t = self.start.map(|s| s.elapsed().as_nanos() as u64);
        match self.format {
            Format::Ndjson => {
                let rec = json!({
                    "i": self.count,
                    "point": point_strings(point),
                    "ws_calls": calls.ws,
                    "lex_calls": calls.lex,
                    "eps_calls": calls.eps,
                    "t_mono_ns": t,
                });
                writeln!(self.out, "{rec}")?;
            }
            Format::Table => {
                if !self.header_done {
                    self.header_done = true;
                    writeln!(self.out, "{:>5}  {:<24} {:>8} {:>8} {:>8}", "i", "point", "ws", "lex", "eps")?;
                }
                writeln!(
                    self.out,
                    "{:>5}  {:<24} {:>8} {:>8} {:>8}",
                    self.count,
                    point.to_string(),
                    calls.ws,
                    calls.lex,
                    calls.eps
                )?;
            }
        }
        self.out.flush()
    }

    /// The closing record. `calls` are the final totals, which may exceed the
    /// counters at the last emission.
    pub fn summary(&mut self, calls: CallCounts) -> std::io::Result<()> {
        let rec = json!({
            "count": self.count,
            "total_calls": calls.total(),
            "max_interemission_lex_calls": self.max_gap_lex,
            "ws_calls": calls.ws,
            "lex_calls": calls.lex,
            "eps_calls": calls.eps,
        });
        self.record(rec)
    }

    /// A free-form record: one JSON line, or `key value` pairs in a table.
    pub fn record(&mut self, rec: Value) -> std::io::Result<()> {
        match self.format {
            Format::Ndjson => writeln!(self.out, "{rec}")?,
            Format::Table => {
                let Value::Object(map) = rec else {
                    unreachable!("records are objects")
                };
                let cells: Vec<String> = map
                    .iter()
                    .map(|(k, v)| match v {
                        Value::String(s) => format!("{k}={s}"),
                        v => format!("{k}={v}"),
                    })
                    .collect();
                writeln!(self.out, "{}", cells.join("  "))?;
            }
        }
        self.out.flush()
    }

    pub fn raw(&mut self, text: &str) -> std::io::Result<()> {
        self.out.write_all(text.as_bytes())?;
        self.out.flush()
    }
}
