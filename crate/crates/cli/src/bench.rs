//! Delay instrumentation. Verdicts use oracle-call counters only.

use std::io::Write;

use bipareto_core::dichotomic::{da_lex, da_polydelay};
use bipareto_core::epsfront::eps_front_2d;
use bipareto_core::{CallCounts, Emission, Enumerator, ScalarizationOracle};
use serde_json::json;

use crate::config::{name, Algorithm, RunConfig};
use crate::error::CliError;
use crate::formats::point_strings;
use crate::gen;
use crate::output::Sink;

/// Emissions of one run, its final counters and, for the polynomial-delay
/// variant, the main-loop iteration count.
pub struct Trace {
    pub emissions: Vec<Emission>,
    pub calls: CallCounts,
    pub iterations: Option<usize>,
}

fn drain<E: Enumerator>(run: &mut E) -> Result<(Vec<Emission>, CallCounts), CliError> {
    let emissions = run.by_ref().collect::<Result<Vec<_>, _>>()?;
    Ok((emissions, run.calls()))
}

pub fn trace<O: ScalarizationOracle>(algorithm: Algorithm, oracle: O) -> Result<Trace, CliError> {
    Ok(match algorithm {
        Algorithm::DaLex => {
            let (emissions, calls) = drain(&mut da_lex(oracle))?;
            Trace { emissions, calls, iterations: None }
        }
        Algorithm::DaPolydelay => {
            let mut run = da_polydelay(oracle);
            let (emissions, calls) = drain(&mut run)?;
            Trace { emissions, calls, iterations: Some(run.iterations()) }
        }
        Algorithm::EpsSweep => {
            let (emissions, calls) = drain(&mut eps_front_2d(oracle))?;
            Trace { emissions, calls, iterations: None }
        }
        other => return Err(CliError::Usage(format!("bench-delay does not time {}", name(other)))),
    })
}

/// Checks one trace; `None` means it passes.
pub fn check(algorithm: Algorithm, t: &Trace) -> Option<String> {
    let k = t.emissions.len() as u64;
    match algorithm {
        Algorithm::DaPolydelay => {
            let mut prev = 0;
            for e in &t.emissions {
                if e.calls.lex - prev > 2 {
                    return Some(format!("{} lex calls before emission {}", e.calls.lex - prev, e.index));
                }
                prev = e.calls.lex;
            }
            match t.iterations {
                Some(it) if it as u64 != k => Some(format!("{it} iterations for {k} emissions")),
                _ => None,
            }
        }
        Algorithm::DaLex => {
            for e in &t.emissions {
                if e.calls.lex > 2 * e.index as u64 - 1 {
                    return Some(format!("{} lex calls by emission {}", e.calls.lex, e.index));
                }
            }
            // Two seed calls are unavoidable even for a single point.
            let bound = (2 * k).saturating_sub(1).max(2);
            (t.calls.lex > bound).then(|| format!("{} lex calls in total for {k} points", t.calls.lex))
        }
        Algorithm::EpsSweep => (t.calls.eps != k + 1)
            .then(|| format!("{} eps calls for {k} points", t.calls.eps)),
        _ => Some("not a streaming algorithm".into()),
    }
}

fn claim(algorithm: Algorithm) -> &'static str {
    match algorithm {
        Algorithm::DaPolydelay => "max inter-emission lex calls <= 2, one emission per iteration",
        Algorithm::DaLex => "cumulative lex calls at emission i <= 2i-1",
        Algorithm::EpsSweep => "eps calls = count + 1",
        _ => "",
    }
}

pub fn bench_delay<W: Write>(cfg: &RunConfig, algorithm: Algorithm, sink: &mut Sink<W>) -> Result<(), CliError> {
    let mut traces = Vec::new();
    if cfg.input.is_some() {
        let loaded = cfg.load()?;
        traces.push(trace(algorithm, &*loaded.oracle(cfg)?)?);
    } else {
        for r in 0..cfg.runs as u64 {
            let pts = gen::points(&mut gen::rng(cfg.seed.wrapping_add(r)), cfg.points, 1000);
            let oracle = bipareto_core::brute::ExplicitSetOracle::from_points(pts)?;
            traces.push(trace(algorithm, oracle)?);
        }
    }

    let mut failure = None;
    let (mut emitted, mut max_gap, mut max_lex) = (0, 0, 0);
    for (run, t) in traces.iter().enumerate() {
        let mut prev = CallCounts::default();
        for e in &t.emissions {
            sink.record(json!({
                "run": run,
                "i": e.index,
                "point": point_strings(&e.point),
                "delta_ws": e.calls.ws - prev.ws,
                "delta_lex": e.calls.lex - prev.lex,
                "delta_eps": e.calls.eps - prev.eps,
                "lex_calls": e.calls.lex,
            }))?;
            max_gap = max_gap.max(e.calls.lex - prev.lex);
            prev = e.calls;
        }
        emitted += t.emissions.len();
        max_lex = max_lex.max(t.calls.lex);
        if failure.is_none() {
            failure = check(algorithm, t).map(|why| format!("run {run}: {why}"));
        }
    }
    let verdict = if failure.is_none() { "PASS" } else { "FAIL" };
    sink.record(json!({
        "algorithm": name(algorithm),
        "runs": traces.len(),
        "emissions": emitted,
        "max_interemission_lex_calls": max_gap,
        "max_total_lex_calls": max_lex,
        "max_total_eps_calls": traces.iter().map(|t| t.calls.eps).max().unwrap_or(0),
        "check": claim(algorithm),
        "verdict": verdict,
    }))?;
    match failure {
        Some(why) => Err(CliError::Verdict(why)),
        None => Ok(()),
    }
}
