//! Text formats for instances, and the renderers used by the commands.
//!
//! Blank lines and lines starting with `#` are skipped everywhere. Numbers are
//! integers or `p/q` fractions.

use std::fmt::Write as _;

use bipareto_core::lp::LpInstance;
use bipareto_core::problems::{Arc, CostDigraph, CostGraph, Edge, KpInstance, UnconstrainedBi};
use bipareto_core::rational::{self, Rational};
use bipareto_core::Point;

use crate::error::CliError;

/// Meaningful lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((i + 1, l.split_whitespace().collect()))
        }
    })
}

fn num(line: usize, tok: &str) -> Result<Rational, CliError> {
    rational::parse(tok).map_err(|e| CliError::parse(line, e.to_string()))
}

fn count<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T, CliError> {
    tok.parse()
        .map_err(|_| CliError::parse(line, format!("expected a nonnegative integer, got {tok:?}")))
}

fn row(line: usize, toks: &[&str], len: usize) -> Result<Vec<Rational>, CliError> {
    if toks.len() != len {
        return Err(CliError::parse(line, format!("expected {len} entries, got {}", toks.len())));
    }
    toks.iter().map(|t| num(line, t)).collect()
}

/// One point per line, `x y`.
pub fn parse_points(text: &str) -> Result<Vec<Point>, CliError> {
    let pts: Vec<Point> = lines(text)
        .map(|(ln, toks)| row(ln, &toks, 2).map(Point::new))
        .collect::<Result<_, _>>()?;
    if pts.is_empty() {
        return Err(CliError::parse(0, "empty point set".into()));
    }
    Ok(pts)
}

/// `d n m`, then `d` objective rows, then `m` constraint rows `a₁ … aₙ b`
/// meaning `aᵀx ≥ b`.
pub fn parse_lp(text: &str) -> Result<LpInstance, CliError> {
    let mut it = lines(text);
    let (ln, head) = it.next().ok_or_else(|| CliError::parse(0, "empty LP file".into()))?;
    if head.len() != 3 {
        return Err(CliError::parse(ln, "header must be \"d n m\"".into()));
    }
    let (d, n, m): (usize, usize, usize) =
        (count(ln, head[0])?, count(ln, head[1])?, count(ln, head[2])?);
    let mut c = Vec::with_capacity(d);
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for k in 0..d + m {
        let (ln, toks) = it
            .next()
            .ok_or_else(|| CliError::parse(0, format!("expected {} rows, found {k}", d + m)))?;
        if k < d {
            c.push(row(ln, &toks, n)?);
        } else {
            let mut r = row(ln, &toks, n + 1)?;
            b.push(r.pop().expect("row has n + 1 entries"));
            a.push(r);
        }
    }
    if let Some((ln, _)) = it.next() {
        return Err(CliError::parse(ln, "trailing rows".into()));
    }
    Ok(LpInstance::new(n, a, b, c)?)
}

#[derive(Debug, Clone)]
pub enum Graph {
    Directed(CostDigraph),
    Undirected(CostGraph),
}

/// True when the first meaningful line starts a graph file.
pub fn looks_like_graph(text: &str) -> bool {
    lines(text)
        .next()
        .is_some_and(|(_, t)| t[0] == "directed" || t[0] == "undirected")
}

/// `directed|undirected n m [s t]`, then `m` lines `u v c₁ c₂`. Directed
/// graphs default to `s = 0`, `t = n − 1`.
pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let mut it = lines(text);
    let (ln, head) = it.next().ok_or_else(|| CliError::parse(0, "empty graph file".into()))?;
    let directed = match head[0] {
        "directed" => true,
        "undirected" => false,
        other => return Err(CliError::parse(ln, format!("unknown graph kind {other:?}"))),
    };
    if head.len() != 3 && head.len() != 5 {
        return Err(CliError::parse(ln, "header must be \"kind n m [s t]\"".into()));
    }
    let n: usize = count(ln, head[1])?;
    let m: usize = count(ln, head[2])?;
    let ends = if head.len() == 5 {
        Some((count::<usize>(ln, head[3])?, count::<usize>(ln, head[4])?))
    } else {
        None
    };
    let mut raw = Vec::with_capacity(m);
    for k in 0..m {
        let (ln, toks) = it
            .next()
            .ok_or_else(|| CliError::parse(0, format!("expected {m} arcs, found {k}")))?;
        if toks.len() != 4 {
            return Err(CliError::parse(ln, "arc line must be \"u v c1 c2\"".into()));
        }
        let (u, v): (usize, usize) = (count(ln, toks[0])?, count(ln, toks[1])?);
        raw.push((u, v, [num(ln, toks[2])?, num(ln, toks[3])?]));
    }
    // A gadget file may carry its `M:` trailer.
    if let Some((ln, toks)) = it.next() {
        if toks[0] != "M:" || it.next().is_some() {
            return Err(CliError::parse(ln, "trailing lines".into()));
        }
    }
    if directed {
        let (s, t) = ends.unwrap_or((0, n.saturating_sub(1)));
        let arcs = raw
            .into_iter()
            .map(|(tail, head, cost)| Arc { tail, head, cost })
            .collect();
        Ok(Graph::Directed(CostDigraph::new(n, arcs, s, t)?))
    } else {
        let edges = raw.into_iter().map(|(u, v, cost)| Edge { u, v, cost }).collect();
        Ok(Graph::Undirected(CostGraph::new(n, edges)?))
    }
}

pub fn write_digraph(g: &CostDigraph) -> String {
    let mut out = format!(
        "directed {} {} {} {}\n",
        g.node_count(),
        g.arcs().len(),
        g.source(),
        g.sink()
    );
    for a in g.arcs() {
        let _ = writeln!(
            out,
            "{} {} {} {}",
            a.tail,
            a.head,
            rational::format(&a.cost[0]),
            rational::format(&a.cost[1])
        );
    }
    out
}

pub fn write_graph(g: &CostGraph) -> String {
    let mut out = format!("undirected {} {}\n", g.node_count(), g.edges().len());
    for e in g.edges() {
        let _ = writeln!(
            out,
            "{} {} {} {}",
            e.u,
            e.v,
            rational::format(&e.cost[0]),
            rational::format(&e.cost[1])
        );
    }
    out
}

pub fn write_points(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        let _ = writeln!(out, "{} {}", rational::format(p.x()), rational::format(p.y()));
    }
    out
}

/// One line `c₁ … cₙ` (costs `(cᵢ, −cᵢ)`) or two lines giving both
/// objective vectors.
pub fn parse_subset(text: &str) -> Result<UnconstrainedBi, CliError> {
    let rows: Vec<(usize, Vec<&str>)> = lines(text).collect();
    match rows.as_slice() {
        [(ln, c)] => {
            let c: Vec<i64> = c
                .iter()
                .map(|t| t.parse().map_err(|_| CliError::parse(*ln, format!("bad weight {t:?}"))))
                .collect::<Result<_, _>>()?;
            Ok(UnconstrainedBi::prop1(&c)?)
        }
        [(l1, c1), (l2, c2)] => {
            let c1 = row(*l1, c1, c1.len())?;
            let c2 = row(*l2, c2, c1.len())?;
            Ok(UnconstrainedBi::general(c1, c2)?)
        }
        _ => Err(CliError::parse(0, "subset file needs one or two lines".into())),
    }
}

/// `n k1 k2`, then the `n` entries of `c1`, then those of `c2`.
pub fn parse_kp(text: &str) -> Result<KpInstance, CliError> {
    let rows: Vec<(usize, Vec<&str>)> = lines(text).collect();
    let [(l0, head), (l1, c1), (l2, c2)] = rows.as_slice() else {
        return Err(CliError::parse(0, "KP file needs exactly three lines".into()));
    };
    if head.len() != 3 {
        return Err(CliError::parse(*l0, "header must be \"n k1 k2\"".into()));
    }
    let n: usize = count(*l0, head[0])?;
    let vec = |ln: usize, toks: &[&str]| -> Result<Vec<u64>, CliError> {
        if toks.len() != n {
            return Err(CliError::parse(ln, format!("expected {n} entries, got {}", toks.len())));
        }
        toks.iter().map(|t| count(ln, t)).collect()
    };
    Ok(KpInstance::new(
        vec(*l1, c1)?,
        vec(*l2, c2)?,
        count(*l0, head[1])?,
        count(*l0, head[2])?,
    )?)
}

pub fn write_kp(kp: &KpInstance) -> String {
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    format!("{} {} {}\n{}\n{}\n", kp.n(), kp.k1(), kp.k2(), join(kp.c1()), join(kp.c2()))
}

pub fn point_strings(p: &Point) -> Vec<String> {
    p.components().iter().map(rational::format).collect()
}
