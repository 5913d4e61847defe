//! LP ground truth by vertex and extreme-ray enumeration.
//!
//! A vertex of `{x : Ax ≥ b}` is a feasible point where `n` linearly
//! independent rows are tight; an extreme ray of the recession cone
//! `{d : Ad ≥ 0}` spans the null space of `n − 1` independent rows. For a
//! pointed polyhedron a linear objective is unbounded below iff some extreme
//! ray decreases it, and otherwise its minimum is attained at a vertex.

use alloc::vec::Vec;

use num_traits::Signed;

use super::linalg::{null_line, solve_square};
use super::Caps;
use crate::error::{Error, Result};
use crate::front::BiFront;
use crate::hull::hull_extremes_2d;
use crate::lp::{dot, LpInstance};
use crate::point::Point;
use crate::rational::Rational;

fn subsets(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(m, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut Vec::new(), &mut f);
}

/// All vertices of `{x : Ax ≥ b}` (deduplicated, sorted).
pub fn vertices(lp: &LpInstance) -> Vec<Vec<Rational>> {
    let n = lp.n();
    let mut out: Vec<Vec<Rational>> = Vec::new();
    if n == 0 {
        if lp.is_feasible(&[]) {
            out.push(Vec::new());
        }
        return out;
    }
    subsets(lp.m(), n, |rows| {
        let m: Vec<Vec<Rational>> = rows.iter().map(|&i| lp.a()[i].clone()).collect();
        let rhs: Vec<Rational> = rows.iter().map(|&i| lp.b()[i].clone()).collect();
        if let Some(x) = solve_square(&m, &rhs) {
            if lp.is_feasible(&x) {
                out.push(x);
            }
        }
    });
    out.sort();
    out.dedup();
    out
}

/// Extreme rays of `{d : Ad ≥ 0}` (up to positive scaling; may repeat).
pub fn extreme_rays(lp: &LpInstance) -> Vec<Vec<Rational>> {
    let n = lp.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let in_cone = |d: &[Rational]| lp.a().iter().all(|row| !dot(row, d).is_negative());
    subsets(lp.m(), n - 1, |rows| {
        let m: Vec<Vec<Rational>> = rows.iter().map(|&i| lp.a()[i].clone()).collect();
        if let Some(d) = null_line(&m, n) {
            let neg: Vec<Rational> = d.iter().map(|v| -v).collect();
            for cand in [d, neg] {
                if in_cone(&cand) {
                    out.push(cand);
                }
            }
        }
    });
    out
}

/// Whether the polyhedron has a vertex (its lineality space is trivial) or is
/// empty; only then are the vertex-based answers below complete.
fn pointed_or_empty(lp: &LpInstance) -> bool {
    let n = lp.n();
    let mut rows: Vec<Vec<Rational>> = lp.a().to_vec();
    // rank(A) == n
    if rows.is_empty() {
        return n == 0;
    }
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !num_traits::Zero::is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if num_traits::Zero::is_zero(&row[c]) {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (v, pv) in row.iter_mut().zip(&pivot) {
                *v -= &f * pv;
            }
        }
        rank += 1;
    }
    rank == n
}

fn check_size(lp: &LpInstance, caps: &Caps) -> Result<()> {
    let size = lp.n() + lp.m();
    if size > caps.lp_size {
        return Err(Error::Capacity {
            what: "LP n + m",
            size,
            cap: caps.lp_size,
        });
    }
    if !pointed_or_empty(lp) {
        return Err(Error::usage("brute-force LP needs a pointed feasible region"));
    }
    Ok(())
}

/// `Ok(None)` if infeasible, `Err(Unbounded)` if unbounded, else the optimal
/// value. The region must be pointed.
pub fn brute_lp_optimum(lp: &LpInstance, objective: &[Rational]) -> Result<Option<Rational>> {
    Ok(brute_lp_lex(lp, &[objective.to_vec()])?.map(|mut v| v.remove(0)))
}

/// Lexicographic minimum of the objective vectors over all vertices.
pub fn brute_lp_lex(
    lp: &LpInstance,
    objectives: &[Vec<Rational>],
) -> Result<Option<Vec<Rational>>> {
    check_size(lp, &Caps { lp_size: usize::MAX, ..Caps::default() })?;
    let verts = vertices(lp);
    if verts.is_empty() {
        return Ok(None);
    }
    // Unbounded at some stage iff a ray improves that stage while leaving all
    // earlier stages unchanged.
    for ray in extreme_rays(lp) {
        for obj in objectives {
            let slope = dot(obj, &ray);
            if slope.is_negative() {
                return Err(Error::Unbounded);
            }
            if slope.is_positive() {
                break;
            }
        }
    }
    let best = verts
        .iter()
        .map(|x| objectives.iter().map(|o| dot(o, x)).collect::<Vec<_>>())
        .min()
        .expect("nonempty");
    Ok(Some(best))
}

/// Nondominated extreme points of the upper image `{Cx : Ax ≥ b} + R²≥`.
pub fn brute_lp_vertices(lp: &LpInstance, caps: &Caps) -> Result<BiFront> {
    if lp.d() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: lp.d(),
        });
    }
    check_size(lp, caps)?;
    let verts = vertices(lp);
    if verts.is_empty() {
        return Err(Error::Infeasible);
    }
    // With an ideal point every ray maps into R²≥ and adds nothing.
    for ray in extreme_rays(lp) {
        if lp.c().iter().any(|row| dot(row, &ray).is_negative()) {
            return Err(Error::Unbounded);
        }
    }
    let images: Vec<Point> = verts.iter().map(|x| lp.image(x)).collect();
    hull_extremes_2d(&images)
}
