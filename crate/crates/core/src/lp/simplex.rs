//! Dense two-phase primal simplex over exact rationals with Bland's rule.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{LpInstance, LpOutcome};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Pivot counts of one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SimplexStats {
    pub phase1_pivots: u64,
    pub phase2_pivots: u64,
    /// `C(n + m, m)` for the instance; exceeding it in either phase is
    /// reported as an error.
    pub iteration_cap: u64,
}

/// `min objective·x s.t. Ax ≥ b`.
pub fn simplex_solve(lp: &LpInstance, objective: &[Rational]) -> Result<LpOutcome> {
    simplex_solve_with_stats(lp, objective).map(|(o, _)| o)
}

pub fn simplex_solve_with_stats(
    lp: &LpInstance,
    objective: &[Rational],
) -> Result<(LpOutcome, SimplexStats)> {
    if objective.len() != lp.n() {
        return Err(Error::DimensionMismatch {
            expected: lp.n(),
            found: objective.len(),
        });
    }
    let cap = binomial((lp.n() + lp.m()) as u64, lp.m() as u64);
    let mut t = Tableau::new(lp);
    let mut stats = SimplexStats {
        iteration_cap: cap,
        ..SimplexStats::default()
    };

    stats.phase1_pivots = t.phase1(cap)?;
    if !t.obj[t.rhs_col()].is_zero() {
        return Ok((LpOutcome::Infeasible, stats));
    }
    t.drop_artificials();

    let cost = t.standard_cost(objective);
    t.set_objective(&cost);
    match t.run(t.n_real, cap)? {
        Phase::Optimal(p) => stats.phase2_pivots = p,
        Phase::Unbounded(p) => {
            stats.phase2_pivots = p;
            return Ok((LpOutcome::Unbounded, stats));
        }
    }
    let value = -t.obj[t.rhs_col()].clone();
    Ok((
        LpOutcome::Optimal {
            x: t.primal(lp.n()),
            value,
        },
        stats,
    ))
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u64::MAX,
        };
    }
    acc
}

enum Phase {
    Optimal(u64),
    Unbounded(u64),
}

/// Columns: `x⁺ (n) | x⁻ (n) | surplus (m) | artificial (m)`, then the
/// right-hand side.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    basis: Vec<usize>,
    /// Number of non-artificial columns.
    n_real: usize,
    width: usize,
}

impl Tableau {
    fn new(lp: &LpInstance) -> Self {
        let (n, m) = (lp.n(), lp.m());
        let n_real = 2 * n + m;
        let width = n_real + m;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for (i, (a, b)) in lp.a().iter().zip(lp.b()).enumerate() {
            let mut row = vec![Rational::zero(); width + 1];
            // Flip rows with negative rhs; the surplus column then has
            // coefficient +1 and can start in the basis.
            let flip = b.is_negative();
            for (j, v) in a.iter().enumerate() {
                let v = if flip { -v } else { v.clone() };
                row[n + j] = -v.clone();
                row[j] = v;
            }
            row[2 * n + i] = if flip {
                Rational::from_integer(1.into())
            } else {
                Rational::from_integer((-1).into())
            };
            row[width] = b.abs();
            if flip {
                basis.push(2 * n + i);
            } else {
                row[n_real + i] = Rational::from_integer(1.into());
                basis.push(n_real + i);
            }
            rows.push(row);
        }
        let mut obj = vec![Rational::zero(); width + 1];
        for (row, &bv) in rows.iter().zip(&basis) {
            if bv >= n_real {
                for (o, v) in obj.iter_mut().zip(row) {
                    if v.is_zero() {
                        continue;
                    }
                    *o -= v;
                }
            }
        }
        for o in &mut obj[n_real..width] {
            *o = Rational::zero();
        }
        Tableau {
            rows,
            obj,
            basis,
            n_real,
            width,
        }
    }

    fn rhs_col(&self) -> usize {
        self.width
    }

    fn phase1(&mut self, cap: u64) -> Result<u64> {
        match self.run(self.width, cap)? {
            Phase::Optimal(p) => Ok(p),
            Phase::Unbounded(_) => Err(Error::Internal("phase 1 reported unbounded".into())),
        }
    }

    /// Pivots artificial columns out of the basis and drops rows that turn
    /// out to be redundant, then forgets the artificial columns.
    fn drop_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.n_real {
                match (0..self.n_real).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    fn standard_cost(&self, objective: &[Rational]) -> Vec<Rational> {
        let n = objective.len();
        let mut cost = vec![Rational::zero(); self.width];
        for (j, c) in objective.iter().enumerate() {
            cost[j] = c.clone();
            cost[n + j] = -c;
        }
        cost
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        let mut obj: Vec<Rational> = cost.to_vec();
        obj.push(Rational::zero());
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[bv];
            if cb.is_zero() {
                continue;
            }
            for (o, v) in obj.iter_mut().zip(row) {
                if !v.is_zero() {
                    *o -= cb * v;
                }
            }
        }
        self.obj = obj;
    }

    /// Bland's rule over the first `allowed` columns.
    fn run(&mut self, allowed: usize, cap: u64) -> Result<Phase> {
        let mut pivots = 0u64;
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return Ok(Phase::Optimal(pivots));
            };
            let rhs = self.width;
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((leave, _)) = leave else {
                return Ok(Phase::Unbounded(pivots));
            };
            if pivots >= cap {
                return Err(Error::Internal(alloc::format!(
                    "simplex iteration cap {cap} reached"
                )));
            }
            self.pivot(leave, enter);
            pivots += 1;
        }
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot_row = core::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            eliminate(row, &pivot_row, e);
        }
        eliminate(&mut self.obj, &pivot_row, e);
        self.rows[r] = pivot_row;
        self.basis[r] = e;
    }

    fn primal(&self, n: usize) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); 2 * n];
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            if bv < 2 * n {
                z[bv] = row[self.width].clone();
            }
        }
        (0..n).map(|j| &z[j] - &z[n + j]).collect()
    }
}

fn eliminate(row: &mut [Rational], pivot_row: &[Rational], e: usize) {
    let f = row[e].clone();
    if f.is_zero() {
        return;
    }
    for (v, pv) in row.iter_mut().zip(pivot_row) {
        if !pv.is_zero() {
            *v -= &f * pv;
        }
    }
}
