//! Gaussian elimination over the rationals.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::rational::Rational;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
fn rref(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Unique solution of the square system `M z = rhs`, if `M` is nonsingular.
pub fn solve_square(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// A generator of the null space of `M` (with `cols` columns) when that null
/// space is one-dimensional.
pub fn null_line(m: &[Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, cols);
    if pivots.len() + 1 != cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut d = alloc::vec![Rational::zero(); cols];
    d[free] = Rational::from_integer(1.into());
    for (row, &pc) in rows.iter().zip(&pivots) {
        d[pc] = -row[free].clone();
    }
    Some(d)
}
