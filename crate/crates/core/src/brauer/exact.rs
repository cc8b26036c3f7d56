//! Exact rational fallback for the cone and decomposition solves.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::Cyclotomic;

/// Flattens values into rational coordinates over `Q(zeta_e)`.
pub(super) fn coordinates(values: &[Cyclotomic], e: u32) -> Vec<BigRational> {
    values.iter().flat_map(|v| v.coordinates(e)).collect()
}

/// Solves `x A = b` exactly, where `A` has linearly independent rows.
/// Returns `None` when `b` is outside the row space.
pub(super) fn solve_left(rows: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = rows.len();
    let cols = b.len();
    // Augmented system A^T x = b, one equation per coordinate.
    let mut m: Vec<Vec<BigRational>> = (0..cols)
        .map(|j| {
            let mut r: Vec<BigRational> = rows.iter().map(|row| row[j].clone()).collect();
            r.push(b[j].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..=n {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        if c == n {
            return None;
        }
        m.swap(r, p);
        let inv = BigRational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() < n {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][n].clone();
    }
    Some(x)
}
