//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::rat::Rat;

/// Row-reduce a copy of `rows` (each of width `ncols`) and return the rank.
pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m, ncols).len()
}

/// In-place reduced row echelon form on the first `ncols` columns; returns the
/// pivot columns (one per nonzero row, rows reordered to the top).
fn echelon(m: &mut [Vec<Rat>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solve `A x = b`. Returns the solution with every free variable set to 0,
/// or `None` when the system is inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat], ncols: usize) -> Option<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.resize(ncols, Rat::zero());
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m, ncols);
    if m.iter().skip(pivots.len()).any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

/// A basis of `{x : A x = 0}`, one vector per free column.
pub fn null_space(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rat::zero(); ncols];
            v[free] = Rat::from_integer(1.into());
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    #[test]
    fn solves_and_detects_inconsistency() {
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert_eq!(solve(&a, &[int(3), int(1)], 2), Some(vec![int(2), int(1)]));
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&a, &[int(1), int(3)], 2), None);
        assert_eq!(solve(&a, &[int(1), int(2)], 2), Some(vec![int(1), int(0)]));
        assert_eq!(rank(&a, 2), 1);
        assert_eq!(rank(&[vec![rat(1, 2), int(0)], vec![int(0), int(3)]], 2), 2);
    }

    #[test]
    fn null_space_spans_kernel() {
        let a = vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(7)]];
        let k = null_space(&a, 3);
        assert_eq!(k, vec![vec![int(-2), int(1), int(0)]]);
        assert!(null_space(&[vec![int(1), int(0)], vec![int(0), int(1)]], 2).is_empty());
    }
}
