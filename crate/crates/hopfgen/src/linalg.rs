//! Exact dense linear algebra over the rationals: row reduction, solving,
//! inverses, and nullspaces. Matrices are row-major `Vec<Vec<Scalar>>`.

use num::traits::Zero;

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

/// Row-reduces `m` in place to reduced row echelon form and returns the pivot
/// columns in the order they were found.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for c2 in 0..cols {
                    let sub = &f * &m[r][c2];
                    m[i][c2] = &m[i][c2] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mut m: Matrix) -> usize {
    rref(&mut m).len()
}

/// Solves `A x = b`; returns one solution if the system is consistent.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse requires a square matrix");
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j {
                    crate::scalar::one()
                } else {
                    Scalar::zero()
                });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// A basis of the right nullspace of `a` (vectors of length `cols`).
pub fn nullspace(a: &Matrix, cols: usize) -> Vec<Vec<Scalar>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = crate::scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][f].clone();
        }
        basis.push(v);
    }
    basis
}
