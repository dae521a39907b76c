//! Dense exact Gauss-Jordan elimination on row-major rational matrices.

use crate::scalars::ExactScalar;

/// Reduces `a` (`rows x cols`, row-major) to reduced row-echelon form in place
/// and returns the pivot columns.
pub fn rref(a: &mut [ExactScalar], rows: usize, cols: usize) -> Vec<usize> {
    debug_assert_eq!(a.len(), rows * cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[r * cols + c].recip().expect("nonzero pivot");
        for j in c..cols {
            if !a[r * cols + j].is_zero() {
                a[r * cols + j] = &a[r * cols + j] * &inv;
            }
        }
        let pivot_row: Vec<(usize, ExactScalar)> = (c..cols)
            .filter(|&j| !a[r * cols + j].is_zero())
            .map(|j| (j, a[r * cols + j].clone()))
            .collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            for (j, v) in &pivot_row {
                a[i * cols + j] -= &(&f * v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &[ExactScalar], rows: usize, cols: usize) -> usize {
    let mut work = a.to_vec();
    rref(&mut work, rows, cols).len()
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &[ExactScalar], n: usize) -> Option<Vec<ExactScalar>> {
    let w = 2 * n;
    let mut aug = vec![ExactScalar::zero(); n * w];
    for i in 0..n {
        for j in 0..n {
            aug[i * w + j] = a[i * n + j].clone();
        }
        aug[i * w + n + i] = ExactScalar::one();
    }
    let pivots = rref(&mut aug, n, w);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        out.extend_from_slice(&aug[i * w + n..i * w + w]);
    }
    Some(out)
}
