//! Dense exact elimination over ℚ for the small blocks that finite
//! supports produce.

use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type DenseMatrix = Vec<Vec<Scalar>>;

/// Rank by forward elimination. Rows may have differing lengths only if
/// all are empty; otherwise they must share a width.
pub fn rank(mut rows: DenseMatrix) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Gauss-Jordan inverse of a square matrix; `None` when singular.
pub fn inverse(mut m: DenseMatrix) -> Option<DenseMatrix> {
    let n = m.len();
    let mut inv: DenseMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].recip();
        for c in 0..n {
            m[col][c] *= &p;
            inv[col][c] *= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..n {
                let dm = &factor * &m[col][c];
                m[r][c] -= dm;
                let di = &factor * &inv[col][c];
                inv[r][c] -= di;
            }
        }
    }
    Some(inv)
}
