//! Minor determinants.
//!
//! Blocks of size up to four are expanded by cofactors, so small integer
//! matrices produce exact results; larger blocks go through LU with partial
//! pivoting.

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64, ONE, ZERO};

const COFACTOR_LIMIT: usize = 4;

/// Determinant of the block of `a` with the given rows and columns.
///
/// The row and column lists may come in any order; a permuted list flips the
/// sign, a repeated index gives zero.
pub fn minor_det(a: &ComplexMatrix, rows: &[usize], cols: &[usize]) -> Result<C64> {
    if rows.len() != cols.len() {
        return Err(Error::Shape(format!(
            "minor needs as many rows as columns, got {} and {}",
            rows.len(),
            cols.len()
        )));
    }
    if let Some(&i) = rows.iter().find(|&&i| i >= a.rows()) {
        return Err(Error::InvalidIndex(format!("row {i} out of range 0..{}", a.rows())));
    }
    if let Some(&j) = cols.iter().find(|&&j| j >= a.cols()) {
        return Err(Error::InvalidIndex(format!("column {j} out of range 0..{}", a.cols())));
    }
    Ok(det_of_block(a, rows, cols))
}

/// Determinant of a square matrix.
pub fn determinant(a: &ComplexMatrix) -> Result<C64> {
    let n = a.require_square()?;
    let idx: Vec<usize> = (0..n).collect();
    Ok(det_of_block(a, &idx, &idx))
}

pub(crate) fn det_of_block(a: &ComplexMatrix, rows: &[usize], cols: &[usize]) -> C64 {
    let s = rows.len();
    if s <= COFACTOR_LIMIT {
        cofactor_det(a, rows, cols)
    } else {
        lu_det(a.select(rows, cols))
    }
}

fn cofactor_det(a: &ComplexMatrix, rows: &[usize], cols: &[usize]) -> C64 {
    let e = |i: usize, j: usize| a[(rows[i], cols[j])];
    match rows.len() {
        0 => ONE,
        1 => e(0, 0),
        2 => e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0),
        3 => {
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        }
        s => {
            // expansion along the first row
            let mut total = ZERO;
            let mut sub_cols = Vec::with_capacity(s - 1);
            for k in 0..s {
                let head = e(0, k);
                if head == ZERO {
                    continue;
                }
                sub_cols.clear();
                sub_cols.extend(cols.iter().enumerate().filter(|&(c, _)| c != k).map(|(_, &j)| j));
                let minor = cofactor_det(a, &rows[1..], &sub_cols);
                if k % 2 == 0 {
                    total += head * minor;
                } else {
                    total -= head * minor;
                }
            }
            total
        }
    }
}

fn lu_det(mut m: ComplexMatrix) -> C64 {
    let n = m.rows();
    let mut det = ONE;
    for k in 0..n {
        let pivot = (k..n).max_by(|&x, &y| m[(x, k)].norm().total_cmp(&m[(y, k)].norm())).unwrap_or(k);
        if m[(pivot, k)] == ZERO {
            return ZERO;
        }
        if pivot != k {
            for j in 0..n {
                let t = m[(k, j)];
                m[(k, j)] = m[(pivot, j)];
                m[(pivot, j)] = t;
            }
            det = -det;
        }
        let p = m[(k, k)];
        det *= p;
        for i in k + 1..n {
            let f = m[(i, k)] / p;
            if f == ZERO {
                continue;
            }
            for j in k + 1..n {
                let t = m[(k, j)];
                m[(i, j)] -= f * t;
            }
        }
    }
    det
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
pub fn inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.require_square()?;
    let mut m = a.clone();
    let mut inv = ComplexMatrix::identity(n);
    for k in 0..n {
        let pivot = (k..n).max_by(|&x, &y| m[(x, k)].norm().total_cmp(&m[(y, k)].norm())).unwrap_or(k);
        if m[(pivot, k)] == ZERO {
            return Err(Error::DegenerateInput("matrix is singular".into()));
        }
        for j in 0..n {
            let t = m[(k, j)];
            m[(k, j)] = m[(pivot, j)];
            m[(pivot, j)] = t;
            let t = inv[(k, j)];
            inv[(k, j)] = inv[(pivot, j)];
            inv[(pivot, j)] = t;
        }
        let p = m[(k, k)];
        for j in 0..n {
            m[(k, j)] /= p;
            inv[(k, j)] /= p;
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = m[(i, k)];
            if f == ZERO {
                continue;
            }
            for j in 0..n {
                let (mk, ik) = (m[(k, j)], inv[(k, j)]);
                m[(i, j)] -= f * mk;
                inv[(i, j)] -= f * ik;
            }
        }
    }
    Ok(inv)
}
