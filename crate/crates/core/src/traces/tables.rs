//! Closed forms for small `n - s`, written out term by term.

use crate::matrix::{ComplexMatrix, C64};

/// Reduced order-one complement for `n - s = 1, 2, 3`; `None` otherwise.
pub fn reduced_complement_closed_form(a: &ComplexMatrix, m: usize) -> Option<ComplexMatrix> {
    let n = a.rows();
    let id = ComplexMatrix::identity(n);
    let a2 = a * a;
    let t1 = a.trace();
    let t2 = a2.trace();
    match m {
        1 => Some(&id.scale(t1) - a),
        2 => {
            let c0 = (t1 * t1 - t2) * 0.5;
            Some(&(&id.scale(c0) - &a.scale(t1)) + &a2)
        }
        3 => {
            let a3 = &a2 * a;
            let t3 = a3.trace();
            let c0 = (t1 * t1 * t1 - t1 * t2 * 3.0 + t3 * 2.0) / 6.0;
            let c1 = (t1 * t1 - t2) * 0.5;
            Some(&(&(&id.scale(c0) - &a.scale(c1)) + &a2.scale(t1)) - &a3)
        }
        _ => None,
    }
}

/// Sum of principal minors of order `m = 1..=4`; `None` otherwise.
pub fn minor_sum_closed_form(a: &ComplexMatrix, m: usize) -> Option<C64> {
    let a2 = a * a;
    let a3 = &a2 * a;
    let a4 = &a3 * a;
    let (t1, t2, t3, t4) = (a.trace(), a2.trace(), a3.trace(), a4.trace());
    match m {
        1 => Some(t1),
        2 => Some((t1 * t1 - t2) / 2.0),
        3 => Some((t1 * t1 * t1 - t1 * t2 * 3.0 + t3 * 2.0) / 6.0),
        4 => Some((t1.powu(4) - t2 * t1 * t1 * 6.0 + t2 * t2 * 3.0 + t3 * t1 * 8.0 - t4 * 6.0) / 24.0),
        _ => None,
    }
}
