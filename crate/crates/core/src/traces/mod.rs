//! Trace-of-powers expansions of reduced order-one complements and of
//! diagonal sums of minors, with their Bell-polynomial forms.

mod expansion;
mod partitions;
pub mod tables;

pub use expansion::{
    characteristic_coefficients, eval_polynomial, minor_bell_sum, minor_trace_sum, reduced_complement_via_bell,
    reduced_complement_via_traces, TracePowerCache,
};
pub use partitions::{bell_polynomial, bell_sequence, partitions};

use crate::check::IdentityCheckResult;
use crate::error::Result;
use crate::matrix::{ComplexMatrix, C64};
use crate::tensor::{principal_minor_sum, reduced_complement};

/// Trace route against the direct complement for one order `s`.
pub fn check_trace_route(a: &ComplexMatrix, s: usize, tol: f64) -> Result<IdentityCheckResult> {
    let direct = reduced_complement(a, s)?;
    let via = reduced_complement_via_traces(a, s)?;
    Ok(IdentityCheckResult::relative(
        format!("traces.complement n={} s={s}", a.rows()),
        via.as_slice(),
        direct.as_slice(),
        tol,
    ))
}

/// Bell route against the direct complement for one order `s`.
pub fn check_bell_route(a: &ComplexMatrix, s: usize, tol: f64) -> Result<IdentityCheckResult> {
    let direct = reduced_complement(a, s)?;
    let via = reduced_complement_via_bell(a, s)?;
    Ok(IdentityCheckResult::relative(
        format!("bell.complement n={} s={s}", a.rows()),
        via.as_slice(),
        direct.as_slice(),
        tol,
    ))
}

/// Trace and Bell forms of the diagonal minor sum against direct enumeration.
pub fn check_minor_sums(a: &ComplexMatrix, s: usize, tol: f64) -> Result<Vec<IdentityCheckResult>> {
    let n = a.require_square()?;
    let direct = principal_minor_sum(a, n.saturating_sub(s))?;
    let tr = minor_trace_sum(a, s)?;
    let bell = minor_bell_sum(a, s)?;
    Ok(vec![
        IdentityCheckResult::relative(format!("minor_sums.traces n={n} s={s}"), &[tr], &[direct], tol),
        IdentityCheckResult::relative(format!("minor_sums.bell n={n} s={s}"), &[bell], &[direct], tol),
    ])
}

/// The closed-form tables against the general expansions.
pub fn check_tables(a: &ComplexMatrix, tol: f64) -> Result<Vec<IdentityCheckResult>> {
    let n = a.require_square()?;
    let mut out = Vec::new();
    for m in 1..=3.min(n.saturating_sub(1)) {
        let table = tables::reduced_complement_closed_form(a, m).expect("tabulated order");
        let via = reduced_complement_via_traces(a, n - m)?;
        out.push(IdentityCheckResult::relative(
            format!("table.complement n-s={m}"),
            via.as_slice(),
            table.as_slice(),
            tol,
        ));
    }
    for m in 1..=4.min(n) {
        let table = tables::minor_sum_closed_form(a, m).expect("tabulated order");
        let via = minor_trace_sum(a, n - m)?;
        out.push(IdentityCheckResult::relative(format!("table.minor_sum n-s={m}"), &[via], &[table], tol));
    }
    Ok(out)
}

/// `sum_k c_k lambda^k` against `det(lambda I - A)` at each sample point.
pub fn check_characteristic_polynomial(a: &ComplexMatrix, lambdas: &[C64], tol: f64) -> Result<IdentityCheckResult> {
    let coeffs = characteristic_coefficients(a)?;
    let mut worst: f64 = 0.0;
    let mut worst_abs: f64 = 0.0;
    for &l in lambdas {
        let det = crate::tensor::determinant(&a.shifted(l))?;
        let poly = eval_polynomial(&coeffs, l);
        let abs = (det - poly).norm();
        worst_abs = worst_abs.max(abs);
        worst = worst.max(abs / det.norm().max(poly.norm()).max(f64::MIN_POSITIVE));
    }
    let mut r = IdentityCheckResult::absolute(format!("charpoly n={}", a.rows()), worst, tol);
    r.max_abs_dev = worst_abs;
    Ok(r)
}
