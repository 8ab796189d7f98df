//! Two-sided evaluations of the tensor identities: Kronecker contractions,
//! the product of a matrix with its reduced complement, and the generalized
//! Cauchy-Binet formula.

use itertools::Itertools;

use super::complement::{check_dim, full_unchecked};
use super::index::{arrangements, factorial, kronecker_unchecked, tuples, MultiIndex};
use super::minors::{det_of_block, determinant, inverse, minor_det};
use super::AntisymTensor;
use crate::check::IdentityCheckResult;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64, ZERO};

/// Contracting `p - s` index pairs of the order-`p` symbol gives
/// `(n-s)!/(n-p)!` times the order-`s` symbol. Exact over the integers.
pub fn check_kronecker_contraction(n: usize, s: usize, p: usize) -> Result<IdentityCheckResult> {
    if s > p || p > n {
        return Err(Error::Order(format!("need s <= p <= n, got s={s}, p={p}, n={n}")));
    }
    let factor = (factorial(n - s) / factorial(n - p)) as i64;
    let free = free_tuples(n, s);
    let summed = tuples(n, p - s);
    let mut worst = 0i64;
    let mut up = Vec::with_capacity(p);
    let mut lo = Vec::with_capacity(p);
    for upper in &free {
        for lower in &free {
            let mut lhs = 0i64;
            for k in &summed {
                up.clear();
                lo.clear();
                up.extend_from_slice(upper);
                up.extend_from_slice(k);
                lo.extend_from_slice(lower);
                lo.extend_from_slice(k);
                lhs += kronecker_unchecked(&up, &lo) as i64;
            }
            let rhs = factor * kronecker_unchecked(upper, lower) as i64;
            worst = worst.max((lhs - rhs).abs());
        }
    }
    Ok(IdentityCheckResult::exact(format!("kronecker.contraction n={n} s={s} p={p}"), worst as f64))
}

/// Product of an order-`s` and an order-`p` symbol contracted over `s` pairs
/// equals `s! (n-p+s)!/(n-p)!` times the order-`(p-s)` symbol.
pub fn check_kronecker_product(n: usize, s: usize, p: usize) -> Result<IdentityCheckResult> {
    if s > p || p > n {
        return Err(Error::Order(format!("need s <= p <= n, got s={s}, p={p}, n={n}")));
    }
    let factor = (factorial(s) * factorial(n - p + s) / factorial(n - p)) as i64;
    let free = free_tuples(n, p - s);
    let summed = tuples(n, s);
    let mut worst = 0i64;
    let mut up = Vec::with_capacity(p);
    let mut lo = Vec::with_capacity(p);
    for upper_rest in &free {
        for lower_rest in &free {
            let mut lhs = 0i64;
            for j in &summed {
                for i in &summed {
                    let first = kronecker_unchecked(j, i);
                    if first == 0 {
                        continue;
                    }
                    up.clear();
                    lo.clear();
                    up.extend_from_slice(i);
                    up.extend_from_slice(upper_rest);
                    lo.extend_from_slice(j);
                    lo.extend_from_slice(lower_rest);
                    lhs += (first * kronecker_unchecked(&up, &lo)) as i64;
                }
            }
            let rhs = factor * kronecker_unchecked(upper_rest, lower_rest) as i64;
            worst = worst.max((lhs - rhs).abs());
        }
    }
    Ok(IdentityCheckResult::exact(format!("kronecker.product n={n} s={s} p={p}"), worst as f64))
}

// Free indices: every tuple while that stays small, otherwise distinct tuples only.
fn free_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k <= 2 {
        tuples(n, k)
    } else {
        arrangements(n, k)
    }
}

/// Both contraction identities for every `n <= max_n` and every `s <= p <= n`.
pub fn kronecker_suite(max_n: usize) -> Result<Vec<IdentityCheckResult>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for p in 0..=n {
            for s in 0..=p {
                out.push(check_kronecker_contraction(n, s, p)?);
                out.push(check_kronecker_product(n, s, p)?);
            }
        }
    }
    Ok(out)
}

fn validate_lemma_args(a: &ComplexMatrix, r: usize, s: usize, upper: &[usize], lower: &[usize]) -> Result<usize> {
    let n = a.require_square()?;
    check_dim(n)?;
    if r == 0 || r > s || s > n {
        return Err(Error::Order(format!("need 1 <= r <= s <= n, got r={r}, s={s}, n={n}")));
    }
    if upper.len() != r || lower.len() != r {
        return Err(Error::Shape(format!("need {r} upper and {r} lower indices")));
    }
    if let Some(&bad) = upper.iter().chain(lower).find(|&&i| i >= n) {
        return Err(Error::InvalidIndex(format!("index {bad} out of range 0..{n}")));
    }
    Ok(n)
}

/// `A^j_t (det_s A)^{j_1..j_{r-1} t}_{i_1..i_{r-1} i}` summed over `t`.
///
/// `upper = (j_1, .., j_{r-1}, j)`, `lower = (i_1, .., i_{r-1}, i)`.
pub fn matrix_times_complement(a: &ComplexMatrix, r: usize, s: usize, upper: &[usize], lower: &[usize]) -> Result<C64> {
    let n = validate_lemma_args(a, r, s, upper, lower)?;
    let j = upper[r - 1];
    let mut up = upper.to_vec();
    let mut total = ZERO;
    for t in 0..n {
        up[r - 1] = t;
        let c = super::complement(a, s, &up, lower)?;
        total += a[(j, t)] * c;
    }
    Ok(total)
}

/// Alternating sum of minors of order `n - s + 1`.
fn alternating_minor_sum(a: &ComplexMatrix, r: usize, s: usize, upper: &[usize], lower: &[usize]) -> C64 {
    let n = a.rows();
    let j = upper[r - 1];
    let head_up = &upper[..r - 1];
    let head_lo = &lower[..r - 1];
    let i = lower[r - 1];
    let mut total = ZERO;
    let mut up = Vec::with_capacity(r + n - s);
    let mut lo = Vec::with_capacity(r + n - s);
    let mut rows = Vec::with_capacity(n - s + 1);
    for q in arrangements(n, n - s + 1) {
        up.clear();
        up.extend_from_slice(head_up);
        up.extend_from_slice(&q);
        if super::index::sequence_sign(&up).is_none() {
            continue;
        }
        for p in arrangements(n, n - s) {
            lo.clear();
            lo.extend_from_slice(head_lo);
            lo.push(i);
            lo.extend_from_slice(&p);
            let delta = kronecker_unchecked(&up, &lo);
            if delta == 0 {
                continue;
            }
            rows.clear();
            rows.push(j);
            rows.extend_from_slice(&p);
            let m = det_of_block(a, &rows, &q);
            total += m * delta as f64;
        }
    }
    total / (factorial(n - s) * factorial(n - s + 1)) as f64
}

/// Alternating sum of order-`(s-1)` complements.
fn alternating_complement_sum(a: &ComplexMatrix, r: usize, s: usize, upper: &[usize], lower: &[usize]) -> C64 {
    let n = a.rows();
    let j = upper[r - 1];
    let i = lower[r - 1];
    let mut total = ZERO;
    let mut delta_up = Vec::with_capacity(s);
    let mut delta_lo = Vec::with_capacity(s);
    let mut comp_up = Vec::with_capacity(s - 1);
    for m in arrangements(n, s - r) {
        delta_lo.clear();
        delta_lo.extend_from_slice(&lower[..r - 1]);
        delta_lo.extend_from_slice(&m);
        delta_lo.push(i);
        if super::index::sequence_sign(&delta_lo).is_none() {
            continue;
        }
        comp_up.clear();
        comp_up.extend_from_slice(&upper[..r - 1]);
        comp_up.extend_from_slice(&m);
        for k in arrangements(n, s - 1) {
            delta_up.clear();
            delta_up.extend_from_slice(&k);
            delta_up.push(j);
            let delta = kronecker_unchecked(&delta_up, &delta_lo);
            if delta == 0 {
                continue;
            }
            total += full_unchecked(a, &comp_up, &k) * delta as f64;
        }
    }
    total / (factorial(s - 1) * factorial(s - r)) as f64
}

/// Evaluates the product of `A` with its reduced complement of order `r, s`
/// at one index tuple, against the alternating sum of minors of order
/// `n - s + 1` and against the alternating sum of order-`(s-1)` complements.
pub fn check_lemma1(
    a: &ComplexMatrix,
    r: usize,
    s: usize,
    upper: &[usize],
    lower: &[usize],
    tol: f64,
) -> Result<Vec<IdentityCheckResult>> {
    let lhs = matrix_times_complement(a, r, s, upper, lower)?;
    let via_minors = alternating_minor_sum(a, r, s, upper, lower);
    let via_complements = alternating_complement_sum(a, r, s, upper, lower);
    Ok(vec![
        IdentityCheckResult::relative(format!("lemma1.minors r={r} s={s}"), &[lhs], &[via_minors], tol),
        IdentityCheckResult::relative(format!("lemma1.complements r={r} s={s}"), &[lhs], &[via_complements], tol),
    ])
}

/// Index tuples `(sorted head of length r-1, last index)` used to sweep lemma checks.
pub fn lemma_index_tuples(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for head in (0..n).combinations(r - 1) {
        for last in 0..n {
            let mut t = head.clone();
            t.push(last);
            out.push(t);
        }
    }
    out
}

/// [`check_lemma1`] over every index tuple; deviations are relative to the
/// largest magnitude met anywhere in the sweep.
pub fn check_lemma1_sweep(a: &ComplexMatrix, r: usize, s: usize, tol: f64) -> Result<Vec<IdentityCheckResult>> {
    let n = a.require_square()?;
    if r == 0 || r > s || s > n {
        return Err(Error::Order(format!("need 1 <= r <= s <= n, got r={r}, s={s}, n={n}")));
    }
    let idx = lemma_index_tuples(n, r);
    let mut lhs = Vec::new();
    let mut minors = Vec::new();
    let mut comps = Vec::new();
    for upper in &idx {
        for lower in &idx {
            lhs.push(matrix_times_complement(a, r, s, upper, lower)?);
            minors.push(alternating_minor_sum(a, r, s, upper, lower));
            comps.push(alternating_complement_sum(a, r, s, upper, lower));
        }
    }
    Ok(vec![
        IdentityCheckResult::relative(format!("lemma1.minors n={n} r={r} s={s}"), &lhs, &minors, tol),
        IdentityCheckResult::relative(format!("lemma1.complements n={n} r={r} s={s}"), &lhs, &comps, tol),
    ])
}

/// Contracting `s` copies of `A` against the order-`s` complement gives
/// `delta^J_I det A`, checked for every pair of sorted sets.
pub fn check_corollary1(a: &ComplexMatrix, s: usize, tol: f64) -> Result<IdentityCheckResult> {
    let n = a.require_square()?;
    check_dim(n)?;
    if s > n {
        return Err(Error::Order(format!("order {s} exceeds dimension {n}")));
    }
    let det = determinant(a)?;
    let ks = arrangements(n, s);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for upper in MultiIndex::all(n, s) {
        for lower in MultiIndex::all(n, s) {
            let mut total = ZERO;
            for k in &ks {
                let prod: C64 = upper.iter().zip(k).map(|(&j, &kk)| a[(j, kk)]).product();
                if prod == ZERO {
                    continue;
                }
                total += prod * full_unchecked(a, k, &lower);
            }
            lhs.push(total);
            rhs.push(if upper == lower { det } else { ZERO });
        }
    }
    Ok(IdentityCheckResult::relative(format!("corollary1 n={n} s={s}"), &lhs, &rhs, tol))
}

/// Largest `|A^j_t (det_s A)^{..t}_{..i}|` over all index tuples, over `scale`.
///
/// For a characteristic matrix at an eigenvalue of multiplicity `s >= r`
/// this contraction vanishes.
pub fn check_annihilation(a: &ComplexMatrix, r: usize, s: usize, scale: f64, tol: f64) -> Result<IdentityCheckResult> {
    let n = a.require_square()?;
    let idx = lemma_index_tuples(n, r);
    let mut worst: f64 = 0.0;
    for upper in &idx {
        for lower in &idx {
            worst = worst.max(matrix_times_complement(a, r, s, upper, lower)?.norm());
        }
    }
    Ok(IdentityCheckResult::scaled(format!("annihilation r={r} s={s}"), worst, scale, tol))
}

/// Complement of order `s` against `det A` times the minors of `A^{-1}`.
pub fn check_inverse_minors(a: &ComplexMatrix, s: usize, tol: f64) -> Result<IdentityCheckResult> {
    let n = a.require_square()?;
    let det = determinant(a)?;
    let inv = inverse(a)?;
    let comp = AntisymTensor::complement(a, s, s)?;
    let minors = AntisymTensor::minors(&inv, s)?;
    let lhs: Vec<C64> = comp.to_matrix().as_slice().to_vec();
    let rhs: Vec<C64> = minors.to_matrix().as_slice().iter().map(|&m| m * det).collect();
    Ok(IdentityCheckResult::relative(format!("inverse_minors n={n} s={s}"), &lhs, &rhs, tol))
}

/// `(det AB)^J_I` against the sum over `K` of `(det A)^J_K (det B)^K_I`.
pub fn cauchy_binet(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rows: &[usize],
    cols: &[usize],
    tol: f64,
) -> Result<IdentityCheckResult> {
    let (lhs, rhs) = cauchy_binet_sides(a, b, rows, cols)?;
    Ok(IdentityCheckResult::relative(format!("cauchy_binet s={}", rows.len()), &[lhs], &[rhs], tol))
}

fn cauchy_binet_sides(a: &ComplexMatrix, b: &ComplexMatrix, rows: &[usize], cols: &[usize]) -> Result<(C64, C64)> {
    if a.cols() != b.rows() {
        return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", a.rows(), a.cols(), b.rows(), b.cols())));
    }
    let s = rows.len();
    if cols.len() != s {
        return Err(Error::Shape(format!("need equally many rows and columns, got {s} and {}", cols.len())));
    }
    let m = a.cols();
    if s > a.rows().min(b.cols()).min(m) {
        return Err(Error::Shape(format!("minor order {s} exceeds min(p, q, m)")));
    }
    let ab = a.matmul(b)?;
    let lhs = minor_det(&ab, rows, cols)?;
    let mut rhs = ZERO;
    for k in (0..m).combinations(s) {
        rhs += minor_det(a, rows, &k)? * minor_det(b, &k, cols)?;
    }
    Ok((lhs, rhs))
}

/// Cauchy-Binet for every pair of sorted row and column sets of size `s`.
pub fn cauchy_binet_sweep(a: &ComplexMatrix, b: &ComplexMatrix, s: usize, tol: f64) -> Result<IdentityCheckResult> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for rows in (0..a.rows()).combinations(s) {
        for cols in (0..b.cols()).combinations(s) {
            let (l, r) = cauchy_binet_sides(a, b, &rows, &cols)?;
            lhs.push(l);
            rhs.push(r);
        }
    }
    Ok(IdentityCheckResult::relative(
        format!("cauchy_binet {}x{}*{}x{} s={s}", a.rows(), a.cols(), b.rows(), b.cols()),
        &lhs,
        &rhs,
        tol,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> ComplexMatrix {
        let rows: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        ComplexMatrix::from_real_rows(&rows).unwrap()
    }

    #[test]
    fn kronecker_identities_small() {
        for r in kronecker_suite(3).unwrap() {
            assert!(r.pass, "{r:?}");
        }
        assert!(check_kronecker_contraction(3, 2, 1).is_err());
    }

    #[test]
    fn lemma1_on_identity_is_exact() {
        let a = ComplexMatrix::identity(3);
        for s in 1..=3 {
            for r in 1..=s {
                for res in check_lemma1_sweep(&a, r, s, 0.0).unwrap() {
                    assert!(res.pass, "{res:?}");
                }
            }
        }
    }

    #[test]
    fn lemma1_r_equals_s_equals_one_is_adjugate_identity() {
        let a = int_matrix(&[&[2, 1, 0], &[1, -1, 3], &[0, 4, 1]]);
        let det = determinant(&a).unwrap();
        for j in 0..3 {
            for i in 0..3 {
                let v = matrix_times_complement(&a, 1, 1, &[j], &[i]).unwrap();
                let expected = if i == j { det } else { ZERO };
                assert_eq!(v, expected);
            }
        }
    }

    #[test]
    fn integer_cauchy_binet_two_by_three() {
        let a = int_matrix(&[&[1, 2, 3], &[4, 5, 6]]);
        let b = int_matrix(&[&[1, 0], &[2, 1], &[-1, 3]]);
        // hand oracle: K = {0,1}: (5-8)*(1) = -3; {0,2}: (6-12)*(3) = -18; {1,2}: (12-15)*(6+1) = -21
        let (lhs, rhs) = cauchy_binet_sides(&a, &b, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(rhs, C64::new(-42.0, 0.0));
        assert_eq!(lhs, rhs);
        assert!(cauchy_binet(&a, &a, &[0], &[0], 0.0).is_err());
    }

    #[test]
    fn cauchy_binet_identity_matrices() {
        let a = ComplexMatrix::identity(3);
        for s in 0..=3 {
            let r = cauchy_binet_sweep(&a, &a, s, 0.0).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn corollary1_on_integers() {
        let a = int_matrix(&[&[2, 1, 0, 1], &[1, -1, 3, 0], &[0, 4, 1, 2], &[1, 0, 0, 3]]);
        for s in 0..=4 {
            let r = check_corollary1(&a, s, 0.0).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn lemma1_generic_complex() {
        let a = ComplexMatrix::from_rows(&[
            vec![C64::new(1.0, 0.5), C64::new(2.0, 0.0), C64::new(0.0, -1.0), C64::new(1.0, 1.0)],
            vec![C64::new(-1.0, 0.0), C64::new(0.5, 0.5), C64::new(3.0, 0.0), C64::new(0.0, 2.0)],
            vec![C64::new(0.0, 1.0), C64::new(1.0, -1.0), C64::new(2.0, 0.0), C64::new(-0.5, 0.0)],
            vec![C64::new(2.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 1.0), C64::new(1.0, 0.0)],
        ])
        .unwrap();
        for s in 1..=4 {
            for r in 1..=s {
                for res in check_lemma1_sweep(&a, r, s, 1e-12).unwrap() {
                    assert!(res.pass, "{res:?}");
                }
            }
            assert!(check_inverse_minors(&a, s, 1e-12).unwrap().pass);
        }
    }
}
