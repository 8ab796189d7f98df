//! Complements and reduced complements of minor determinants.
//!
//! The order-`s` complement at `(J, I)` with `|J| = |I| = s` is the minor of
//! the complementary rows `I'` and columns `J'`, signed by the parities of the
//! merged sequences `J ++ J'` and `I ++ I'`. A reduced complement of order
//! `r < s` contracts `s - r` shared trailing index pairs, which amounts to
//! summing the order-`s` complement over all sets `K` disjoint from `J` and
//! `I`.

use itertools::Itertools;

use super::index::{complement_of, sequence_sign};
use super::minors::det_of_block;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64, ZERO};

/// Largest ambient dimension accepted by the tensor routines.
pub const MAX_TENSOR_DIM: usize = 12;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n > MAX_TENSOR_DIM {
        return Err(Error::Guard { n, max: MAX_TENSOR_DIM, what: "tensor operations" });
    }
    Ok(())
}

/// Reduced complement `(det_s A)^{upper}_{lower}` of order `r = upper.len()`.
///
/// Index tuples may be unsorted; the result is antisymmetric in each tuple.
pub fn complement(a: &ComplexMatrix, s: usize, upper: &[usize], lower: &[usize]) -> Result<C64> {
    let n = a.require_square()?;
    check_dim(n)?;
    let r = upper.len();
    if lower.len() != r {
        return Err(Error::Shape(format!(
            "complement needs equally many upper and lower indices, got {r} and {}",
            lower.len()
        )));
    }
    if r > s || s > n {
        return Err(Error::Order(format!("need r <= s <= n, got r={r}, s={s}, n={n}")));
    }
    if let Some(&bad) = upper.iter().chain(lower).find(|&&i| i >= n) {
        return Err(Error::InvalidIndex(format!("index {bad} out of range 0..{n}")));
    }
    Ok(reduced_unchecked(a, s, upper, lower))
}

fn reduced_unchecked(a: &ComplexMatrix, s: usize, upper: &[usize], lower: &[usize]) -> C64 {
    let r = upper.len();
    if r == s {
        return full_unchecked(a, upper, lower);
    }
    let n = a.rows();
    let used: Vec<usize> = upper.iter().chain(lower).copied().collect();
    let free = complement_of(&used, n);
    let mut total = ZERO;
    let mut up = upper.to_vec();
    let mut lo = lower.to_vec();
    for k in free.into_iter().combinations(s - r) {
        up.truncate(r);
        lo.truncate(r);
        up.extend_from_slice(&k);
        lo.extend_from_slice(&k);
        total += full_unchecked(a, &up, &lo);
    }
    total
}

/// Order-`s` complement with `s = upper.len()`.
pub(crate) fn full_unchecked(a: &ComplexMatrix, upper: &[usize], lower: &[usize]) -> C64 {
    let n = a.rows();
    let up_rest = complement_of(upper, n);
    let lo_rest = complement_of(lower, n);
    let merged_up: Vec<usize> = upper.iter().chain(&up_rest).copied().collect();
    let merged_lo: Vec<usize> = lower.iter().chain(&lo_rest).copied().collect();
    let (Some(su), Some(sl)) = (sequence_sign(&merged_up), sequence_sign(&merged_lo)) else {
        return ZERO;
    };
    // contravariant (row) slots of the minor carry the lower complement set
    let minor = det_of_block(a, &lo_rest, &up_rest);
    if su * sl > 0 {
        minor
    } else {
        -minor
    }
}

/// The adjugate, `(adj A)^j_i = (det_1 A)^j_i`; row `j`, column `i`.
pub fn adjugate(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    reduced_complement(a, 1)
}

/// The reduced order-one complement `(det_s A)^j_i` as a matrix, row `j`, column `i`.
pub fn reduced_complement(a: &ComplexMatrix, s: usize) -> Result<ComplexMatrix> {
    let n = a.require_square()?;
    check_dim(n)?;
    if s == 0 || s > n {
        return Err(Error::Order(format!("reduced order-one complement needs 1 <= s <= n, got s={s}, n={n}")));
    }
    let mut m = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        for i in 0..n {
            m[(j, i)] = reduced_unchecked(a, s, &[j], &[i]);
        }
    }
    Ok(m)
}

/// Sum of all principal minors of order `m`, by direct enumeration.
pub fn principal_minor_sum(a: &ComplexMatrix, m: usize) -> Result<C64> {
    let n = a.require_square()?;
    check_dim(n)?;
    if m > n {
        return Err(Error::Order(format!("minor order {m} exceeds dimension {n}")));
    }
    Ok((0..n).combinations(m).map(|j| det_of_block(a, &j, &j)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ONE;
    use crate::tensor::minors::determinant;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn order_zero_is_determinant() {
        let a = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(complement(&a, 0, &[], &[]).unwrap(), c(-2.0));
    }

    #[test]
    fn order_one_on_two_by_two_is_trace_identity() {
        let (p, q, r, t) = (c(1.5), C64::new(0.0, 2.0), c(-3.0), C64::new(0.5, 1.0));
        let a = ComplexMatrix::from_rows(&[vec![p, q], vec![r, t]]).unwrap();
        let adj = adjugate(&a).unwrap();
        let expected = ComplexMatrix::from_rows(&[vec![t, -q], vec![-r, p]]).unwrap();
        assert_eq!(adj, expected);
        let tr = &ComplexMatrix::identity(2).scale(a.trace()) - &a;
        assert!(adj.max_abs_diff(&tr) < 1e-15);
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(adjugate(&ComplexMatrix::identity(4)).unwrap(), ComplexMatrix::identity(4));
        let a = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[vec![4.0, -2.0], vec![-3.0, 1.0]]).unwrap();
        assert_eq!(adjugate(&a).unwrap(), expected);
    }

    #[test]
    fn fundamental_identity_on_integer_matrix() {
        let a =
            ComplexMatrix::from_real_rows(&[vec![2.0, -1.0, 0.0], vec![1.0, 3.0, 2.0], vec![0.0, 1.0, 1.0]]).unwrap();
        let det = determinant(&a).unwrap();
        let prod = &a * &adjugate(&a).unwrap();
        assert_eq!(prod, ComplexMatrix::identity(3).scale(det));
    }

    #[test]
    fn full_order_complement_is_delta() {
        let a = ComplexMatrix::from_real_rows(&[vec![2.0, 7.0], vec![1.0, 8.0]]).unwrap();
        assert_eq!(complement(&a, 2, &[0, 1], &[0, 1]).unwrap(), ONE);
        assert_eq!(complement(&a, 2, &[1, 0], &[0, 1]).unwrap(), -ONE);
        // lambda I with s = n reduces to the identity at order one
        let r = reduced_complement(&ComplexMatrix::identity(3).scale_real(4.0), 3).unwrap();
        assert_eq!(r, ComplexMatrix::identity(3));
    }

    #[test]
    fn antisymmetric_in_each_tuple() {
        let a = ComplexMatrix::from_real_rows(&[
            vec![1.0, 2.0, 0.0, 1.0],
            vec![3.0, -1.0, 2.0, 0.0],
            vec![0.0, 1.0, 4.0, -2.0],
            vec![2.0, 0.0, 1.0, 1.0],
        ])
        .unwrap();
        let v = complement(&a, 2, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(complement(&a, 2, &[2, 0], &[1, 3]).unwrap(), -v);
        assert_eq!(complement(&a, 2, &[2, 0], &[3, 1]).unwrap(), v);
        assert_eq!(complement(&a, 2, &[2, 2], &[3, 1]).unwrap(), ZERO);
    }

    #[test]
    fn order_errors() {
        let a = ComplexMatrix::identity(3);
        assert!(matches!(complement(&a, 1, &[0, 1], &[0, 1]), Err(Error::Order(_))));
        assert!(matches!(complement(&a, 4, &[0], &[0]), Err(Error::Order(_))));
        assert!(matches!(reduced_complement(&a, 0), Err(Error::Order(_))));
        assert!(matches!(complement(&a, 2, &[0], &[0, 1]), Err(Error::Shape(_))));
        let big = ComplexMatrix::identity(13);
        assert!(matches!(adjugate(&big), Err(Error::Guard { .. })));
    }

    #[test]
    fn principal_minor_sums_of_identity_are_binomials() {
        let a = ComplexMatrix::identity(5);
        for m in 0..=5 {
            let expected = crate::tensor::index::binomial(5, m) as f64;
            assert_eq!(principal_minor_sum(&a, m).unwrap(), c(expected));
        }
    }
}
