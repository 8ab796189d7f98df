use std::fmt;

use super::complement::{check_dim, complement};
use super::index::{binomial, MultiIndex};
use super::minors::det_of_block;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64, ZERO};

/// Antisymmetric tensor with `r` upper and `r` lower indices over `0..n`.
///
/// Values live only on sorted index-set pairs, in a `C(n, r) x C(n, r)` table
/// addressed by lexicographic rank. Access at unsorted tuples applies the two
/// permutation signs; tuples with a repeated index read as zero. Order zero
/// holds a single scalar.
#[derive(Clone, PartialEq)]
pub struct AntisymTensor {
    n: usize,
    r: usize,
    dim: usize,
    values: Vec<C64>,
}

impl AntisymTensor {
    pub fn from_fn(n: usize, r: usize, mut f: impl FnMut(&MultiIndex, &MultiIndex) -> Result<C64>) -> Result<Self> {
        check_dim(n)?;
        if r > n {
            return Err(Error::Order(format!("tensor order {r} exceeds dimension {n}")));
        }
        let dim = binomial(n, r);
        let sets: Vec<MultiIndex> = MultiIndex::all(n, r).collect();
        let mut values = Vec::with_capacity(dim * dim);
        for upper in &sets {
            for lower in &sets {
                values.push(f(upper, lower)?);
            }
        }
        Ok(Self { n, r, dim, values })
    }

    /// Minor determinants of order `r`: `(det A)^J_I` with rows `J`, columns `I`.
    ///
    /// As a matrix this is the `r`-th compound of `A`.
    pub fn minors(a: &ComplexMatrix, r: usize) -> Result<Self> {
        let n = a.require_square()?;
        Self::from_fn(n, r, |j, i| Ok(det_of_block(a, j, i)))
    }

    /// Reduced complement of order `r, s`; `r = s` gives the complement of order `s`.
    pub fn complement(a: &ComplexMatrix, s: usize, r: usize) -> Result<Self> {
        let n = a.require_square()?;
        if r > s || s > n {
            return Err(Error::Order(format!("need r <= s <= n, got r={r}, s={s}, n={n}")));
        }
        Self::from_fn(n, r, |j, i| complement(a, s, j, i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.r
    }

    /// Value at a canonical (sorted) pair.
    pub fn canonical(&self, upper: &MultiIndex, lower: &MultiIndex) -> C64 {
        self.values[upper.rank() * self.dim + lower.rank()]
    }

    /// Value at arbitrary index tuples.
    pub fn get(&self, upper: &[usize], lower: &[usize]) -> Result<C64> {
        if upper.len() != self.r || lower.len() != self.r {
            return Err(Error::Shape(format!(
                "order-{} tensor indexed with {} upper and {} lower indices",
                self.r,
                upper.len(),
                lower.len()
            )));
        }
        let (Ok((u, su)), Ok((l, sl))) = (MultiIndex::sorted(upper, self.n), MultiIndex::sorted(lower, self.n)) else {
            if let Some(&bad) = upper.iter().chain(lower).find(|&&i| i >= self.n) {
                return Err(Error::InvalidIndex(format!("index {bad} out of range 0..{}", self.n)));
            }
            return Ok(ZERO);
        };
        let v = self.canonical(&u, &l);
        Ok(if su * sl > 0 { v } else { -v })
    }

    /// The `C(n, r) x C(n, r)` table; row = upper set, column = lower set.
    pub fn to_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_vec(self.dim, self.dim, self.values.clone()).expect("square table")
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Canonical entries whose magnitude exceeds `threshold`.
    pub fn entries_above(&self, threshold: f64) -> Vec<(MultiIndex, MultiIndex, C64)> {
        let sets: Vec<MultiIndex> = MultiIndex::all(self.n, self.r).collect();
        let mut out = Vec::new();
        for (a, upper) in sets.iter().enumerate() {
            for (b, lower) in sets.iter().enumerate() {
                let v = self.values[a * self.dim + b];
                if v.norm() > threshold {
                    out.push((upper.clone(), lower.clone(), v));
                }
            }
        }
        out
    }
}

impl fmt::Debug for AntisymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AntisymTensor")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("max_abs", &self.max_abs())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ONE;
    use crate::tensor::index::arrangements;
    use crate::tensor::index::sequence_sign;

    fn sample() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[
            vec![C64::new(1.0, 0.5), C64::new(2.0, 0.0), C64::new(0.0, -1.0), C64::new(1.0, 1.0)],
            vec![C64::new(-1.0, 0.0), C64::new(0.5, 0.5), C64::new(3.0, 0.0), C64::new(0.0, 2.0)],
            vec![C64::new(0.0, 1.0), C64::new(1.0, -1.0), C64::new(2.0, 0.0), C64::new(-0.5, 0.0)],
            vec![C64::new(2.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 1.0), C64::new(1.0, 0.0)],
        ])
        .unwrap()
    }

    #[test]
    fn order_zero_is_scalar() {
        let a = sample();
        let t = AntisymTensor::complement(&a, 0, 0).unwrap();
        assert_eq!(t.to_matrix().rows(), 1);
        let det = crate::tensor::minors::determinant(&a).unwrap();
        assert!((t.get(&[], &[]).unwrap() - det).norm() < 1e-14);
        assert_eq!(AntisymTensor::minors(&a, 0).unwrap().get(&[], &[]).unwrap(), ONE);
    }

    #[test]
    fn permuted_access_applies_signs() {
        let a = sample();
        for r in 1..=3 {
            let t = AntisymTensor::complement(&a, r, r).unwrap();
            for upper in MultiIndex::all(4, r) {
                for lower in MultiIndex::all(4, r) {
                    let base = t.canonical(&upper, &lower);
                    for pu in arrangements(r, r) {
                        for pl in arrangements(r, r) {
                            let u: Vec<usize> = pu.iter().map(|&k| upper[k]).collect();
                            let l: Vec<usize> = pl.iter().map(|&k| lower[k]).collect();
                            let sign = sequence_sign(&pu).unwrap() * sequence_sign(&pl).unwrap();
                            let expected = if sign > 0 { base } else { -base };
                            assert_eq!(t.get(&u, &l).unwrap(), expected);
                            assert_eq!(complement(&a, r, &u, &l).unwrap(), expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn repeated_index_reads_zero() {
        let t = AntisymTensor::minors(&sample(), 2).unwrap();
        assert_eq!(t.get(&[1, 1], &[0, 2]).unwrap(), ZERO);
        assert!(t.get(&[1, 4], &[0, 2]).is_err());
        assert!(t.get(&[1], &[0, 2]).is_err());
    }

    #[test]
    fn compound_of_product_is_product_of_compounds() {
        let a = sample();
        let b = a.adjoint();
        let ab = &a * &b;
        for r in 0..=4 {
            let lhs = AntisymTensor::minors(&ab, r).unwrap().to_matrix();
            let rhs =
                &AntisymTensor::minors(&a, r).unwrap().to_matrix() * &AntisymTensor::minors(&b, r).unwrap().to_matrix();
            assert!(lhs.max_abs_diff(&rhs) < 1e-12 * (1.0 + lhs.max_abs()));
        }
    }
}
