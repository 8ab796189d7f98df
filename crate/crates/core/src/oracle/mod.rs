//! Deliberately naive reference implementations.
//!
//! Nothing on the main computational path calls into this module; it exists
//! so that tests, the acceptance suite and `verify` have an independent
//! opinion to compare against.

mod jacobi;
mod random;

pub use jacobi::{eig_oracle, subspace_angles, JACOBI_MAX_N};
pub use random::{
    random_complex, random_hermitian, random_integer, random_planted, random_unitary, seeded_rng, Planted,
};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64, ONE, ZERO};
use crate::tensor::{arrangements, complement_of, kronecker, perm_sign};

/// Largest dimension accepted by the factorial-cost oracles.
pub const FACTORIAL_MAX_N: usize = 8;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n: usize,
    pub rng_seed: u64,
    pub trials: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { max_n: FACTORIAL_MAX_N, rng_seed: DEFAULT_SEED, trials: 20 }
    }
}

impl OracleConfig {
    pub fn rng(&self) -> rand_chacha::ChaCha8Rng {
        seeded_rng(self.rng_seed)
    }
}

fn guard(n: usize) -> Result<()> {
    if n > FACTORIAL_MAX_N {
        return Err(Error::Guard { n, max: FACTORIAL_MAX_N, what: "factorial oracles" });
    }
    Ok(())
}

/// Leibniz sum over all `n!` permutations.
pub fn det_by_permutations(a: &ComplexMatrix) -> Result<C64> {
    let n = a.require_square()?;
    guard(n)?;
    let mut total = ZERO;
    for p in (0..n).permutations(n) {
        let prod: C64 = p.iter().enumerate().map(|(i, &j)| a[(i, j)]).product();
        total += prod * perm_sign(&p)? as f64;
    }
    Ok(if n == 0 { ONE } else { total })
}

/// Reduced complement from the defining Kronecker sum, term by term.
///
/// Every index tuple of the `r + (s - r) + (n - s)` Kronecker symbol is
/// visited for which the symbol can be nonzero; the contraction over the
/// `s - r` shared pairs runs over all tuples and is divided by `(s - r)!`,
/// and the complementary tuples are divided by `(n - s)!`.
pub fn complement_by_kronecker_sum(a: &ComplexMatrix, s: usize, upper: &[usize], lower: &[usize]) -> Result<C64> {
    let n = a.require_square()?;
    guard(n)?;
    let r = upper.len();
    if lower.len() != r {
        return Err(Error::Shape(format!("{r} upper but {} lower indices", lower.len())));
    }
    if r > s || s > n {
        return Err(Error::Order(format!("need r <= s <= n, got r={r}, s={s}, n={n}")));
    }
    let mut total = ZERO;
    let mut up = Vec::with_capacity(n);
    let mut lo = Vec::with_capacity(n);
    for k in crate::tensor::tuples(n, s - r) {
        for lower_rest in arrangements(n, n - s) {
            lo.clear();
            lo.extend_from_slice(lower);
            lo.extend_from_slice(&k);
            lo.extend_from_slice(&lower_rest);
            let head: Vec<usize> = upper.iter().chain(&k).copied().collect();
            // upper complementary tuples must permute the indices missing from the head
            let missing = complement_of(&head, n);
            if missing.len() != n - s {
                continue;
            }
            for upper_rest in missing.iter().copied().permutations(n - s) {
                up.clear();
                up.extend_from_slice(&head);
                up.extend_from_slice(&upper_rest);
                let delta = kronecker(&up, &lo, n)?;
                if delta == 0 {
                    continue;
                }
                let prod: C64 = lower_rest.iter().zip(&upper_rest).map(|(&i, &j)| a[(i, j)]).product();
                total += prod * delta as f64;
            }
        }
    }
    let norm = (crate::tensor::factorial(s - r) * crate::tensor::factorial(n - s)) as f64;
    Ok(total / norm)
}

/// Cofactor expansion along the first row, recursively.
pub fn det_by_cofactors(a: &ComplexMatrix) -> Result<C64> {
    let n = a.require_square()?;
    guard(n)?;
    fn rec(a: &ComplexMatrix, rows: &[usize], cols: &[usize]) -> C64 {
        if rows.is_empty() {
            return ONE;
        }
        let mut total = ZERO;
        for (pos, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a[(rows[0], c)] * rec(a, &rows[1..], &rest);
            if pos % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(rec(a, &idx, &idx))
}
