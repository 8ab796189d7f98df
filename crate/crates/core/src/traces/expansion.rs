//! Reduced order-one complements and diagonal sums of minors written through
//! powers of `A` and traces of those powers.

use super::partitions::{bell_sequence, partitions};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64, ONE, ZERO};

/// `A^0 .. A^k` and their traces, built by repeated multiplication.
#[derive(Debug, Clone)]
pub struct TracePowerCache {
    powers: Vec<ComplexMatrix>,
    traces: Vec<C64>,
}

impl TracePowerCache {
    pub fn new(a: &ComplexMatrix, k: usize) -> Result<Self> {
        let n = a.require_square()?;
        let mut powers = Vec::with_capacity(k + 1);
        powers.push(ComplexMatrix::identity(n));
        for l in 1..=k {
            let next = &powers[l - 1] * a;
            powers.push(next);
        }
        let traces = powers.iter().map(ComplexMatrix::trace).collect();
        Ok(Self { powers, traces })
    }

    pub fn max_power(&self) -> usize {
        self.powers.len() - 1
    }

    /// `A^l`.
    pub fn power(&self, l: usize) -> &ComplexMatrix {
        &self.powers[l]
    }

    /// `Tr[A^l]`; `l = 0` gives `n`.
    pub fn trace(&self, l: usize) -> C64 {
        self.traces[l]
    }

    /// Bell arguments `x_l = -(l-1)! Tr[A^l]` for `l = 1..=m`.
    pub fn bell_arguments(&self, m: usize) -> Vec<C64> {
        let mut fact = 1.0;
        (1..=m)
            .map(|l| {
                if l > 1 {
                    fact *= (l - 1) as f64;
                }
                -self.traces[l] * fact
            })
            .collect()
    }
}

// prod_l Tr[A^l]^{k_l} / (k_l! l^{k_l}), and sum_l k_l
fn partition_term(k: &[usize], cache: &TracePowerCache) -> (C64, usize) {
    let mut term = ONE;
    let mut count = 0;
    for (idx, &kl) in k.iter().enumerate() {
        let l = idx + 1;
        let t = cache.trace(l);
        for q in 1..=kl {
            term *= t / (q * l) as f64;
        }
        count += kl;
    }
    (term, count)
}

fn sign(p: usize) -> f64 {
    if p.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn order_range(a: &ComplexMatrix, s: usize) -> Result<usize> {
    let n = a.require_square()?;
    if s == 0 || s > n {
        return Err(Error::Order(format!("reduced order-one complement needs 1 <= s <= n, got s={s}, n={n}")));
    }
    Ok(n)
}

/// Scalar coefficients `c_q = sum_k prod_l (-1)^{k_l} Tr[A^l]^{k_l} / (k_l! l^{k_l})`
/// over the partitions of `q`, for `q = 0..=m`.
fn trace_coefficients(m: usize, cache: &TracePowerCache) -> Vec<C64> {
    (0..=m)
        .map(|q| {
            partitions(q)
                .iter()
                .map(|k| {
                    let (term, count) = partition_term(k, cache);
                    term * sign(count)
                })
                .sum()
        })
        .collect()
}

/// `(det_s A)^j_i` from the partition sum over traces of powers.
pub fn reduced_complement_via_traces(a: &ComplexMatrix, s: usize) -> Result<ComplexMatrix> {
    let n = order_range(a, s)?;
    let m = n - s;
    let cache = TracePowerCache::new(a, m)?;
    Ok(complement_from_coefficients(&cache, m, &trace_coefficients(m, &cache), sign(m)))
}

/// `(det_s A)^j_i` from complete Bell polynomials at `x_l = -(l-1)! Tr[A^l]`.
pub fn reduced_complement_via_bell(a: &ComplexMatrix, s: usize) -> Result<ComplexMatrix> {
    let n = order_range(a, s)?;
    let m = n - s;
    let cache = TracePowerCache::new(a, m)?;
    let bell = bell_sequence(m, &cache.bell_arguments(m));
    let mut fact = 1.0;
    let coeffs: Vec<C64> = bell
        .iter()
        .enumerate()
        .map(|(q, &b)| {
            if q > 1 {
                fact *= q as f64;
            }
            b / fact
        })
        .collect();
    Ok(complement_from_coefficients(&cache, m, &coeffs, sign(m)))
}

// sign * sum_r A^r c_{m-r}
fn complement_from_coefficients(cache: &TracePowerCache, m: usize, coeffs: &[C64], sign: f64) -> ComplexMatrix {
    let n = cache.power(0).rows();
    let mut out = ComplexMatrix::zeros(n, n);
    for r in 0..=m {
        let c = coeffs[m - r] * sign;
        if c == ZERO {
            continue;
        }
        out = &out + &cache.power(r).scale(c);
    }
    out
}

fn minor_order(a: &ComplexMatrix, s: usize) -> Result<usize> {
    let n = a.require_square()?;
    if s > n {
        return Err(Error::Order(format!("order {s} exceeds dimension {n}")));
    }
    Ok(n - s)
}

/// Sum of the principal minors of order `n - s`, from the trace partition sum.
pub fn minor_trace_sum(a: &ComplexMatrix, s: usize) -> Result<C64> {
    let m = minor_order(a, s)?;
    let cache = TracePowerCache::new(a, m)?;
    Ok(minor_sum_from_cache(&cache, m))
}

fn minor_sum_from_cache(cache: &TracePowerCache, m: usize) -> C64 {
    partitions(m)
        .iter()
        .map(|k| {
            // prod over l = 1..m of (-1)^{k_l + 1}
            let (term, count) = partition_term(k, cache);
            term * sign(count + m)
        })
        .sum()
}

/// Sum of the principal minors of order `n - s`, from the Bell polynomial form.
pub fn minor_bell_sum(a: &ComplexMatrix, s: usize) -> Result<C64> {
    let m = minor_order(a, s)?;
    let cache = TracePowerCache::new(a, m)?;
    let b = bell_sequence(m, &cache.bell_arguments(m))[m];
    let fact: f64 = (1..=m).map(|q| q as f64).product();
    Ok(b * sign(m) / fact)
}

/// Coefficients `c_0 .. c_n` of `det(lambda I - A) = sum_k c_k lambda^k`.
///
/// `c_k = (-1)^{n-k}` times the sum of principal minors of order `n - k`.
pub fn characteristic_coefficients(a: &ComplexMatrix) -> Result<Vec<C64>> {
    let n = a.require_square()?;
    let cache = TracePowerCache::new(a, n)?;
    Ok((0..=n).map(|k| minor_sum_from_cache(&cache, n - k) * sign(n - k)).collect())
}

/// Horner evaluation of `sum_k coeffs[k] x^k`.
pub fn eval_polynomial(coeffs: &[C64], x: C64) -> C64 {
    coeffs.iter().rev().fold(ZERO, |acc, &c| acc * x + c)
}
