//! Integer partitions in multiplicity form and complete exponential Bell
//! polynomials.

use num_complex::Complex64;

/// All non-negative solutions `(k_1, .., k_m)` of `sum_l l * k_l = m`.
///
/// `m = 0` yields a single empty solution. Solutions come out by recursive
/// descent on the largest part, largest parts first.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut k = vec![0; m];
    descend(m, m, &mut k, &mut out);
    out
}

fn descend(rest: usize, largest: usize, k: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(k.clone());
        return;
    }
    for part in (1..=largest.min(rest)).rev() {
        k[part - 1] += 1;
        descend(rest - part, part, k, out);
        k[part - 1] -= 1;
    }
}

/// `B_0 .. B_m` at `x_1 .. x_m` (`x[0]` is `x_1`) by the binomial recurrence.
///
/// Panics if fewer than `m` arguments are supplied.
pub fn bell_sequence(m: usize, x: &[Complex64]) -> Vec<Complex64> {
    assert!(x.len() >= m, "need {m} Bell arguments, got {}", x.len());
    let mut b = Vec::with_capacity(m + 1);
    b.push(Complex64::new(1.0, 0.0));
    for q in 0..m {
        // B_{q+1} = sum_i C(q, i) B_{q-i} x_{i+1}
        let mut binom = 1.0;
        let mut next = Complex64::new(0.0, 0.0);
        for i in 0..=q {
            next += b[q - i] * x[i] * binom;
            binom = binom * (q - i) as f64 / (i + 1) as f64;
        }
        b.push(next);
    }
    b
}

/// Complete exponential Bell polynomial `B_m(x_1, .., x_m)`.
pub fn bell_polynomial(m: usize, x: &[Complex64]) -> Complex64 {
    bell_sequence(m, x)[m]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    // brute force: every k with k_l <= m, filtered by the constraint
    fn brute(m: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut k = vec![0; m];
        loop {
            if k.iter().enumerate().map(|(l, &kl)| (l + 1) * kl).sum::<usize>() == m {
                out.push(k.clone());
            }
            let mut pos = 0;
            loop {
                if pos == m {
                    return out;
                }
                k[pos] += 1;
                if k[pos] <= m {
                    break;
                }
                k[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn small_targets() {
        assert_eq!(partitions(0), vec![Vec::<usize>::new()]);
        let mut p3 = partitions(3);
        p3.sort();
        assert_eq!(p3, vec![vec![0, 0, 1], vec![1, 1, 0], vec![3, 0, 0]]);
        assert_eq!(partitions(4).len(), 5);
    }

    #[test]
    fn matches_brute_force() {
        let counts = [1, 1, 2, 3, 5, 7, 11, 15];
        for (m, &count) in counts.iter().enumerate() {
            let mut p = partitions(m);
            p.sort();
            let mut b = brute(m);
            b.sort();
            assert_eq!(p, b);
            assert_eq!(p.len(), count);
        }
    }

    #[test]
    fn low_order_bell() {
        let (x1, x2, x3) = (c(1.5), Complex64::new(-0.5, 2.0), c(3.0));
        let x = [x1, x2, x3];
        assert_eq!(bell_polynomial(0, &[]), c(1.0));
        assert_eq!(bell_polynomial(1, &x), x1);
        assert!((bell_polynomial(2, &x) - (x1 * x1 + x2)).norm() < 1e-14);
        let b3 = x1 * x1 * x1 + x1 * x2 * 3.0 + x3;
        assert!((bell_polynomial(3, &x) - b3).norm() < 1e-13);
    }

    #[test]
    fn all_ones_gives_bell_numbers() {
        let x = vec![c(1.0); 8];
        let b = bell_sequence(8, &x);
        let expected = [1.0, 1.0, 2.0, 5.0, 15.0, 52.0, 203.0, 877.0, 4140.0];
        for (got, want) in b.iter().zip(expected) {
            assert_eq!(*got, c(want));
        }
    }
}
