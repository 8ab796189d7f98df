//! Simultaneous root finding for a polynomial given by its coefficients.

use crate::error::{Error, Result};
use crate::matrix::{C64, ZERO};

const MAX_ITER: usize = 1000;

// p(z) and p'(z) together with a rounding bound for p(z)
fn eval(coeffs: &[C64], z: C64) -> (C64, C64, f64) {
    let mut p = ZERO;
    let mut dp = ZERO;
    let mut bound = 0.0;
    let az = z.norm();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        bound = bound * az + c.norm();
    }
    (p, dp, bound)
}

/// All roots of `sum_k coeffs[k] z^k` by Aberth-Ehrlich iteration.
///
/// The leading coefficient must be nonzero. A root is frozen once its
/// correction is negligible or the polynomial value there is at rounding
/// level.
pub fn polynomial_roots(coeffs: &[C64]) -> Result<Vec<C64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    if lead == ZERO {
        return Err(Error::DegenerateInput("leading coefficient is zero".into()));
    }
    let monic: Vec<C64> = coeffs.iter().map(|c| c / lead).collect();
    let center = -monic[n - 1] / n as f64;
    // Fujiwara-type bound on the distance of the roots from zero
    let radius =
        (0..n).map(|k| monic[k].norm().powf(1.0 / (n - k) as f64)).fold(0.0, f64::max) * 2.0 + center.norm() + 1.0;
    let mut z: Vec<C64> =
        (0..n).map(|k| center + C64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4)).collect();
    let eps = f64::EPSILON;
    let mut done = vec![false; n];
    for _ in 0..MAX_ITER {
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp, bound) = eval(&monic, z[k]);
            if p.norm() <= 16.0 * eps * bound {
                done[k] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: C64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (C64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                // coincident iterates: nudge apart
                let nudge = C64::new(eps.sqrt(), eps.sqrt()) * (1.0 + z[k].norm());
                z[k] += nudge;
                continue;
            }
            z[k] -= step;
            if step.norm() <= 4.0 * eps * (1.0 + z[k].norm()) {
                done[k] = true;
            }
        }
    }
    Err(Error::Convergence(format!("polynomial root iteration did not settle within {MAX_ITER} sweeps")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn sorted_re(mut v: Vec<C64>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re));
        v.iter().map(|z| z.re).collect()
    }

    #[test]
    fn cubic_with_simple_roots() {
        // (z-1)(z-2)(z-3)
        let r = polynomial_roots(&[c(-6.0), c(11.0), c(-6.0), c(1.0)]).unwrap();
        for (got, want) in sorted_re(r).iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-13);
        }
    }

    #[test]
    fn double_root_within_sqrt_eps() {
        // (z-5)^2 (z-7)
        let r = polynomial_roots(&[c(-175.0), c(95.0), c(-17.0), c(1.0)]).unwrap();
        let r = sorted_re(r);
        assert!((r[0] - 5.0).abs() < 1e-6 && (r[1] - 5.0).abs() < 1e-6);
        assert!((r[2] - 7.0).abs() < 1e-12);
    }

    #[test]
    fn complex_roots() {
        // z^2 + 1
        let r = polynomial_roots(&[c(1.0), ZERO, c(1.0)]).unwrap();
        let mut ims: Vec<f64> = r.iter().map(|z| z.im).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[0] + 1.0).abs() < 1e-14 && (ims[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn quintuple_root() {
        // (z - 2)^5
        let coeffs = [c(-32.0), c(80.0), c(-80.0), c(40.0), c(-10.0), c(1.0)];
        let r = polynomial_roots(&coeffs).unwrap();
        assert!(r.iter().all(|z| (z - 2.0).norm() < 1e-2));
    }
}
