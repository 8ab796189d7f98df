use crate::error::{Error, Result};
use crate::matrix::{dot, ComplexMatrix, C64, ZERO};

pub const JACOBI_MAX_N: usize = 12;
const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as the columns of the second matrix.
pub fn eig_oracle(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = h.require_square()?;
    if n > JACOBI_MAX_N {
        return Err(Error::Guard { n, max: JACOBI_MAX_N, what: "the Jacobi oracle" });
    }
    let dev = h.hermiticity_deviation();
    let tol = 1e-10 * (1.0 + h.max_abs());
    if dev > tol {
        return Err(Error::Hermiticity { deviation: dev, tol });
    }
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius().max(f64::MIN_POSITIVE);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::Convergence(format!("Jacobi sweeps did not converge within {MAX_SWEEPS}")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.total_cmp(&a[(y, y)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let cols: Vec<Vec<C64>> = order.iter().map(|&k| v.column(k)).collect();
    let vecs = if n == 0 { ComplexMatrix::zeros(0, 0) } else { ComplexMatrix::from_columns(&cols)? };
    Ok((values, vecs))
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq.conj() / mag; // e^{-i phi}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 { 1.0 / (tau + (1.0 + tau * tau).sqrt()) } else { -1.0 / (-tau + (1.0 + tau * tau).sqrt()) };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on the (p, q) plane
    let g = [[C64::new(c, 0.0), C64::new(s, 0.0)], [-phase * s, phase * c]];
    let n = a.rows();
    for k in 0..n {
        let (x, y) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = x * g[0][0] + y * g[1][0];
        a[(k, q)] = x * g[0][1] + y * g[1][1];
        let (x, y) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = x * g[0][0] + y * g[1][0];
        v[(k, q)] = x * g[0][1] + y * g[1][1];
    }
    for k in 0..n {
        let (x, y) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g[0][0].conj() * x + g[1][0].conj() * y;
        a[(q, k)] = g[0][1].conj() * x + g[1][1].conj() * y;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
}

fn check_orthonormal(basis: &[Vec<C64>], n: usize) -> Result<()> {
    for (x, u) in basis.iter().enumerate() {
        if u.len() != n {
            return Err(Error::Shape(format!("vector of length {} in dimension {n}", u.len())));
        }
        for (y, w) in basis.iter().enumerate().skip(x) {
            let want = if x == y { 1.0 } else { 0.0 };
            if (dot(u, w) - want).norm() > 1e-8 {
                return Err(Error::DegenerateInput("basis is not orthonormal".into()));
            }
        }
    }
    Ok(())
}

/// Principal angles between the spans of two orthonormal sets, ascending.
///
/// Sines come from the part of one basis orthogonal to the other, cosines
/// from their overlap; each angle is `atan2(sin, cos)` so that both tiny and
/// near-right angles keep full precision.
pub fn subspace_angles(u1: &[Vec<C64>], u2: &[Vec<C64>]) -> Result<Vec<f64>> {
    let n = u1.first().or(u2.first()).map_or(0, Vec::len);
    check_orthonormal(u1, n)?;
    check_orthonormal(u2, n)?;
    if u1.is_empty() || u2.is_empty() {
        return Ok(Vec::new());
    }
    // let `small` be the basis with fewer vectors
    let (big, small) = if u1.len() >= u2.len() { (u1, u2) } else { (u2, u1) };
    let k = small.len();
    let overlap =
        ComplexMatrix::from_vec(big.len(), k, big.iter().flat_map(|b| small.iter().map(move |s| dot(b, s))).collect())?;
    let residual: Vec<Vec<C64>> = small
        .iter()
        .enumerate()
        .map(|(c, s)| {
            let mut r = s.clone();
            for (row, b) in big.iter().enumerate() {
                let coef = overlap[(row, c)];
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= coef * y;
                }
            }
            r
        })
        .collect();
    let gram_cos = &overlap.adjoint() * &overlap;
    let gram_sin = ComplexMatrix::from_vec(
        k,
        k,
        (0..k).flat_map(|x| (0..k).map(|y| dot(&residual[x], &residual[y])).collect::<Vec<_>>()).collect(),
    )?;
    let (mut cos2, _) = eig_oracle(&gram_cos.hermitian_part())?;
    let (sin2, _) = eig_oracle(&gram_sin.hermitian_part())?;
    cos2.reverse();
    Ok(sin2.iter().zip(&cos2).map(|(&s2, &c2)| s2.max(0.0).sqrt().atan2(c2.max(0.0).sqrt())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ONE;

    #[test]
    fn diagonal_is_fixed() {
        let h = ComplexMatrix::from_real_diag(&[3.0, -1.0, 2.0]);
        let (vals, vecs) = eig_oracle(&h).unwrap();
        assert_eq!(vals, vec![-1.0, 2.0, 3.0]);
        assert_eq!(vecs.column(0), vec![ZERO, ONE, ZERO]);
    }

    #[test]
    fn two_level_closed_form() {
        let (v11, v22, v12) = (0.7, -0.4, C64::new(0.3, -0.8));
        let h =
            ComplexMatrix::from_rows(&[vec![C64::new(v11, 0.0), v12], vec![v12.conj(), C64::new(v22, 0.0)]]).unwrap();
        let w = ((v11 - v22) * (v11 - v22) + 4.0 * v12.norm_sqr()).sqrt();
        let (vals, _) = eig_oracle(&h).unwrap();
        assert!((vals[0] - (v11 + v22 - w) / 2.0).abs() < 1e-12);
        assert!((vals[1] - (v11 + v22 + w) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn angle_cases() {
        let e = |k: usize| -> Vec<C64> { (0..4).map(|i| if i == k { ONE } else { ZERO }).collect() };
        let a = subspace_angles(&[e(0), e(1)], &[e(1), e(0)]).unwrap();
        assert!(a.iter().all(|&x| x.abs() < 1e-15));
        let e2 = |k: usize| -> Vec<C64> { (0..2).map(|i| if i == k { ONE } else { ZERO }).collect() };
        let a = subspace_angles(&[e2(0)], &[e2(1)]).unwrap();
        assert!((a[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let theta = 1e-9_f64;
        let rotated: Vec<C64> = vec![C64::new(theta.cos(), 0.0), ZERO, C64::new(theta.sin(), 0.0), ZERO];
        let a = subspace_angles(&[e(0), e(1)], &[rotated, e(1)]).unwrap();
        assert!((a[1] - theta).abs() < 1e-20 + 1e-10 * theta, "{a:?}");
        let bad = vec![C64::new(2.0, 0.0), ZERO, ZERO, ZERO];
        assert!(matches!(subspace_angles(&[bad], &[e(0)]), Err(Error::DegenerateInput(_))));
    }
}
