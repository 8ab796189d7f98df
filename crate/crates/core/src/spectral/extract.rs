//! Multiplicity by vanishing complements and eigenvector extraction.

use super::SpectralConfig;
use crate::error::{Error, Result};
use crate::matrix::{canonical_phase, dot, norm, ComplexMatrix, C64};
use crate::tensor::adjugate;
use crate::traces::reduced_complement_via_traces;

/// `C(lambda) = lambda I - H` together with `H` and `lambda`.
#[derive(Debug, Clone)]
pub struct CharacteristicMatrix {
    h: ComplexMatrix,
    lambda: C64,
    c: ComplexMatrix,
}

impl CharacteristicMatrix {
    pub fn new(h: &ComplexMatrix, lambda: C64) -> Result<Self> {
        h.require_square()?;
        Ok(Self { h: h.clone(), lambda, c: h.shifted(lambda) })
    }

    pub fn h(&self) -> &ComplexMatrix {
        &self.h
    }

    pub fn lambda(&self) -> C64 {
        self.lambda
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.c
    }

    pub fn n(&self) -> usize {
        self.c.rows()
    }

    /// Reduced order-one complement `psi(s, lambda)` from the trace expansion.
    pub fn psi(&self, s: usize) -> Result<ComplexMatrix> {
        reduced_complement_via_traces(&self.c, s)
    }

    /// Magnitude against which an order-`s` reduced complement counts as zero:
    /// `|C|_F^(n-s)`.
    ///
    /// `|C|_F` is floored at the rounding level of `C` divided by `vanish_tol`,
    /// so that a characteristic matrix that is itself at rounding level (a
    /// scalar `H`) does not shrink the threshold along with it.
    pub fn vanishing_scale(&self, s: usize, vanish_tol: f64) -> f64 {
        let floor = 64.0 * f64::EPSILON * (1.0 + self.h.frobenius()) / vanish_tol;
        self.c.frobenius().max(floor).powi((self.n() - s) as i32)
    }
}

/// `max |psi(s, lambda)|` relative to [`CharacteristicMatrix::vanishing_scale`]
/// for `s = 1..=n`.
pub fn vanishing_profile(h: &ComplexMatrix, lambda: C64, vanish_tol: f64) -> Result<Vec<f64>> {
    let cm = CharacteristicMatrix::new(h, lambda)?;
    (1..=cm.n()).map(|s| Ok(cm.psi(s)?.max_abs() / cm.vanishing_scale(s, vanish_tol))).collect()
}

/// Smallest `s` whose reduced order-one complement at `lambda` does not vanish.
pub fn multiplicity_by_vanishing(h: &ComplexMatrix, lambda: C64, cfg: &SpectralConfig) -> Result<usize> {
    let cm = CharacteristicMatrix::new(h, lambda)?;
    for s in 1..=cm.n() {
        if cm.psi(s)?.max_abs() > cfg.vanish_tol * cm.vanishing_scale(s, cfg.vanish_tol) {
            return Ok(s);
        }
    }
    Err(Error::DegenerateInput(format!("no reduced complement is nonzero at lambda = {lambda}")))
}

/// Unit eigenvector at a simple eigenvalue: the largest column of `adj C(lambda)`.
pub fn eigenvector_nondegenerate(h: &ComplexMatrix, lambda: C64, cfg: &SpectralConfig) -> Result<Vec<C64>> {
    let cm = CharacteristicMatrix::new(h, lambda)?;
    let adj = adjugate(cm.matrix())?;
    let (best, len) = (0..cm.n())
        .map(|i| (i, norm(&adj.column(i))))
        .rev()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or_else(|| Error::Shape("empty matrix".into()))?;
    if len <= cfg.vanish_tol * cm.vanishing_scale(1, cfg.vanish_tol) {
        return Err(Error::MultiplicityMismatch(format!(
            "adjugate of C({lambda}) vanishes; the eigenvalue is degenerate"
        )));
    }
    Ok(canonical_phase(&adj.column(best)))
}

/// `s` orthonormal eigenvectors spanning the eigenspace of an `s`-fold eigenvalue.
pub fn eigenvectors_degenerate(
    h: &ComplexMatrix,
    lambda: C64,
    s: usize,
    cfg: &SpectralConfig,
) -> Result<Vec<Vec<C64>>> {
    let cm = CharacteristicMatrix::new(h, lambda)?;
    let psi = cm.psi(s)?;
    let basis = pivoted_orthonormal_columns(&psi, cfg.rank_tol);
    if basis.len() != s {
        return Err(Error::RankMismatch { expected: s, found: basis.len() });
    }
    Ok(basis.iter().map(|v| canonical_phase(v)).collect())
}

/// Column-pivoted modified Gram-Schmidt with one reorthogonalization pass.
///
/// The column of largest remaining norm is taken next; the process stops
/// once that norm falls below `rel_tol` times the largest initial column
/// norm. The number of returned vectors is the numerical rank.
pub fn pivoted_orthonormal_columns(m: &ComplexMatrix, rel_tol: f64) -> Vec<Vec<C64>> {
    let mut cols = m.columns();
    let first = cols.iter().map(|c| norm(c)).fold(0.0, f64::max);
    let mut basis: Vec<Vec<C64>> = Vec::new();
    if first == 0.0 {
        return basis;
    }
    // ties go to the lowest column index
    let mut remaining: Vec<usize> = (0..cols.len()).collect();
    while !remaining.is_empty() {
        let (pos, len) = remaining
            .iter()
            .enumerate()
            .map(|(pos, &c)| (pos, norm(&cols[c])))
            .rev()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty");
        if len <= rel_tol * first {
            break;
        }
        let pivot = remaining.remove(pos);
        let mut q = cols[pivot].clone();
        // second pass against the accumulated basis
        for b in &basis {
            let c = dot(b, &q);
            for (x, y) in q.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
        let qn = norm(&q);
        let q: Vec<C64> = q.iter().map(|x| x / qn).collect();
        for &c in &remaining {
            let coef = dot(&q, &cols[c]);
            for (x, y) in cols[c].iter_mut().zip(&q) {
                *x -= coef * y;
            }
        }
        basis.push(q);
    }
    basis
}

/// Largest `|m[j][i] m[l][k] - m[l][i] m[j][k]|` over all pairs of columns and rows.
///
/// Zero exactly when all columns are parallel.
pub fn max_cross_determinant(m: &ComplexMatrix) -> f64 {
    let (rows, cols) = (m.rows(), m.cols());
    let mut worst: f64 = 0.0;
    for i in 0..cols {
        for k in i + 1..cols {
            for j in 0..rows {
                for l in j + 1..rows {
                    let d = m[(j, i)] * m[(l, k)] - m[(l, i)] * m[(j, k)];
                    worst = worst.max(d.norm());
                }
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{ONE, ZERO};

    #[test]
    fn pivoted_mgs_rank() {
        let m =
            ComplexMatrix::from_real_rows(&[vec![1.0, 2.0, 0.0], vec![1.0, 2.0, 0.0], vec![0.0, 0.0, 3.0]]).unwrap();
        let b = pivoted_orthonormal_columns(&m, 1e-10);
        assert_eq!(b.len(), 2);
        assert!(dot(&b[0], &b[1]).norm() < 1e-15);
        assert!(pivoted_orthonormal_columns(&ComplexMatrix::zeros(2, 2), 1e-10).is_empty());
    }

    #[test]
    fn diagonal_vectors() {
        let cfg = SpectralConfig::default();
        let h = ComplexMatrix::from_real_diag(&[1.0, 2.0]);
        let v = eigenvector_nondegenerate(&h, ONE, &cfg).unwrap();
        assert_eq!(v, vec![ONE, ZERO]);
        let h = ComplexMatrix::from_real_diag(&[5.0, 5.0, 7.0]);
        assert_eq!(multiplicity_by_vanishing(&h, C64::new(5.0, 0.0), &cfg).unwrap(), 2);
        assert!(matches!(eigenvector_nondegenerate(&h, C64::new(5.0, 0.0), &cfg), Err(Error::MultiplicityMismatch(_))));
        let vs = eigenvectors_degenerate(&h, C64::new(5.0, 0.0), 2, &cfg).unwrap();
        assert_eq!(vs.len(), 2);
        assert!(matches!(
            eigenvectors_degenerate(&h, C64::new(5.0, 0.0), 1, &cfg),
            Err(Error::RankMismatch { expected: 1, found: 0 })
        ));
    }

    #[test]
    fn scalar_matrix_is_fully_degenerate() {
        let cfg = SpectralConfig::default();
        let h = ComplexMatrix::identity(4).scale_real(3.0);
        let l = C64::new(3.0, 0.0);
        assert_eq!(multiplicity_by_vanishing(&h, l, &cfg).unwrap(), 4);
        let vs = eigenvectors_degenerate(&h, l, 4, &cfg).unwrap();
        let m = ComplexMatrix::from_columns(&vs).unwrap();
        assert_eq!(m, ComplexMatrix::identity(4));
    }

    #[test]
    fn cross_determinant_of_rank_one() {
        let u = [C64::new(1.0, 1.0), C64::new(2.0, 0.0), C64::new(0.0, -1.0)];
        let m = ComplexMatrix::from_columns(&[u.to_vec(), u.iter().map(|x| x * 3.0).collect()]).unwrap();
        assert!(max_cross_determinant(&m) < 1e-14);
        assert!(max_cross_determinant(&ComplexMatrix::identity(2)) == 1.0);
    }
}
