//! Eigenvalues from the characteristic polynomial, multiplicities from
//! vanishing reduced complements, and eigenvectors from adjugate columns
//! (simple eigenvalues) or from reduced order-one complements (degenerate
//! ones).

mod extract;
mod roots;

pub use extract::{
    eigenvector_nondegenerate, eigenvectors_degenerate, max_cross_determinant, multiplicity_by_vanishing,
    pivoted_orthonormal_columns, vanishing_profile, CharacteristicMatrix,
};
pub use roots::polynomial_roots;

use serde::{Deserialize, Serialize};

use crate::check::IdentityCheckResult;
use crate::error::{Error, Result};
use crate::matrix::{norm, ComplexMatrix, C64};
use crate::tensor::{principal_minor_sum, MAX_TENSOR_DIM};
use crate::traces::characteristic_coefficients;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralConfig {
    /// Hermiticity tolerance, relative to `1 + max |H|`.
    pub tol: f64,
    /// Base clustering radius, relative to `1 + max |H|`.
    pub cluster_tol: f64,
    /// A reduced complement of order `s` counts as zero below `vanish_tol * |C|_F^(n-s)`.
    pub vanish_tol: f64,
    /// Pivot threshold of the orthogonalization, relative to the largest column.
    pub rank_tol: f64,
    /// Bound on residuals and unitarity defects, relative to `1 + max |H|`.
    pub residual_tol: f64,
    pub hermitian_check: bool,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            cluster_tol: 1e-7,
            vanish_tol: 1e-9,
            rank_tol: 1e-8,
            residual_tol: 1e-8,
            hermitian_check: true,
        }
    }
}

/// Eigenvalue with its multiplicity and the raw roots merged into it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenGroup {
    pub lambda: C64,
    pub multiplicity: usize,
    pub members: Vec<C64>,
    /// Multiplicity read off the vanishing chain at `lambda`.
    pub vanishing_multiplicity: usize,
}

impl EigenGroup {
    pub fn agrees(&self) -> bool {
        self.multiplicity == self.vanishing_multiplicity
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Eigenpair {
    pub lambda: C64,
    pub vectors: Vec<Vec<C64>>,
    /// Largest `|H v - lambda v|` over `vectors`.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub groups: Vec<EigenGroup>,
    pub pairs: Vec<Eigenpair>,
    pub checks: Vec<IdentityCheckResult>,
    pub config: SpectralConfig,
}

impl SpectrumReport {
    /// Eigenvectors as the columns of `V`, in group order.
    pub fn eigenvectors(&self) -> ComplexMatrix {
        let cols: Vec<Vec<C64>> = self.pairs.iter().flat_map(|p| p.vectors.iter().cloned()).collect();
        ComplexMatrix::from_columns(&cols).unwrap_or_else(|_| ComplexMatrix::zeros(0, 0))
    }

    pub fn eigenvalues(&self) -> Vec<C64> {
        self.groups.iter().flat_map(|g| std::iter::repeat_n(g.lambda, g.multiplicity)).collect()
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn validate(h: &ComplexMatrix, cfg: &SpectralConfig) -> Result<usize> {
    let n = h.require_square()?;
    if n > MAX_TENSOR_DIM {
        return Err(Error::Guard { n, max: MAX_TENSOR_DIM, what: "the spectral pipeline" });
    }
    if cfg.hermitian_check {
        let dev = h.hermiticity_deviation();
        let tol = cfg.tol * (1.0 + h.max_abs());
        if dev > tol || !dev.is_finite() {
            return Err(Error::Hermiticity { deviation: dev, tol });
        }
    }
    Ok(n)
}

/// Radius within which `m` computed roots may stand for one `m`-fold root.
///
/// The coefficient of `z^k` is a sum over partitions bounded by `S^(n-k)`
/// with `S = sqrt(n) |H|_F`, so rounding perturbs it by about
/// `64 eps S^(n-k)`. An `m`-fold root then moves by
/// `(|dp(c)| / |p^(m)(c) / m!|)^(1/m)`.
struct RootSensitivity {
    coeffs: Vec<C64>,
    perturbation: Vec<f64>,
    floor: f64,
}

impl RootSensitivity {
    fn new(h: &ComplexMatrix, coeffs: Vec<C64>, cfg: &SpectralConfig) -> Self {
        let n = coeffs.len() - 1;
        let big_s = (n as f64).sqrt() * h.frobenius();
        let perturbation = (0..=n).map(|k| 64.0 * f64::EPSILON * big_s.powi((n - k) as i32)).collect();
        Self { coeffs, perturbation, floor: cfg.cluster_tol * (1.0 + h.max_abs()) }
    }

    fn radius(&self, m: usize, centre: C64) -> f64 {
        let az = centre.norm();
        let dp: f64 = self.perturbation.iter().enumerate().map(|(k, d)| d * az.powi(k as i32)).sum();
        // p^(m)(c) / m! = sum_k C(k, m) c_k centre^(k - m)
        let mut taylor = C64::new(0.0, 0.0);
        for (k, &c) in self.coeffs.iter().enumerate().skip(m) {
            taylor += c * crate::tensor::binomial(k, m) as f64 * centre.powi((k - m) as i32);
        }
        let est = if taylor.norm() > 0.0 { 4.0 * (dp / taylor.norm()).powf(1.0 / m as f64) } else { f64::INFINITY };
        est.max(self.floor)
    }
}

/// Newton on `e_{n-m+1}(C(lambda))`, whose root is simple at an `m`-fold
/// eigenvalue; its derivative is `m e_{n-m}(C(lambda))`.
fn refine(h: &ComplexMatrix, start: C64, m: usize, limit: f64, real: bool) -> Result<C64> {
    let n = h.rows();
    let mut x = start;
    for _ in 0..60 {
        let c = h.shifted(x);
        let g = principal_minor_sum(&c, n - m + 1)?;
        let dg = principal_minor_sum(&c, n - m)? * m as f64;
        if dg.norm() == 0.0 {
            break;
        }
        let mut step = g / dg;
        if real {
            step.im = 0.0;
        }
        let next = x - step;
        if !next.is_finite() || (next - start).norm() > limit {
            break;
        }
        x = next;
        if step.norm() <= 2.0 * f64::EPSILON * (1.0 + x.norm()) {
            break;
        }
    }
    Ok(x)
}

// The first `m` of `roots` are exactly the `m` roots closest to `lambda`.
fn nearest_are(roots: &[C64], m: usize, lambda: C64) -> bool {
    let inside = roots[..m].iter().map(|z| (z - lambda).norm()).fold(0.0, f64::max);
    roots[m..].iter().all(|z| (z - lambda).norm() >= inside)
}

fn psi_rank(h: &ComplexMatrix, lambda: C64, m: usize, cfg: &SpectralConfig) -> Result<usize> {
    let psi = CharacteristicMatrix::new(h, lambda)?.psi(m)?;
    Ok(pivoted_orthonormal_columns(&psi, cfg.rank_tol).len())
}

/// Eigenvalues of `h`, grouped by multiplicity.
///
/// Roots of the characteristic polynomial are sorted; a run of `m` nearby
/// roots becomes one group when the vanishing chain at its refined centre
/// also reports multiplicity `m` and the order-`m` reduced complement there
/// has rank `m`, and the refined centre has no outside root nearer than its
/// own members. Larger runs are tried first. A root that
/// joins no confirmed run stands alone and keeps whatever the vanishing
/// test says in `vanishing_multiplicity`.
pub fn eigenvalues(h: &ComplexMatrix, cfg: &SpectralConfig) -> Result<Vec<EigenGroup>> {
    let n = validate(h, cfg)?;
    let real = cfg.hermitian_check;
    let coeffs = characteristic_coefficients(h)?;
    let mut roots = polynomial_roots(&coeffs)?;
    if real {
        for r in &mut roots {
            r.im = 0.0;
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let sens = RootSensitivity::new(h, coeffs, cfg);
    let mut groups = Vec::new();
    let mut i = 0;
    while i < n {
        let mut chosen = None;
        for m in (2..=n - i).rev() {
            let members = &roots[i..i + m];
            let centre: C64 = members.iter().sum::<C64>() / m as f64;
            let radius = sens.radius(m, centre);
            if members.iter().any(|z| (z - centre).norm() > radius) {
                continue;
            }
            let lambda = refine(h, centre, m, radius, real)?;
            if members.iter().any(|z| (z - lambda).norm() > sens.radius(m, lambda))
                || !nearest_are(&roots[i..], m, lambda)
            {
                continue;
            }
            if multiplicity_by_vanishing(h, lambda, cfg)? == m && psi_rank(h, lambda, m, cfg)? == m {
                chosen =
                    Some(EigenGroup { lambda, multiplicity: m, members: members.to_vec(), vanishing_multiplicity: m });
                break;
            }
        }
        let group = match chosen {
            Some(g) => g,
            None => {
                let lambda = refine(h, roots[i], 1, sens.radius(1, roots[i]), real)?;
                let vm = multiplicity_by_vanishing(h, lambda, cfg)?;
                EigenGroup { lambda, multiplicity: 1, members: vec![roots[i]], vanishing_multiplicity: vm }
            }
        };
        i += group.multiplicity;
        groups.push(group);
    }
    Ok(groups)
}

fn residual(h: &ComplexMatrix, lambda: C64, vectors: &[Vec<C64>]) -> f64 {
    vectors
        .iter()
        .map(|v| {
            let hv = h.mat_vec(v);
            let r: Vec<C64> = hv.iter().zip(v).map(|(a, b)| a - lambda * b).collect();
            norm(&r)
        })
        .fold(0.0, f64::max)
}

/// Eigenvectors for one group: the adjugate route when simple, the reduced
/// complement route otherwise.
pub fn eigenpair(h: &ComplexMatrix, group: &EigenGroup, cfg: &SpectralConfig) -> Result<Eigenpair> {
    let vectors = if group.multiplicity == 1 {
        vec![eigenvector_nondegenerate(h, group.lambda, cfg)?]
    } else {
        eigenvectors_degenerate(h, group.lambda, group.multiplicity, cfg)?
    };
    Ok(Eigenpair { lambda: group.lambda, residual: residual(h, group.lambda, &vectors), vectors })
}

/// Full decomposition with unitarity, diagonalization and residual checks.
pub fn full_spectrum(h: &ComplexMatrix, cfg: &SpectralConfig) -> Result<SpectrumReport> {
    let groups = eigenvalues(h, cfg)?;
    let pairs = groups.iter().map(|g| eigenpair(h, g, cfg)).collect::<Result<Vec<_>>>()?;
    let tol = cfg.residual_tol;
    let scale = 1.0 + h.max_abs();
    let mut checks = Vec::new();
    for (k, (g, p)) in groups.iter().zip(&pairs).enumerate() {
        checks.push(IdentityCheckResult::scaled(format!("residual group={k}"), p.residual, scale, tol));
        let mut agree = IdentityCheckResult::exact(
            format!("multiplicity group={k} cluster={} vanishing={}", g.multiplicity, g.vanishing_multiplicity),
            (g.multiplicity as f64 - g.vanishing_multiplicity as f64).abs(),
        );
        agree.tol = 0.0;
        checks.push(agree);
    }
    let report = SpectrumReport { groups, pairs, checks, config: *cfg };
    let v = report.eigenvectors();
    let n = h.rows();
    let vhv = &(&v.adjoint() * h) * &v;
    let gram = &v.adjoint() * &v;
    let unitarity = gram.max_abs_diff(&ComplexMatrix::identity(n));
    let mut off: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off = off.max(vhv[(i, j)].norm());
            }
        }
    }
    let mut report = report;
    report.checks.push(IdentityCheckResult::absolute("unitarity V^H V = I", unitarity, tol));
    report.checks.push(IdentityCheckResult::scaled("diagonal V^H H V", off, scale, tol));
    Ok(report)
}
