use serde::{Deserialize, Serialize};

use crate::check::IdentityCheckResult;
use crate::error::{Error, Result};
use crate::matrix::{dot, norm, ComplexMatrix, C64};
use crate::oracle::subspace_angles;
use crate::spectral::{
    eigenvectors_degenerate, full_spectrum, pivoted_orthonormal_columns, CharacteristicMatrix, SpectralConfig,
};
use crate::tensor::{adjugate, determinant};

use super::two_level::pauli_matrices;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiracParams {
    pub m: f64,
    pub p: [f64; 3],
}

impl DiracParams {
    pub fn new(m: f64, p: [f64; 3]) -> Self {
        Self { m, p }
    }

    pub fn energy(&self) -> f64 {
        (self.p.iter().map(|x| x * x).sum::<f64>() + self.m * self.m).sqrt()
    }
}

fn blocks(tl: &ComplexMatrix, tr: &ComplexMatrix, bl: &ComplexMatrix, br: &ComplexMatrix) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = tl[(i, j)];
            m[(i, j + 2)] = tr[(i, j)];
            m[(i + 2, j)] = bl[(i, j)];
            m[(i + 2, j + 2)] = br[(i, j)];
        }
    }
    m
}

/// `gamma^0 .. gamma^3` in the standard representation.
pub fn gamma_matrices() -> [ComplexMatrix; 4] {
    let zero = ComplexMatrix::zeros(2, 2);
    let one = ComplexMatrix::identity(2);
    let [s1, s2, s3] = pauli_matrices();
    [
        blocks(&one, &zero, &zero, &-&one),
        blocks(&zero, &s1, &-&s1, &zero),
        blocks(&zero, &s2, &-&s2, &zero),
        blocks(&zero, &s3, &-&s3, &zero),
    ]
}

/// `alpha_k = gamma^0 gamma^k`.
pub fn alpha_matrices() -> [ComplexMatrix; 3] {
    let zero = ComplexMatrix::zeros(2, 2);
    let [s1, s2, s3] = pauli_matrices();
    [blocks(&zero, &s1, &s1, &zero), blocks(&zero, &s2, &s2, &zero), blocks(&zero, &s3, &s3, &zero)]
}

/// `H = alpha.p + beta m`.
pub fn dirac_hamiltonian(params: &DiracParams) -> ComplexMatrix {
    let alpha = alpha_matrices();
    let mut h = gamma_matrices()[0].scale_real(params.m);
    for (a, &pk) in alpha.iter().zip(&params.p) {
        h = &h + &a.scale_real(pk);
    }
    h
}

/// `p-hat = p0 gamma^0 - p.gamma`.
pub fn p_slash(params: &DiracParams, p0: f64) -> ComplexMatrix {
    let g = gamma_matrices();
    let mut out = g[0].scale_real(p0);
    for (gk, &pk) in g[1..].iter().zip(&params.p) {
        out = &out - &gk.scale_real(pk);
    }
    out
}

/// `C(lambda) = gamma_0 (p-hat - m)` with `p0 = lambda`.
pub fn dirac_characteristic(params: &DiracParams, lambda: f64) -> ComplexMatrix {
    let shifted = &p_slash(params, lambda) - &ComplexMatrix::identity(4).scale_real(params.m);
    &gamma_matrices()[0] * &shifted
}

/// `2 lambda (p-hat + m) gamma_0` with `p0 = lambda`.
pub fn dirac_psi(params: &DiracParams, lambda: f64) -> ComplexMatrix {
    let plus = &p_slash(params, lambda) + &ComplexMatrix::identity(4).scale_real(params.m);
    (&plus * &gamma_matrices()[0]).scale_real(2.0 * lambda)
}

/// `(p-hat + m) / 2m` with `p0 = p0`.
pub fn dirac_projector(params: &DiracParams, p0: f64) -> Result<ComplexMatrix> {
    if params.m == 0.0 {
        return Err(Error::MasslessLimit);
    }
    let plus = &p_slash(params, p0) + &ComplexMatrix::identity(4).scale_real(params.m);
    Ok(plus.scale_real(0.5 / params.m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinorKind {
    U,
    V,
}

/// A bispinor with its labels.
///
/// `v` spinors are eigenvectors of `H(p)` at `-E`; their labels carry the
/// charge-conjugated momentum and spin (`p -> -p`, `s -> -s`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bispinor {
    pub kind: SpinorKind,
    pub energy: f64,
    pub momentum: [f64; 3],
    /// `+1` or `-1`: spin along `e_z` in the rest frame.
    pub spin: i8,
    pub components: Vec<C64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiracReference {
    pub params: DiracParams,
    pub energy: f64,
    /// Projector at `p0 = E`.
    pub projector: ComplexMatrix,
    /// Projector at `p0 = -E`.
    pub projector_negative: ComplexMatrix,
    pub u: [Bispinor; 2],
    pub v: [Bispinor; 2],
    /// `Psi` at `lambda = E` and at `lambda = -E`.
    pub psi_positive: ComplexMatrix,
    pub psi_negative: ComplexMatrix,
}

/// `N = sqrt(2m / (E + m))`, which gives `ubar u = 1` for
/// `u = N (p-hat + m)/2m u(0)`.
pub fn normalization(params: &DiracParams) -> f64 {
    (2.0 * params.m / (params.energy() + params.m)).sqrt()
}

fn unit(k: usize) -> Vec<C64> {
    let mut e = vec![C64::new(0.0, 0.0); 4];
    e[k] = C64::new(1.0, 0.0);
    e
}

pub fn dirac_reference(params: &DiracParams) -> Result<DiracReference> {
    let e = params.energy();
    let projector = dirac_projector(params, e)?;
    let projector_negative = dirac_projector(params, -e)?;
    let n = normalization(params);
    let build =
        |proj: &ComplexMatrix, rest: usize| -> Vec<C64> { proj.mat_vec(&unit(rest)).iter().map(|z| z * n).collect() };
    let neg_p = [-params.p[0], -params.p[1], -params.p[2]];
    let u = [
        Bispinor { kind: SpinorKind::U, energy: e, momentum: params.p, spin: 1, components: build(&projector, 0) },
        Bispinor { kind: SpinorKind::U, energy: e, momentum: params.p, spin: -1, components: build(&projector, 1) },
    ];
    let v = [
        Bispinor {
            kind: SpinorKind::V,
            energy: e,
            momentum: neg_p,
            spin: -1,
            components: build(&projector_negative, 3),
        },
        Bispinor {
            kind: SpinorKind::V,
            energy: e,
            momentum: neg_p,
            spin: 1,
            components: build(&projector_negative, 2),
        },
    ];
    Ok(DiracReference {
        params: *params,
        energy: e,
        projector,
        projector_negative,
        u,
        v,
        psi_positive: dirac_psi(params, e),
        psi_negative: dirac_psi(params, -e),
    })
}

/// `psi-bar psi = psi^H gamma_0 psi`.
pub fn bar_product(psi: &[C64]) -> C64 {
    dot(psi, &gamma_matrices()[0].mat_vec(psi))
}

/// Reference against library at both energies: vanishing determinant and
/// adjugate, the trace-route `Psi`, `C Psi = 0`, the trace values, the
/// extracted spans and the spinor normalization.
pub fn dirac_checks(params: &DiracParams, cfg: &SpectralConfig) -> Result<Vec<IdentityCheckResult>> {
    let reference = dirac_reference(params)?;
    let h = dirac_hamiltonian(params);
    let e = reference.energy;
    let mut out = Vec::new();

    out.push(IdentityCheckResult::scaled(
        "C(lambda) = gamma_0 (p-hat - m)",
        h.shifted(C64::new(0.7 * e, 0.0)).max_abs_diff(&dirac_characteristic(params, 0.7 * e)),
        1.0 + e,
        1e-12,
    ));
    for (lambda, tag, spinors) in [(e, "+E", &reference.u), (-e, "-E", &reference.v)] {
        let cm = CharacteristicMatrix::new(&h, C64::new(lambda, 0.0))?;
        let c = cm.matrix();
        out.push(IdentityCheckResult::scaled(format!("det C({tag}) = 0"), determinant(c)?.norm(), e.powi(4), 1e-9));
        out.push(IdentityCheckResult::scaled(format!("adj C({tag}) = 0"), adjugate(c)?.max_abs(), e.powi(3), 1e-9));
        let want = dirac_psi(params, lambda);
        let psi = cm.psi(2)?;
        out.push(IdentityCheckResult::relative(
            format!("Psi(2, {tag}) = 2 lambda (p-hat + m) gamma_0"),
            psi.as_slice(),
            want.as_slice(),
            1e-10,
        ));
        out.push(IdentityCheckResult::scaled(
            format!("C({tag}) Psi = 0"),
            (c * &want).max_abs(),
            e * want.max_abs(),
            1e-12,
        ));
        let mut power = c.clone();
        let mut worst: f64 = 0.0;
        for l in 1..=4 {
            let expected = 2f64.powi(l + 1) * lambda.powi(l);
            worst = worst.max((power.trace() - expected).norm() / expected.abs());
            power = &power * c;
        }
        out.push(IdentityCheckResult::absolute(format!("Tr C^l({tag}) = 2^(l+1) lambda^l"), worst, 1e-10));

        let basis = eigenvectors_degenerate(&h, C64::new(lambda, 0.0), 2, cfg)?;
        let columns: Vec<Vec<C64>> = spinors.iter().map(|b| b.components.clone()).collect();
        let reference_span = pivoted_orthonormal_columns(&ComplexMatrix::from_columns(&columns)?, 1e-12);
        let angles = subspace_angles(&basis, &reference_span)?;
        out.push(IdentityCheckResult::absolute(
            format!("span at {tag} matches spinors"),
            angles.iter().cloned().fold(0.0, f64::max),
            1e-8,
        ));
        let mut residual: f64 = 0.0;
        for b in spinors {
            let hv = h.mat_vec(&b.components);
            let r: Vec<C64> = hv.iter().zip(&b.components).map(|(x, y)| x - y * lambda).collect();
            residual = residual.max(norm(&r));
        }
        out.push(IdentityCheckResult::scaled(format!("H spinor = {tag} spinor"), residual, 1.0 + e, 1e-12));
    }

    let bars: Vec<f64> = reference.u.iter().chain(&reference.v).map(|b| bar_product(&b.components).re).collect();
    let dev = (bars[0] - 1.0).abs().max((bars[1] - 1.0).abs()).max((bars[2] + 1.0).abs()).max((bars[3] + 1.0).abs());
    out.push(IdentityCheckResult::absolute("ubar u = -vbar v = 1", dev, 1e-12));
    let cross = bar_product_cross(&reference.u[0].components, &reference.u[1].components)
        .max(bar_product_cross(&reference.v[0].components, &reference.v[1].components));
    out.push(IdentityCheckResult::absolute("opposite spins bar-orthogonal", cross, 1e-12));
    for (proj, tag) in [(&reference.projector, "+E"), (&reference.projector_negative, "-E")] {
        out.push(IdentityCheckResult::scaled(
            format!("Pi^2 = Pi at {tag}"),
            (proj * proj).max_abs_diff(proj),
            proj.max_abs(),
            1e-12,
        ));
    }

    let spectrum = full_spectrum(&h, cfg)?;
    let mult: Vec<usize> = spectrum.groups.iter().map(|g| g.multiplicity).collect();
    out.push(IdentityCheckResult::exact(
        format!("multiplicities {mult:?} = [2, 2]"),
        if mult == [2, 2] { 0.0 } else { 1.0 },
    ));
    let dev = spectrum.groups.iter().zip([-e, e]).map(|(g, l)| (g.lambda.re - l).abs()).fold(0.0, f64::max);
    out.push(IdentityCheckResult::scaled("eigenvalues ±E", dev, 1.0 + e, 1e-10));
    Ok(out)
}

fn bar_product_cross(a: &[C64], b: &[C64]) -> f64 {
    dot(a, &gamma_matrices()[0].mat_vec(b)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_algebra() {
        let g = gamma_matrices();
        let metric = [1.0, -1.0, -1.0, -1.0];
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = &(&g[mu] * &g[nu]) + &(&g[nu] * &g[mu]);
                let want = if mu == nu { 2.0 * metric[mu] } else { 0.0 };
                assert!(anti.max_abs_diff(&ComplexMatrix::identity(4).scale_real(want)) < 1e-15);
            }
        }
    }

    #[test]
    fn rest_frame() {
        let p = DiracParams::new(1.5, [0.0; 3]);
        assert_eq!(dirac_hamiltonian(&p), ComplexMatrix::from_real_diag(&[1.5, 1.5, -1.5, -1.5]));
        let r = dirac_reference(&p).unwrap();
        assert!(r.u[0].components.iter().zip(unit(0)).all(|(a, b)| (a - b).norm() < 1e-15));
        assert!(r.v[0].components.iter().zip(unit(3)).all(|(a, b)| (a - b).norm() < 1e-15));
        let want = ComplexMatrix::from_real_diag(&[9.0, 9.0, 0.0, 0.0]);
        assert!(r.psi_positive.max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn massless_projector_is_an_error() {
        let p = DiracParams::new(0.0, [0.0, 0.0, 1.0]);
        assert_eq!(dirac_reference(&p), Err(Error::MasslessLimit));
        let r = full_spectrum(&dirac_hamiltonian(&p), &SpectralConfig::default()).unwrap();
        let got: Vec<(f64, usize)> = r.groups.iter().map(|g| (g.lambda.re, g.multiplicity)).collect();
        assert_eq!(got.len(), 2);
        assert!((got[0].0 + 1.0).abs() < 1e-12 && (got[1].0 - 1.0).abs() < 1e-12);
        assert_eq!((got[0].1, got[1].1), (2, 2));
    }

    #[test]
    fn moving_electron() {
        let checks = dirac_checks(&DiracParams::new(1.0, [0.0, 0.0, 1.0]), &SpectralConfig::default()).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:#?}");
    }

    #[test]
    fn oblique_momentum() {
        let checks = dirac_checks(&DiracParams::new(0.3, [2.0, -1.5, 0.7]), &SpectralConfig::default()).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:#?}");
    }
}
