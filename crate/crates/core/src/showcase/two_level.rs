use serde::{Deserialize, Serialize};

use crate::check::IdentityCheckResult;
use crate::error::{Error, Result};
use crate::matrix::{dot, norm, ComplexMatrix, C64, ONE, ZERO};
use crate::spectral::{full_spectrum, SpectralConfig};
use crate::tensor::adjugate;

/// `H = [[V11, V12], [conj(V12), V22]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoLevelParams {
    pub v11: f64,
    pub v22: f64,
    pub v12: C64,
}

impl TwoLevelParams {
    pub fn new(v11: f64, v22: f64, v12: C64) -> Self {
        Self { v11, v22, v12 }
    }

    pub fn v21(&self) -> C64 {
        self.v12.conj()
    }

    /// Level splitting `sqrt((V11 - V22)^2 + 4 V12 V21)`.
    pub fn omega(&self) -> f64 {
        let d = self.v11 - self.v22;
        (d * d + 4.0 * self.v12.norm_sqr()).sqrt()
    }
}

pub fn two_level_hamiltonian(p: &TwoLevelParams) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(2, 2);
    h[(0, 0)] = C64::new(p.v11, 0.0);
    h[(0, 1)] = p.v12;
    h[(1, 0)] = p.v21();
    h[(1, 1)] = C64::new(p.v22, 0.0);
    h
}

/// `H = a I + b sigma.n` with `b >= 0`; `n` is zero when `b` is.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliForm {
    pub a: f64,
    pub b: f64,
    pub n: [f64; 3],
}

pub fn pauli_matrices() -> [ComplexMatrix; 3] {
    let i = C64::new(0.0, 1.0);
    [
        ComplexMatrix::from_rows(&[vec![ZERO, ONE], vec![ONE, ZERO]]).unwrap(),
        ComplexMatrix::from_rows(&[vec![ZERO, -i], vec![i, ZERO]]).unwrap(),
        ComplexMatrix::from_real_diag(&[1.0, -1.0]),
    ]
}

/// Reads `a`, `b` and `n` off the traces of `H`, `H^2` and `sigma H`.
pub fn pauli_form(h: &ComplexMatrix) -> Result<PauliForm> {
    if h.rows() != 2 || h.cols() != 2 {
        return Err(Error::Shape(format!("expected a 2x2 matrix, got {}x{}", h.rows(), h.cols())));
    }
    let half_tr = 0.5 * h.trace().re;
    let half_tr2 = 0.5 * (h * h).trace().re;
    let b = (half_tr2 - half_tr * half_tr).max(0.0).sqrt();
    let mut n = [0.0; 3];
    if b > 0.0 {
        for (k, s) in pauli_matrices().iter().enumerate() {
            n[k] = 0.5 * (s * h).trace().re / b;
        }
    }
    Ok(PauliForm { a: half_tr, b, n })
}

/// Closed-form solution of the two-level problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoLevelReference {
    pub params: TwoLevelParams,
    pub omega: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub projector_plus: ComplexMatrix,
    pub projector_minus: ComplexMatrix,
    pub chi_plus: Vec<C64>,
    pub chi_minus: Vec<C64>,
}

impl TwoLevelReference {
    pub fn lambda(&self, sign: f64) -> f64 {
        if sign > 0.0 {
            self.lambda_plus
        } else {
            self.lambda_minus
        }
    }

    pub fn chi(&self, sign: f64) -> &[C64] {
        if sign > 0.0 {
            &self.chi_plus
        } else {
            &self.chi_minus
        }
    }
}

pub fn two_level_reference(p: &TwoLevelParams) -> Result<TwoLevelReference> {
    let omega = p.omega();
    if omega == 0.0 {
        return Err(Error::DegenerateTwoLevel);
    }
    let d = p.v11 - p.v22;
    let projector = |sign: f64| {
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 0)] = C64::new(0.5 + sign * d / (2.0 * omega), 0.0);
        m[(0, 1)] = p.v12 * (sign / omega);
        m[(1, 0)] = p.v21() * (sign / omega);
        m[(1, 1)] = C64::new(0.5 - sign * d / (2.0 * omega), 0.0);
        m
    };
    // (V21*/|V21|)^(1/2) and (V21/|V21|)^(1/2); the phase is arbitrary when V12 = 0
    let half = C64::from_polar(1.0, 0.5 * p.v12.arg());
    let chi = |sign: f64| {
        let up = (0.5 + sign * d / (2.0 * omega)).max(0.0).sqrt();
        let down = (0.5 - sign * d / (2.0 * omega)).max(0.0).sqrt();
        vec![half * up, half.conj() * (sign * down)]
    };
    Ok(TwoLevelReference {
        params: *p,
        omega,
        lambda_plus: 0.5 * (p.v11 + p.v22 + omega),
        lambda_minus: 0.5 * (p.v11 + p.v22 - omega),
        projector_plus: projector(1.0),
        projector_minus: projector(-1.0),
        chi_plus: chi(1.0),
        chi_minus: chi(-1.0),
    })
}

/// `adj C(lambda_±)` written out entry by entry.
pub fn two_level_adjugate(p: &TwoLevelParams, sign: f64) -> ComplexMatrix {
    let d = p.v11 - p.v22;
    let w = sign * p.omega();
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 0)] = C64::new(0.5 * (d + w), 0.0);
    m[(0, 1)] = p.v12;
    m[(1, 0)] = p.v21();
    m[(1, 1)] = C64::new(0.5 * (-d + w), 0.0);
    m
}

/// `u^0 v^1 - u^1 v^0` of the normalized vectors.
pub fn cross_determinant(u: &[C64], v: &[C64]) -> f64 {
    let (nu, nv) = (norm(u), norm(v));
    if nu == 0.0 || nv == 0.0 {
        return 0.0;
    }
    ((u[0] * v[1] - u[1] * v[0]) / (nu * nv)).norm()
}

/// Reference against library: eigenvalues, adjugates, parallelism to `chi`,
/// projector algebra and the Pauli decomposition.
pub fn two_level_checks(p: &TwoLevelParams, cfg: &SpectralConfig) -> Result<Vec<IdentityCheckResult>> {
    let reference = two_level_reference(p)?;
    let h = two_level_hamiltonian(p);
    let scale = 1.0 + h.max_abs();
    let tol = 1e-12;
    let mut out = Vec::new();

    let spectrum = full_spectrum(&h, cfg)?;
    let got: Vec<f64> = spectrum.eigenvalues().iter().map(|z| z.re).collect();
    let want = [reference.lambda_minus, reference.lambda_plus];
    let dev = got.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    out.push(IdentityCheckResult::scaled("eigenvalues (V11+V22±omega)/2", dev, scale, tol));

    for (sign, tag) in [(1.0, "+"), (-1.0, "-")] {
        let lambda = C64::new(reference.lambda(sign), 0.0);
        let adj = adjugate(&h.shifted(lambda))?;
        let explicit = two_level_adjugate(p, sign);
        out.push(IdentityCheckResult::scaled(
            format!("adj C(lambda{tag}) explicit"),
            adj.max_abs_diff(&explicit),
            scale,
            tol,
        ));
        let by_trace = &ComplexMatrix::identity(2).scale(h.shifted(lambda).trace()) - &h.shifted(lambda);
        out.push(IdentityCheckResult::scaled(
            format!("adj C(lambda{tag}) = Tr[C] I - C"),
            adj.max_abs_diff(&by_trace),
            scale,
            tol,
        ));
        out.push(IdentityCheckResult::absolute(
            format!("adj C(lambda{tag}) columns parallel"),
            cross_determinant(&adj.column(0), &adj.column(1)),
            tol,
        ));
        let chi = reference.chi(sign);
        let col = if norm(&adj.column(0)) >= norm(&adj.column(1)) { adj.column(0) } else { adj.column(1) };
        out.push(IdentityCheckResult::absolute(
            format!("adj column parallel to chi{tag}"),
            cross_determinant(&col, chi),
            tol,
        ));
        let pair = spectrum
            .pairs
            .iter()
            .min_by(|a, b| (a.lambda - lambda).norm().total_cmp(&(b.lambda - lambda).norm()))
            .ok_or_else(|| Error::Convergence("empty spectrum".into()))?;
        out.push(IdentityCheckResult::absolute(
            format!("extracted vector parallel to chi{tag}"),
            cross_determinant(&pair.vectors[0], chi),
            tol,
        ));
        let hchi = h.mat_vec(chi);
        let r: Vec<C64> = hchi.iter().zip(chi).map(|(a, b)| a - lambda * b).collect();
        out.push(IdentityCheckResult::scaled(format!("H chi{tag} = lambda{tag} chi{tag}"), norm(&r), scale, tol));
    }

    let (pp, pm) = (&reference.projector_plus, &reference.projector_minus);
    let zero = ComplexMatrix::zeros(2, 2);
    out.push(IdentityCheckResult::absolute("P+ P- = 0", (pp * pm).max_abs_diff(&zero), tol));
    out.push(IdentityCheckResult::absolute("P+^2 = P+", (pp * pp).max_abs_diff(pp), tol));
    out.push(IdentityCheckResult::absolute("P-^2 = P-", (pm * pm).max_abs_diff(pm), tol));
    out.push(IdentityCheckResult::absolute(
        "chi+^H chi- = 0",
        dot(&reference.chi_plus, &reference.chi_minus).norm(),
        tol,
    ));
    let unit = (norm(&reference.chi_plus) - 1.0).abs().max((norm(&reference.chi_minus) - 1.0).abs());
    out.push(IdentityCheckResult::absolute("|chi±| = 1", unit, tol));

    let form = pauli_form(&h)?;
    let dev = (form.a + form.b - reference.lambda_plus).abs().max((form.a - form.b - reference.lambda_minus).abs());
    out.push(IdentityCheckResult::scaled("lambda± = a ± b", dev, scale, tol));
    Ok(out)
}
