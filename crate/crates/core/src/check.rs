use serde::{Deserialize, Serialize};

use crate::matrix::{deviation, C64};

/// Outcome of comparing two sides of an identity.
///
/// `max_dev` is the quantity compared against `tol`: a relative deviation, an
/// absolute one, or (for integer identities) the largest absolute mismatch
/// with `tol = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheckResult {
    pub name: String,
    pub max_dev: f64,
    pub tol: f64,
    pub pass: bool,
    #[serde(skip)]
    pub max_abs_dev: f64,
}

impl IdentityCheckResult {
    fn new(name: impl Into<String>, max_dev: f64, max_abs_dev: f64, tol: f64) -> Self {
        Self { name: name.into(), max_dev, tol, pass: max_dev <= tol, max_abs_dev }
    }

    /// Relative deviation: `max |lhs - rhs|` over the larger max-norm of the two sides.
    pub fn relative(name: impl Into<String>, lhs: &[C64], rhs: &[C64], tol: f64) -> Self {
        assert_eq!(lhs.len(), rhs.len(), "identity sides differ in length");
        let (abs, rel) = deviation(lhs, rhs);
        Self::new(name, rel, abs, tol)
    }

    /// `abs_dev / scale` against `tol`.
    pub fn scaled(name: impl Into<String>, abs_dev: f64, scale: f64, tol: f64) -> Self {
        let dev = if scale > 0.0 { abs_dev / scale } else { abs_dev };
        Self::new(name, dev, abs_dev, tol)
    }

    pub fn absolute(name: impl Into<String>, abs_dev: f64, tol: f64) -> Self {
        Self::new(name, abs_dev, abs_dev, tol)
    }

    /// Exact equality: passes only when the largest mismatch is zero.
    pub fn exact(name: impl Into<String>, abs_dev: f64) -> Self {
        Self::new(name, abs_dev, abs_dev, 0.0)
    }

    /// Folds several results into the worst one under a new name.
    pub fn worst(name: impl Into<String>, results: &[IdentityCheckResult]) -> Self {
        let name = name.into();
        let mut out = Self { name: name.clone(), max_dev: 0.0, tol: 0.0, pass: true, max_abs_dev: 0.0 };
        for r in results {
            if r.max_dev > out.max_dev || r.max_dev.is_nan() {
                out.max_dev = r.max_dev;
            }
            out.max_abs_dev = out.max_abs_dev.max(r.max_abs_dev);
            out.tol = r.tol;
            out.pass &= r.pass;
        }
        out.name = name;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_fails() {
        let r = IdentityCheckResult::absolute("x", f64::NAN, 1.0);
        assert!(!r.pass);
    }

    #[test]
    fn relative_uses_larger_side() {
        let r = IdentityCheckResult::relative("x", &[C64::new(100.0, 0.0)], &[C64::new(101.0, 0.0)], 0.02);
        assert!(r.pass);
        assert!((r.max_dev - 1.0 / 101.0).abs() < 1e-15);
        assert_eq!(r.max_abs_dev, 1.0);
    }

    #[test]
    fn worst_keeps_failures() {
        let a = IdentityCheckResult::exact("a", 0.0);
        let b = IdentityCheckResult::exact("b", 1.0);
        let w = IdentityCheckResult::worst("w", &[a, b]);
        assert!(!w.pass);
        assert_eq!(w.max_dev, 1.0);
    }
}
