use std::fmt::Write;

use serde::Serialize;

use crate::check::IdentityCheckResult;
use crate::matrix::C64;
use crate::spectral::{EigenGroup, Eigenpair, SpectralConfig};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputEcho {
    /// File path, `-`, `random`, or the demo name.
    pub source: String,
    /// SHA-256 of the input bytes (of the generated matrices for `--random`,
    /// of the parameter JSON for demos).
    pub digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEcho {
    pub groups: Vec<EigenGroup>,
    pub pairs: Vec<Eigenpair>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConfigEcho {
    #[serde(flatten)]
    pub spectral: SpectralConfig,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<serde_json::Value>,
    pub checks: Vec<IdentityCheckResult>,
    pub config: ConfigEcho,
    /// Seconds since the Unix epoch; omitted under `--no-timestamp`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub pass: bool,
}

fn fmt_c(z: C64) -> String {
    if z.im == 0.0 {
        format!("{:.12}", z.re + 0.0)
    } else {
        format!("{:.12}{:+.12}i", z.re + 0.0, z.im + 0.0)
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command   {}", self.command);
        let _ = writeln!(out, "input     {} (sha256 {})", self.input.source, self.input.digest);
        if let Some(label) = &self.input.label {
            let _ = writeln!(out, "label     {label}");
        }
        let c = &self.config;
        let _ = writeln!(
            out,
            "config    tol={:e} cluster_tol={:e} hermitian_check={} seed={}",
            c.spectral.tol, c.spectral.cluster_tol, c.spectral.hermitian_check, c.seed
        );
        if let Some(spec) = &self.spectrum {
            let _ = writeln!(out, "\n{:<36} {:>4} {:>10}  vectors", "eigenvalue", "mult", "residual");
            for (g, p) in spec.groups.iter().zip(&spec.pairs) {
                let _ = writeln!(out, "{:<36} {:>4} {:>10.2e}", fmt_c(g.lambda), g.multiplicity, p.residual);
                for v in &p.vectors {
                    let comps: Vec<String> = v.iter().map(|z| fmt_c(*z)).collect();
                    let _ = writeln!(out, "{:<52}  ({})", "", comps.join(", "));
                }
            }
        }
        if let Some(reference) = &self.reference {
            let _ = writeln!(out, "\nreference\n{}", serde_json::to_string_pretty(reference).unwrap_or_default());
        }
        let _ = writeln!(out, "\n{:<6} {:>10} {:>10}  check", "", "deviation", "tol");
        for r in &self.checks {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{verdict:<6} {:>10.2e} {:>10.2e}  {}", r.max_dev, r.tol, r.name);
        }
        let failed = self.checks.iter().filter(|r| !r.pass).count();
        let _ = writeln!(
            out,
            "\n{} ({} checks, {failed} failed)",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len()
        );
        out
    }
}
