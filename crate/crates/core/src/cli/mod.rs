//! The `complement-eig` command line: `eig`, `verify` and `demo`.
//!
//! Exit codes: 0 all checks pass, 1 some check fails, 2 bad input or
//! parameters, 3 non-Hermitian input, 4 numerical failure.

mod input;
mod report;

pub use input::{digest, load, MatrixFile};
pub use report::{ConfigEcho, InputEcho, Report, SpectrumEcho};

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::check::IdentityCheckResult;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64};
use crate::oracle::{random_complex, seeded_rng, DEFAULT_SEED, FACTORIAL_MAX_N};
use crate::showcase::{
    dirac_checks, dirac_hamiltonian, dirac_reference, two_level_checks, two_level_hamiltonian, two_level_reference,
    DiracParams, TwoLevelParams,
};
use crate::spectral::{full_spectrum, SpectralConfig};
use crate::tensor::checks::{cauchy_binet_sweep, check_corollary1, check_lemma1_sweep, kronecker_suite};
use crate::traces::{check_bell_route, check_minor_sums, check_trace_route};

pub const SEED_ENV: &str = "COMPLEMENT_EIG_SEED";

/// Largest `n` for the Kronecker suite and for `lemma1`.
pub const KRONECKER_MAX_N: usize = 5;
pub const LEMMA1_MAX_N: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "complement-eig", version, about = "Eigenvectors from adjugates and reduced complements")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Hermiticity and identity tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Base eigenvalue clustering tolerance.
    #[arg(long, global = true, default_value_t = 1e-7)]
    pub cluster_tol: f64,
    /// RNG seed [default: $COMPLEMENT_EIG_SEED, then 42].
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Leave the timestamp out of the report.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Accept non-Hermitian input.
    #[arg(long, global = true)]
    pub no_hermitian_check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, multiplicities and eigenvectors of a Hermitian matrix.
    Eig {
        /// Matrix file (JSON or plain), `-` for stdin.
        input: String,
    },
    /// Check tensor and trace identities on a matrix or on random matrices.
    Verify {
        /// Matrix file, `-` for stdin. Not needed for `--random` or `--suite kronecker`.
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Generate K random complex N x N matrices.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        random: Option<Vec<usize>>,
    },
    /// Rebuild a worked example and compare it with the library.
    Demo {
        #[command(subcommand)]
        demo: Demo,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Kronecker,
    Lemma1,
    CauchyBinet,
    Traces,
    Bell,
    MinorSums,
    All,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Demo {
    /// H = [[V11, V12], [conj V12, V22]].
    TwoLevel {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        v11: f64,
        #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
        v22: f64,
        /// Complex coupling such as `0.5+0.5i`.
        #[arg(long, default_value = "0.5+0.5i", value_parser = parse_complex, allow_hyphen_values = true)]
        v12: C64,
    },
    /// Free Dirac Hamiltonian alpha.p + beta m.
    Dirac {
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        /// Momentum as `px,py,pz`.
        #[arg(long, default_value = "0,0,1", value_parser = parse_momentum, allow_hyphen_values = true)]
        p: [f64; 3],
    },
}

fn parse_complex(s: &str) -> std::result::Result<C64, String> {
    s.trim().parse::<C64>().map_err(|e| format!("{s:?} is not a complex number: {e}"))
}

fn parse_momentum(s: &str) -> std::result::Result<[f64; 3], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    parts.try_into().map_err(|v: Vec<f64>| format!("expected 3 components, got {}", v.len()))
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Hermiticity { .. } => 3,
        Error::Convergence(_)
        | Error::RankMismatch { .. }
        | Error::MultiplicityMismatch(_)
        | Error::DegenerateInput(_) => 4,
        _ => 2,
    }
}

/// Flag, then `COMPLEMENT_EIG_SEED`, then the default.
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64> {
    match (flag, env) {
        (Some(s), _) => Ok(s),
        (None, Some(v)) => v.trim().parse().map_err(|e| Error::Parse(format!("{SEED_ENV}={v:?}: {e}"))),
        (None, None) => Ok(DEFAULT_SEED),
    }
}

fn spectral_config(g: &GlobalArgs) -> SpectralConfig {
    SpectralConfig {
        tol: g.tol,
        cluster_tol: g.cluster_tol,
        hermitian_check: !g.no_hermitian_check,
        ..SpectralConfig::default()
    }
}

fn require_hermitian(m: &ComplexMatrix, g: &GlobalArgs) -> Result<()> {
    if g.no_hermitian_check {
        return Ok(());
    }
    let dev = m.hermiticity_deviation();
    let tol = g.tol * (1.0 + m.max_abs());
    if dev > tol || !dev.is_finite() {
        return Err(Error::Hermiticity { deviation: dev, tol });
    }
    Ok(())
}

fn with_prefix(prefix: &str, mut checks: Vec<IdentityCheckResult>) -> Vec<IdentityCheckResult> {
    for c in &mut checks {
        c.name = format!("{prefix}{}", c.name);
    }
    checks
}

/// Every identity of `suite` on `a`; the Kronecker suite does not depend on `a`.
pub fn matrix_suite(suite: Suite, a: &ComplexMatrix, tol: f64) -> Result<Vec<IdentityCheckResult>> {
    let n = a.require_square()?;
    if n > FACTORIAL_MAX_N {
        return Err(Error::Guard { n, max: FACTORIAL_MAX_N, what: "verify" });
    }
    let mut out = Vec::new();
    let run = |s: Suite| suite == s || suite == Suite::All;
    // `all` leaves lemma1 out above its size limit instead of failing
    if suite == Suite::Lemma1 || (suite == Suite::All && n <= LEMMA1_MAX_N) {
        if n > LEMMA1_MAX_N {
            return Err(Error::Guard { n, max: LEMMA1_MAX_N, what: "the lemma1 suite" });
        }
        for s in 1..=n {
            for r in 1..=s {
                out.extend(check_lemma1_sweep(a, r, s, tol)?);
            }
            out.push(check_corollary1(a, s, tol)?);
        }
    }
    if run(Suite::CauchyBinet) {
        let b = a.adjoint();
        for s in 1..=n {
            let mut r = cauchy_binet_sweep(a, &b, s, tol)?;
            r.name = format!("cauchy_binet A A^H s={s}");
            out.push(r);
        }
    }
    for s in 1..n {
        if run(Suite::Traces) {
            out.push(check_trace_route(a, s, tol)?);
        }
        if run(Suite::Bell) {
            out.push(check_bell_route(a, s, tol)?);
        }
        if run(Suite::MinorSums) {
            out.extend(check_minor_sums(a, s, tol)?);
        }
    }
    Ok(out)
}

fn timestamp(g: &GlobalArgs) -> Option<u64> {
    if g.no_timestamp {
        None
    } else {
        SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
    }
}

fn finish(command: &str, input: InputEcho, checks: Vec<IdentityCheckResult>, g: &GlobalArgs, seed: u64) -> Report {
    let pass = checks.iter().all(|c| c.pass);
    Report {
        command: command.into(),
        input,
        spectrum: None,
        reference: None,
        checks,
        config: ConfigEcho { spectral: spectral_config(g), seed },
        timestamp: timestamp(g),
        pass,
    }
}

pub fn cmd_eig(path: &str, g: &GlobalArgs, seed: u64) -> Result<Report> {
    let (file, digest) = load(path)?;
    let h = file.to_matrix()?;
    let spectrum = full_spectrum(&h, &spectral_config(g))?;
    let input = InputEcho { source: path.into(), digest, label: file.label.clone(), n: Some(file.n), count: None };
    let mut report = finish("eig", input, spectrum.checks.clone(), g, seed);
    report.spectrum = Some(SpectrumEcho { groups: spectrum.groups, pairs: spectrum.pairs });
    Ok(report)
}

pub fn cmd_verify(
    path: Option<&str>,
    suite: Suite,
    random: Option<(usize, usize)>,
    g: &GlobalArgs,
    seed: u64,
) -> Result<Report> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Kronecker | Suite::All) {
        checks.extend(kronecker_suite(KRONECKER_MAX_N)?);
    }
    let (matrices, input) = match (path, random) {
        (Some(_), Some(_)) => return Err(Error::Parse("give either an input file or --random, not both".into())),
        (Some(p), None) => {
            let (file, digest) = load(p)?;
            let m = file.to_matrix()?;
            require_hermitian(&m, g)?;
            let echo =
                InputEcho { source: p.into(), digest, label: file.label.clone(), n: Some(file.n), count: Some(1) };
            (vec![m], echo)
        }
        (None, Some((n, k))) => {
            if n == 0 || n > FACTORIAL_MAX_N {
                return Err(Error::Guard { n, max: FACTORIAL_MAX_N, what: "verify --random" });
            }
            let mut rng = seeded_rng(seed);
            let ms: Vec<ComplexMatrix> = (0..k).map(|_| random_complex(&mut rng, n, n)).collect();
            let files: Vec<MatrixFile> = ms.iter().map(|m| MatrixFile::from_matrix(m, None)).collect();
            let bytes = serde_json::to_vec(&files).expect("matrices serialize");
            let echo =
                InputEcho { source: "random".into(), digest: digest(&bytes), label: None, n: Some(n), count: Some(k) };
            (ms, echo)
        }
        (None, None) if suite == Suite::Kronecker => {
            (Vec::new(), InputEcho { source: "none".into(), digest: digest(b""), label: None, n: None, count: Some(0) })
        }
        (None, None) => return Err(Error::Parse(format!("suite {suite:?} needs an input file or --random N K"))),
    };
    if suite != Suite::Kronecker {
        for (k, m) in matrices.iter().enumerate() {
            checks.extend(with_prefix(&format!("#{k} "), matrix_suite(suite, m, g.tol)?));
        }
    }
    Ok(finish("verify", input, checks, g, seed))
}

pub fn cmd_demo(demo: &Demo, g: &GlobalArgs, seed: u64) -> Result<Report> {
    let cfg = spectral_config(g);
    let (name, params, h, reference, checks) = match demo {
        Demo::TwoLevel { v11, v22, v12 } => {
            let p = TwoLevelParams::new(*v11, *v22, *v12);
            let reference = serde_json::to_value(two_level_reference(&p)?).expect("reference serializes");
            ("two-level", serde_json::to_vec(&p), two_level_hamiltonian(&p), reference, two_level_checks(&p, &cfg)?)
        }
        Demo::Dirac { m, p } => {
            if *m < 0.0 {
                return Err(Error::Parse(format!("mass must be non-negative, got {m}")));
            }
            let params = DiracParams::new(*m, *p);
            let reference = serde_json::to_value(dirac_reference(&params)?).expect("reference serializes");
            ("dirac", serde_json::to_vec(&params), dirac_hamiltonian(&params), reference, dirac_checks(&params, &cfg)?)
        }
    };
    let spectrum = full_spectrum(&h, &cfg)?;
    let bytes = params.expect("parameters serialize");
    let input = InputEcho { source: name.into(), digest: digest(&bytes), label: None, n: Some(h.rows()), count: None };
    let mut all = checks;
    all.extend(spectrum.checks);
    let mut report = finish("demo", input, all, g, seed);
    report.spectrum = Some(SpectrumEcho { groups: spectrum.groups, pairs: spectrum.pairs });
    report.reference = Some(reference);
    Ok(report)
}

fn execute(cli: &Cli) -> Result<Report> {
    let env = std::env::var(SEED_ENV).ok();
    let seed = resolve_seed(cli.global.seed, env.as_deref())?;
    match &cli.command {
        Command::Eig { input } => cmd_eig(input, &cli.global, seed),
        Command::Verify { input, suite, random } => {
            let random = random.as_ref().map(|v| (v[0], v[1]));
            cmd_verify(input.as_deref(), *suite, random, &cli.global, seed)
        }
        Command::Demo { demo } => cmd_demo(demo, &cli.global, seed),
    }
}

fn emit(report: &Report, g: &GlobalArgs) -> Result<()> {
    let text = match g.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &g.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let outcome = execute(&cli).and_then(|report| emit(&report, &cli.global).map(|_| report.pass));
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
