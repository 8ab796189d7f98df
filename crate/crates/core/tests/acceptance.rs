//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use complement_eigen::matrix::{dot, norm};
use complement_eigen::oracle::{
    eig_oracle, random_complex, random_hermitian, random_integer, random_planted, seeded_rng, subspace_angles,
};
use complement_eigen::showcase::{dirac_checks, two_level_checks, DiracParams, TwoLevelParams};
use complement_eigen::spectral::{
    eigenvalues, eigenvector_nondegenerate, full_spectrum, max_cross_determinant, pivoted_orthonormal_columns,
    CharacteristicMatrix, SpectralConfig,
};
use complement_eigen::tensor::checks::{cauchy_binet_sweep, check_corollary1, check_lemma1_sweep, kronecker_suite};
use complement_eigen::tensor::{adjugate, reduced_complement};
use complement_eigen::traces::{
    check_bell_route, check_characteristic_polynomial, check_minor_sums, check_tables, check_trace_route,
};
use complement_eigen::{IdentityCheckResult, C64};
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Folds check rows into a verdict naming the worst one.
fn from_rows(rows: &[IdentityCheckResult]) -> Outcome {
    let failed = rows.iter().filter(|r| !r.pass).count();
    let worst = rows.iter().max_by(|a, b| {
        (a.max_dev / a.tol.max(f64::MIN_POSITIVE)).total_cmp(&(b.max_dev / b.tol.max(f64::MIN_POSITIVE)))
    });
    let detail = match worst {
        Some(w) => {
            format!("{} rows, {failed} failed, worst {:.2e} (tol {:.0e}) at {}", rows.len(), w.max_dev, w.tol, w.name)
        }
        None => "no rows".into(),
    };
    outcome(failed == 0 && !rows.is_empty(), detail)
}

fn maple_replication() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded_rng(101);
    let mut rows = Vec::new();
    for (n, orders) in [(3usize, 1..3usize), (4, 1..4)] {
        for _ in 0..20 {
            let a = random_complex(&mut rng, n, n);
            for s in orders.clone() {
                rows.push(check_trace_route(&a, s, 1e-10).unwrap());
                rows.push(check_bell_route(&a, s, 1e-10).unwrap());
                rows.extend(check_minor_sums(&a, s, 1e-10).unwrap());
            }
        }
    }
    let elapsed = start.elapsed();
    let mut o = from_rows(&rows);
    o.pass &= elapsed < Duration::from_secs(5);
    o.detail = format!("{}, {:.0} ms", o.detail, elapsed.as_secs_f64() * 1e3);
    o
}

fn closed_form_tables() -> Outcome {
    let mut rng = seeded_rng(102);
    let mut rows = Vec::new();
    for _ in 0..20 {
        rows.extend(check_tables(&random_complex(&mut rng, 6, 6), 1e-11).unwrap());
    }
    from_rows(&rows)
}

fn simple_spectra() -> Outcome {
    let mut rng = seeded_rng(103);
    let cfg = SpectralConfig::default();
    let (mut worst_res, mut worst_overlap, mut worst_cross) = (0.0f64, 0.0f64, 0.0f64);
    let mut trials = 0;
    while trials < 50 {
        let n = 2 + trials % 5;
        let h = random_hermitian(&mut rng, n).scale_real(1.0 + rng.gen::<f64>() * 4.0);
        let (values, vectors) = eig_oracle(&h).unwrap();
        if values.windows(2).any(|w| w[1] - w[0] < 1e-3) {
            continue;
        }
        trials += 1;
        let groups = eigenvalues(&h, &cfg).unwrap();
        if groups.len() != n {
            return outcome(false, format!("trial {trials}: {} groups for {n} distinct eigenvalues", groups.len()));
        }
        let scale = 1.0 + h.frobenius();
        for (k, g) in groups.iter().enumerate() {
            let v = eigenvector_nondegenerate(&h, g.lambda, &cfg).unwrap();
            let hv = h.mat_vec(&v);
            let r: Vec<C64> = hv.iter().zip(&v).map(|(a, b)| a - g.lambda * b).collect();
            worst_res = worst_res.max(norm(&r) / scale);
            worst_overlap = worst_overlap.max(1.0 - dot(&v, &vectors.column(k)).norm());
            let adj = adjugate(&h.shifted(g.lambda)).unwrap();
            let size = adj.max_abs().powi(2).max(f64::MIN_POSITIVE);
            worst_cross = worst_cross.max(max_cross_determinant(&adj) / size);
        }
    }
    let pass = worst_res < 1e-8 && worst_overlap < 1e-9 && worst_cross < 1e-9;
    outcome(
        pass,
        format!("50 matrices, residual {worst_res:.1e}, 1 - overlap {worst_overlap:.1e}, cross-det {worst_cross:.1e}"),
    )
}

fn degenerate_spectra() -> Outcome {
    const PATTERNS: [&[usize]; 10] = [
        &[2, 1],
        &[2, 1, 1],
        &[3, 1],
        &[2, 2],
        &[3, 2, 1],
        &[2, 1, 1, 1],
        &[3, 3],
        &[2, 2, 2],
        &[4, 1, 1],
        &[3, 1, 1, 1],
    ];
    let mut rng = seeded_rng(104);
    let cfg = SpectralConfig::default();
    let (mut chain, mut angles_worst, mut ortho) = (0.0f64, 0.0f64, 0.0f64);
    for trial in 0..30 {
        let pattern = PATTERNS[trial % PATTERNS.len()];
        let mut distinct: Vec<f64> = Vec::new();
        while distinct.len() < pattern.len() {
            let v = rng.gen_range(-48..=48) as f64 / 8.0;
            if distinct.iter().all(|d| (d - v).abs() > 0.3) {
                distinct.push(v);
            }
        }
        let values: Vec<f64> = pattern.iter().zip(&distinct).flat_map(|(&m, &v)| std::iter::repeat_n(v, m)).collect();
        let plant = random_planted(&mut rng, &values);
        let report = full_spectrum(&plant.h, &cfg).unwrap();
        let mut got: Vec<(f64, usize)> = report.groups.iter().map(|g| (g.lambda.re, g.multiplicity)).collect();
        got.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut want: Vec<(f64, usize)> = distinct.iter().copied().zip(pattern.iter().copied()).collect();
        want.sort_by(|a, b| a.0.total_cmp(&b.0));
        if got.len() != want.len() || got.iter().zip(&want).any(|(g, w)| g.1 != w.1 || (g.0 - w.0).abs() > 1e-8) {
            return outcome(false, format!("trial {trial}: grouping {got:?}, planted {want:?}"));
        }
        for (&(value, s), pair) in want.iter().zip(&report.pairs) {
            let cm = CharacteristicMatrix::new(&plant.h, C64::new(value, 0.0)).unwrap();
            let gap: f64 = values.iter().filter(|&&v| v != value).map(|v| (value - v).abs()).product();
            for r in 1..s {
                chain = chain.max(reduced_complement(cm.matrix(), r).unwrap().max_abs() / gap);
            }
            let psi = cm.psi(s).unwrap();
            let rank = pivoted_orthonormal_columns(&psi, cfg.rank_tol).len();
            if rank != s {
                return outcome(false, format!("trial {trial}: rank {rank} of psi({s}) at {value}"));
            }
            let angles = subspace_angles(&pair.vectors, &plant.eigenspace(value)).unwrap();
            angles_worst = angles_worst.max(angles.iter().cloned().fold(0.0, f64::max));
        }
        for (i, p) in report.pairs.iter().enumerate() {
            for q in &report.pairs[i + 1..] {
                for u in &p.vectors {
                    for v in &q.vectors {
                        ortho = ortho.max(dot(u, v).norm());
                    }
                }
            }
        }
    }
    let pass = chain < 1e-8 && angles_worst < 1e-8 && ortho < 1e-8;
    outcome(pass, format!("30 plants, chain {chain:.1e}, angles {angles_worst:.1e}, cross-group {ortho:.1e}"))
}

fn dirac_fixture() -> Outcome {
    let mut rng = seeded_rng(105);
    let mut rows = Vec::new();
    for _ in 0..10 {
        let m = rng.gen_range(0.1..=10.0);
        let dir: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let len = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
        let mag = rng.gen_range(0.0..=10.0);
        let p = dir.map(|x| x / len * mag);
        rows.extend(dirac_checks(&DiracParams::new(m, p), &SpectralConfig::default()).unwrap());
    }
    from_rows(&rows)
}

fn two_level_fixture() -> Outcome {
    let mut rng = seeded_rng(106);
    let mut params = vec![
        TwoLevelParams::new(1.0, -1.0, C64::new(0.5, 0.5)),
        TwoLevelParams::new(1.0, -1.0, C64::new(0.0, 1.0)),
        TwoLevelParams::new(0.5, 0.5, C64::new(0.3, 0.0)),
        TwoLevelParams::new(2.0, -1.0, C64::new(0.0, 0.0)),
    ];
    for _ in 0..16 {
        params.push(TwoLevelParams::new(
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
            C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
        ));
    }
    let rows: Vec<IdentityCheckResult> =
        params.iter().flat_map(|p| two_level_checks(p, &SpectralConfig::default()).unwrap()).collect();
    from_rows(&rows)
}

fn exact_combinatorics() -> Outcome {
    let mut rows = kronecker_suite(5).unwrap();
    let mut rng = seeded_rng(107);
    for p in 1..=4 {
        for m in 1..=6 {
            for q in 1..=4 {
                let a = random_integer(&mut rng, p, m, 6);
                let b = random_integer(&mut rng, m, q, 6);
                for s in 1..=p.min(q).min(m) {
                    let r = cauchy_binet_sweep(&a, &b, s, 0.0).unwrap();
                    rows.push(IdentityCheckResult::exact(r.name, r.max_abs_dev));
                }
            }
        }
    }
    for n in [4, 5] {
        let a = random_complex(&mut rng, n, n);
        for s in 1..=n {
            for r in 1..=s {
                rows.extend(check_lemma1_sweep(&a, r, s, 1e-10).unwrap());
            }
            rows.push(check_corollary1(&a, s, 1e-10).unwrap());
        }
    }
    from_rows(&rows)
}

fn characteristic_polynomial() -> Outcome {
    let mut rng = seeded_rng(108);
    let mut rows = Vec::new();
    for n in 1..=6 {
        for _ in 0..4 {
            let a = random_complex(&mut rng, n, n);
            let lambdas: Vec<C64> =
                (0..20).map(|_| C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))).collect();
            rows.push(check_characteristic_polynomial(&a, &lambdas, 1e-9).unwrap());
        }
    }
    from_rows(&rows)
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("trace and Bell routes against direct enumeration, n = 3, 4", maple_replication),
        ("closed-form tables on 6x6 matrices", closed_form_tables),
        ("simple eigenvalues via adjugate columns", simple_spectra),
        ("degenerate eigenvalues via reduced complements", degenerate_spectra),
        ("Dirac fixture", dirac_fixture),
        ("two-level fixture", two_level_fixture),
        ("exact combinatorial suite", exact_combinatorics),
        ("characteristic polynomial cross-check", characteristic_polynomial),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.pass;
        println!("criterion {}: {} - {name}: {}", k + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
