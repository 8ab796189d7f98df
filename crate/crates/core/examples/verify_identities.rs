//! The `verify` suites run from library code on a handful of random matrices.

use complement_eigen::cli::{matrix_suite, Suite};
use complement_eigen::oracle::{random_complex, seeded_rng};

fn main() -> complement_eigen::Result<()> {
    let mut rng = seeded_rng(42);
    for n in [3, 4] {
        let a = random_complex(&mut rng, n, n);
        for suite in [Suite::Traces, Suite::Bell, Suite::MinorSums, Suite::CauchyBinet] {
            let rows = matrix_suite(suite, &a, 1e-10)?;
            let worst = rows.iter().map(|r| r.max_dev).fold(0.0, f64::max);
            println!("n={n} {suite:?}: {} rows, worst {worst:.2e}, pass {}", rows.len(), rows.iter().all(|r| r.pass));
        }
    }
    Ok(())
}
