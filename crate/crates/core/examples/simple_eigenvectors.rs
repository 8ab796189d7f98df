//! Eigenvectors of a random Hermitian matrix with distinct eigenvalues from
//! adjugate columns, compared with a Jacobi diagonalization.

use complement_eigen::matrix::dot;
use complement_eigen::oracle::{eig_oracle, random_hermitian, seeded_rng};
use complement_eigen::spectral::{eigenvector_nondegenerate, full_spectrum, max_cross_determinant, SpectralConfig};
use complement_eigen::tensor::adjugate;
use complement_eigen::C64;

fn main() -> complement_eigen::Result<()> {
    let h = random_hermitian(&mut seeded_rng(3), 5).scale_real(2.0);
    let cfg = SpectralConfig::default();
    let (values, vectors) = eig_oracle(&h)?;
    for (k, &lambda) in values.iter().enumerate() {
        let lambda = C64::new(lambda, 0.0);
        let adj = adjugate(&h.shifted(lambda))?;
        let v = eigenvector_nondegenerate(&h, lambda, &cfg)?;
        let overlap = dot(&v, &vectors.column(k)).norm();
        println!(
            "lambda = {:+.10}  |<v, v_jacobi>| = {overlap:.12}  max cross-det of adj columns = {:.1e}",
            lambda.re,
            max_cross_determinant(&adj)
        );
    }
    let report = full_spectrum(&h, &cfg)?;
    for c in &report.checks {
        println!("{:<50} {:.2e} {}", c.name, c.max_dev, if c.pass { "ok" } else { "FAIL" });
    }
    Ok(())
}
