//! A planted Hermitian matrix with eigenvalues 1, 2, 2, 2, 5: the vanishing
//! chain reads off the multiplicity and the reduced complement of order 3
//! spans the eigenspace.

use complement_eigen::oracle::{random_planted, seeded_rng, subspace_angles};
use complement_eigen::spectral::{eigenvalues, eigenvectors_degenerate, vanishing_profile, SpectralConfig};
use complement_eigen::C64;

fn main() -> complement_eigen::Result<()> {
    let plant = random_planted(&mut seeded_rng(5), &[1.0, 2.0, 2.0, 2.0, 5.0]);
    let cfg = SpectralConfig::default();

    for g in eigenvalues(&plant.h, &cfg)? {
        println!(
            "lambda = {:+.12}  multiplicity {}  (vanishing chain says {})",
            g.lambda.re, g.multiplicity, g.vanishing_multiplicity
        );
    }

    let lambda = C64::new(2.0, 0.0);
    let profile = vanishing_profile(&plant.h, lambda, cfg.vanish_tol)?;
    for (s, ratio) in profile.iter().enumerate() {
        println!("s={}  |psi(s)| / scale = {ratio:.2e}", s + 1);
    }

    let basis = eigenvectors_degenerate(&plant.h, lambda, 3, &cfg)?;
    let angles = subspace_angles(&basis, &plant.eigenspace(2.0))?;
    let angles: Vec<String> = angles.iter().map(|t| format!("{t:.2e}")).collect();
    println!("principal angles to the planted eigenspace: {}", angles.join(", "));
    Ok(())
}
