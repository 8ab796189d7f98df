//! Free Dirac Hamiltonian: both energy levels are doubly degenerate, the
//! adjugate of C(lambda) vanishes and the order-2 reduced complement is
//! 2 lambda (p-hat + m) gamma_0.

use complement_eigen::showcase::{dirac_checks, dirac_hamiltonian, dirac_reference, DiracParams};
use complement_eigen::spectral::{full_spectrum, SpectralConfig};

fn main() -> complement_eigen::Result<()> {
    let params = DiracParams::new(1.0, [0.3, -0.4, 1.2]);
    let h = dirac_hamiltonian(&params);
    let r = dirac_reference(&params)?;
    println!("E = {:.12}", r.energy);
    for b in r.u.iter().chain(&r.v) {
        println!("{:?} spin {:+} momentum {:?}: {:.6?}", b.kind, b.spin, b.momentum, b.components);
    }

    let spectrum = full_spectrum(&h, &SpectralConfig::default())?;
    for (g, pair) in spectrum.groups.iter().zip(&spectrum.pairs) {
        println!(
            "lambda = {:+.12} x{}: {} vectors, residual {:.1e}",
            g.lambda.re,
            g.multiplicity,
            pair.vectors.len(),
            pair.residual
        );
    }
    for c in dirac_checks(&params, &SpectralConfig::default())? {
        println!("{:<48} {:.2e} {}", c.name, c.max_dev, if c.pass { "ok" } else { "FAIL" });
    }
    Ok(())
}
