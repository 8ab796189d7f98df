//! The two-level system: closed-form eigenvalues, projectors and spinors
//! against the adjugate of the characteristic matrix.

use complement_eigen::showcase::{
    two_level_adjugate, two_level_checks, two_level_hamiltonian, two_level_reference, TwoLevelParams,
};
use complement_eigen::spectral::SpectralConfig;
use complement_eigen::tensor::adjugate;
use complement_eigen::C64;

fn main() -> complement_eigen::Result<()> {
    let p = TwoLevelParams::new(1.0, -1.0, C64::new(0.5, 0.5));
    let h = two_level_hamiltonian(&p);
    let r = two_level_reference(&p)?;
    println!("H = {h:?}");
    println!("omega = {:.12}, lambda+ = {:.12}, lambda- = {:.12}", r.omega, r.lambda_plus, r.lambda_minus);
    println!("chi+ = {:?}\nchi- = {:?}", r.chi_plus, r.chi_minus);

    let adj = adjugate(&h.shifted(C64::new(r.lambda_plus, 0.0)))?;
    println!("adj C(lambda+) = {adj:?}");
    println!("explicit       = {:?}", two_level_adjugate(&p, 1.0));

    for c in two_level_checks(&p, &SpectralConfig::default())? {
        println!("{:<45} {:.2e} {}", c.name, c.max_dev, if c.pass { "ok" } else { "FAIL" });
    }
    Ok(())
}
