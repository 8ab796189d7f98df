//! Minors, complements and the adjugate of a small complex matrix.

use complement_eigen::tensor::{adjugate, complement, determinant, minor_det, reduced_complement, AntisymTensor};
use complement_eigen::{ComplexMatrix, C64};

fn main() -> complement_eigen::Result<()> {
    let a = ComplexMatrix::from_rows(&[
        vec![C64::new(2.0, 0.0), C64::new(1.0, -1.0), C64::new(0.0, 0.5)],
        vec![C64::new(1.0, 1.0), C64::new(3.0, 0.0), C64::new(-1.0, 0.0)],
        vec![C64::new(0.0, -0.5), C64::new(-1.0, 0.0), C64::new(1.0, 0.0)],
    ])?;
    let det = determinant(&a)?;
    println!("det A = {det}");
    println!("minor rows {{0,1}} cols {{1,2}} = {}", minor_det(&a, &[0, 1], &[1, 2])?);

    // the order-2 complement at (J, I) is the signed minor left after deleting rows I, cols J
    println!("complement s=2 at (01, 01) = {}", complement(&a, 2, &[0, 1], &[0, 1])?);
    println!("complement s=2 at (10, 01) = {}", complement(&a, 2, &[1, 0], &[0, 1])?);

    let adj = adjugate(&a)?;
    let product = &a * &adj;
    println!("max |A adj A - det I| = {:.2e}", product.max_abs_diff(&ComplexMatrix::identity(3).scale(det)));

    for s in 1..=3 {
        let psi = reduced_complement(&a, s)?;
        println!("reduced complement s={s}:\n{psi:?}");
    }

    let t = AntisymTensor::complement(&a, 3, 2)?;
    println!("order (2, 3) complement tensor has {} entries above 1e-12", t.entries_above(1e-12).len());
    Ok(())
}
