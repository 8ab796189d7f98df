//! Reduced complements and diagonal minor sums from traces of powers and
//! from Bell polynomials, compared with direct enumeration.

use complement_eigen::oracle::{random_complex, seeded_rng};
use complement_eigen::tensor::{principal_minor_sum, reduced_complement};
use complement_eigen::traces::tables::reduced_complement_closed_form;
use complement_eigen::traces::{
    characteristic_coefficients, eval_polynomial, minor_bell_sum, minor_trace_sum, reduced_complement_via_bell,
    reduced_complement_via_traces,
};
use complement_eigen::C64;

fn main() -> complement_eigen::Result<()> {
    let mut rng = seeded_rng(7);
    let a = random_complex(&mut rng, 4, 4);

    for s in 1..4 {
        let direct = reduced_complement(&a, s)?;
        let traces = reduced_complement_via_traces(&a, s)?;
        let bell = reduced_complement_via_bell(&a, s)?;
        println!(
            "s={s}: |traces - direct| = {:.2e}, |bell - direct| = {:.2e}",
            traces.max_abs_diff(&direct),
            bell.max_abs_diff(&direct)
        );
        let sum = principal_minor_sum(&a, 4 - s)?;
        println!(
            "      minor sum {:.6}: traces {:.2e}, bell {:.2e}",
            sum,
            (minor_trace_sum(&a, s)? - sum).norm(),
            (minor_bell_sum(&a, s)? - sum).norm()
        );
    }

    // n - s = 2 table entry
    let table = reduced_complement_closed_form(&a, 2).expect("tabulated");
    println!("closed form n-s=2 vs trace route: {:.2e}", table.max_abs_diff(&reduced_complement_via_traces(&a, 2)?));

    let coeffs = characteristic_coefficients(&a)?;
    let lambda = C64::new(0.3, -1.1);
    let det = complement_eigen::tensor::determinant(&a.shifted(lambda))?;
    println!("det(lambda - A) = {det:.6}, polynomial = {:.6}", eval_polynomial(&coeffs, lambda));
    Ok(())
}
