//! Exact Kronecker-delta identities, Cauchy-Binet on integer matrices and
//! the lemma relating A times a reduced complement to lower-order terms.

use complement_eigen::oracle::{random_complex, random_integer, seeded_rng};
use complement_eigen::tensor::checks::{cauchy_binet_sweep, check_corollary1, check_lemma1_sweep, kronecker_suite};
use complement_eigen::tensor::kronecker;

fn main() -> complement_eigen::Result<()> {
    println!("delta^(0 1)_(1 0) = {}", kronecker(&[0, 1], &[1, 0], 3)?);
    let kron = kronecker_suite(4)?;
    println!("{} Kronecker identities, all exact: {}", kron.len(), kron.iter().all(|r| r.pass));

    let mut rng = seeded_rng(1);
    let a = random_integer(&mut rng, 4, 6, 5);
    let b = random_integer(&mut rng, 6, 4, 5);
    for s in 1..=4 {
        let r = cauchy_binet_sweep(&a, &b, s, 0.0)?;
        println!("Cauchy-Binet s={s}: max mismatch {}", r.max_abs_dev);
    }

    let c = random_complex(&mut rng, 4, 4);
    for s in 1..=4 {
        for r in 1..=s {
            for res in check_lemma1_sweep(&c, r, s, 1e-10)? {
                println!("{:<32} {:.2e}", res.name, res.max_dev);
            }
        }
        let cor = check_corollary1(&c, s, 1e-10)?;
        println!("{:<32} {:.2e}", cor.name, cor.max_dev);
    }
    Ok(())
}
