use std::path::PathBuf;

use complement_eigen::showcase::{
    dirac_checks, dirac_hamiltonian, dirac_projector, dirac_reference, two_level_checks, two_level_reference,
    DiracParams, DiracReference, TwoLevelParams, TwoLevelReference,
};
use complement_eigen::spectral::{CharacteristicMatrix, SpectralConfig};
use complement_eigen::{ComplexMatrix, C64};
use proptest::prelude::*;

fn golden<T: serde::de::DeserializeOwned>(name: &str) -> T {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn close(a: &[C64], b: &[C64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-14)
}

#[test]
fn two_level_golden_is_current() {
    let g: TwoLevelReference = golden("two_level_reference.json");
    let r = two_level_reference(&g.params).unwrap();
    assert!((g.omega - r.omega).abs() < 1e-14);
    assert!(close(&g.chi_plus, &r.chi_plus) && close(&g.chi_minus, &r.chi_minus));
    assert!(g.projector_plus.max_abs_diff(&r.projector_plus) < 1e-14);
}

#[test]
fn dirac_golden_is_current() {
    let g: DiracReference = golden("dirac_reference.json");
    let r = dirac_reference(&g.params).unwrap();
    for (a, b) in g.u.iter().chain(&g.v).zip(r.u.iter().chain(&r.v)) {
        assert_eq!((a.kind, a.spin, a.momentum), (b.kind, b.spin, b.momentum));
        assert!(close(&a.components, &b.components));
    }
    assert!(g.psi_positive.max_abs_diff(&r.psi_positive) < 1e-13);
}

#[test]
fn massless_dirac_spectrum() {
    let h = dirac_hamiltonian(&DiracParams::new(0.0, [0.0, 0.0, 1.0]));
    for lambda in [1.0, -1.0] {
        let cm = CharacteristicMatrix::new(&h, C64::new(lambda, 0.0)).unwrap();
        assert!(cm.psi(1).unwrap().max_abs() < 1e-14);
        assert!(cm.psi(2).unwrap().max_abs() > 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn two_level_reconstruction(v11 in -5.0f64..5.0, v22 in -5.0f64..5.0, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let p = TwoLevelParams::new(v11, v22, C64::new(re, im));
        prop_assume!(p.omega() > 1e-3);
        let checks = two_level_checks(&p, &SpectralConfig::default()).unwrap();
        for c in &checks {
            prop_assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn dirac_reconstruction(m in 0.1f64..10.0, p in prop::array::uniform3(-5.7f64..5.7)) {
        let params = DiracParams::new(m, p);
        let checks = dirac_checks(&params, &SpectralConfig::default()).unwrap();
        for c in &checks {
            prop_assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn dirac_projectors_are_complementary(m in 0.1f64..5.0, p in prop::array::uniform3(-3.0f64..3.0)) {
        let params = DiracParams::new(m, p);
        let e = params.energy();
        // (p-hat + m)/2m at p0 = E and (m - p-hat)/2m at p0 = E sum to the identity
        let plus = dirac_projector(&params, e).unwrap();
        let minus = &ComplexMatrix::identity(4) - &plus;
        prop_assert!((&plus * &minus).max_abs() < 1e-12 * (1.0 + plus.max_abs().powi(2)));
        prop_assert!(((plus.trace().re) - 2.0).abs() < 1e-12);
    }
}
