//! Writes the golden fixtures: `cargo run --example export_fixtures -- <dir>`.

use std::path::{Path, PathBuf};

use complement_eigen::cli::MatrixFile;
use complement_eigen::oracle::{random_planted, seeded_rng};
use complement_eigen::showcase::{
    dirac_hamiltonian, dirac_reference, two_level_hamiltonian, two_level_reference, DiracParams, TwoLevelParams,
};
use complement_eigen::{ComplexMatrix, C64};

pub const PLANTED_SEED: u64 = 2024;
pub const PLANTED_VALUES: [f64; 6] = [-1.5, -1.5, 0.25, 2.0, 2.0, 2.0];

fn write(dir: &Path, name: &str, value: &impl serde::Serialize) {
    let path = dir.join(name);
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    std::fs::write(&path, text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    println!("wrote {}", path.display());
}

fn main() -> complement_eigen::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir).expect("fixture directory");

    let tl = TwoLevelParams::new(1.0, -1.0, C64::new(0.5, 0.5));
    write(
        &dir,
        "two_level.json",
        &MatrixFile::from_matrix(&two_level_hamiltonian(&tl), Some("two-level V11=1 V22=-1 V12=0.5+0.5i".into())),
    );
    write(&dir, "two_level_reference.json", &two_level_reference(&tl)?);

    let dp = DiracParams::new(1.0, [0.0, 0.0, 1.0]);
    write(&dir, "dirac.json", &MatrixFile::from_matrix(&dirac_hamiltonian(&dp), Some("dirac m=1 p=(0,0,1)".into())));
    write(&dir, "dirac_reference.json", &dirac_reference(&dp)?);

    write(
        &dir,
        "diag3.json",
        &MatrixFile::from_matrix(&ComplexMatrix::from_real_diag(&[1.0, 2.0, 3.0]), Some("diag(1,2,3)".into())),
    );

    let plant = random_planted(&mut seeded_rng(PLANTED_SEED), &PLANTED_VALUES);
    write(
        &dir,
        "planted.json",
        &MatrixFile::from_matrix(&plant.h, Some(format!("planted {PLANTED_VALUES:?} seed {PLANTED_SEED}"))),
    );
    Ok(())
}
