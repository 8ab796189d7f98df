use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{dot, norm, ComplexMatrix, C64};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries with real and imaginary parts uniform in `[-1, 1)`.
pub fn random_complex(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    let data = (0..rows * cols).map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    ComplexMatrix::from_vec(rows, cols, data).expect("sized")
}

/// Real integer entries in `-bound..=bound`.
pub fn random_integer(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> ComplexMatrix {
    let data = (0..rows * cols).map(|_| C64::new(rng.gen_range(-bound..=bound) as f64, 0.0)).collect();
    ComplexMatrix::from_vec(rows, cols, data).expect("sized")
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    random_complex(rng, n, n).hermitian_part()
}

/// Unitary from Gram-Schmidt on the columns of a random complex matrix.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    loop {
        let cols = random_complex(rng, n, n).columns();
        let mut basis: Vec<Vec<C64>> = Vec::with_capacity(n);
        for mut v in cols {
            for _ in 0..2 {
                for b in &basis {
                    let c = dot(b, &v);
                    for (x, y) in v.iter_mut().zip(b) {
                        *x -= c * y;
                    }
                }
            }
            let len = norm(&v);
            if len < 1e-6 {
                break;
            }
            basis.push(v.iter().map(|x| x / len).collect());
        }
        if basis.len() == n {
            return ComplexMatrix::from_columns(&basis).expect("square");
        }
    }
}

/// `H = U diag(eigenvalues) U^H` with its plant.
#[derive(Debug, Clone)]
pub struct Planted {
    pub h: ComplexMatrix,
    pub u: ComplexMatrix,
    pub eigenvalues: Vec<f64>,
}

impl Planted {
    /// Columns of `U` whose planted eigenvalue equals `lambda` exactly.
    pub fn eigenspace(&self, lambda: f64) -> Vec<Vec<C64>> {
        self.eigenvalues.iter().enumerate().filter(|(_, &l)| l == lambda).map(|(k, _)| self.u.column(k)).collect()
    }
}

pub fn random_planted(rng: &mut impl Rng, eigenvalues: &[f64]) -> Planted {
    let n = eigenvalues.len();
    let u = random_unitary(rng, n);
    let d = ComplexMatrix::from_real_diag(eigenvalues);
    let h = (&(&u * &d) * &u.adjoint()).hermitian_part();
    Planted { h, u, eigenvalues: eigenvalues.to_vec() }
}
