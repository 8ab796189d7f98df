//! The two-level system and the free Dirac Hamiltonian, each with a
//! closed-form reference and a check table against the library.

mod dirac;
mod two_level;

pub use dirac::{
    alpha_matrices, bar_product, dirac_characteristic, dirac_checks, dirac_hamiltonian, dirac_projector, dirac_psi,
    dirac_reference, gamma_matrices, normalization, p_slash, Bispinor, DiracParams, DiracReference, SpinorKind,
};
pub use two_level::{
    cross_determinant, pauli_form, pauli_matrices, two_level_adjugate, two_level_checks, two_level_hamiltonian,
    two_level_reference, PauliForm, TwoLevelParams, TwoLevelReference,
};
