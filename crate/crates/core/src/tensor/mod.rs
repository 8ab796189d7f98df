//! Index combinatorics, minor determinants, complements and the identities
//! relating them.

mod antisym;
pub mod checks;
mod complement;
mod index;
mod minors;

pub use antisym::AntisymTensor;
pub use complement::{adjugate, complement, principal_minor_sum, reduced_complement, MAX_TENSOR_DIM};
pub use index::{
    arrangements, binomial, complement_of, factorial, kronecker, perm_sign, sequence_sign, tuples, MultiIndex,
};
pub use minors::{determinant, inverse, minor_det};
