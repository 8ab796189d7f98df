pub mod check;
pub mod cli;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod showcase;
pub mod spectral;
pub mod tensor;
pub mod traces;

pub use check::IdentityCheckResult;
pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, C64};
