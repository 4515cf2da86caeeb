//! Exact cyclic homology of Hopf crossed products `A #_σ H`.
//!
//! The crate builds the cylindrical module `A ♮_σ H`, checks every identity it
//! is supposed to satisfy, and computes Hochschild, cyclic and Hopf homology
//! together with the `E¹` and `E²` pages of the associated spectral sequence.

pub mod algebra;
pub mod error;
pub mod field;
pub mod hopf;
pub mod crossed;
pub mod cyclic;
pub mod cylinder;
pub mod linalg;
pub mod par;
pub mod report;
pub mod scenario;
pub mod spectral;
pub mod tensor;

pub use error::{Error, Result, Violation};
pub use field::{FieldSpec, Scalar};
