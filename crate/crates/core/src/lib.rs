//! Exact symbolic computation in free group algebras K[F].
//!
//! The crate computes canonical free bases of finitely generated right
//! ideals and submodules of K[F]^k, together with the matrix-induced duality
//! between column and row extensions. Algebraic closures follow from the
//! duality and decide freeness and primitivity, for modules as well as for
//! subgroups of F through their augmentation ideals.

pub mod algebra;
pub mod cli;
pub mod duality;
pub mod error;
pub mod groebner;
pub mod groups;
pub mod intersection;
pub mod module;
pub mod parse;
pub mod wire;
pub mod wordmeasure;

pub use algebra::{AlgebraElement, AlgebraMatrix, AlgebraVector, Field, Scalar, Word};
pub use error::{Error, Result};
