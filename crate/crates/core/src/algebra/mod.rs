//! Exact coefficients and freely reduced words, with sparse linear algebra
//! over the free group algebra K[F] built on top.

mod element;
mod field;
mod matrix;
mod word;

pub use element::AlgebraElement;
pub use field::{Field, Scalar, MAX_CHARACTERISTIC};
pub use matrix::{AlgebraMatrix, AlgebraVector};
pub use word::{generator_name, support_compare, Letter, Word, WordDisplay, MAX_RANK};
