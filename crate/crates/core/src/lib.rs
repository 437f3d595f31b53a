//! Exact computations with quadratic forms, étale algebras, unitary tori,
//! their first Galois cohomology, Tits process Jordan algebras and reduced
//! Albert algebras over ℚ.

pub mod cohomology;
pub mod composition;
pub mod error;
pub mod etale;
pub mod exact_numbers;
pub mod invariants;
pub mod jordan;
pub mod linalg;
pub mod norms;
pub mod poly;
pub mod quadratic_forms;
pub mod sample;
pub mod tori;

pub use error::{Error, Result};
pub use exact_numbers::Rational;
