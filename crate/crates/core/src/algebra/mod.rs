//! Multigraded polynomial rings, free modules, Gröbner bases and module operations.

pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod poly;
pub mod presentation;
pub mod ring;
pub mod submodule;
pub mod syzygy;
pub mod vector;

pub use groebner::GroebnerBasis;
pub use matrix::{FreeModule, GradedMatrix, MatrixJson};
pub use monomial::{Monomial, MAX_VARS};
pub use poly::Polynomial;
pub use ring::{Degree, Ring};
pub use syzygy::syzygy_module;
pub use vector::{ModVec, Term};
