//! Virtual resolutions over Cox rings of products of projective spaces.
//!
//! The crate covers colored simplicial complexes and their homology, exact
//! multigraded commutative algebra over prime fields, and chain-complex
//! constructions (minimal and virtual resolutions, Ext, Tor, mapping cones).

pub mod algebra;
pub mod betti;
pub mod certify;
pub mod error;
pub mod field;
pub mod homology;
pub mod linalg;
pub mod resolution;
pub mod simplicial;

pub use error::{Error, Result};
pub use field::PrimeField;
