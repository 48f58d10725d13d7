//! Chain complexes of free modules and the constructions built on them.

pub mod classify;
pub mod complex;
pub mod cone;
pub mod derived;
pub mod minimize;
pub mod resolve;
pub mod verify;
pub mod vreg;

pub use complex::{direct_sum, direct_sum_resolutions, AugmentedComplex, ChainComplex, ComplexJson};
pub use minimize::{minimize, MinimizeOptions};
pub use resolve::{frame_resolution, minimal_resolution};
