//! Colored simplicial complexes and the operations used by the certification pipeline.

mod complex;
mod io;
mod pipeline_ops;

pub use complex::*;
pub use io::{parse_vertex_name, ComplexJson};
pub use pipeline_ops::*;
