//! Exact solvers, kernelization and reduction generators for strong triadic
//! closure edge labeling with multiple strong colors and color lists.

pub mod critical;
pub mod error;
pub mod gallai;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod model;
pub mod reductions;
pub mod solve;

pub use error::{Error, Result};
pub use graph::Graph;
pub use model::{ElInstance, Instance, Labeling, MultiInstance, VlInstance};
