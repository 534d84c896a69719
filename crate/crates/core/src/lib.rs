//! Spined cubes `SQ_n`, their m-Cayley presentation `Γ_n`, and
//! constructions of two edge-disjoint Hamiltonian cycles.

pub mod edhc;
pub mod error;
pub mod graph;
pub mod mcayley;
pub mod symmetry;
pub mod topology;

pub use error::{Error, Result};
pub use graph::{Cycle, Edge, Graph};
