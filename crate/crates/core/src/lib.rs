//! Exact tools for empire maps on closed orientable surfaces: graphs and
//! their embeddings, empire graphs, exact colouring, closed-form bounds and
//! planar constructions of complete empire graphs.

pub mod bounds;
pub mod colouring;
pub mod empire;
pub mod error;
pub mod graph;
pub mod io;
pub mod topology;
pub mod wessel;

pub use colouring::{ChromaticSolver, Colouring};
pub use empire::{EmpireGraph, VerificationReport};
pub use error::{Error, Result};
pub use graph::{Graph, Path, VertexId};
pub use topology::{RotationSystem, Surface, SurfaceWord};
pub use wessel::EmbeddedEmpireGraph;

/// Integer type for the closed-form bounds at desk scale.
pub type Scalar = i64;

/// Arbitrary-precision integer for the same bounds.
pub type BigScalar = num_bigint::BigInt;
