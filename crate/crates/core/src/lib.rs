//! Centers of vertex profiles in connected graphs.
//!
//! For a nonempty profile `S`, the S-eccentricity of `v` is the largest
//! distance from `v` to a member of `S`, and the S-center is the set of
//! vertices minimizing it. A vertex set is a *center set* when it is the
//! S-center of some profile; the *center number* counts them.
//!
//! - [`graph`]: validated graphs, hop distances, eccentricities, blocks
//! - [`profile`]: S-centers and exhaustive center-set enumeration
//! - [`classify`]: self-centered, UEV, even/balanced/harmonic/symmetric, block
//!   graphs, dominating and boundary sets
//! - [`characterize`]: closed-form center-set families per graph class
//! - [`counting`]: restricted subset counts and center-number formulas
//! - [`generators`]: graph families and the seeded desk corpus
//! - [`cli`]: the `centerset` command-line front end

pub mod characterize;
pub mod classify;
pub mod cli;
pub mod counting;
pub mod error;
pub mod generators;
pub mod graph;
pub mod profile;
pub mod vertex_set;

pub use characterize::ClassSpec;
pub use error::{Error, Result};
pub use graph::{BlockDecomposition, DistanceMatrix, Graph, MAX_VERTICES};
pub use profile::{CenterSetFamily, EnumerationOptions, Profile};
pub use vertex_set::VertexSet;
