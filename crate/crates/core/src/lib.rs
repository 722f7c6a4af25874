//! Maximum average degree of graph decompositions.
//!
//! Exact `Mad` via minimum cuts, closed forms for the extremal sums over
//! lists and decompositions of `K_n`, design generators, explicit
//! constructions, the list normalization procedure, and brute-force oracles.

pub mod acceptance;
pub mod decomp;
pub mod designs;
pub mod error;
mod flow;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod mad;
pub mod normalize;
pub mod oracle;
pub mod rational;
pub mod surd;

pub use error::{Error, Result};
pub use graph::{Graph, GraphList, VertexSet};
pub use mad::{mad, MadCertificate};
pub use rational::Rational;
