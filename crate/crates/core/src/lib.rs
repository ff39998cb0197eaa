//! Exact computational finite geometry over small prime fields.
//!
//! The crate builds the combinatorial objects attached to a finite vector
//! space GF(p)^n — subspaces in canonical form, Grassmann and Johnson graphs,
//! apartments and their special/inexact/complement subsets — and verifies
//! structural statements about isometric embeddings between Grassmann graphs
//! by exhaustive or budgeted search at desk scale.
//!
//! Everything is exact: field arithmetic is modular, counts are integers,
//! and the one rational quantity (`apartments::b_of`) is kept as a ratio.
//!
//! Bulk enumerations and audits run on a rayon pool when the `parallel`
//! feature (on by default) is enabled; every entry point with a parallel
//! body also has a `*_sequential` twin used as a reference and by the
//! benchmark suite.

pub mod apartments;
pub mod combin;
pub mod embeddings;
mod exec;
pub mod finfield;
pub mod graphs;
pub mod subspaces;

mod error;

pub use error::{Error, Result};
