//! Certifying graph-colouring algorithms.
//!
//! Every algorithm in this crate works on the immutable [`Graph`] type with
//! dense vertex identifiers `0..n`, and returns something that can be checked
//! independently of the algorithm that produced it: a proper [`Colouring`],
//! an [`OddCycleCertificate`], an exact polynomial, or a reduction whose
//! back-mapping yields a witness for the original instance.
//!
//! Module map:
//!
//! * [`graph`], [`vertex_set`], [`colouring`]: the data model and verifiers.
//! * [`greedy`]: orderings, greedy colouring, DSATUR, bipartition, palette
//!   restriction and Wigderson's algorithm.
//! * [`exact`]: exhaustive oracles, chromatic polynomials, subset dynamic
//!   programming, maximal independent sets, Lawler and inclusion–exclusion.
//! * [`edge`]: Vizing edge colouring via fans and Kempe chains.
//! * [`sample`]: Glauber dynamics.
//! * [`vector`]: vector colouring and hyperplane rounding.
//! * [`reductions`]: constructive reductions with witness back-mapping.
//! * [`families`]: named graphs and random instance generators.

pub mod colouring;
pub mod edge;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod greedy;
pub mod reductions;
pub mod rng;
pub mod sample;
pub mod vector;
pub mod vertex_set;

pub use colouring::{verify_colouring, Colour, Colouring, OddCycleCertificate};
pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
