//! Domination numbers, vertex-criticality classes and the extremal diameter
//! families of weak bicritical graphs, for graphs on at most 64 vertices.
//!
//! - [`graph`]: the bitset [`Graph`] type, metrics, blocks, isomorphism and
//!   the graph6 / edge-list formats.
//! - [`domination`]: exact γ and γ-set enumeration.
//! - [`criticality`]: `V⁰/V⁺/V⁻`, critical / bicritical / weak bicritical
//!   predicates and l-sufficient pairs.
//! - [`families`]: constructors, enumerators and recognizers for `F_k`,
//!   `F*_2`, `F''_3` and `F*_k`.
//! - [`enumerate`]: non-isomorphic graphs of small order.
//! - [`verify`]: per-theorem checks, the exhaustive scan and JSON reports.

pub mod criticality;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod parallel;
pub mod verify;
mod vertex_set;

pub use error::{Error, Result, MAX_VERTICES};
pub use graph::{coalesce, CanonicalForm, Coalescence, Graph, GraphFormat, InducedSubgraph};
pub use parallel::Execution;
pub use vertex_set::VertexSet;
