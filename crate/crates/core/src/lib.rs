//! Exact homomorphism counting and verification of the dependent-random-choice
//! lower bounds behind Sidorenko's inequality for bipartite graphs that have a
//! vertex complete to the other side.
//!
//! Every verdict is a comparison of arbitrary-precision integers; floating
//! point only ever shows up in fields explicitly marked approximate.

pub mod corpus;
pub mod drc;
pub mod embed;
pub mod error;
pub mod graph;
pub mod hom;
pub mod limits;
pub mod numeric;

pub use drc::{verify_goodstep, DrcParams, GoodstepReport, VertexAudit};
pub use embed::{LemmaId, LemmaReport, SetHypergraph, ThresholdPredicate};
pub use error::{Error, Result};
pub use graph::{BipartiteApexGraph, Graph, VertexSet};
pub use hom::{HomCountResult, SidorenkoVerdict};
pub use limits::Limits;
pub use numeric::{big_pow, rational_cmp, BigNat, ExactRational};
