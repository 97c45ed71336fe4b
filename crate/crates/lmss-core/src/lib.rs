//! Exact machinery for stable sets, matchings and local maximum stable set
//! greedoids on small graphs.
//!
//! Everything here is exact and deterministic. Exponential routines carry
//! explicit vertex caps and refuse larger inputs instead of silently
//! degrading. Fast structural deciders are paired with brute-force oracles
//! so they can be cross-validated over exhaustive corpora; see [`verify`].

pub mod catalog;
pub mod family;
pub mod graph;
pub mod greedoid;
pub mod matching;
pub mod stable;
pub mod verdict;
pub mod verify;

pub use family::SetFamily;
pub use graph::{
    parse_edge_list, CapExceeded, Graph, GraphError, VertexSet, ENUMERATION_CAP, MAX_VERTICES,
};
pub use greedoid::{DecisionPath, GreedoidVerdict};
pub use matching::Matching;
pub use verdict::{ContractViolation, Verdict};
pub use verify::{run_campaign, CampaignSummary, CorpusSpec, Suite};
