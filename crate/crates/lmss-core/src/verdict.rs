//! Decisions paired with machine-checkable witnesses or counterexamples.

use serde::Serialize;
use thiserror::Error;

use crate::graph::VertexSet;

/// A boolean decision plus optional evidence: a witness when it helps on the
/// positive side, a counterexample on the negative side.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict<E> {
    pub holds: bool,
    pub evidence: Option<E>,
}

impl<E> Verdict<E> {
    pub fn yes() -> Self {
        Verdict {
            holds: true,
            evidence: None,
        }
    }

    pub fn yes_with(evidence: E) -> Self {
        Verdict {
            holds: true,
            evidence: Some(evidence),
        }
    }

    pub fn no(evidence: E) -> Self {
        Verdict {
            holds: false,
            evidence: Some(evidence),
        }
    }
}

/// A caller broke an operation's precondition.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContractViolation {
    #[error("set {0:?} is not stable in the graph")]
    NotStable(VertexSet),
    #[error("set {0:?} is not a subset of the vertex set")]
    NotASubset(VertexSet),
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edges share vertex {0}, so this is not a matching")]
    NotAMatching(usize),
    #[error("matching is not perfect: vertices {0:?} are unsaturated")]
    MatchingNotPerfect(VertexSet),
}
