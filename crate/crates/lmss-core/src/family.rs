//! Explicit families of vertex sets (Ω(G), Ψ(G), ...).

use serde::Serialize;

use crate::graph::VertexSet;

/// A deduplicated family of vertex sets over the ground set 0..ground_n-1,
/// kept in ascending bitmask order so reports are deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SetFamily {
    ground_n: usize,
    members: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(ground_n: usize, mut members: Vec<VertexSet>) -> Self {
        members.sort();
        members.dedup();
        SetFamily { ground_n, members }
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    /// One set per line, sorted vertex indices, braces-free comma-separated.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.members {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_and_order() {
        let a = VertexSet::from_bits(0b101);
        let b = VertexSet::from_bits(0b010);
        let f = SetFamily::new(3, vec![a, b, a]);
        assert_eq!(f.len(), 2);
        assert_eq!(f.members(), &[b, a]);
        assert!(f.contains(a));
        assert!(!f.contains(VertexSet::from_bits(0b111)));
        assert_eq!(f.to_lines(), "1\n0,2\n");
    }
}
