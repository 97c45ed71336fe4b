//! Simple undirected graphs on at most 32 vertices, with bitmask vertex sets.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Hard cap on vertex counts; `VertexSet` is a fixed-width 32-bit mask.
pub const MAX_VERTICES: usize = 32;

/// Cap for exhaustive labeled-graph enumeration (2^C(n,2) graphs).
pub const ENUMERATION_CAP: usize = 8;

/// A subset of the vertices 0..n-1 of some graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | 1 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest vertex in the set, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Renders as sorted, comma-separated vertex indices without braces.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: expected header \"n <count>\"")]
    MissingHeader(usize),
    #[error("line {0}: malformed line {1:?}")]
    Malformed(usize, String),
    #[error("line {0}: vertex {1} out of range for a graph on {2} vertices")]
    VertexOutOfRange(usize, usize, usize),
    #[error("line {0}: self-loop at vertex {1}")]
    SelfLoop(usize, usize),
    #[error("line {0}: vertex count {1} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize, usize),
}

/// A simple undirected graph: no loops, no multi-edges, vertices 0..n-1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All vertices as a mask.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// N(A) = {v ∉ A : N(v) ∩ A ≠ ∅}.
    pub fn open_neighborhood(&self, a: VertexSet) -> VertexSet {
        let mut nb = VertexSet::EMPTY;
        for v in a.iter() {
            nb = nb | self.adj[v];
        }
        nb - a
    }

    /// N[A] = A ∪ N(A).
    pub fn closed_neighborhood(&self, a: VertexSet) -> VertexSet {
        a | self.open_neighborhood(a)
    }

    /// The subgraph spanned by `x`, with the index maps in both directions.
    pub fn induced_subgraph(&self, x: VertexSet) -> Induced {
        let old_of_new: Vec<usize> = x.iter().collect();
        let mut new_of_old = vec![None; self.n];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        let mut graph = Graph::new(old_of_new.len()).expect("subset of a valid graph");
        for (new_u, &old_u) in old_of_new.iter().enumerate() {
            for old_v in (self.adj[old_u] & x).iter() {
                let new_v = new_of_old[old_v].unwrap();
                if new_u < new_v {
                    graph.add_edge(new_u, new_v).expect("edges of a valid graph");
                }
            }
        }
        Induced {
            graph,
            old_of_new,
            new_of_old,
        }
    }

    /// Length of a shortest cycle; `Acyclic` for forests.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        // BFS from every vertex; the first non-tree edge seen closes a
        // shortest cycle through the root.
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if v != parent[u] {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Cycle(best)
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v && self.adj[u].intersects(self.adj[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// The corona H∘K₁: one private pendant vertex attached to each vertex.
    /// Vertex v of `self` keeps its index; its pendant is n + v.
    pub fn corona_k1(&self) -> Result<Graph, GraphError> {
        let mut g = Graph::new(2 * self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for v in 0..self.n {
            g.add_edge(v, self.n + v).unwrap();
        }
        Ok(g)
    }

    /// Serializes to the edge-list text format accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An induced subgraph together with its index maps.
pub struct Induced {
    pub graph: Graph,
    old_of_new: Vec<usize>,
    new_of_old: Vec<Option<usize>>,
}

impl Induced {
    pub fn to_old(&self, new: usize) -> usize {
        self.old_of_new[new]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.new_of_old.get(old).copied().flatten()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl Girth {
    /// Forests qualify for every "girth ≥ k" precondition: no short cycle exists.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Acyclic => true,
            Girth::Cycle(c) => c >= k,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Cycle(c) => write!(f, "{c}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

/// Parses the edge-list text format: a header line `n <count>`, then one
/// `u v` line per edge. `#` starts a comment line; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match &mut graph {
            None => {
                let count = line
                    .strip_prefix("n ")
                    .and_then(|rest| rest.trim().parse::<usize>().ok())
                    .ok_or(ParseError::MissingHeader(lineno))?;
                if count > MAX_VERTICES {
                    return Err(ParseError::TooManyVertices(lineno, count));
                }
                graph = Some(Graph::new(count).unwrap());
            }
            Some(g) => {
                let mut parts = line.split_whitespace();
                let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                    (Some(u), Some(v), None) => match (u.parse(), v.parse()) {
                        (Ok(u), Ok(v)) => (u, v),
                        _ => return Err(ParseError::Malformed(lineno, line.to_string())),
                    },
                    _ => return Err(ParseError::Malformed(lineno, line.to_string())),
                };
                g.add_edge(u, v).map_err(|e| match e {
                    GraphError::VertexOutOfRange(w, n) => {
                        ParseError::VertexOutOfRange(lineno, w, n)
                    }
                    GraphError::SelfLoop(w) => ParseError::SelfLoop(lineno, w),
                    GraphError::TooManyVertices(n) => ParseError::TooManyVertices(lineno, n),
                })?;
            }
        }
    }
    graph.ok_or(ParseError::MissingHeader(last_line + 1))
}

/// The chordless cycle C_q.
pub fn cycle_graph(q: usize) -> Result<Graph, GraphError> {
    assert!(q >= 3, "cycles need at least 3 vertices");
    let mut g = Graph::new(q)?;
    for v in 0..q {
        g.add_edge(v, (v + 1) % q)?;
    }
    Ok(g)
}

/// The complete graph K_n.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// The path on n vertices (n-1 edges).
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

/// Vertex pairs (u, v), u < v, in the fixed lexicographic order that defines
/// both the enumeration bitmask and the random-graph coin-flip order.
fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{what} supports at most {cap} vertices, got {n}")]
pub struct CapExceeded {
    pub what: &'static str,
    pub n: usize,
    pub cap: usize,
}

/// Deterministic stream of every labeled simple graph on n vertices,
/// in edge-bitmask order.
pub fn enumerate_all_graphs(n: usize) -> Result<GraphStream, CapExceeded> {
    if n > ENUMERATION_CAP {
        return Err(CapExceeded {
            what: "exhaustive graph enumeration",
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let end = 1u64 << (n * n.saturating_sub(1) / 2);
    Ok(GraphStream { n, next: 0, end })
}

pub struct GraphStream {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some(labeled_graph(self.n, mask))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.end - self.next) as usize;
        (rem, Some(rem))
    }
}

impl ExactSizeIterator for GraphStream {}

/// The graph at position `mask` in the enumeration order: bit k of the mask
/// selects the k-th vertex pair, pairs listed as (0,1), (0,2), ..., (n-2,n-1).
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    assert!(n <= MAX_VERTICES && n * n.saturating_sub(1) / 2 <= 64);
    let mut g = Graph::new(n).unwrap();
    for (k, (u, v)) in vertex_pairs(n).into_iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Erdős–Rényi G(n, p) from a seeded generator; same seed, same graph.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
    let mut g = Graph::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (u, v) in vertex_pairs(n) {
        if rng.gen_bool(p) {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}
