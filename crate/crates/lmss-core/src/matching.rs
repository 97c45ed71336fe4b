//! Exact matching machinery: μ(G), perfect-matching enumeration and
//! uniqueness, uniquely restricted matchings, Property P, König-Egerváry
//! recognition.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::graph::{CapExceeded, Graph, VertexSet};
use crate::verdict::{ContractViolation, Verdict};

/// Cap for perfect-matching enumeration.
pub const PERFECT_MATCHING_CAP: usize = 20;

/// Cap for enumerating all maximum matchings and for the exhaustive matcher.
pub const MATCHING_ENUM_CAP: usize = 16;

/// A set of pairwise vertex-disjoint edges, normalized to (u, v) with u < v
/// and sorted, so equal matchings compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    /// Builds a matching of `g`, verifying that every pair is an edge and
    /// that the pairs are vertex-disjoint.
    pub fn new(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self, ContractViolation> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut seen = VertexSet::EMPTY;
        for &(a, b) in pairs {
            if !g.has_edge(a, b) {
                return Err(ContractViolation::NotAnEdge(a, b));
            }
            for v in [a, b] {
                if seen.contains(v) {
                    return Err(ContractViolation::NotAMatching(v));
                }
                seen = seen.with(v);
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        Ok(Matching { edges })
    }

    fn from_sorted(edges: Vec<(usize, usize)>) -> Self {
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The vertices covered by the matching.
    pub fn saturated(&self) -> VertexSet {
        self.edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.saturated() == g.vertex_set()
    }
}

/// Renders as sorted "u-v" pairs, comma-separated.
impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(u, v) in &self.edges {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({self})")
    }
}

const NONE: usize = usize::MAX;

/// A maximum matching by augmenting paths with blossom contraction.
/// Deterministic: roots and neighbors are scanned in increasing order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let mut mate = vec![NONE; n];
    // Greedy warm start.
    for v in 0..n {
        if mate[v] == NONE {
            for u in g.neighbors(v).iter() {
                if mate[u] == NONE {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if mate[root] == NONE {
            try_augment(g, root, &mut mate);
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    edges.sort_unstable();
    Matching::from_sorted(edges)
}

fn try_augment(g: &Graph, root: usize, mate: &mut [usize]) -> bool {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut queue = VecDeque::new();
    used[root] = true;
    queue.push_back(root);
    let mut finish = NONE;
    'bfs: while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v).iter() {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                // Odd cycle: contract the blossom down to its base.
                let cur_base = blossom_base(&base, mate, &parent, v, to);
                let mut in_blossom = vec![false; n];
                mark_path(&mut in_blossom, &base, mate, &mut parent, v, cur_base, to);
                mark_path(&mut in_blossom, &base, mate, &mut parent, to, cur_base, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    finish = to;
                    break 'bfs;
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    if finish == NONE {
        return false;
    }
    let mut v = finish;
    while v != NONE {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
    true
}

fn mark_path(
    in_blossom: &mut [bool],
    base: &[usize],
    mate: &[usize],
    parent: &mut [usize],
    mut v: usize,
    cur_base: usize,
    mut child: usize,
) {
    while base[v] != cur_base {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

fn blossom_base(base: &[usize], mate: &[usize], parent: &[usize], a: usize, b: usize) -> usize {
    let mut seen = vec![false; base.len()];
    let mut v = a;
    loop {
        v = base[v];
        seen[v] = true;
        if mate[v] == NONE {
            break;
        }
        v = parent[mate[v]];
    }
    let mut v = b;
    loop {
        v = base[v];
        if seen[v] {
            return v;
        }
        v = parent[mate[v]];
    }
}

/// μ(G), the maximum matching cardinality.
pub fn mu(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// Reference matcher: plain recursion over the lowest-index free vertex.
/// Independent of the blossom code path; the two must agree.
pub fn mu_exhaustive(g: &Graph) -> Result<usize, CapExceeded> {
    if g.vertex_count() > MATCHING_ENUM_CAP {
        return Err(CapExceeded {
            what: "exhaustive matching search",
            n: g.vertex_count(),
            cap: MATCHING_ENUM_CAP,
        });
    }
    fn rec(g: &Graph, free: VertexSet) -> usize {
        let Some(v) = free.min() else { return 0 };
        let rest = free.without(v);
        let mut best = rec(g, rest);
        for u in (g.neighbors(v) & rest).iter() {
            best = best.max(1 + rec(g, rest.without(u)));
        }
        best
    }
    Ok(rec(g, g.vertex_set()))
}

/// All perfect matchings, by recursive pairing of the lowest-index
/// unmatched vertex; deterministic order. Odd n yields none.
pub fn enumerate_perfect_matchings(g: &Graph) -> Result<Vec<Matching>, CapExceeded> {
    enumerate_perfect_matchings_bounded(g, usize::MAX)
}

fn enumerate_perfect_matchings_bounded(
    g: &Graph,
    limit: usize,
) -> Result<Vec<Matching>, CapExceeded> {
    if g.vertex_count() > PERFECT_MATCHING_CAP {
        return Err(CapExceeded {
            what: "perfect matching enumeration",
            n: g.vertex_count(),
            cap: PERFECT_MATCHING_CAP,
        });
    }
    let mut out = Vec::new();
    if g.vertex_count() % 2 == 1 {
        return Ok(out);
    }
    fn rec(
        g: &Graph,
        free: VertexSet,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
        limit: usize,
    ) -> bool {
        let Some(v) = free.min() else {
            out.push(Matching::from_sorted(current.clone()));
            return out.len() >= limit;
        };
        for u in (g.neighbors(v) & free).iter() {
            current.push((v, u));
            let stop = rec(g, free.without(v).without(u), current, out, limit);
            current.pop();
            if stop {
                return true;
            }
        }
        false
    }
    rec(g, g.vertex_set(), &mut Vec::new(), &mut out, limit);
    Ok(out)
}

/// Evidence for [`has_unique_perfect_matching`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum PerfectMatchingEvidence {
    Unique(Matching),
    NoPerfectMatching,
    TwoMatchings(Matching, Matching),
}

pub fn has_unique_perfect_matching(
    g: &Graph,
) -> Result<Verdict<PerfectMatchingEvidence>, CapExceeded> {
    let mut found = enumerate_perfect_matchings_bounded(g, 2)?;
    Ok(match found.len() {
        0 => Verdict::no(PerfectMatchingEvidence::NoPerfectMatching),
        1 => Verdict::yes_with(PerfectMatchingEvidence::Unique(found.pop().unwrap())),
        _ => {
            let second = found.pop().unwrap();
            let first = found.pop().unwrap();
            Verdict::no(PerfectMatchingEvidence::TwoMatchings(first, second))
        }
    })
}

/// Uniquely restricted test by the definition: restrict to the saturated
/// vertices and count perfect matchings of the induced subgraph. The false
/// evidence is an alternative perfect matching of that subgraph, in the
/// original vertex indices.
pub fn is_uniquely_restricted(
    g: &Graph,
    m: &Matching,
) -> Result<Verdict<Matching>, ContractViolation> {
    validate_matching(g, m)?;
    let ind = g.induced_subgraph(m.saturated());
    let pms = enumerate_perfect_matchings_bounded(&ind.graph, 2)
        .expect("saturated set of a matching is within the enumeration cap");
    debug_assert!(!pms.is_empty(), "m itself is perfect on its saturated set");
    let translated: Vec<Matching> = pms
        .iter()
        .map(|pm| {
            let mut edges: Vec<(usize, usize)> = pm
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (ind.to_old(u), ind.to_old(v));
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            Matching::from_sorted(edges)
        })
        .collect();
    if translated.len() == 1 {
        Ok(Verdict::yes())
    } else {
        let other = translated.into_iter().find(|pm| pm != m).unwrap();
        Ok(Verdict::no(other))
    }
}

/// The alternating-cycle route to the same question: M is uniquely
/// restricted iff no M-alternating cycle exists. An alternating cycle is a
/// sequence of distinct matched edges joined by unmatched edges, each matched
/// edge entered at one endpoint and left at the other, so the search walks
/// arcs u → mate(v) (unmatched edge uv, then the matched edge at v) while
/// never reusing a matched edge. Detecting cycles in that arc digraph alone
/// would be wrong: a directed cycle there may revisit a matched edge, giving
/// a closed alternating walk that contains no alternating cycle.
pub fn has_alternating_cycle(g: &Graph, m: &Matching) -> Result<bool, ContractViolation> {
    validate_matching(g, m)?;
    let n = g.vertex_count();
    let sat = m.saturated();
    let mut mate = vec![NONE; n];
    let mut eid = vec![usize::MAX; n];
    for (i, &(u, v)) in m.edges().iter().enumerate() {
        mate[u] = v;
        mate[v] = u;
        eid[u] = i;
        eid[v] = i;
    }
    fn dfs(
        g: &Graph,
        sat: VertexSet,
        mate: &[usize],
        eid: &[usize],
        start: usize,
        x: usize,
        used: &mut u32,
    ) -> bool {
        for v in g.neighbors(x).iter() {
            if !sat.contains(v) || mate[x] == v {
                continue;
            }
            if v == mate[start] {
                return true;
            }
            let y = mate[v];
            if *used >> eid[y] & 1 == 0 {
                *used |= 1 << eid[y];
                if dfs(g, sat, mate, eid, start, y, used) {
                    return true;
                }
                *used &= !(1 << eid[y]);
            }
        }
        false
    }
    for start in sat.iter() {
        let mut used = 1u32 << eid[start];
        if dfs(g, sat, &mate, &eid, start, start, &mut used) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every matching of size μ(G), enumerated exhaustively.
pub fn enumerate_maximum_matchings(g: &Graph) -> Result<Vec<Matching>, CapExceeded> {
    if g.vertex_count() > MATCHING_ENUM_CAP {
        return Err(CapExceeded {
            what: "maximum matching enumeration",
            n: g.vertex_count(),
            cap: MATCHING_ENUM_CAP,
        });
    }
    let target = mu(g);
    let mut out = Vec::new();
    fn rec(
        g: &Graph,
        free: VertexSet,
        current: &mut Vec<(usize, usize)>,
        target: usize,
        out: &mut Vec<Matching>,
    ) {
        if current.len() == target {
            out.push(Matching::from_sorted(current.clone()));
            return;
        }
        if current.len() + free.len() / 2 < target {
            return;
        }
        let Some(v) = free.min() else { return };
        let rest = free.without(v);
        rec(g, rest, current, target, out);
        for u in (g.neighbors(v) & rest).iter() {
            current.push((v, u));
            rec(g, rest.without(u), current, target, out);
            current.pop();
        }
    }
    rec(g, g.vertex_set(), &mut Vec::new(), target, &mut out);
    out.sort();
    Ok(out)
}

/// Theorem-33 clause (ii), first half: every maximum matching is uniquely
/// restricted. The false evidence is an offending maximum matching.
pub fn all_maximum_matchings_uniquely_restricted(
    g: &Graph,
) -> Result<Verdict<Matching>, CapExceeded> {
    for m in enumerate_maximum_matchings(g)? {
        let ur = is_uniquely_restricted(g, &m).expect("enumerated matchings are valid");
        if !ur.holds {
            return Ok(Verdict::no(m));
        }
    }
    Ok(Verdict::yes())
}

/// How a perfect matching breaks Property P.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum PropertyPViolation {
    /// The matched edge lies on a triangle.
    CommonNeighbor { edge: (usize, usize), shared: usize },
    /// v ∈ N(x)−{y} and u ∈ N(y)−{x} are not adjacent.
    NonAdjacentPair {
        edge: (usize, usize),
        near_first: usize,
        near_second: usize,
    },
}

/// Property P for a perfect matching: for every xy ∈ M, N(x) ∩ N(y) = ∅ and
/// every vertex of N(x)−{y} is adjacent to every vertex of N(y)−{x}.
/// A non-perfect matching is a contract violation, not a "false".
pub fn satisfies_property_p(
    g: &Graph,
    m: &Matching,
) -> Result<Verdict<PropertyPViolation>, ContractViolation> {
    validate_matching(g, m)?;
    let unsaturated = g.vertex_set() - m.saturated();
    if !unsaturated.is_empty() {
        return Err(ContractViolation::MatchingNotPerfect(unsaturated));
    }
    for &(x, y) in m.edges() {
        let shared = g.neighbors(x) & g.neighbors(y);
        if let Some(w) = shared.min() {
            return Ok(Verdict::no(PropertyPViolation::CommonNeighbor {
                edge: (x, y),
                shared: w,
            }));
        }
        for v in g.neighbors(x).without(y).iter() {
            for u in g.neighbors(y).without(x).iter() {
                if !g.has_edge(v, u) {
                    return Ok(Verdict::no(PropertyPViolation::NonAdjacentPair {
                        edge: (x, y),
                        near_first: v,
                        near_second: u,
                    }));
                }
            }
        }
    }
    Ok(Verdict::yes())
}

/// Why the Property-P recognizer rejects a graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum NotVeryWellCoveredP {
    NoVertices,
    IsolatedVertex(usize),
    NoPerfectMatching { mu: usize },
    PropertyP(PropertyPViolation),
}

/// Polynomial very-well-covered recognizer: find one maximum matching; the
/// graph qualifies iff that matching is perfect and satisfies Property P.
/// One perfect matching satisfying P suffices: if any does, all do.
pub fn is_very_well_covered_property_p(g: &Graph) -> Verdict<NotVeryWellCoveredP> {
    if g.vertex_count() == 0 {
        return Verdict::no(NotVeryWellCoveredP::NoVertices);
    }
    if let Some(v) = g.isolated_vertices().min() {
        return Verdict::no(NotVeryWellCoveredP::IsolatedVertex(v));
    }
    let m = maximum_matching(g);
    if 2 * m.len() < g.vertex_count() {
        return Verdict::no(NotVeryWellCoveredP::NoPerfectMatching { mu: m.len() });
    }
    let p = satisfies_property_p(g, &m).expect("maximum matching here is perfect");
    if p.holds {
        Verdict::yes()
    } else {
        Verdict::no(NotVeryWellCoveredP::PropertyP(p.evidence.unwrap()))
    }
}

/// The numbers behind a König-Egerváry decision.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct KeNumbers {
    pub alpha: usize,
    pub mu: usize,
    pub n: usize,
}

/// König-Egerváry: α(G) + μ(G) = |V(G)|. The verdict always carries the
/// three numbers.
pub fn is_konig_egervary(g: &Graph) -> Verdict<KeNumbers> {
    let numbers = KeNumbers {
        alpha: crate::stable::alpha(g),
        mu: mu(g),
        n: g.vertex_count(),
    };
    if numbers.alpha + numbers.mu == numbers.n {
        Verdict::yes_with(numbers)
    } else {
        Verdict {
            holds: false,
            evidence: Some(numbers),
        }
    }
}

/// True iff every edge of `m` has exactly one endpoint in `s`.
pub fn matching_in_cut(
    g: &Graph,
    m: &Matching,
    s: VertexSet,
) -> Result<bool, ContractViolation> {
    validate_matching(g, m)?;
    if !s.is_subset_of(g.vertex_set()) {
        return Err(ContractViolation::NotASubset(s));
    }
    Ok(m.edges()
        .iter()
        .all(|&(u, v)| s.contains(u) != s.contains(v)))
}

fn validate_matching(g: &Graph, m: &Matching) -> Result<(), ContractViolation> {
    let mut seen = VertexSet::EMPTY;
    for &(u, v) in m.edges() {
        if !g.has_edge(u, v) {
            return Err(ContractViolation::NotAnEdge(u, v));
        }
        for w in [u, v] {
            if seen.contains(w) {
                return Err(ContractViolation::NotAMatching(w));
            }
            seen = seen.with(w);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, enumerate_all_graphs, Graph};
    use proptest::prelude::*;

    // Catalog graph fig1_H: u=0 v=1 t=2 y=3 x=4 w=5.
    fn fig1_h() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (1, 3), (2, 4)]).unwrap()
    }

    // Catalog graph fig2_G2: a=0 b=1 x=2 u=3 y=4 v=5.
    fn fig2_g2() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 3), (3, 5), (3, 2), (5, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn mu_of_small_graphs() {
        assert_eq!(mu(&complete_graph(2).unwrap()), 1);
        assert_eq!(mu(&cycle_graph(4).unwrap()), 2);
        assert_eq!(mu(&complete_graph(4).unwrap()), 2);
        assert_eq!(mu(&Graph::new(5).unwrap()), 0);
        assert_eq!(mu(&fig1_h()), 2);
        assert_eq!(mu(&fig2_g2()), 3);
    }

    #[test]
    fn blossom_handles_odd_components() {
        // Two triangles joined by an edge force real blossom contractions.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
            .unwrap();
        assert_eq!(mu(&g), 3);
        // Petersen-like oddity: C5 has mu 2.
        assert_eq!(mu(&cycle_graph(5).unwrap()), 2);
        assert_eq!(mu(&cycle_graph(7).unwrap()), 3);
    }

    #[test]
    fn perfect_matching_enumeration() {
        assert_eq!(
            enumerate_perfect_matchings(&complete_graph(2).unwrap())
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_perfect_matchings(&cycle_graph(4).unwrap())
                .unwrap()
                .len(),
            2
        );
        // Odd vertex count: immediately empty.
        assert!(enumerate_perfect_matchings(&cycle_graph(5).unwrap())
            .unwrap()
            .is_empty());
        // Corona of C5: only the five pendant edges saturate the pendants.
        let cc5 = cycle_graph(5).unwrap().corona_k1().unwrap();
        let pms = enumerate_perfect_matchings(&cc5).unwrap();
        assert_eq!(pms.len(), 1);
        assert_eq!(
            pms[0].edges(),
            &[(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
        );
    }

    #[test]
    fn unique_perfect_matching_verdicts() {
        assert!(has_unique_perfect_matching(&complete_graph(2).unwrap())
            .unwrap()
            .holds);
        let v = has_unique_perfect_matching(&cycle_graph(4).unwrap()).unwrap();
        assert!(!v.holds);
        assert!(matches!(
            v.evidence,
            Some(PerfectMatchingEvidence::TwoMatchings(_, _))
        ));
        let v = has_unique_perfect_matching(&cycle_graph(5).unwrap()).unwrap();
        assert_eq!(v.evidence, Some(PerfectMatchingEvidence::NoPerfectMatching));
    }

    #[test]
    fn uniquely_restricted_on_fig1_h() {
        let h = fig1_h();
        // {uv, xw} is uniquely restricted, {xy, tv} is not.
        let uv_xw = Matching::new(&h, &[(0, 1), (4, 5)]).unwrap();
        assert!(is_uniquely_restricted(&h, &uv_xw).unwrap().holds);
        assert!(!has_alternating_cycle(&h, &uv_xw).unwrap());

        let xy_tv = Matching::new(&h, &[(3, 4), (1, 2)]).unwrap();
        let v = is_uniquely_restricted(&h, &xy_tv).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.evidence,
            Some(Matching::new(&h, &[(1, 3), (2, 4)]).unwrap())
        );
        assert!(has_alternating_cycle(&h, &xy_tv).unwrap());

        assert!(is_uniquely_restricted(&h, &Matching::empty()).unwrap().holds);
    }

    #[test]
    fn all_maximum_matchings_ur_on_fig1() {
        let h = fig1_h();
        let v = all_maximum_matchings_uniquely_restricted(&h).unwrap();
        assert!(!v.holds);
        assert!(has_alternating_cycle(&h, &v.evidence.unwrap()).unwrap());
    }

    #[test]
    fn property_p_examples() {
        let g2 = fig2_g2();
        // M = {ab, xy, uv}; fails at (uv, b, y): b ∈ N(u), y ∈ N(v), by ∉ E.
        let m = Matching::new(&g2, &[(0, 1), (2, 4), (3, 5)]).unwrap();
        let v = satisfies_property_p(&g2, &m).unwrap();
        assert_eq!(
            v.evidence,
            Some(PropertyPViolation::NonAdjacentPair {
                edge: (3, 5),
                near_first: 1,
                near_second: 4,
            })
        );

        let k2 = complete_graph(2).unwrap();
        let m = Matching::new(&k2, &[(0, 1)]).unwrap();
        assert!(satisfies_property_p(&k2, &m).unwrap().holds);

        // Checked by hand on C4: for each matched edge the two outside
        // neighbors are adjacent via the opposite edge of the cycle.
        let c4 = cycle_graph(4).unwrap();
        for m in enumerate_perfect_matchings(&c4).unwrap() {
            assert!(satisfies_property_p(&c4, &m).unwrap().holds);
        }

        // Non-perfect matchings are rejected, not answered.
        let m = Matching::new(&c4, &[(0, 1)]).unwrap();
        assert_eq!(
            satisfies_property_p(&c4, &m),
            Err(ContractViolation::MatchingNotPerfect(
                [2, 3].into_iter().collect()
            ))
        );
    }

    #[test]
    fn property_p_recognizer() {
        assert!(is_very_well_covered_property_p(&cycle_graph(4).unwrap()).holds);
        let v = is_very_well_covered_property_p(&fig2_g2());
        assert!(matches!(
            v.evidence,
            Some(NotVeryWellCoveredP::PropertyP(_))
        ));
        let v = is_very_well_covered_property_p(&complete_graph(3).unwrap());
        assert_eq!(
            v.evidence,
            Some(NotVeryWellCoveredP::NoPerfectMatching { mu: 1 })
        );
    }

    #[test]
    fn konig_egervary_examples() {
        assert!(is_konig_egervary(&fig2_g2()).holds);
        let v = is_konig_egervary(&complete_graph(4).unwrap());
        assert!(!v.holds);
        assert_eq!(
            v.evidence,
            Some(KeNumbers {
                alpha: 1,
                mu: 2,
                n: 4
            })
        );
    }

    #[test]
    fn matching_in_cut_examples() {
        let c4 = cycle_graph(4).unwrap();
        let s: VertexSet = [0, 2].into_iter().collect();
        assert!(matching_in_cut(&c4, &Matching::empty(), s).unwrap());
        let m = Matching::new(&c4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matching_in_cut(&c4, &m, s).unwrap());
        assert!(!matching_in_cut(&c4, &m, [0, 1].into_iter().collect()).unwrap());
    }

    // The unique perfect matching here admits a closed alternating walk
    // (0,5,4,1,3,4,5,2) that reuses the matched edge 4-5, so naive cycle
    // detection in the arc digraph reports a spurious alternating cycle.
    #[test]
    fn alternating_walk_is_not_a_cycle() {
        let g = Graph::from_edges(
            6,
            &[(0, 2), (0, 5), (1, 3), (1, 4), (2, 5), (3, 4), (4, 5)],
        )
        .unwrap();
        let m = Matching::new(&g, &[(0, 2), (1, 3), (4, 5)]).unwrap();
        assert!(m.is_perfect(&g));
        assert!(is_uniquely_restricted(&g, &m).unwrap().holds);
        assert!(!has_alternating_cycle(&g, &m).unwrap());
    }

    proptest! {
        // Blossom matcher versus the exhaustive reference, and UR by
        // definition versus UR by alternating-cycle search.
        #[test]
        fn matcher_cross_validation(mask in 0u64..(1 << 15)) {
            let g = enumerate_all_graphs(6).unwrap().nth(mask as usize).unwrap();
            prop_assert_eq!(mu(&g), mu_exhaustive(&g).unwrap());
            for m in enumerate_maximum_matchings(&g).unwrap() {
                let by_count = is_uniquely_restricted(&g, &m).unwrap().holds;
                let by_cycle = !has_alternating_cycle(&g, &m).unwrap();
                prop_assert_eq!(by_count, by_cycle);
            }
        }

        #[test]
        fn maximum_matchings_all_have_size_mu(mask in 0u64..(1 << 15)) {
            let g = enumerate_all_graphs(6).unwrap().nth(mask as usize).unwrap();
            let target = mu(&g);
            for m in enumerate_maximum_matchings(&g).unwrap() {
                prop_assert_eq!(m.len(), target);
            }
        }
    }
}
