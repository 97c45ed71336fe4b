//! Exact stable-set machinery: α(G), Ω(G), well-coveredness, Ψ(G).
//!
//! Everything here is deliberately brute force; this module is the trusted
//! oracle the fast deciders are checked against.

use serde::Serialize;

use crate::family::SetFamily;
use crate::graph::{CapExceeded, Graph, VertexSet};
use crate::verdict::{ContractViolation, Verdict};

/// Cap for Ψ enumeration (exhaustive over all stable sets).
pub const PSI_CAP: usize = 20;

/// True iff no edge of `g` has both ends in `s`.
pub fn is_stable(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// Stability number α(G).
pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, g.vertex_set())
}

/// α of the subgraph induced by `free`, by branch and bound: vertices of
/// degree ≤ 1 are always in some maximum stable set and get included
/// outright; otherwise branch on a maximum-degree vertex.
pub fn alpha_within(g: &Graph, free: VertexSet) -> usize {
    if free.is_empty() {
        return 0;
    }
    let mut max_v = 0;
    let mut max_d = 0;
    for v in free.iter() {
        let d = (g.neighbors(v) & free).len();
        if d <= 1 {
            return 1 + alpha_within(g, (free - g.neighbors(v)).without(v));
        }
        if d > max_d {
            max_d = d;
            max_v = v;
        }
    }
    let include = 1 + alpha_within(g, (free - g.neighbors(max_v)).without(max_v));
    let exclude = alpha_within(g, free.without(max_v));
    include.max(exclude)
}

/// Every stable set of `g` (including ∅), in ascending bitmask order.
pub fn enumerate_stable_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    fn rec(g: &Graph, current: VertexSet, allowed: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(current);
        let mut rest = allowed;
        while let Some(v) = rest.min() {
            rest = rest.without(v);
            rec(g, current.with(v), rest - g.neighbors(v), out);
        }
    }
    rec(g, VertexSet::EMPTY, g.vertex_set(), &mut out);
    out.sort();
    out
}

/// All inclusion-maximal stable sets, via Bron–Kerbosch with pivoting on the
/// complement graph.
pub fn enumerate_maximal_stable_sets(g: &Graph) -> SetFamily {
    let n = g.vertex_count();
    let full = g.vertex_set();
    // Non-neighbors: adjacency of the complement graph.
    let comp: Vec<VertexSet> = (0..n)
        .map(|v| (full - g.neighbors(v)).without(v))
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&comp, VertexSet::EMPTY, full, VertexSet::EMPTY, &mut out);
    SetFamily::new(n, out)
}

fn bron_kerbosch(
    comp: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (p & comp[u]).len())
        .unwrap();
    for v in (p - comp[pivot]).iter() {
        bron_kerbosch(comp, r.with(v), p & comp[v], x & comp[v], out);
        p = p.without(v);
        x = x.with(v);
    }
}

/// Ω(G): exactly the stable sets of size α(G), in ascending bitmask order.
pub fn enumerate_maximum_stable_sets(g: &Graph) -> SetFamily {
    let a = alpha(g);
    let maximal = enumerate_maximal_stable_sets(g);
    SetFamily::new(
        g.vertex_count(),
        maximal.iter().filter(|s| s.len() == a).collect(),
    )
}

/// α, Ω and the multiset of maximal-stable-set sizes in one pass.
#[derive(Clone, Debug, Serialize)]
pub struct StableSetReport {
    pub alpha: usize,
    pub omega: SetFamily,
    /// Sizes of all maximal stable sets, ascending.
    pub maximal_sizes: Vec<usize>,
}

pub fn report(g: &Graph) -> StableSetReport {
    let maximal = enumerate_maximal_stable_sets(g);
    let mut maximal_sizes: Vec<usize> = maximal.iter().map(|s| s.len()).collect();
    maximal_sizes.sort_unstable();
    let alpha = maximal_sizes.last().copied().unwrap_or(0);
    let omega = SetFamily::new(
        g.vertex_count(),
        maximal.iter().filter(|s| s.len() == alpha).collect(),
    );
    StableSetReport {
        alpha,
        omega,
        maximal_sizes,
    }
}

/// Counterexample to well-coveredness: two maximal stable sets of
/// different sizes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct UnequalMaximalSets {
    pub smaller: VertexSet,
    pub larger: VertexSet,
}

/// Well-covered: all maximal stable sets share one cardinality.
pub fn is_well_covered(g: &Graph) -> Verdict<UnequalMaximalSets> {
    let maximal = enumerate_maximal_stable_sets(g);
    let smallest = maximal.iter().min_by_key(|s| s.len());
    let largest = maximal.iter().max_by_key(|s| s.len());
    match (smallest, largest) {
        (Some(a), Some(b)) if a.len() != b.len() => Verdict::no(UnequalMaximalSets {
            smaller: a,
            larger: b,
        }),
        _ => Verdict::yes(),
    }
}

/// Why a graph fails the very-well-covered definition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum NotVeryWellCovered {
    NoVertices,
    IsolatedVertex(usize),
    NotWellCovered(UnequalMaximalSets),
    SizeMismatch { n: usize, alpha: usize },
}

/// Very well-covered by definition: well-covered, no isolated vertices,
/// and |V| = 2α. The 0-vertex graph does not qualify.
pub fn is_very_well_covered_definition(g: &Graph) -> Verdict<NotVeryWellCovered> {
    if g.vertex_count() == 0 {
        return Verdict::no(NotVeryWellCovered::NoVertices);
    }
    if let Some(v) = g.isolated_vertices().min() {
        return Verdict::no(NotVeryWellCovered::IsolatedVertex(v));
    }
    let wc = is_well_covered(g);
    if !wc.holds {
        return Verdict::no(NotVeryWellCovered::NotWellCovered(wc.evidence.unwrap()));
    }
    let a = alpha(g);
    if g.vertex_count() != 2 * a {
        return Verdict::no(NotVeryWellCovered::SizeMismatch {
            n: g.vertex_count(),
            alpha: a,
        });
    }
    Verdict::yes()
}

/// S is a local maximum stable set iff S ∈ Ω(G[N[S]]), i.e. |S| equals the
/// stability number of the subgraph induced by its closed neighborhood.
pub fn is_local_max_stable(g: &Graph, s: VertexSet) -> Result<bool, ContractViolation> {
    if !s.is_subset_of(g.vertex_set()) {
        return Err(ContractViolation::NotASubset(s));
    }
    if !is_stable(g, s) {
        return Err(ContractViolation::NotStable(s));
    }
    Ok(s.len() == alpha_within(g, g.closed_neighborhood(s)))
}

/// Ψ(G): every local maximum stable set, ∅ included.
pub fn enumerate_psi(g: &Graph) -> Result<SetFamily, CapExceeded> {
    if g.vertex_count() > PSI_CAP {
        return Err(CapExceeded {
            what: "Ψ enumeration",
            n: g.vertex_count(),
            cap: PSI_CAP,
        });
    }
    let members = enumerate_stable_sets(g)
        .into_iter()
        .filter(|&s| s.len() == alpha_within(g, g.closed_neighborhood(s)))
        .collect();
    Ok(SetFamily::new(g.vertex_count(), members))
}

/// Evidence for [`extends_to_maximum`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum ExtendsEvidence {
    /// A maximum stable set containing the queried set.
    Superset(VertexSet),
    /// The full Ω(G), none of whose members contains the queried set.
    ExhaustedOmega(SetFamily),
}

/// Whether a stable set is contained in some maximum stable set.
pub fn extends_to_maximum(
    g: &Graph,
    s: VertexSet,
) -> Result<Verdict<ExtendsEvidence>, ContractViolation> {
    if !s.is_subset_of(g.vertex_set()) {
        return Err(ContractViolation::NotASubset(s));
    }
    if !is_stable(g, s) {
        return Err(ContractViolation::NotStable(s));
    }
    let omega = enumerate_maximum_stable_sets(g);
    let superset = omega.iter().find(|w| s.is_subset_of(*w));
    match superset {
        Some(w) => Ok(Verdict::yes_with(ExtendsEvidence::Superset(w))),
        None => Ok(Verdict::no(ExtendsEvidence::ExhaustedOmega(omega))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, enumerate_all_graphs};
    use proptest::prelude::*;

    fn vs(vals: &[usize]) -> VertexSet {
        vals.iter().copied().collect()
    }

    fn c4() -> Graph {
        cycle_graph(4).unwrap()
    }

    #[test]
    fn stability_basics() {
        let g = c4();
        assert!(is_stable(&g, VertexSet::EMPTY));
        assert!(is_stable(&g, vs(&[0, 2])));
        assert!(!is_stable(&g, vs(&[0, 1])));
        assert_eq!(alpha(&g), 2);
        assert_eq!(alpha(&complete_graph(4).unwrap()), 1);
    }

    #[test]
    fn omega_of_small_graphs() {
        assert_eq!(
            enumerate_maximum_stable_sets(&c4()).members(),
            &[vs(&[0, 2]), vs(&[1, 3])]
        );
        let k2 = complete_graph(2).unwrap();
        assert_eq!(
            enumerate_maximum_stable_sets(&k2).members(),
            &[vs(&[0]), vs(&[1])]
        );
    }

    #[test]
    fn maximal_stable_sets() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(
            enumerate_maximal_stable_sets(&k3).members(),
            &[vs(&[0]), vs(&[1]), vs(&[2])]
        );
        assert_eq!(
            enumerate_maximal_stable_sets(&c4()).members(),
            &[vs(&[0, 2]), vs(&[1, 3])]
        );
    }

    #[test]
    fn well_covered_examples() {
        assert!(is_well_covered(&complete_graph(4).unwrap()).holds);
        assert!(is_well_covered(&c4()).holds);
        // P3 has maximal stable sets {1} and {0,2}.
        let p3 = crate::graph::path_graph(3).unwrap();
        let v = is_well_covered(&p3);
        assert!(!v.holds);
        let w = v.evidence.unwrap();
        assert_eq!(w.smaller.len(), 1);
        assert_eq!(w.larger.len(), 2);
    }

    #[test]
    fn very_well_covered_definition_examples() {
        assert!(is_very_well_covered_definition(&c4()).holds);
        let k4 = complete_graph(4).unwrap();
        let v = is_very_well_covered_definition(&k4);
        assert_eq!(
            v.evidence,
            Some(NotVeryWellCovered::SizeMismatch { n: 4, alpha: 1 })
        );
        let k1 = Graph::new(1).unwrap();
        assert_eq!(
            is_very_well_covered_definition(&k1).evidence,
            Some(NotVeryWellCovered::IsolatedVertex(0))
        );
        assert_eq!(
            is_very_well_covered_definition(&Graph::new(0).unwrap()).evidence,
            Some(NotVeryWellCovered::NoVertices)
        );
        // Edgeless graphs are well-covered but not very well-covered.
        assert!(is_well_covered(&Graph::new(3).unwrap()).holds);
        assert!(!is_very_well_covered_definition(&Graph::new(2).unwrap()).holds);
    }

    #[test]
    fn psi_of_k2_and_c4() {
        let k2 = complete_graph(2).unwrap();
        let psi = enumerate_psi(&k2).unwrap();
        assert_eq!(psi.members(), &[VertexSet::EMPTY, vs(&[0]), vs(&[1])]);

        // Hand enumeration over all 16 subsets of C4: singletons fail
        // (N[v] spans a 3-path with α = 2), only the two diagonals qualify.
        let psi = enumerate_psi(&c4()).unwrap();
        assert_eq!(psi.members(), &[VertexSet::EMPTY, vs(&[0, 2]), vs(&[1, 3])]);
    }

    #[test]
    fn local_max_stable_contract() {
        let g = c4();
        assert_eq!(
            is_local_max_stable(&g, vs(&[0, 1])),
            Err(ContractViolation::NotStable(vs(&[0, 1])))
        );
        assert!(is_local_max_stable(&g, vs(&[0, 2])).unwrap());
        assert!(!is_local_max_stable(&g, vs(&[0])).unwrap());
    }

    #[test]
    fn extends_to_maximum_basics() {
        let g = c4();
        assert!(extends_to_maximum(&g, VertexSet::EMPTY).unwrap().holds);
        let v = extends_to_maximum(&g, vs(&[0])).unwrap();
        assert_eq!(v.evidence, Some(ExtendsEvidence::Superset(vs(&[0, 2]))));
    }

    #[test]
    fn adding_isolated_vertex_increments_alpha() {
        for g in enumerate_all_graphs(5).unwrap() {
            let mut bigger = Graph::new(g.vertex_count() + 1).unwrap();
            for (u, v) in g.edges() {
                bigger.add_edge(u, v).unwrap();
            }
            assert_eq!(alpha(&bigger), alpha(&g) + 1);
        }
    }

    proptest! {
        // alpha agrees with the independent subset-scan oracle.
        #[test]
        fn alpha_matches_subset_scan(mask in 0u64..(1 << 15)) {
            let g = graph_from_mask(6, mask);
            let brute = (0u32..(1 << 6))
                .map(VertexSet::from_bits)
                .filter(|&s| is_stable(&g, s))
                .map(|s| s.len())
                .max()
                .unwrap();
            prop_assert_eq!(alpha(&g), brute);
        }

        // Maximal-set enumeration agrees with a subset-scan maximality oracle.
        #[test]
        fn maximal_sets_match_subset_scan(mask in 0u64..(1 << 10)) {
            let g = graph_from_mask(5, mask);
            let full = g.vertex_set();
            let brute: Vec<VertexSet> = (0u32..(1 << 5))
                .map(VertexSet::from_bits)
                .filter(|&s| {
                    is_stable(&g, s)
                        && (full - s).iter().all(|v| !is_stable(&g, s.with(v)))
                })
                .collect();
            let maximal = enumerate_maximal_stable_sets(&g);
            prop_assert_eq!(maximal.members(), &brute[..]);
        }

        // Every Ψ member is stable, and Ω(G) ⊆ Ψ(G).
        #[test]
        fn psi_contains_omega(mask in 0u64..(1 << 15)) {
            let g = graph_from_mask(6, mask);
            let psi = enumerate_psi(&g).unwrap();
            for s in psi.iter() {
                prop_assert!(is_stable(&g, s));
            }
            for w in enumerate_maximum_stable_sets(&g).iter() {
                prop_assert!(psi.contains(w));
            }
        }
    }

    fn graph_from_mask(n: usize, mask: u64) -> Graph {
        enumerate_all_graphs(n).unwrap().nth(mask as usize).unwrap()
    }
}
