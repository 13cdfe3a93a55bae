//! Vertex classes `V⁰ / V⁺ / V⁻` and the criticality predicates built on them.

use serde::Serialize;

use crate::domination::{all_gamma_sets, Exact, GammaOracle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// How deleting a vertex changes γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VertexClass {
    /// `γ(G - x) = γ(G)`
    Zero,
    /// `γ(G - x) > γ(G)`
    Plus,
    /// `γ(G - x) < γ(G)`; the vertex is critical.
    Minus,
}

impl VertexClass {
    fn from_gammas(before: usize, after: usize) -> Self {
        match after.cmp(&before) {
            std::cmp::Ordering::Equal => VertexClass::Zero,
            std::cmp::Ordering::Greater => VertexClass::Plus,
            std::cmp::Ordering::Less => VertexClass::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub zero: VertexSet,
    pub plus: VertexSet,
    pub minus: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityProfile {
    pub gamma: usize,
    /// `γ(G - x)` for each vertex `x`.
    pub gamma_after_delete: Vec<usize>,
    pub classes: Vec<VertexClass>,
    pub partition: Partition,
    pub is_critical: bool,
    pub is_bicritical: bool,
    pub is_weak_bicritical: bool,
    /// Order at most two, where bicriticality holds vacuously or trivially.
    pub degenerate: bool,
}

impl CriticalityProfile {
    pub fn compute(g: &Graph) -> Self {
        Self::compute_with(g, &Exact)
    }

    pub fn compute_with(g: &Graph, oracle: &dyn GammaOracle) -> Self {
        let alive = g.vertices();
        let gamma = oracle.gamma_within(g, alive);
        let gamma_after_delete: Vec<usize> = (0..g.order())
            .map(|x| oracle.gamma_within(g, alive.without(x)))
            .collect();
        let classes: Vec<VertexClass> = gamma_after_delete
            .iter()
            .map(|&after| VertexClass::from_gammas(gamma, after))
            .collect();
        let mut partition = Partition::default();
        for (x, class) in classes.iter().enumerate() {
            match class {
                VertexClass::Zero => partition.zero.insert(x),
                VertexClass::Plus => partition.plus.insert(x),
                VertexClass::Minus => partition.minus.insert(x),
            }
        }
        let is_critical = partition.minus == alive;
        let is_weak_bicritical = partition.plus.is_empty()
            && partition
                .zero
                .iter()
                .all(|x| critical_within(g, alive.without(x), oracle));
        CriticalityProfile {
            gamma,
            gamma_after_delete,
            classes,
            partition,
            is_critical,
            is_bicritical: bicritical_within(g, alive, gamma, oracle),
            is_weak_bicritical,
            degenerate: g.order() <= 2,
        }
    }
}

/// Whether the subgraph induced by `alive` is critical.
pub(crate) fn critical_within(g: &Graph, alive: VertexSet, oracle: &dyn GammaOracle) -> bool {
    let k = oracle.gamma_within(g, alive);
    alive
        .iter()
        .all(|x| oracle.gamma_within(g, alive.without(x)) < k)
}

fn bicritical_within(g: &Graph, alive: VertexSet, gamma: usize, oracle: &dyn GammaOracle) -> bool {
    let vs = alive.to_vec();
    vs.iter().enumerate().all(|(i, &x)| {
        vs[i + 1..]
            .iter()
            .all(|&y| oracle.gamma_within(g, alive.without(x).without(y)) < gamma)
    })
}

pub(crate) fn weak_bicritical_within(
    g: &Graph,
    alive: VertexSet,
    oracle: &dyn GammaOracle,
) -> bool {
    let k = oracle.gamma_within(g, alive);
    alive.iter().all(|x| {
        let rest = alive.without(x);
        match oracle.gamma_within(g, rest).cmp(&k) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => critical_within(g, rest, oracle),
        }
    })
}

pub fn classify_vertex(g: &Graph, x: usize) -> Result<VertexClass> {
    if x >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            order: g.order(),
        });
    }
    let alive = g.vertices();
    Ok(VertexClass::from_gammas(
        Exact.gamma_within(g, alive),
        Exact.gamma_within(g, alive.without(x)),
    ))
}

pub fn vertex_partition(g: &Graph) -> Partition {
    CriticalityProfile::compute(g).partition
}

/// Every vertex is critical (`V = V⁻`).
pub fn is_critical(g: &Graph) -> bool {
    critical_within(g, g.vertices(), &Exact)
}

pub fn is_k_critical(g: &Graph, k: usize) -> bool {
    Exact.gamma(g) == k && is_critical(g)
}

/// `γ(G - {x, y}) < γ(G)` for every pair of distinct vertices. Vacuously true
/// for order at most one.
pub fn is_bicritical(g: &Graph) -> bool {
    bicritical_within(g, g.vertices(), Exact.gamma(g), &Exact)
}

/// `V⁺ = ∅` and `G - x` is critical for every `x ∈ V⁰`.
pub fn is_weak_bicritical(g: &Graph) -> bool {
    weak_bicritical_within(g, g.vertices(), &Exact)
}

/// A diametrical vertex `x` and radius `j` such that some γ-set `S` has
/// `2·|S ∩ U_j| ≥ j + l`, where `U_j` is the ball of radius `j` around `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SufficientPair {
    pub x: usize,
    pub j: usize,
    pub l: usize,
    pub witness_set: VertexSet,
}

/// All l-sufficient pairs of a connected graph, ordered by `(x, j)`. The
/// witness is the first qualifying γ-set in lexicographic order.
pub fn find_sufficient_pairs(g: &Graph, l: usize, budget: u128) -> Result<Vec<SufficientPair>> {
    if l < 3 {
        return Err(Error::InvalidParameter(format!(
            "l must be at least 3, got {l}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gamma_sets = all_gamma_sets(g, budget)?;
    let mut out = Vec::new();
    for x in g.diametrical_vertices()? {
        let layers = g.bfs_layers(x);
        let mut ball = VertexSet::EMPTY;
        for (j, layer) in layers.iter().enumerate() {
            ball = ball.union(*layer);
            if j < 2 {
                continue;
            }
            if let Some(s) = gamma_sets
                .iter()
                .find(|s| 2 * s.intersection(ball).len() >= j + l)
            {
                out.push(SufficientPair {
                    x,
                    j,
                    l,
                    witness_set: *s,
                });
            }
        }
    }
    Ok(out)
}

/// Ordered pairs `(u, v)`, `u != v`, with `N[u] ⊆ N[v]`.
pub fn neighborhood_containment_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && g.closed_neighborhood(u).is_subset(g.closed_neighborhood(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{gamma, is_dominating_set, MemoizedGamma, DEFAULT_BUDGET};
    use crate::graph::coalesce;
    use proptest::prelude::*;

    // Independent oracles: γ by subset brute force, classes straight from the
    // definitions on explicitly relabeled subgraphs.
    fn brute_gamma(g: &Graph) -> usize {
        (0u64..1 << g.order())
            .filter(|&s| is_dominating_set(g, VertexSet(s)))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    fn brute_minus(g: &Graph) -> VertexSet {
        let k = brute_gamma(g);
        (0..g.order())
            .filter(|&x| brute_gamma(&g.delete_vertex(x).unwrap().graph) < k)
            .collect()
    }

    fn brute_critical(g: &Graph) -> bool {
        brute_minus(g) == g.vertices()
    }

    fn brute_weak_bicritical(g: &Graph) -> bool {
        let k = brute_gamma(g);
        (0..g.order()).all(|x| {
            let h = g.delete_vertex(x).unwrap().graph;
            let kh = brute_gamma(&h);
            kh < k || (kh == k && brute_critical(&h))
        })
    }

    fn graph_from_bits(n: usize, bits: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits >> (k % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    fn g22() -> Graph {
        let c4 = Graph::cycle(4).unwrap();
        coalesce(&c4, 2, &c4, 0).unwrap().graph
    }

    fn co(parts: &[Graph]) -> Graph {
        Graph::disjoint_union(parts).unwrap().complement()
    }

    #[test]
    fn classify_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!((0..4).all(|x| classify_vertex(&c4, x).unwrap() == VertexClass::Minus));
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(classify_vertex(&k2, 0).unwrap(), VertexClass::Zero);
        let star = Graph::star(3).unwrap();
        assert_eq!(brute_gamma(&star.delete_vertex(0).unwrap().graph), 3);
        assert_eq!(classify_vertex(&star, 0).unwrap(), VertexClass::Plus);
        assert!(classify_vertex(&star, 4).is_err());
    }

    #[test]
    fn critical_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_critical(&c4) && is_k_critical(&c4, 2));
        let p3 = Graph::path(3).unwrap();
        assert!(!is_critical(&p3));
        assert_eq!(classify_vertex(&p3, 1).unwrap(), VertexClass::Plus);
        assert!(is_k_critical(&g22(), 3));
        assert!(!is_k_critical(&g22(), 2));
        assert!(is_k_critical(&Graph::complete(1).unwrap(), 1));
    }

    #[test]
    fn bicritical_examples() {
        for n in 0..=2 {
            let p = CriticalityProfile::compute(&Graph::complete(n).unwrap());
            assert!(p.is_bicritical && p.degenerate);
        }
        assert!(!is_bicritical(&Graph::cycle(4).unwrap()));
        assert!(!is_bicritical(&Graph::complete(4).unwrap()));
    }

    #[test]
    fn weak_bicritical_examples() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let g = co(&[k2.clone(), k3]);
        assert_eq!(gamma(&g), 2);
        assert!(is_weak_bicritical(&g));
        assert!(!is_critical(&g));
        assert!(is_weak_bicritical(&Graph::cycle(4).unwrap()));
        assert!(is_weak_bicritical(&g22()));
        assert!(!is_weak_bicritical(&Graph::path(3).unwrap()));
        // the weak 1-bicritical graphs are K1 and K2
        assert!(is_weak_bicritical(&Graph::complete(1).unwrap()));
        assert!(is_weak_bicritical(&k2));
        assert!(!is_weak_bicritical(&Graph::complete(3).unwrap()));
    }

    #[test]
    fn profile_is_consistent() {
        let g = co(&[Graph::complete(2).unwrap(), Graph::path(3).unwrap()]);
        let p = CriticalityProfile::compute(&g);
        assert_eq!(p.gamma, 2);
        assert!(p.is_weak_bicritical && !p.is_critical && !p.is_bicritical);
        assert_eq!(p.partition.zero.len(), 2);
        let memo = MemoizedGamma::new();
        assert_eq!(CriticalityProfile::compute_with(&g, &memo), p);
    }

    #[test]
    fn sufficient_pair_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert!(find_sufficient_pairs(&k2, 3, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        let c4 = Graph::cycle(4).unwrap();
        assert!(find_sufficient_pairs(&c4, 3, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        assert!(find_sufficient_pairs(&c4, 2, DEFAULT_BUDGET).is_err());
        assert_eq!(
            find_sufficient_pairs(&Graph::empty(2).unwrap(), 3, DEFAULT_BUDGET),
            Err(Error::Disconnected)
        );
        // P7 has none: a γ-set (size 3) never packs enough vertices near an end.
        let p7 = Graph::path(7).unwrap();
        assert!(find_sufficient_pairs(&p7, 3, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        // Spider with three legs of length two: center 0, legs 0-i-(i+3).
        let spider =
            Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let pairs = find_sufficient_pairs(&spider, 3, DEFAULT_BUDGET).unwrap();
        let at_4: Vec<(usize, usize)> = pairs
            .iter()
            .filter(|p| p.x == 4)
            .map(|p| (p.x, p.j))
            .collect();
        // j = 4 would need 2·3 ≥ 7.
        assert_eq!(at_4, vec![(4, 3)]);
        for p in &pairs {
            let ball: VertexSet = (0..7)
                .filter(|&v| spider.distance(p.x, v).unwrap() <= p.j)
                .collect();
            assert!(2 * p.witness_set.intersection(ball).len() >= p.j + 3);
            assert!(is_dominating_set(&spider, p.witness_set));
        }
    }

    #[test]
    fn containment_examples() {
        assert_eq!(
            neighborhood_containment_pairs(&Graph::complete(3).unwrap()).len(),
            6
        );
        assert!(neighborhood_containment_pairs(&Graph::cycle(4).unwrap()).is_empty());
        assert_eq!(
            neighborhood_containment_pairs(&Graph::path(3).unwrap()),
            vec![(0, 1), (2, 1)]
        );
    }

    proptest! {
        #[test]
        fn predicates_match_definitions(n in 0usize..=7, bits in any::<u64>()) {
            let g = graph_from_bits(n, bits);
            let p = CriticalityProfile::compute(&g);
            prop_assert_eq!(p.partition.minus, brute_minus(&g));
            prop_assert_eq!(p.is_critical, brute_critical(&g));
            prop_assert_eq!(p.is_weak_bicritical, brute_weak_bicritical(&g));
            prop_assert_eq!(is_weak_bicritical(&g), p.is_weak_bicritical);
            prop_assert_eq!(is_bicritical(&g), p.is_bicritical);
            prop_assert_eq!(
                p.partition.zero.len() + p.partition.plus.len() + p.partition.minus.len(),
                n
            );
            if p.is_bicritical || p.is_critical {
                prop_assert!(p.is_weak_bicritical);
            }
            if p.is_weak_bicritical {
                prop_assert!(p.partition.plus.is_empty());
            }
            for x in p.partition.minus {
                prop_assert_eq!(p.gamma_after_delete[x] + 1, p.gamma);
            }
            for (_, v) in neighborhood_containment_pairs(&g) {
                prop_assert_ne!(p.classes[v], VertexClass::Minus);
            }
        }
    }
}
