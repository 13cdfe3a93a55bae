//! Exact domination numbers and γ-set enumeration.
//!
//! The solver works on a vertex mask ("alive" vertices) so that `γ(G - X)` is
//! computed without building the induced subgraph. It splits the alive set
//! into components, and for each component runs a staged search: for
//! `k = ⌈n/(Δ+1)⌉, ...` it asks whether `k` vertices dominate, branching on
//! the lowest undominated vertex `v` over the candidates of `N[v]` in
//! increasing order, and pruning once `remaining × (Δ+1)` is smaller than the
//! number of undominated vertices.

use std::collections::HashMap;
use std::sync::RwLock;

use serde::Serialize;

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::{CanonicalForm, Graph};
use crate::vertex_set::VertexSet;

/// Default cap on the number of candidate sets `C(n, γ)` that
/// [`all_gamma_sets`] may examine.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub gamma: usize,
    pub witness: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_min_sets: Option<Vec<VertexSet>>,
}

pub fn is_dominating_set(g: &Graph, s: VertexSet) -> bool {
    dominated_by(g, s) == g.vertices()
}

/// `∪_{x ∈ s} N[x]`.
pub fn dominated_by(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().fold(VertexSet::EMPTY, |acc, x| {
        acc.union(g.closed_neighborhood(x))
    })
}

struct Stage<'a> {
    closed: &'a [VertexSet; MAX_VERTICES],
    reach: usize,
}

impl Stage<'_> {
    fn search(&self, undominated: VertexSet, remaining: usize, chosen: &mut VertexSet) -> bool {
        let Some(v) = undominated.first() else {
            return true;
        };
        if remaining * self.reach < undominated.len() {
            return false;
        }
        for c in self.closed[v] {
            chosen.insert(c);
            if self.search(
                undominated.difference(self.closed[c]),
                remaining - 1,
                chosen,
            ) {
                return true;
            }
            chosen.remove(c);
        }
        false
    }
}

fn solve_component(g: &Graph, comp: VertexSet) -> VertexSet {
    let mut closed = [VertexSet::EMPTY; MAX_VERTICES];
    let mut reach = 1;
    for v in comp {
        closed[v] = g.closed_neighborhood(v).intersection(comp);
        reach = reach.max(closed[v].len());
    }
    let stage = Stage {
        closed: &closed,
        reach,
    };
    let order = comp.len();
    for k in order.div_ceil(reach)..=order {
        let mut chosen = VertexSet::EMPTY;
        if stage.search(comp, k, &mut chosen) {
            return chosen;
        }
    }
    unreachable!("the whole component dominates itself")
}

/// A minimum dominating set of the subgraph induced by `alive`.
pub fn min_dominating_set_within(g: &Graph, alive: VertexSet) -> VertexSet {
    let mut rest = alive.intersection(g.vertices());
    let mut witness = VertexSet::EMPTY;
    while let Some(x) = rest.first() {
        let comp = g.component_within(x, rest);
        rest = rest.difference(comp);
        witness = witness.union(solve_component(g, comp));
    }
    witness
}

/// `γ` of the subgraph induced by `alive`.
pub fn gamma_within(g: &Graph, alive: VertexSet) -> usize {
    min_dominating_set_within(g, alive).len()
}

pub fn gamma(g: &Graph) -> usize {
    gamma_within(g, g.vertices())
}

/// γ with one witness set. `γ(empty graph) = 0`.
pub fn domination_number(g: &Graph) -> DominationResult {
    let witness = min_dominating_set_within(g, g.vertices());
    DominationResult {
        gamma: witness.len(),
        witness,
        all_min_sets: None,
    }
}

/// Like [`domination_number`] but also fills `all_min_sets`.
pub fn domination_number_with_sets(g: &Graph, budget: u128) -> Result<DominationResult> {
    let mut result = domination_number(g);
    result.all_min_sets = Some(all_gamma_sets_of_size(g, result.gamma, budget)?);
    Ok(result)
}

/// `γ(G - xs)`.
pub fn gamma_after_delete(g: &Graph, xs: VertexSet) -> Result<usize> {
    if let Some(v) = xs.difference(g.vertices()).first() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(gamma_within(g, g.vertices().difference(xs)))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Every γ-set of `g`, each as a set, in lexicographic order of the sorted
/// vertex lists. Refuses when `C(n, γ)` exceeds `budget`.
pub fn all_gamma_sets(g: &Graph, budget: u128) -> Result<Vec<VertexSet>> {
    all_gamma_sets_of_size(g, gamma(g), budget)
}

fn all_gamma_sets_of_size(g: &Graph, k: usize, budget: u128) -> Result<Vec<VertexSet>> {
    let needed = binomial(g.order(), k);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::new();
    let mut closed = [VertexSet::EMPTY; MAX_VERTICES];
    for v in 0..g.order() {
        closed[v] = g.closed_neighborhood(v);
    }
    combinations(
        &closed,
        g.order(),
        0,
        k,
        VertexSet::EMPTY,
        g.vertices(),
        &mut out,
    );
    Ok(out)
}

fn combinations(
    closed: &[VertexSet; MAX_VERTICES],
    n: usize,
    start: usize,
    remaining: usize,
    chosen: VertexSet,
    undominated: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if remaining == 0 {
        if undominated.is_empty() {
            out.push(chosen);
        }
        return;
    }
    // The lowest undominated vertex must still be reachable by a later pick.
    if let Some(v) = undominated.first() {
        let last_candidate = 63 - closed[v].bits().leading_zeros() as usize;
        if last_candidate < start {
            return;
        }
    }
    for c in start..=n - remaining {
        combinations(
            closed,
            n,
            c + 1,
            remaining - 1,
            chosen.with(c),
            undominated.difference(closed[c]),
            out,
        );
    }
}

/// A source of domination numbers for induced subgraphs.
pub trait GammaOracle: Sync {
    fn gamma_within(&self, g: &Graph, alive: VertexSet) -> usize;

    fn gamma(&self, g: &Graph) -> usize {
        self.gamma_within(g, g.vertices())
    }
}

/// Computes every query with the branch-and-bound solver.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exact;

impl GammaOracle for Exact {
    fn gamma_within(&self, g: &Graph, alive: VertexSet) -> usize {
        gamma_within(g, alive)
    }
}

/// Memo table keyed by canonical form. Lookups share a read lock; inserts
/// take the write lock.
#[derive(Debug, Default)]
pub struct MemoizedGamma {
    table: RwLock<HashMap<CanonicalForm, usize>>,
}

impl MemoizedGamma {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl GammaOracle for MemoizedGamma {
    fn gamma_within(&self, g: &Graph, alive: VertexSet) -> usize {
        let sub = g.induced(alive).graph;
        let key = sub.canonical_form();
        if let Some(&v) = self.table.read().expect("memo lock poisoned").get(&key) {
            return v;
        }
        let v = gamma(&sub);
        self.table
            .write()
            .expect("memo lock poisoned")
            .insert(key, v);
        v
    }
}
