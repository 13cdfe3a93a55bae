//! Isomorphism testing and canonical forms.
//!
//! The canonical form is found by individualization and refinement: the
//! vertex partition is refined to an equitable one (splitting cells by the
//! number of neighbors in each other cell, in an order that depends only on
//! the partition), a vertex of the first non-trivial cell is individualized,
//! and the search recurses. Each discrete partition is a relabeling; the
//! canonical form is the relabeled graph with the lexicographically smallest
//! column-major upper-triangle bit string. Vertices that are twins of an
//! already-tried vertex in the same cell lead to identical subtrees and are
//! skipped.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::vertex_set::VertexSet;

/// graph6 encoding of the canonical relabeling; equal iff the graphs are
/// isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_graph6(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Splits cells until every cell is equitable with respect to every other.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    let mut counts = [0u32; 64];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut t = 0;
            while t < cells.len() {
                let cell = cells[t];
                if cell.len() == 1 {
                    t += 1;
                    continue;
                }
                let mut lo = u32::MAX;
                let mut hi = 0;
                for v in cell {
                    let c = g.adj[v].intersection(splitter).len() as u32;
                    counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    t += 1;
                    continue;
                }
                let mut keys: Vec<u32> = cell.iter().map(|v| counts[v]).collect();
                keys.sort_unstable();
                keys.dedup();
                let pieces: Vec<VertexSet> = keys
                    .iter()
                    .map(|&k| cell.iter().filter(|&v| counts[v] == k).collect())
                    .collect();
                let added = pieces.len();
                cells.splice(t..=t, pieces);
                t += added;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best_key: Vec<u64>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn leaf_key(&self, cells: &[VertexSet]) -> (Vec<u64>, Vec<usize>) {
        let n = self.g.n;
        let mut perm = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell.first().expect("discrete partition")] = pos;
        }
        let mut rows = vec![0u64; n];
        for (v, &pv) in perm.iter().enumerate() {
            for w in self.g.adj[v] {
                rows[pv] |= 1u64 << perm[w];
            }
        }
        let key = rows
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                let below = if i == 0 { 0 } else { r & ((1u64 << i) - 1) };
                below.reverse_bits()
            })
            .collect();
        (key, perm)
    }

    fn visit(&mut self, mut cells: Vec<VertexSet>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let (key, perm) = self.leaf_key(&cells);
            if self.best_perm.is_empty() || key < self.best_key {
                self.best_key = key;
                self.best_perm = perm;
            }
            return;
        };
        let cell = cells[target];
        let mut tried = VertexSet::EMPTY;
        for v in cell {
            let twin_of_tried = tried
                .iter()
                .any(|u| self.g.adj[u].without(v) == self.g.adj[v].without(u));
            if twin_of_tried {
                continue;
            }
            tried.insert(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(VertexSet::singleton(v));
            next.push(cell.without(v));
            next.extend_from_slice(&cells[target + 1..]);
            self.visit(next);
        }
    }
}

impl Graph {
    /// A permutation `perm` (vertex `v` goes to `perm[v]`) such that the
    /// relabeled graph is the canonical representative.
    pub fn canonical_labeling(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut search = Search {
            g: self,
            best_key: Vec::new(),
            best_perm: Vec::new(),
        };
        search.visit(vec![self.vertices()]);
        search.best_perm
    }

    pub fn canonical_graph(&self) -> Graph {
        self.relabel_unchecked(&self.canonical_labeling())
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        CanonicalForm(self.canonical_graph().to_graph6())
    }

    /// Backtracking search for an isomorphism, matching vertices with equal
    /// degree and equal multiset of neighbor degrees.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// An isomorphism `phi` with `uv ∈ E(self) ⇔ phi[u]phi[v] ∈ E(other)`.
    pub fn isomorphism_to(&self, other: &Graph) -> Option<Vec<usize>> {
        if self.n != other.n || self.size() != other.size() {
            return None;
        }
        let sig = |g: &Graph| -> Vec<(usize, Vec<usize>)> {
            (0..g.n)
                .map(|v| {
                    let mut nd: Vec<usize> = g.adj[v].iter().map(|w| g.degree(w)).collect();
                    nd.sort_unstable();
                    (g.degree(v), nd)
                })
                .collect()
        };
        let (sa, sb) = (sig(self), sig(other));
        let mut ma = sa.clone();
        let mut mb = sb.clone();
        ma.sort();
        mb.sort();
        if ma != mb {
            return None;
        }
        // Visit vertices of `self` in BFS order so each new vertex is tied to
        // already-mapped neighbors.
        let mut order = Vec::with_capacity(self.n);
        let mut seen = VertexSet::EMPTY;
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            for layer in self.bfs_layers(root) {
                order.extend(layer.iter());
                seen = seen.union(layer);
            }
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = VertexSet::EMPTY;
        if self.extend_iso(other, &order, 0, &sa, &sb, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        &self,
        other: &Graph,
        order: &[usize],
        depth: usize,
        sa: &[(usize, Vec<usize>)],
        sb: &[(usize, Vec<usize>)],
        map: &mut [usize],
        used: &mut VertexSet,
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for w in other.vertices().difference(*used) {
            if sa[v] != sb[w] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| self.has_edge(u, v) == other.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used.insert(w);
            if self.extend_iso(other, order, depth + 1, sa, sb, map, used) {
                return true;
            }
            used.remove(w);
            map[v] = usize::MAX;
        }
        false
    }
}
