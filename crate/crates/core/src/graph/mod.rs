//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`; each vertex stores its neighborhood as a [`VertexSet`]
//! bitset, so neighborhood algebra is a handful of word operations. Graphs are
//! immutable once built: every construction returns a new value.

mod blocks;
mod io;
mod iso;
mod metric;

use std::fmt;

use crate::error::{Error, Result, MAX_VERTICES};
use crate::vertex_set::VertexSet;

pub use blocks::BlockDecomposition;
pub use io::GraphFormat;
pub use iso::CanonicalForm;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Result of [`Graph::delete_vertices`]: the remaining induced subgraph plus
/// the original label of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the vertex of the parent graph that became vertex `i`.
    pub original: Vec<usize>,
}

/// `(H1 • H2)(x1, x2; x)`: the graph obtained by identifying `x1` and `x2`.
///
/// Vertices of `h1` keep their labels; vertices of `h2` other than `x2` are
/// appended in increasing order. The merged vertex therefore has label `x1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalescence {
    pub graph: Graph,
    pub merged_vertex: usize,
    pub map1: Vec<usize>,
    pub map2: Vec<usize>,
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor bitsets, validating symmetry,
    /// irreflexivity and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let full = VertexSet::full(n);
        for (u, &row) in adj.iter().enumerate() {
            if let Some(v) = row.difference(full).first() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if row.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            for v in row {
                if !adj[v].contains(u) {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = VertexSet::full(n);
        Ok(Graph {
            n,
            adj: (0..n).map(|v| full.without(v)).collect(),
        })
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs 3 vertices, got {n}"
            )));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    /// `s` disjoint copies of `h`.
    pub fn copies(h: &Graph, s: usize) -> Result<Self> {
        Graph::disjoint_union(&vec![h.clone(); s])
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    /// `G + uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| full.difference(self.adj[v]).without(v))
                .collect(),
        }
    }

    /// Block-diagonal union; part `j` is shifted by the total order of parts
    /// `0..j`.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let total: usize = parts.iter().map(|g| g.n).sum();
        check_order(total)?;
        let mut adj = Vec::with_capacity(total);
        let mut offset = 0;
        for g in parts {
            adj.extend(g.adj.iter().map(|row| VertexSet(row.0 << offset)));
            offset += g.n;
        }
        Ok(Graph { n: total, adj })
    }

    /// Induced subgraph on `V(G) \ xs`, relabeled order-preservingly.
    pub fn delete_vertices(&self, xs: VertexSet) -> Result<InducedSubgraph> {
        if let Some(v) = xs.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(self.induced(self.vertices().difference(xs)))
    }

    /// Induced subgraph on `keep`, relabeled order-preservingly.
    pub fn induced(&self, keep: VertexSet) -> InducedSubgraph {
        let keep = keep.intersection(self.vertices());
        let original = keep.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|w| index[w])
                    .collect()
            })
            .collect();
        InducedSubgraph {
            graph: Graph {
                n: original.len(),
                adj,
            },
            original,
        }
    }

    pub fn delete_vertex(&self, x: usize) -> Result<InducedSubgraph> {
        if x >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                order: self.n,
            });
        }
        self.delete_vertices(VertexSet::singleton(x))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if perm.iter().any(|&p| p >= self.n) || image.len() != self.n {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph { n: self.n, adj }
    }

    /// Pairs `u != v` with identical open neighborhoods or identical closed
    /// neighborhoods.
    pub fn twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u].without(v) == self.adj[v].without(u) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Identifies `x1 ∈ V(h1)` with `x2 ∈ V(h2)`.
pub fn coalesce(h1: &Graph, x1: usize, h2: &Graph, x2: usize) -> Result<Coalescence> {
    if x1 >= h1.n {
        return Err(Error::VertexOutOfRange {
            vertex: x1,
            order: h1.n,
        });
    }
    if x2 >= h2.n {
        return Err(Error::VertexOutOfRange {
            vertex: x2,
            order: h2.n,
        });
    }
    let n = h1.n + h2.n - 1;
    check_order(n)?;
    let map1: Vec<usize> = (0..h1.n).collect();
    let map2: Vec<usize> = (0..h2.n)
        .map(|v| match v.cmp(&x2) {
            std::cmp::Ordering::Less => h1.n + v,
            std::cmp::Ordering::Equal => x1,
            std::cmp::Ordering::Greater => h1.n + v - 1,
        })
        .collect();
    let mut g = Graph::empty(n)?;
    for (u, v) in h1.edges() {
        g.insert_edge(map1[u], map1[v])?;
    }
    for (u, v) in h2.edges() {
        g.insert_edge(map2[u], map2[v])?;
    }
    Ok(Coalescence {
        graph: g,
        merged_vertex: x1,
        map1,
        map2,
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k2() -> Graph {
        Graph::copies(&Graph::complete(2).unwrap(), 2).unwrap()
    }

    #[test]
    fn complete_graph_edge_counts() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(Graph::complete(3).unwrap().size(), 3);
        assert_eq!(Graph::complete(5).unwrap().size(), 10);
        assert_eq!(Graph::complete(64).unwrap().size(), 64 * 63 / 2);
        assert_eq!(Graph::complete(65), Err(Error::TooManyVertices(65)));
    }

    #[test]
    fn path_graphs() {
        assert_eq!(Graph::path(2).unwrap(), Graph::complete(2).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.degree(1), 2);
        assert!(Graph::path(65).is_err());
    }

    #[test]
    fn complement_examples() {
        let c4 = Graph::cycle(4).unwrap();
        // 2K2 = {01, 23}; its complement has edges 02, 03, 12, 13.
        let co = two_k2().complement();
        assert_eq!(
            co.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 3), (1, 2), (1, 3)]
        );
        assert!(co.is_isomorphic(&c4));
        let k3c = Graph::complete(3).unwrap().complement();
        assert_eq!((k3c.order(), k3c.size()), (3, 0));
    }

    #[test]
    fn union_examples() {
        let u = Graph::disjoint_union(&[]).unwrap();
        assert_eq!(u.order(), 0);
        let u = two_k2();
        assert_eq!((u.order(), u.size()), (4, 2));
        let c = Graph::copies(&Graph::complete(2).unwrap(), 3)
            .unwrap()
            .complement();
        assert!((0..6).all(|v| c.degree(v) == 4));
        let big = Graph::complete(40).unwrap();
        assert_eq!(
            Graph::disjoint_union(&[big.clone(), big]),
            Err(Error::TooManyVertices(80))
        );
    }

    #[test]
    fn delete_vertices_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let same = c4.delete_vertices(VertexSet::EMPTY).unwrap();
        assert_eq!(same.graph, c4);
        let p3 = Graph::path(3).unwrap();
        let d = p3.delete_vertex(0).unwrap();
        assert_eq!(d.graph, Graph::complete(2).unwrap());
        assert_eq!(d.original, vec![1, 2]);
        let d = c4.delete_vertices([0, 2].into_iter().collect()).unwrap();
        assert_eq!((d.graph.order(), d.graph.size()), (2, 0));
        assert_eq!(d.original, vec![1, 3]);
        assert!(c4.delete_vertex(4).is_err());
    }

    #[test]
    fn coalesce_examples() {
        let k2 = Graph::complete(2).unwrap();
        let c = coalesce(&k2, 1, &k2, 0).unwrap();
        assert!(c.graph.is_isomorphic(&Graph::path(3).unwrap()));
        assert_eq!(c.map2[0], c.merged_vertex);

        let c4 = Graph::cycle(4).unwrap();
        let c = coalesce(&c4, 2, &c4, 0).unwrap();
        assert_eq!(c.graph.order(), 7);
        assert_eq!(c.graph.size(), 8);
        assert_eq!(c.graph.degree(c.merged_vertex), 4);
        // two 4-cycles sharing exactly one vertex
        assert_eq!(c.graph.cut_vertices().unwrap(), VertexSet::singleton(2));
        for (u, v) in c4.edges() {
            assert!(c.graph.has_edge(c.map1[u], c.map1[v]));
            assert!(c.graph.has_edge(c.map2[u], c.map2[v]));
        }
    }

    #[test]
    fn from_adjacency_validates() {
        let bad = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(bad).is_err());
        let looped = vec![VertexSet::singleton(0)];
        assert_eq!(Graph::from_adjacency(looped), Err(Error::SelfLoop(0)));
        let ok = vec![VertexSet::singleton(1), VertexSet::singleton(0)];
        assert_eq!(
            Graph::from_adjacency(ok).unwrap(),
            Graph::complete(2).unwrap()
        );
    }

    #[test]
    fn twins_found() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.twins(), vec![(0, 2), (1, 3)]);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.twins().len(), 3);
        assert!(Graph::path(4).unwrap().twins().is_empty());
    }
}
