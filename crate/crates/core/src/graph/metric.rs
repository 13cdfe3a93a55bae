use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

impl Graph {
    /// BFS layers from `x`: `layers[i]` is `N^(i)(x)`. Stops at the last
    /// nonempty layer, so `layers.len() - 1` is the eccentricity of `x`
    /// within its component.
    pub fn bfs_layers(&self, x: usize) -> Vec<VertexSet> {
        assert!(x < self.n, "vertex {x} out of range");
        let mut seen = VertexSet::singleton(x);
        let mut frontier = seen;
        let mut layers = vec![frontier];
        loop {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            next = next.difference(seen);
            if next.is_empty() {
                return layers;
            }
            seen = seen.union(next);
            layers.push(next);
            frontier = next;
        }
    }

    /// `N^(i)(x)`, the vertices at distance exactly `i` from `x`.
    pub fn distance_layer(&self, x: usize, i: usize) -> VertexSet {
        self.bfs_layers(x).get(i).copied().unwrap_or_default()
    }

    /// Shortest-path distance; `None` when `u` and `v` lie in different
    /// components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(v < self.n, "vertex {v} out of range");
        self.bfs_layers(u)
            .iter()
            .position(|layer| layer.contains(v))
    }

    /// Maximum distance from `x`; `None` if some vertex is unreachable.
    pub fn eccentricity(&self, x: usize) -> Option<usize> {
        let layers = self.bfs_layers(x);
        let reached = layers.iter().fold(VertexSet::EMPTY, |acc, l| acc.union(*l));
        (reached == self.vertices()).then(|| layers.len() - 1)
    }

    /// `None` for disconnected graphs, `Some(0)` for order at most one.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for x in 0..self.n {
            best = best.max(self.eccentricity(x)?);
        }
        Some(best)
    }

    /// Vertices whose eccentricity equals the diameter.
    pub fn diametrical_vertices(&self) -> Result<VertexSet> {
        let ecc: Vec<usize> = (0..self.n)
            .map(|x| self.eccentricity(x).ok_or(Error::Disconnected))
            .collect::<Result<_>>()?;
        let diam = ecc.iter().copied().max().unwrap_or(0);
        Ok((0..self.n).filter(|&x| ecc[x] == diam).collect())
    }

    /// Vertex set of the component containing `x`.
    pub fn component_of(&self, x: usize) -> VertexSet {
        self.component_within(x, self.vertices())
    }

    /// Component of `x` in the subgraph induced by `alive`.
    pub(crate) fn component_within(&self, x: usize, alive: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(x);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(alive).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(x) = rest.first() {
            let c = self.component_within(x, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// The empty graph and `K1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == self.vertices()
    }
}
