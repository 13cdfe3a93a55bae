//! Brute-force reference implementations used to cross-check the library.
#![allow(dead_code)]

use domcrit::Graph;

/// Closed neighborhoods as plain bit masks.
pub struct Oracle {
    pub n: usize,
    closed: Vec<u64>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let closed = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v == u || g.has_edge(u, v))
                    .fold(0u64, |m, v| m | 1 << v)
            })
            .collect();
        Oracle { n, closed }
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn dominates(&self, set: u64, alive: u64) -> bool {
        let mut covered = 0;
        for v in 0..self.n {
            if set >> v & 1 == 1 {
                covered |= self.closed[v];
            }
        }
        covered & alive == alive
    }

    fn search(&self, verts: &[usize], start: usize, left: usize, set: u64, alive: u64) -> bool {
        if left == 0 {
            return self.dominates(set, alive);
        }
        (start..verts.len())
            .any(|i| self.search(verts, i + 1, left - 1, set | 1 << verts[i], alive))
    }

    /// Smallest k such that some k-subset of `alive` dominates `alive`.
    pub fn gamma(&self, alive: u64) -> usize {
        let verts: Vec<usize> = (0..self.n).filter(|&v| alive >> v & 1 == 1).collect();
        (0..=verts.len())
            .find(|&k| self.search(&verts, 0, k, 0, alive))
            .expect("the whole set dominates")
    }

    /// Every dominating set of size `k` inside `alive`.
    pub fn dominating_sets_of_size(&self, alive: u64, k: usize) -> Vec<u64> {
        let verts: Vec<usize> = (0..self.n).filter(|&v| alive >> v & 1 == 1).collect();
        let mut out = Vec::new();
        fn rec(
            o: &Oracle,
            verts: &[usize],
            start: usize,
            left: usize,
            set: u64,
            alive: u64,
            out: &mut Vec<u64>,
        ) {
            if left == 0 {
                if o.dominates(set, alive) {
                    out.push(set);
                }
                return;
            }
            for i in start..verts.len() {
                rec(o, verts, i + 1, left - 1, set | 1 << verts[i], alive, out);
            }
        }
        rec(self, &verts, 0, k, 0, alive, &mut out);
        out
    }

    pub fn critical_vertices(&self, alive: u64) -> u64 {
        let k = self.gamma(alive);
        (0..self.n)
            .filter(|&x| alive >> x & 1 == 1 && self.gamma(alive & !(1 << x)) < k)
            .fold(0, |m, x| m | 1 << x)
    }

    pub fn is_critical(&self, alive: u64) -> bool {
        self.critical_vertices(alive) == alive
    }

    pub fn is_bicritical(&self, alive: u64) -> bool {
        let k = self.gamma(alive);
        (0..self.n).all(|x| {
            (x + 1..self.n).all(|y| {
                alive >> x & 1 == 0
                    || alive >> y & 1 == 0
                    || self.gamma(alive & !(1 << x) & !(1 << y)) < k
            })
        })
    }

    /// No vertex raises γ when deleted, and deleting any vertex that keeps γ
    /// leaves a critical graph.
    pub fn is_weak_bicritical(&self, alive: u64) -> bool {
        let k = self.gamma(alive);
        (0..self.n).filter(|&x| alive >> x & 1 == 1).all(|x| {
            let rest = alive & !(1 << x);
            let after = self.gamma(rest);
            after < k || (after == k && self.is_critical(rest))
        })
    }

    /// All-pairs distances; `usize::MAX` for unreachable pairs.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut d = vec![vec![usize::MAX; n]; n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    d[u][v] = 0;
                } else if self.closed[u] >> v & 1 == 1 {
                    d[u][v] = 1;
                }
            }
        }
        for w in 0..n {
            for u in 0..n {
                for v in 0..n {
                    if d[u][w] != usize::MAX && d[w][v] != usize::MAX {
                        d[u][v] = d[u][v].min(d[u][w] + d[w][v]);
                    }
                }
            }
        }
        d
    }

    /// `None` when disconnected; 0 for graphs with at most one vertex.
    pub fn diameter(&self) -> Option<usize> {
        let d = self.distances();
        let mut best = 0;
        for row in &d {
            for &x in row {
                if x == usize::MAX {
                    return None;
                }
                best = best.max(x);
            }
        }
        Some(best)
    }
}

/// `(H1 • H2)(x1, x2)`: `h1` keeps its labels, `x2` becomes `x1`, and the
/// other vertices of `h2` follow in increasing order. Returns the graph and
/// the image of each `h2` vertex.
pub fn glue(h1: &Graph, x1: usize, h2: &Graph, x2: usize) -> (Graph, Vec<usize>) {
    let n1 = h1.order();
    let mut map2 = Vec::with_capacity(h2.order());
    let mut next = n1;
    for v in 0..h2.order() {
        if v == x2 {
            map2.push(x1);
        } else {
            map2.push(next);
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..n1 {
        for v in u + 1..n1 {
            if h1.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    for u in 0..h2.order() {
        for v in u + 1..h2.order() {
            if h2.has_edge(u, v) {
                edges.push((map2[u], map2[v]));
            }
        }
    }
    (Graph::from_edges(next, edges).unwrap(), map2)
}

/// Number of non-isomorphic graphs on `n` vertices by Burnside's lemma:
/// the average over all vertex permutations of `2^(orbits on pairs)`.
pub fn burnside_graph_count(n: usize) -> u128 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let all = perms(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| {
        pairs
            .iter()
            .position(|&p| p == (u.min(v), u.max(v)))
            .unwrap()
    };
    let mut total: u128 = 0;
    for p in &all {
        let mut seen = vec![false; pairs.len()];
        let mut orbits = 0;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                let (u, v) = pairs[cur];
                cur = index(p[u], p[v]);
            }
        }
        total += 1u128 << orbits;
    }
    total / all.len() as u128
}
