//! Non-isomorphic graphs of small order.
//!
//! Order `n` representatives are generated from order `n - 1` ones by adding
//! a vertex with every possible neighborhood and keeping one graph per
//! canonical form. Every connected graph has a vertex whose removal leaves it
//! connected, so the connected-only variant extends connected parents by a
//! vertex with a nonempty neighborhood.

use std::collections::BTreeSet;

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::{CanonicalForm, Graph};
use crate::parallel::Execution;
use crate::vertex_set::VertexSet;

/// Largest order [`graphs_by_order`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 10;

fn children(parent: &Graph, connected_only: bool) -> Vec<CanonicalForm> {
    let n = parent.order();
    let mut adj = parent.adjacency().to_vec();
    adj.push(VertexSet::EMPTY);
    let first = if connected_only && n > 0 { 1 } else { 0 };
    let mut out = BTreeSet::new();
    for mask in first..1u64 << n {
        let nb = VertexSet(mask);
        let mut rows = adj.clone();
        for v in nb {
            rows[v].insert(n);
        }
        rows[n] = nb;
        let child = Graph::from_adjacency(rows).expect("valid extension");
        out.insert(child.canonical_form());
    }
    out.into_iter().collect()
}

fn extend(level: &[Graph], connected_only: bool, exec: Execution) -> Vec<Graph> {
    let forms: BTreeSet<CanonicalForm> = exec
        .flat_map(level, |g| children(g, connected_only))
        .into_iter()
        .collect();
    forms.iter().map(CanonicalForm::to_graph).collect()
}

/// Non-isomorphic graphs of every order `0..=n_max`, each level sorted by
/// canonical form and stored in canonical labeling.
pub fn graphs_by_order(
    n_max: usize,
    connected_only: bool,
    exec: Execution,
) -> Result<Vec<Vec<Graph>>> {
    if n_max > MAX_ENUMERATION_ORDER.min(MAX_VERTICES) {
        return Err(Error::OrderCapExceeded {
            requested: n_max,
            cap: MAX_ENUMERATION_ORDER,
        });
    }
    let mut levels = vec![vec![Graph::empty(0)?]];
    for _ in 1..=n_max {
        let next = extend(levels.last().expect("nonempty"), connected_only, exec);
        levels.push(next);
    }
    Ok(levels)
}

/// Non-isomorphic graphs of order exactly `n`.
pub fn graphs_of_order(n: usize, connected_only: bool, exec: Execution) -> Result<Vec<Graph>> {
    Ok(graphs_by_order(n, connected_only, exec)?
        .pop()
        .unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    // Burnside: the number of graphs on n vertices is the average, over all
    // permutations of the vertices, of 2^(number of cycles induced on
    // unordered pairs).
    fn burnside_count(n: usize) -> u128 {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let index = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            pairs.iter().position(|&p| p == (a, b)).unwrap()
        };
        let perms = permutations(n);
        let mut total = 0u128;
        for p in &perms {
            let mut seen = vec![false; pairs.len()];
            let mut cycles = 0;
            for s in 0..pairs.len() {
                if seen[s] {
                    continue;
                }
                cycles += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    let (a, b) = pairs[t];
                    t = index(p[a], p[b]);
                }
            }
            total += 1u128 << cycles;
        }
        total / perms.len() as u128
    }

    // Connected counts from total counts via the inverse Euler transform.
    fn connected_from_totals(totals: &[i128]) -> Vec<i128> {
        let n = totals.len() - 1;
        let mut c = vec![0i128; n + 1];
        let mut b = vec![0i128; n + 1];
        for k in 1..=n {
            let mut s = k as i128 * totals[k];
            for i in 1..k {
                s -= b[i] * totals[k - i];
            }
            b[k] = s;
            let mut sum = 0;
            for d in 1..k {
                if k % d == 0 {
                    sum += d as i128 * c[d];
                }
            }
            c[k] = (b[k] - sum) / k as i128;
        }
        c
    }

    #[test]
    fn oracle_counts_are_the_known_ones() {
        let counts: Vec<u128> = (1..=7).map(burnside_count).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
        let mut totals = vec![1i128];
        totals.extend(counts.iter().map(|&c| c as i128));
        let connected = connected_from_totals(&totals);
        assert_eq!(&connected[1..], &[1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn enumeration_matches_burnside() {
        let levels = graphs_by_order(7, false, Execution::Parallel).unwrap();
        for n in 1..=7 {
            assert_eq!(levels[n].len() as u128, burnside_count(n), "order {n}");
        }
    }

    #[test]
    fn connected_enumeration_matches_euler_transform() {
        let all = graphs_by_order(7, false, Execution::Sequential).unwrap();
        let conn = graphs_by_order(7, true, Execution::Sequential).unwrap();
        let totals: Vec<i128> = all.iter().map(|l| l.len() as i128).collect();
        let expected = connected_from_totals(&totals);
        for n in 1..=7 {
            assert_eq!(conn[n].len() as i128, expected[n]);
            assert!(conn[n].iter().all(Graph::is_connected));
            let filtered = all[n].iter().filter(|g| g.is_connected()).count();
            assert_eq!(filtered, conn[n].len());
        }
    }

    #[test]
    fn rejects_large_orders() {
        assert!(graphs_by_order(11, false, Execution::Sequential).is_err());
    }
}
