//! Exact graph isomorphism by backtracking with degree-sequence and
//! neighborhood-degree-multiset pruning. Returns a certifying bijection.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ISO_VERTICES: usize = 256;

/// Degree of each vertex plus the sorted multiset of its neighbors' degrees;
/// invariant under isomorphism, used both for rejection and candidate
/// filtering.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).into_iter().map(|u| degrees[u]).collect();
            nd.sort_unstable();
            (degrees[v], nd)
        })
        .collect()
}

/// Decides isomorphism; `Some(mapping)` sends vertices of `a` to vertices
/// of `b` preserving both edges and non-edges.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    let n = a.vertex_count();
    if n.max(b.vertex_count()) > MAX_ISO_VERTICES {
        return Err(Error::SizeLimit {
            what: "graph vertices for isomorphism testing",
            got: n.max(b.vertex_count()),
            cap: MAX_ISO_VERTICES,
        });
    }
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    // Map vertices of a in descending-degree order; candidates must carry
    // the same signature and be adjacency-consistent with what is mapped.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(sig_a[v].0), v));
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(a, b, &sig_a, &sig_b, &order, 0, &mut mapping, &mut used) {
        debug_assert!(verify(a, b, &mapping));
        Ok(Some(mapping))
    } else {
        Ok(None)
    }
}

fn backtrack(
    a: &Graph,
    b: &Graph,
    sig_a: &[(usize, Vec<usize>)],
    sig_b: &[(usize, Vec<usize>)],
    order: &[usize],
    k: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let u = order[k];
    'cand: for v in 0..b.vertex_count() {
        if used[v] || sig_b[v] != sig_a[u] {
            continue;
        }
        for &prev in &order[..k] {
            if a.has_edge(u, prev) != b.has_edge(v, mapping[prev]) {
                continue 'cand;
            }
        }
        mapping[u] = v;
        used[v] = true;
        if backtrack(a, b, sig_a, sig_b, order, k + 1, mapping, used) {
            return true;
        }
        mapping[u] = usize::MAX;
        used[v] = false;
    }
    false
}

fn verify(a: &Graph, b: &Graph, mapping: &[usize]) -> bool {
    let n = a.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            if a.has_edge(u, v) != b.has_edge(mapping[u], mapping[v]) {
                return false;
            }
        }
    }
    true
}
