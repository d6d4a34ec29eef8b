//! Standard named graphs and their recognition.
//!
//! Canonical ASCII names: `K4`, `K1,3`, `C5`, `P2`, and disjoint unions with
//! a multiplicity prefix joined by `+`, e.g. `K3+4K1`. `P_n` has n edges and
//! `C_n` has n vertices (path/cycle length conventions), so `P1` is a single
//! edge and `K̄_n` is written `nK1`.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::bipartition;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::new(m + n);
    for u in 0..m {
        for v in 0..n {
            g.add_edge(u, m + v);
        }
    }
    g
}

/// Cycle with n vertices (and n edges), n ≥ 3.
pub fn cycle_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        g.add_edge(u, (u + 1) % n);
    }
    g
}

/// Path with n edges (n + 1 vertices); P_0 is a single vertex.
pub fn path_graph(edges: usize) -> Graph {
    let mut g = Graph::new(edges + 1);
    for u in 0..edges {
        g.add_edge(u, u + 1);
    }
    g
}

/// Parses a canonical name into the standard graph.
pub fn named_graph(name: &str) -> Result<Graph> {
    let name = name.trim();
    if name.is_empty() {
        return Err(Error::Parse("empty graph name".into()));
    }
    let mut graph: Option<Graph> = None;
    for part in name.split('+') {
        let part_graph = parse_part(part.trim(), name)?;
        graph = Some(match graph {
            None => part_graph,
            Some(acc) => acc.disjoint_union(&part_graph),
        });
    }
    Ok(graph.unwrap())
}

fn parse_part(part: &str, whole: &str) -> Result<Graph> {
    let err = |msg: String| Error::Parse(format!("{msg} in graph name {whole:?}"));
    let split = part
        .find(|c: char| !c.is_ascii_digit())
        .ok_or_else(|| err(format!("part {part:?} has no graph kind")))?;
    let count: usize = if split == 0 {
        1
    } else {
        part[..split]
            .parse()
            .map_err(|_| err(format!("bad multiplicity in {part:?}")))?
    };
    if count == 0 {
        return Err(err(format!("zero multiplicity in {part:?}")));
    }
    let kind = &part[split..split + 1];
    let args = &part[split + 1..];
    let one = match kind {
        "K" => {
            if let Some((ms, ns)) = args.split_once(',') {
                let m: usize = ms
                    .parse()
                    .map_err(|_| err(format!("bad size in {part:?}")))?;
                let n: usize = ns
                    .parse()
                    .map_err(|_| err(format!("bad size in {part:?}")))?;
                if m == 0 || n == 0 {
                    return Err(err(format!("K_{{m,n}} needs m, n >= 1 in {part:?}")));
                }
                complete_bipartite(m, n)
            } else {
                let n: usize = args
                    .parse()
                    .map_err(|_| err(format!("bad size in {part:?}")))?;
                if n == 0 {
                    return Err(err(format!("K_n needs n >= 1 in {part:?}")));
                }
                complete(n)
            }
        }
        "C" => {
            let n: usize = args
                .parse()
                .map_err(|_| err(format!("bad size in {part:?}")))?;
            if n < 3 {
                return Err(err(format!("C_n needs n >= 3 in {part:?}")));
            }
            cycle_graph(n)
        }
        "P" => {
            let n: usize = args
                .parse()
                .map_err(|_| err(format!("bad size in {part:?}")))?;
            path_graph(n)
        }
        other => return Err(err(format!("unknown graph kind {other:?}"))),
    };
    let mut acc = one.clone();
    for _ in 1..count {
        acc = acc.disjoint_union(&one);
    }
    Ok(acc)
}

/// Names a connected graph when it is complete, complete bipartite, a cycle
/// or a path; completeness takes precedence (K_3 over C_3, K_2 over P_1).
fn name_component(g: &Graph) -> Option<String> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 1 {
        return Some("K1".into());
    }
    if m == n * (n - 1) / 2 {
        return Some(format!("K{n}"));
    }
    if let Some(color) = bipartition(g) {
        let a = color.iter().filter(|&&c| c == 0).count();
        let b = n - a;
        if a * b == m && a >= 1 && b >= 1 {
            // bipartite with every cross pair joined
            let full =
                (0..n).all(|u| (0..n).all(|v| u == v || color[u] == color[v] || g.has_edge(u, v)));
            if full {
                return Some(format!("K{},{}", a.min(b), a.max(b)));
            }
        }
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if n >= 3 && m == n && degrees.iter().all(|&d| d == 2) {
        return Some(format!("C{n}"));
    }
    if m == n - 1 {
        let ones = degrees.iter().filter(|&&d| d == 1).count();
        let twos = degrees.iter().filter(|&&d| d == 2).count();
        if ones == 2 && twos == n - 2 {
            return Some(format!("P{m}"));
        }
    }
    None
}

/// Canonical name of a graph whose components are all recognizable;
/// components sorted by (size descending, name), with multiplicity prefixes.
pub fn recognize(g: &Graph) -> Option<String> {
    let (ncomp, comp) = g.components();
    let mut parts: Vec<(usize, String)> = Vec::new();
    for c in 0..ncomp {
        let verts: Vec<usize> = (0..g.vertex_count()).filter(|&v| comp[v] == c).collect();
        let sub = g.induced(&verts);
        parts.push((verts.len(), name_component(&sub)?));
    }
    parts.sort_by(|a, b| (std::cmp::Reverse(a.0), &a.1).cmp(&(std::cmp::Reverse(b.0), &b.1)));
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j].1 == parts[i].1 {
            j += 1;
        }
        let count = j - i;
        if count == 1 {
            out.push(parts[i].1.clone());
        } else {
            out.push(format!("{count}{}", parts[i].1));
        }
        i = j;
    }
    Some(out.join("+"))
}
