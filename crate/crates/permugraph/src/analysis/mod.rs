//! Exact deciders for the full catalog of graph properties the
//! classification statements use, plus isomorphism and named-graph
//! recognition.

mod iso;
mod named;
mod planar;

pub use iso::{is_isomorphic, MAX_ISO_VERTICES};
pub use named::{complete, complete_bipartite, cycle_graph, named_graph, path_graph, recognize};
pub use planar::is_planar;

use std::fmt;

use serde::ser::Serializer;
use serde::Serialize;

use crate::graph::Graph;

/// A possibly-infinite graph measure (diameter, girth). The infinite case is
/// an explicit tagged value, never a sentinel number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extent {
    Finite(u32),
    Infinite,
}

impl Extent {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extent::Finite(_))
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(n) => write!(f, "{n}"),
            Extent::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(n) => s.serialize_u32(*n),
            Extent::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// The full vector of graph-property verdicts for one graph.
///
/// Degenerate conventions, fixed once here: a single-vertex graph is
/// connected, totally disconnected, a tree, the path P_0, a star (K_{1,0})
/// and complete bipartite; it is not a cycle. `unicyclic` means cyclomatic
/// number |E| - |V| + #components = 1 over the whole, possibly disconnected,
/// graph — connectivity is not required.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub connected: bool,
    pub diameter: Extent,
    pub girth: Extent,
    pub bipartite: bool,
    pub complete: bool,
    pub complete_bipartite: bool,
    pub tree: bool,
    pub star: bool,
    /// Edge count when the graph is a path; P_0 is the single vertex.
    pub path: Option<u32>,
    /// Length when the graph is a cycle C_n (n = |V| = |E| ≥ 3).
    pub cycle: Option<u32>,
    pub regular: bool,
    pub regular_degree: Option<u32>,
    pub totally_disconnected: bool,
    pub triangle_free: bool,
    /// No *induced* K_{1,3}. Complete graphs are claw-free.
    pub claw_free: bool,
    pub unicyclic: bool,
    pub planar: bool,
    pub recognized_name: Option<String>,
}

impl AnalysisReport {
    /// Text rendering, field names mirroring the JSON one-to-one.
    pub fn to_text(&self) -> String {
        fn opt<T: fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "none".into(), T::to_string)
        }
        let mut s = String::new();
        s.push_str(&format!("connected: {}\n", self.connected));
        s.push_str(&format!("diameter: {}\n", self.diameter));
        s.push_str(&format!("girth: {}\n", self.girth));
        s.push_str(&format!("bipartite: {}\n", self.bipartite));
        s.push_str(&format!("complete: {}\n", self.complete));
        s.push_str(&format!(
            "complete_bipartite: {}\n",
            self.complete_bipartite
        ));
        s.push_str(&format!("tree: {}\n", self.tree));
        s.push_str(&format!("star: {}\n", self.star));
        s.push_str(&format!("path: {}\n", opt(&self.path)));
        s.push_str(&format!("cycle: {}\n", opt(&self.cycle)));
        s.push_str(&format!("regular: {}\n", self.regular));
        s.push_str(&format!("regular_degree: {}\n", opt(&self.regular_degree)));
        s.push_str(&format!(
            "totally_disconnected: {}\n",
            self.totally_disconnected
        ));
        s.push_str(&format!("triangle_free: {}\n", self.triangle_free));
        s.push_str(&format!("claw_free: {}\n", self.claw_free));
        s.push_str(&format!("unicyclic: {}\n", self.unicyclic));
        s.push_str(&format!("planar: {}\n", self.planar));
        s.push_str(&format!(
            "recognized_name: {}\n",
            opt(&self.recognized_name)
        ));
        s
    }
}

/// Computes every report field exactly.
pub fn analyze(g: &Graph) -> AnalysisReport {
    let n = g.vertex_count();
    assert!(n >= 1, "analyze needs at least one vertex");
    let m = g.edge_count();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let (ncomp, _) = g.components();
    let connected = ncomp == 1;

    // All-pairs BFS for the diameter.
    let diameter = if !connected {
        Extent::Infinite
    } else {
        let mut d = 0;
        for v in 0..n {
            for dist in g.bfs_distances(v).into_iter().flatten() {
                d = d.max(dist);
            }
        }
        Extent::Finite(d)
    };

    let girth = girth(g);
    let bipartite = bipartition(g).is_some();
    let complete = m == n * (n - 1) / 2;
    let complete_bipartite = is_complete_bipartite(g);
    let tree = connected && m == n - 1;
    let star = (0..n).any(|c| degrees[c] == n - 1 && (0..n).all(|v| v == c || degrees[v] == 1));
    let path = if n == 1 {
        Some(0)
    } else if connected && m == n - 1 {
        let ones = degrees.iter().filter(|&&d| d == 1).count();
        let twos = degrees.iter().filter(|&&d| d == 2).count();
        (ones == 2 && twos == n - 2).then_some(m as u32)
    } else {
        None
    };
    let cycle = (n >= 3 && connected && degrees.iter().all(|&d| d == 2)).then_some(n as u32);
    let regular = degrees.windows(2).all(|w| w[0] == w[1]);
    let regular_degree = regular.then_some(degrees[0] as u32);
    let totally_disconnected = m == 0;
    let triangle_free = !has_triangle(g);
    let claw_free = !has_induced_claw(g);
    let unicyclic = m + ncomp == n + 1;
    let planar = is_planar(g);
    let recognized_name = recognize(g);

    AnalysisReport {
        connected,
        diameter,
        girth,
        bipartite,
        complete,
        complete_bipartite,
        tree,
        star,
        path,
        cycle,
        regular,
        regular_degree,
        totally_disconnected,
        triangle_free,
        claw_free,
        unicyclic,
        planar,
        recognized_name,
    }
}

/// Shortest cycle length via per-vertex BFS: for every non-tree edge (x, y)
/// reached from the root, dist(x) + dist(y) + 1 bounds a cycle, and the bound
/// is attained when the root lies on a shortest cycle.
pub fn girth(g: &Graph) -> Extent {
    let n = g.vertex_count();
    let mut best: Option<u32> = None;
    for root in 0..n {
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        for (x, y) in g.edges() {
            if dist[x] == u32::MAX || dist[y] == u32::MAX {
                continue;
            }
            if parent[x] == y || parent[y] == x {
                continue;
            }
            let c = dist[x] + dist[y] + 1;
            best = Some(best.map_or(c, |b| b.min(c)));
        }
    }
    best.map_or(Extent::Infinite, Extent::Finite)
}

/// 2-coloring by BFS per component; `Some(colors)` when bipartite.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// K_{m,n} with m, n ≥ 1 is connected, so the bipartition is unique; the
/// single-vertex graph counts as the degenerate K_{1,0}.
fn is_complete_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 1 {
        return true;
    }
    let (ncomp, _) = g.components();
    if ncomp != 1 {
        return false;
    }
    let Some(color) = bipartition(g) else {
        return false;
    };
    for u in 0..n {
        for v in (u + 1)..n {
            if color[u] != color[v] && !g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Any three mutually adjacent vertices.
pub fn has_triangle(g: &Graph) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                continue;
            }
            for w in (v + 1)..n {
                if g.has_edge(u, w) && g.has_edge(v, w) {
                    return true;
                }
            }
        }
    }
    false
}

/// Exhaustive induced-K_{1,3} search over (center, 3 pairwise non-adjacent
/// neighbors). Iterating non-adjacent neighbor pairs first keeps this cheap
/// on the dense graphs that dominate the corpus.
pub fn has_induced_claw(g: &Graph) -> bool {
    let n = g.vertex_count();
    for c in 0..n {
        let nb = g.neighbors(c);
        for i in 0..nb.len() {
            for j in (i + 1)..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for &w in nb.iter().skip(j + 1) {
                    if !g.has_edge(nb[i], w) && !g.has_edge(nb[j], w) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// K_{1,3} as a not-necessarily-induced subgraph: some vertex has three
/// neighbors. Kept separate from the induced notion on purpose.
pub fn contains_k13_subgraph(g: &Graph) -> bool {
    g.max_degree() >= 3
}

/// P_2 (a path with two edges) as a subgraph: some vertex has two neighbors.
pub fn contains_p2_subgraph(g: &Graph) -> bool {
    g.max_degree() >= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_report() {
        let g = named_graph("K4").unwrap();
        let r = analyze(&g);
        assert!(r.complete);
        assert_eq!(r.girth, Extent::Finite(3));
        assert_eq!(r.diameter, Extent::Finite(1));
        assert!(r.planar);
        assert!(r.claw_free); // no induced K_{1,3} in a complete graph
        assert!(contains_k13_subgraph(&g)); // but it contains one as a subgraph
        assert!(r.regular);
        assert_eq!(r.regular_degree, Some(3));
        assert_eq!(r.recognized_name.as_deref(), Some("K4"));
    }

    #[test]
    fn claw_report() {
        let g = named_graph("K1,3").unwrap();
        let r = analyze(&g);
        assert!(r.star && r.bipartite && r.tree && r.complete_bipartite);
        assert_eq!(r.girth, Extent::Infinite);
        assert_eq!(r.diameter, Extent::Finite(2));
        assert!(!r.claw_free);
        assert_eq!(r.recognized_name.as_deref(), Some("K1,3"));
    }

    #[test]
    fn k5_not_planar() {
        let r = analyze(&named_graph("K5").unwrap());
        assert!(!r.planar);
    }

    #[test]
    fn a4_shape_report() {
        // K_3 ∪ 4K_1: disconnected, girth 3, cyclomatic number 1.
        let g = named_graph("K3+4K1").unwrap();
        let r = analyze(&g);
        assert!(!r.connected);
        assert_eq!(r.diameter, Extent::Infinite);
        assert_eq!(r.girth, Extent::Finite(3));
        assert!(r.unicyclic);
        assert!(r.claw_free);
        assert_eq!(r.recognized_name.as_deref(), Some("K3+4K1"));
    }

    #[test]
    fn single_vertex_conventions() {
        let g = Graph::new(1);
        let r = analyze(&g);
        assert!(r.connected && r.totally_disconnected && r.tree && r.star);
        assert!(r.complete_bipartite && r.bipartite && r.triangle_free);
        assert_eq!(r.path, Some(0));
        assert_eq!(r.cycle, None);
        assert_eq!(r.diameter, Extent::Finite(0));
        assert_eq!(r.girth, Extent::Infinite);
    }

    #[test]
    fn report_field_invariants() {
        for name in ["K4", "K1,3", "C5", "P3", "K3+4K1", "K2,3", "5K1", "K6"] {
            let g = named_graph(name).unwrap();
            let r = analyze(&g);
            if r.tree {
                assert!(r.connected);
                assert_eq!(g.edge_count(), g.vertex_count() - 1);
            }
            if r.complete {
                assert!(r.regular);
                assert_eq!(r.regular_degree, Some(g.vertex_count() as u32 - 1));
            }
            // girth = 3 iff a triangle exists
            assert_eq!(!r.triangle_free, r.girth == Extent::Finite(3));
            if r.star {
                assert!(r.complete_bipartite);
            }
            if r.complete_bipartite {
                assert!(r.bipartite);
            }
            if r.bipartite {
                assert!(r.triangle_free);
            }
        }
    }

    #[test]
    fn claw_checkers_named_cases() {
        for n in 1..=8 {
            assert!(!has_induced_claw(&named_graph(&format!("K{n}")).unwrap()));
        }
        for m in 3..=6 {
            assert!(has_induced_claw(&named_graph(&format!("K1,{m}")).unwrap()));
        }
        assert!(!has_induced_claw(&named_graph("K1,2").unwrap()));
    }

    #[test]
    fn girth_of_cycles() {
        for n in 3..=10 {
            let g = named_graph(&format!("C{n}")).unwrap();
            assert_eq!(girth(&g), Extent::Finite(n));
            assert_eq!(analyze(&g).cycle, Some(n));
        }
    }

    #[test]
    fn complete_graphs_recognized_complete() {
        for n in 2..=10 {
            let r = analyze(&named_graph(&format!("K{n}")).unwrap());
            assert!(r.complete);
            assert_eq!(r.diameter, Extent::Finite(1));
        }
    }

    #[test]
    fn extent_serialization() {
        assert_eq!(serde_json::to_string(&Extent::Finite(3)).unwrap(), "3");
        assert_eq!(
            serde_json::to_string(&Extent::Infinite).unwrap(),
            "\"infinity\""
        );
    }

    #[test]
    fn text_mirrors_json_fields() {
        let r = analyze(&named_graph("C4").unwrap());
        let text = r.to_text();
        let json: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        for key in json.as_object().unwrap().keys() {
            assert!(
                text.contains(&format!("{key}: ")),
                "missing {key} in text output"
            );
        }
    }
}
