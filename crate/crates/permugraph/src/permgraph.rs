//! Γ_c(G) (and optionally Γ(G)) as explicit labeled graphs, plus the JSON
//! and DOT exports.
//!
//! Vertices are the proper nontrivial subgroups (cyclic ones for Γ_c),
//! ordered by (subgroup order, lexicographic element set) so that output is
//! reproducible byte-for-byte; two distinct vertices are adjacent iff the
//! subgroups permute.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::GroupTable;
use crate::subgroup::{all_subgroups, cyclic_subgroups, permutes, SubgroupSet};

/// A permutability graph with its subgroup labels and group provenance.
#[derive(Debug, Clone)]
pub struct PermGraph {
    pub graph: Graph,
    pub vertices: Vec<SubgroupSet>,
    pub group_spec: String,
}

fn build_over(g: &GroupTable, vertices: Vec<SubgroupSet>) -> Result<PermGraph> {
    if vertices.is_empty() {
        // Only the trivial group and groups of prime order lack proper
        // nontrivial cyclic subgroups; the graph is undefined there.
        return Err(Error::UndefinedGraph(g.spec().to_string()));
    }
    let mut graph = Graph::new(vertices.len());
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            if permutes(g, &vertices[i], &vertices[j]) {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(PermGraph {
        graph,
        vertices,
        group_spec: g.spec().to_string(),
    })
}

/// The permutability graph of cyclic subgroups of G.
pub fn build_gamma_c(g: &GroupTable) -> Result<PermGraph> {
    build_over(g, cyclic_subgroups(g).proper)
}

/// The permutability graph over all proper nontrivial subgroups
/// (order ≤ 200; every subgroup is enumerated by join-closure first).
pub fn build_gamma_all(g: &GroupTable) -> Result<PermGraph> {
    let n = g.order();
    let vertices: Vec<SubgroupSet> = all_subgroups(g)?
        .into_iter()
        .filter(|s| !s.is_trivial() && s.order() != n)
        .collect();
    build_over(g, vertices)
}

/// Vertices adjacent to every other vertex (degree |V| - 1). These are the
/// permutable subgroups; a single-vertex graph has one trivially.
pub fn universal_vertices(pg: &PermGraph) -> Vec<usize> {
    let n = pg.graph.vertex_count();
    (0..n).filter(|&v| pg.graph.degree(v) == n - 1).collect()
}

#[derive(Serialize)]
struct VertexExport {
    order: usize,
    generator: Option<usize>,
    elements: Vec<usize>,
}

#[derive(Serialize)]
struct GraphExport<'a> {
    group: &'a str,
    vertices: Vec<VertexExport>,
    edges: Vec<[usize; 2]>,
}

impl PermGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// JSON export: `{group, vertices: [{order, generator, elements}], edges}`.
    pub fn to_json(&self) -> String {
        let export = GraphExport {
            group: &self.group_spec,
            vertices: self
                .vertices
                .iter()
                .map(|s| VertexExport {
                    order: s.order(),
                    generator: s.generator(),
                    elements: s.elements().iter().map(|&e| e as usize).collect(),
                })
                .collect(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string_pretty(&export).expect("graph export serializes")
    }

    /// DOT export: undirected graph, vertex label `C<order>#<index>`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gamma_c {\n");
        out.push_str(&format!("  // group: {}\n", self.group_spec));
        for (i, s) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"C{}#{i}\"];\n", s.order()));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("  v{u} -- v{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}
