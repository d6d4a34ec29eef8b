//! Exact planarity testing.
//!
//! The Euler bound |E| > 3|V| - 6 rejects dense graphs outright (this also
//! disposes of every complete graph K_n, n ≥ 5). What remains is split into
//! biconnected components and each is decided by Demoucron-Malgrange-
//! Pertuiset face embedding: start from a cycle, repeatedly pick a fragment,
//! and embed a path of it into an admissible face; the graph is planar iff
//! every fragment always has an admissible face.

use crate::graph::Graph;

pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    for comp in biconnected_components(g) {
        if !bicomp_planar(&comp) {
            return false;
        }
    }
    true
}

/// Biconnected components as edge lists (Hopcroft-Tarjan, iterative DFS).
fn biconnected_components(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut comps = Vec::new();

    struct Frame {
        v: usize,
        parent: usize,
        next: usize,
    }

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![Frame {
            v: root,
            parent: usize::MAX,
            next: 0,
        }];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if frame.next < neighbors[v].len() {
                let w = neighbors[v][frame.next];
                frame.next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if w != frame.parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let parent = frame.parent;
                stack.pop();
                if let Some(pf) = stack.last() {
                    debug_assert_eq!(pf.v, parent);
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        // (parent, v) closes a biconnected component.
                        let mut comp = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[v] || (a, b) == (parent, v) {
                                comp.push(edge_stack.pop().unwrap());
                                if (a, b) == (parent, v) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        if !comp.is_empty() {
                            comps.push(comp);
                        }
                    }
                }
            }
        }
    }
    comps
}

/// Planarity of one biconnected component by DMP face embedding.
fn bicomp_planar(edges: &[(usize, usize)]) -> bool {
    // Reindex vertices densely.
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    let m = edges.len();
    if n <= 4 || m <= n {
        // At most four vertices, or at most one independent cycle.
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let index = |v: usize| verts.binary_search(&v).unwrap();
    let mut g = Graph::new(n);
    for &(a, b) in edges {
        g.add_edge(index(a), index(b));
    }

    let cycle = initial_cycle(&g);
    let mut embedded = vec![false; n];
    let mut embedded_edge = vec![false; n * n];
    let mark_edge = |u: usize, v: usize, embedded_edge: &mut Vec<bool>| {
        embedded_edge[u * n + v] = true;
        embedded_edge[v * n + u] = true;
    };
    for (i, &v) in cycle.iter().enumerate() {
        embedded[v] = true;
        mark_edge(v, cycle[(i + 1) % cycle.len()], &mut embedded_edge);
    }
    let mut embedded_count = cycle.len();
    // A cycle embedded in the plane bounds two faces.
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded_count < m {
        let fragments = find_fragments(&g, &embedded, &embedded_edge);
        debug_assert!(!fragments.is_empty());

        // Admissible faces contain all attachment vertices of the fragment.
        let mut choice: Option<(usize, usize, usize)> = None; // (fragment, face, count)
        for (fi, frag) in fragments.iter().enumerate() {
            let mut admissible = None;
            let mut count = 0;
            for (i, face) in faces.iter().enumerate() {
                if frag.attachments.iter().all(|a| face.contains(a)) {
                    count += 1;
                    if admissible.is_none() {
                        admissible = Some(i);
                    }
                }
            }
            match admissible {
                None => return false,
                Some(face) => {
                    if count == 1 {
                        choice = Some((fi, face, 1));
                        break;
                    }
                    if choice.is_none() {
                        choice = Some((fi, face, count));
                    }
                }
            }
        }
        let (fi, face_idx, _) = choice.expect("nonempty fragment list");
        let frag = &fragments[fi];
        let path = fragment_path(&g, frag, &embedded);

        for &v in &path {
            embedded[v] = true;
        }
        for w in path.windows(2) {
            mark_edge(w[0], w[1], &mut embedded_edge);
            embedded_count += 1;
        }

        // Split the chosen face along the path.
        let face = faces.swap_remove(face_idx);
        let a = path[0];
        let b = *path.last().unwrap();
        let i = face.iter().position(|&v| v == a).unwrap();
        let j = face.iter().position(|&v| v == b).unwrap();
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut k = from;
            loop {
                out.push(face[k]);
                if k == to {
                    break;
                }
                k = (k + 1) % face.len();
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut f1 = walk(i, j);
        f1.extend(interior.iter().rev());
        let mut f2 = walk(j, i);
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
    true
}

/// Any cycle of a biconnected graph with ≥ 3 vertices: walk the DFS tree and
/// close the first back edge.
fn initial_cycle(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut disc = vec![usize::MAX; n];
    let mut timer = 0;
    let mut stack = vec![0usize];
    disc[0] = timer;
    timer += 1;
    let mut back: Option<(usize, usize)> = None;
    'dfs: while let Some(&v) = stack.last() {
        let mut advanced = false;
        for w in g.neighbors(v) {
            if disc[w] == usize::MAX {
                disc[w] = timer;
                timer += 1;
                parent[w] = v;
                stack.push(w);
                advanced = true;
                break;
            } else if w != parent[v] && disc[w] < disc[v] {
                back = Some((v, w));
                break 'dfs;
            }
        }
        if !advanced {
            stack.pop();
        }
    }
    let (mut v, w) = back.expect("biconnected graph with >= 3 vertices has a cycle");
    let mut cycle = vec![v];
    while v != w {
        v = parent[v];
        cycle.push(v);
    }
    cycle
}

struct Fragment {
    /// Embedded vertices the fragment touches.
    attachments: Vec<usize>,
    /// Non-embedded vertices of the fragment; empty for a chord.
    inner: Vec<usize>,
    /// The chord, when the fragment is a single unembedded edge.
    chord: Option<(usize, usize)>,
}

/// Fragments of G relative to the embedded subgraph H: unembedded edges
/// between embedded vertices (chords), and connected components of G - V(H)
/// together with their edges into H.
fn find_fragments(g: &Graph, embedded: &[bool], embedded_edge: &[bool]) -> Vec<Fragment> {
    let n = g.vertex_count();
    let mut fragments = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) && embedded[u] && embedded[v] && !embedded_edge[u * n + v] {
                fragments.push(Fragment {
                    attachments: vec![u, v],
                    inner: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if embedded[start] || comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = count;
        let mut inner = vec![start];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if !embedded[w] && comp[w] == usize::MAX {
                    comp[w] = count;
                    inner.push(w);
                    stack.push(w);
                }
            }
        }
        inner.sort_unstable();
        let mut attachments: Vec<usize> = inner
            .iter()
            .flat_map(|&u| g.neighbors(u))
            .filter(|&w| embedded[w])
            .collect();
        attachments.sort_unstable();
        attachments.dedup();
        fragments.push(Fragment {
            attachments,
            inner,
            chord: None,
        });
        count += 1;
    }
    fragments
}

/// A path through the fragment joining two distinct attachments; its
/// interior lies in the fragment's unembedded vertices.
fn fragment_path(g: &Graph, frag: &Fragment, embedded: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    debug_assert!(
        frag.attachments.len() >= 2,
        "fragments of a biconnected graph have >= 2 attachments"
    );
    let a = frag.attachments[0];
    let b = frag.attachments[1];
    // BFS from a restricted to the fragment's inner vertices until one of
    // them is adjacent to b.
    let mut parent: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for w in g.neighbors(a) {
        if !embedded[w] && frag.inner.binary_search(&w).is_ok() && !parent.contains_key(&w) {
            parent.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        if g.has_edge(u, b) {
            let mut path = vec![b, u];
            let mut cur = u;
            while cur != a {
                cur = parent[&cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        for w in g.neighbors(u) {
            if !embedded[w] && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment connects its attachments");
}
