//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Criteria 1-5 check the pinned graph identities exactly; 6-10 run the
//! classification verifiers over the default corpus (max order 200) and
//! require zero counterexamples; 11 cross-checks the three permutability
//! criteria; 12 cross-checks girth, tree recognition and planarity against
//! independent brute-force oracles on 1000 seeded random graphs.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use permugraph::analysis::{analyze, complete, girth, is_isomorphic, named_graph, Extent};
use permugraph::arith::{is_prime, tau};
use permugraph::group::{group_isomorphic, make_cyclic, GroupSpec};
use permugraph::harness::{
    build_corpus, prepare_cases, verify_corollary_equivalences, verify_main_theorem,
    verify_totally_disconnected, Case, CorpusConfig,
};
use permugraph::subgroup::{cyclic_subgroups, permutes, permutes_by_closure, permutes_by_size};
use permugraph::{build_gamma_c, universal_vertices, Graph};

fn corpus_cases() -> &'static Vec<Case> {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        let corpus = build_corpus(&CorpusConfig::default()).expect("default corpus builds");
        prepare_cases(&corpus)
    })
}

fn criterion(n: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {n} ({name}): {}{}",
        if pass { "PASS" } else { "FAIL" },
        if detail.is_empty() {
            String::new()
        } else {
            format!(" - {detail}")
        }
    );
    assert!(pass, "criterion {n} ({name}) failed: {detail}");
}

#[test]
fn criterion_01_cyclic_completeness() {
    let mut checked = 0;
    for n in 4..=500u64 {
        if is_prime(n) {
            continue;
        }
        let g = make_cyclic(n).unwrap();
        let pg = build_gamma_c(&g).unwrap();
        let r = (tau(n) - 2) as usize;
        assert_eq!(pg.vertex_count(), r, "Z_{n}: vertex count");
        let ok = is_isomorphic(&pg.graph, &complete(r)).unwrap().is_some();
        assert!(ok, "Z_{n}: graph is not K_{r}");
        checked += 1;
    }
    criterion(
        1,
        "cyclic completeness",
        true,
        &format!("{checked} cyclic groups, exact isomorphism"),
    );
}

#[test]
fn criterion_02_elementary_abelian() {
    for p in [2u64, 3, 5, 7, 11] {
        let spec = GroupSpec::Product(
            Box::new(GroupSpec::Cyclic(p)),
            Box::new(GroupSpec::Cyclic(p)),
        );
        let g = spec.build().unwrap();
        let pg = build_gamma_c(&g).unwrap();
        let ok = is_isomorphic(&pg.graph, &complete(p as usize + 1))
            .unwrap()
            .is_some();
        assert!(ok, "Z_{p} x Z_{p} is not K_{}", p + 1);
    }
    criterion(
        2,
        "elementary abelian K_{p+1}",
        true,
        "p in {2,3,5,7,11}, exact isomorphism",
    );
}

#[test]
fn criterion_03_q8_unique_k4() {
    let q8 = GroupSpec::Quaternion(8).build().unwrap();
    let pg = build_gamma_c(&q8).unwrap();
    let k4 = complete(4);
    assert!(
        is_isomorphic(&pg.graph, &k4).unwrap().is_some(),
        "Q_8 graph is not K_4"
    );
    let mut matches: Vec<String> = Vec::new();
    for case in corpus_cases() {
        let Some(g) = &case.gamma else { continue };
        if !case.tags.abelian
            && g.vertex_count() == 4
            && is_isomorphic(&g.graph, &k4).unwrap().is_some()
        {
            assert!(
                group_isomorphic(case.table.as_ref().unwrap(), &q8).unwrap(),
                "{} has graph K_4 but is not Q_8",
                case.spec_string()
            );
            matches.push(case.spec_string());
        }
    }
    criterion(
        3,
        "Q_8 unique nonabelian K_4",
        matches == ["Q 8"],
        &format!("matches: {matches:?}"),
    );
}

#[test]
fn criterion_04_frobenius_stars() {
    for (p, q) in [(2u64, 3u64), (2, 5), (2, 7), (3, 7), (2, 11), (5, 11)] {
        let g = GroupSpec::Semidirect {
            q,
            p,
            alpha: 1,
            t: 1,
        }
        .build()
        .unwrap();
        let pg = build_gamma_c(&g).unwrap();
        let star = named_graph(&format!("K1,{q}")).unwrap();
        let ok = is_isomorphic(&pg.graph, &star).unwrap().is_some();
        assert!(ok, "SD {q} {p} 1 1 is not K_{{1,{q}}}");
    }
    criterion(
        4,
        "Frobenius-type stars K_{1,q}",
        true,
        "six (p,q) pairs, exact isomorphism",
    );
}

#[test]
fn criterion_05_a4_unique() {
    let a4 = GroupSpec::Alternating(4).build().unwrap();
    let expected = named_graph("K3+4K1").unwrap();
    let pg = build_gamma_c(&a4).unwrap();
    assert!(
        is_isomorphic(&pg.graph, &expected).unwrap().is_some(),
        "A_4 graph is not K_3 + 4K_1"
    );
    let mut matches: Vec<String> = Vec::new();
    for case in corpus_cases() {
        let Some(g) = &case.gamma else { continue };
        if g.vertex_count() == 7 && is_isomorphic(&g.graph, &expected).unwrap().is_some() {
            assert!(
                group_isomorphic(case.table.as_ref().unwrap(), &a4).unwrap(),
                "{} has graph K_3 + 4K_1 but is not A_4",
                case.spec_string()
            );
            matches.push(case.spec_string());
        }
    }
    criterion(
        5,
        "A_4 unique K_3 + 4K_1",
        matches == ["A 4"],
        &format!("matches: {matches:?}"),
    );
}

#[test]
fn criterion_06_main_theorem() {
    let report = verify_main_theorem(corpus_cases());
    criterion(
        6,
        "main classification, both directions",
        report.pass,
        &format!(
            "{} groups checked, counterexamples: {:?}",
            report.groups_checked, report.counterexamples
        ),
    );
}

#[test]
fn criterion_07_corollary_equivalences() {
    let report = verify_corollary_equivalences(corpus_cases());
    criterion(
        7,
        "corollary equivalences",
        report.pass,
        &format!(
            "{} groups checked, counterexamples: {:?}",
            report.groups_checked, report.counterexamples
        ),
    );
}

#[test]
fn criterion_08_totally_disconnected() {
    let report = verify_totally_disconnected(corpus_cases());
    criterion(
        8,
        "totally disconnected iff Z_{p^2}",
        report.pass,
        &format!(
            "{} groups checked, counterexamples: {:?}",
            report.groups_checked, report.counterexamples
        ),
    );
}

#[test]
fn criterion_09_universal_vertex() {
    let mut checked = 0;
    for case in corpus_cases() {
        let (Some(pg), Some(r)) = (&case.gamma, &case.report) else {
            continue;
        };
        if universal_vertices(pg).is_empty() {
            continue;
        }
        checked += 1;
        let spec = case.spec_string();
        assert!(r.connected, "{spec}: universal vertex but disconnected");
        match r.diameter {
            Extent::Finite(d) => assert!(d <= 2, "{spec}: universal vertex but diameter {d}"),
            Extent::Infinite => panic!("{spec}: universal vertex but infinite diameter"),
        }
        if r.regular {
            assert!(
                r.complete,
                "{spec}: regular with universal vertex but not complete"
            );
        }
    }
    criterion(
        9,
        "universal vertex: connected, diameter <= 2; regular implies complete",
        checked > 0,
        &format!("{checked} graphs with a universal vertex"),
    );
}

#[test]
fn criterion_10_planar_abelian_classification() {
    let mut checked = 0;
    for case in corpus_cases() {
        if !case.tags.abelian {
            continue;
        }
        let Some(r) = &case.report else { continue };
        let spec = case.spec_string();
        let cyclic = case.tags.cyclic;
        let mut shape: Vec<u32> = case.tags.factorization.iter().map(|&(_, e)| e).collect();
        shape.sort_unstable_by(|a, b| b.cmp(a));
        let order = case.order;
        let in_class = (cyclic && shape.len() == 1 && (2..=5).contains(&shape[0]))
            || (cyclic && shape == [1, 1])
            || (cyclic && shape == [2, 1])
            || (!cyclic && (order == 4 || order == 9) && shape == [2]);
        assert_eq!(
            r.planar, in_class,
            "{spec}: planar is {} but the classification says {in_class}",
            r.planar
        );
        checked += 1;
    }
    criterion(
        10,
        "planar abelian classification",
        checked > 0,
        &format!("{checked} abelian groups"),
    );
}

#[test]
fn criterion_11_permutability_oracle_agreement() {
    let mut pairs = 0u64;
    for case in corpus_cases() {
        if case.order > 48 {
            continue;
        }
        let g = case.table.as_ref().expect("small tables are retained");
        let catalog = cyclic_subgroups(g);
        for i in 0..catalog.proper.len() {
            for j in i..catalog.proper.len() {
                let (h, k) = (&catalog.proper[i], &catalog.proper[j]);
                let a = permutes(g, h, k);
                let b = permutes_by_closure(g, h, k);
                let c = permutes_by_size(g, h, k);
                assert!(
                    a == b && b == c,
                    "{}: criteria disagree on pair ({i},{j}): set-eq {a}, closure {b}, size {c}",
                    case.spec_string()
                );
                // permutability is symmetric
                assert_eq!(a, permutes(g, k, h));
                pairs += 1;
            }
        }
    }
    criterion(
        11,
        "three permutability criteria agree",
        pairs > 0,
        &format!("{pairs} subgroup pairs over groups of order <= 48"),
    );
}

// ---- criterion 12: independent brute-force oracles ---------------------

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.3) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Shortest cycle by exhaustive simple-path enumeration: each cycle is
/// discovered from its minimum vertex.
fn brute_girth(g: &Graph) -> Option<u32> {
    let n = g.vertex_count();
    let mut best: Option<u32> = None;
    let mut on_path = vec![false; n];
    fn dfs(
        g: &Graph,
        root: usize,
        last: usize,
        len: u32,
        on_path: &mut Vec<bool>,
        best: &mut Option<u32>,
    ) {
        if let Some(b) = *best {
            if len + 1 >= b {
                return; // even closing now cannot beat the best
            }
        }
        for w in g.neighbors(last) {
            if w == root && len >= 2 {
                let cycle = len + 1;
                if best.map_or(true, |b| cycle < b) {
                    *best = Some(cycle);
                }
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                dfs(g, root, w, len + 1, on_path, best);
                on_path[w] = false;
            }
        }
    }
    for root in 0..n {
        on_path[root] = true;
        dfs(g, root, root, 0, &mut on_path, &mut best);
        on_path[root] = false;
    }
    best
}

/// Tree oracle: connectivity by DFS, acyclicity by DFS back-edge detection.
fn brute_tree(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![(0usize, usize::MAX)];
    seen[0] = true;
    let mut visited = 1;
    let mut acyclic = true;
    while let Some((u, parent)) = stack.pop() {
        let mut parent_edges = 0;
        for w in g.neighbors(u) {
            if w == parent && parent_edges == 0 {
                parent_edges += 1;
                continue;
            }
            if seen[w] {
                acyclic = false;
            } else {
                seen[w] = true;
                visited += 1;
                stack.push((w, u));
            }
        }
    }
    visited == n && acyclic
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// Is there a path branch_a - interior... - branch_b using exactly the given
/// interior vertices in some order?
fn chain_exists(g: &Graph, a: usize, b: usize, interior: &[usize]) -> bool {
    if interior.is_empty() {
        return g.has_edge(a, b);
    }
    permutations_of(interior).into_iter().any(|ord| {
        let mut prev = a;
        for &x in &ord {
            if !g.has_edge(prev, x) {
                return false;
            }
            prev = x;
        }
        g.has_edge(prev, b)
    })
}

/// Brute-force search for a K_5 or K_{3,3} subdivision: choose branch
/// vertices, assign every leftover vertex to one branch-pair path (or leave
/// it unused), and demand all required paths exist pairwise internally
/// disjoint.
fn has_kuratowski_subdivision(g: &Graph) -> bool {
    let n = g.vertex_count();
    // K_5 subdivisions
    if n >= 5 {
        let pairs5: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
            .collect();
        for branch in combinations(n, 5) {
            if branch.iter().any(|&v| g.degree(v) < 4) {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|v| !branch.contains(v)).collect();
            if assignment_search(g, &branch, &pairs5, &rest) {
                return true;
            }
        }
    }
    // K_{3,3} subdivisions
    if n >= 6 {
        for six in combinations(n, 6) {
            if six.iter().any(|&v| g.degree(v) < 3) {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|v| !six.contains(v)).collect();
            for left in combinations(6, 3) {
                if left[0] != 0 {
                    continue; // fix vertex 0 on the left side: halves the work
                }
                let right: Vec<usize> = (0..6).filter(|i| !left.contains(i)).collect();
                let pairs: Vec<(usize, usize)> = left
                    .iter()
                    .flat_map(|&i| right.iter().map(move |&j| (i, j)))
                    .collect();
                if assignment_search(g, &six, &pairs, &rest) {
                    return true;
                }
            }
        }
    }
    false
}

/// Tries every assignment of leftover vertices to the required paths.
fn assignment_search(
    g: &Graph,
    branch: &[usize],
    pairs: &[(usize, usize)],
    rest: &[usize],
) -> bool {
    let options = pairs.len() + 1; // a pair index, or unused
    let mut assign = vec![0usize; rest.len()];
    loop {
        let ok = pairs.iter().enumerate().all(|(pi, &(i, j))| {
            let interior: Vec<usize> = rest
                .iter()
                .zip(&assign)
                .filter(|&(_, &a)| a == pi + 1)
                .map(|(&v, _)| v)
                .collect();
            chain_exists(g, branch[i], branch[j], &interior)
        });
        if ok {
            return true;
        }
        // next assignment in mixed radix
        let mut k = 0;
        loop {
            if k == assign.len() {
                return false;
            }
            assign[k] += 1;
            if assign[k] < options {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn criterion_12_graph_algorithm_cross_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0012);
    let (mut girth_checked, mut tree_checked, mut planar_checked) = (0u64, 0u64, 0u64);
    for _ in 0..1000 {
        let g = random_graph(&mut rng, 12);
        let report = analyze(&g);

        let brute = brute_girth(&g);
        let fast = girth(&g);
        match (brute, fast) {
            (Some(b), Extent::Finite(f)) => assert_eq!(b, f, "girth mismatch"),
            (None, Extent::Infinite) => {}
            other => panic!("girth mismatch: {other:?}"),
        }
        girth_checked += 1;

        assert_eq!(report.tree, brute_tree(&g), "tree oracle mismatch");
        tree_checked += 1;

        if g.vertex_count() <= 8 {
            let brute_planar = !has_kuratowski_subdivision(&g);
            assert_eq!(
                report.planar,
                brute_planar,
                "planarity mismatch on {:?}",
                g.edges()
            );
            planar_checked += 1;
        }
    }
    // The Kuratowski oracle must also reject the classics.
    assert!(has_kuratowski_subdivision(&complete(5)));
    assert!(has_kuratowski_subdivision(&named_graph("K3,3").unwrap()));
    assert!(!has_kuratowski_subdivision(&complete(4)));
    criterion(
        12,
        "girth/tree/planarity vs brute-force oracles",
        girth_checked == 1000 && tree_checked == 1000 && planar_checked > 0,
        &format!("girth {girth_checked}, tree {tree_checked}, planarity {planar_checked} graphs"),
    );
}
