//! The theorem verifiers. Each scans the prepared corpus cases, evaluates
//! its statement in both directions (graph predicate vs. group-type
//! membership), and returns a report whose counterexample list must be
//! empty for a pass.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::analysis::{
    complete, contains_k13_subgraph, contains_p2_subgraph, is_isomorphic, named_graph,
    AnalysisReport, Extent,
};
use crate::group::{group_isomorphic, GroupSpec, GroupTable};
use crate::permgraph::{universal_vertices, PermGraph};

use super::corpus::Tags;

/// A corpus entry with its precomputed graph and analysis (absent when the
/// graph is undefined for the group). The Cayley table is retained only at
/// small orders, where the verifiers resolve isomorphism-type collisions by
/// brute force.
#[derive(Debug, Clone)]
pub struct Case {
    pub spec: GroupSpec,
    pub order: usize,
    pub tags: Tags,
    pub table: Option<GroupTable>,
    pub gamma: Option<PermGraph>,
    pub report: Option<AnalysisReport>,
}

impl Case {
    pub fn spec_string(&self) -> String {
        self.spec.to_string()
    }

    fn order(&self) -> usize {
        self.order
    }

    /// Retained table at small orders; the keep threshold matches the
    /// group-isomorphism cap, so the callers below never miss.
    fn small_table(&self) -> &GroupTable {
        self.table
            .as_ref()
            .expect("table retained for orders within the isomorphism cap")
    }

    /// Exponent multiset of the order, descending: 12 = 2²·3 -> [2, 1].
    fn shape(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.tags.factorization.iter().map(|&(_, e)| e).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    fn cyclic(&self) -> bool {
        self.tags.cyclic
    }

    fn abelian(&self) -> bool {
        self.tags.abelian
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub group: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub statement: String,
    pub scope: String,
    pub groups_checked: usize,
    pub pass: bool,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
    pub verdicts: Vec<Verdict>,
    /// Wall-clock time; not serialized so that report files are
    /// byte-identical across runs.
    #[serde(skip)]
    pub duration: Duration,
}

struct ReportBuilder {
    report: TheoremReport,
    started: Instant,
}

impl ReportBuilder {
    fn new(theorem: &str, statement: &str, ncases: usize) -> Self {
        Self {
            report: TheoremReport {
                theorem: theorem.to_string(),
                statement: statement.to_string(),
                scope: format!(
                    "checked over the generated corpus ({ncases} groups); \
                     necessity directions are relative to this corpus; groups whose \
                     permutability graph is undefined are skipped"
                ),
                groups_checked: 0,
                pass: true,
                counterexamples: Vec::new(),
                notes: Vec::new(),
                verdicts: Vec::new(),
                duration: Duration::ZERO,
            },
            started: Instant::now(),
        }
    }

    fn record(&mut self, group: &str, failures: Vec<String>) {
        self.report.groups_checked += 1;
        let ok = failures.is_empty();
        self.report.verdicts.push(Verdict {
            group: group.to_string(),
            ok,
        });
        for f in failures {
            self.report.counterexamples.push(format!("{group}: {f}"));
        }
    }

    fn note(&mut self, s: String) {
        self.report.notes.push(s);
    }

    fn finish(mut self) -> TheoremReport {
        self.report.pass = self.report.counterexamples.is_empty();
        self.report.duration = self.started.elapsed();
        self.report
    }
}

// ---- group-type membership predicates --------------------------------

/// Cyclic of order p^a for a in the given range.
fn cyclic_prime_power(case: &Case, range: std::ops::RangeInclusive<u32>) -> bool {
    case.cyclic() && case.shape().len() == 1 && range.contains(&case.shape()[0])
}

/// Cyclic of squarefree order pq.
fn cyclic_pq(case: &Case) -> bool {
    case.cyclic() && case.shape() == [1, 1]
}

/// Cyclic of order p²q.
fn cyclic_p2q(case: &Case) -> bool {
    case.cyclic() && case.shape() == [2, 1]
}

/// Nonabelian of order pq: the unique such group is Z_q ⋊ Z_p (p | q-1).
fn nonabelian_pq(case: &Case) -> bool {
    !case.abelian() && case.shape() == [1, 1]
}

/// The elementary abelian group Z_p × Z_p of the given order p².
fn elementary_p2(case: &Case, order: usize) -> bool {
    case.abelian() && !case.cyclic() && case.order() == order && case.shape() == [2]
}

fn is_q8(case: &Case, q8: &GroupTable) -> bool {
    case.order() == 8
        && !case.abelian()
        && group_isomorphic(case.small_table(), q8).expect("order 8 is under the iso cap")
}

fn is_a4(case: &Case, a4: &GroupTable) -> bool {
    case.order() == 12
        && !case.abelian()
        && group_isomorphic(case.small_table(), a4).expect("order 12 is under the iso cap")
}

/// Membership in the triangle-free class:
/// Z_{p²}, Z_{p³}, Z_{pq}, or Z_q ⋊ Z_p.
fn c3_free_class(case: &Case) -> bool {
    cyclic_prime_power(case, 2..=3) || cyclic_pq(case) || nonabelian_pq(case)
}

// ---- verifiers --------------------------------------------------------

/// Γ_c of a cyclic non-prime-order group is complete on τ(n) - 2 vertices.
pub fn verify_cyclic_complete(cases: &[Case]) -> TheoremReport {
    let mut b = ReportBuilder::new(
        "cyclic-complete",
        "the permutability graph of a cyclic group of non-prime order n >= 4 \
         is the complete graph on tau(n) - 2 vertices",
        cases.len(),
    );
    for case in cases {
        if !case.cyclic() {
            continue;
        }
        let Some(pg) = &case.gamma else { continue };
        let n = case.order() as u64;
        let r = (crate::arith::tau(n) - 2) as usize;
        let mut failures = Vec::new();
        let expected = complete(r);
        match is_isomorphic(&pg.graph, &expected) {
            Ok(Some(_)) => {}
            Ok(None) => failures.push(format!(
                "graph has {} vertices / {} edges, expected K_{r}",
                pg.vertex_count(),
                pg.edge_count()
            )),
            Err(e) => failures.push(format!("isomorphism test failed: {e}")),
        }
        b.record(&case.spec_string(), failures);
    }
    b.finish()
}

/// The five-part classification: triangle-free, cycle, path, K_4 and
/// no-K_{1,3}-subgraph graphs occur exactly for the listed group types.
pub fn verify_main_theorem(cases: &[Case]) -> TheoremReport {
    let q8 = GroupSpec::Quaternion(8).build().unwrap();
    let a4 = GroupSpec::Alternating(4).build().unwrap();
    let mut b = ReportBuilder::new(
        "main-classification",
        "triangle-free graphs come exactly from Z_{p^2}, Z_{p^3}, Z_{pq}, Z_q x| Z_p; \
         cycle graphs are C_3 from Z_{p^4}, Z_2 x Z_2; path graphs are P_1 from \
         Z_{p^3}, Z_{pq}; K_4 comes from Z_{p^5}, Z_{p^2 q}, Z_3 x Z_3, Q_8; graphs \
         without a K_{1,3} subgraph come from Z_{p^a} (a = 2,3,4), Z_{pq}, \
         Z_2 x Z_2, A_4",
        cases.len(),
    );
    b.note(
        "the K_{1,3}-free item uses subgraph containment (max degree <= 2), the \
         reading under which the classification is exact; the induced notion is \
         reported separately by analyze()"
            .to_string(),
    );
    for case in cases {
        let (Some(pg), Some(report)) = (&case.gamma, &case.report) else {
            continue;
        };
        let mut failures = Vec::new();
        let check = |item: &str, predicate: bool, member: bool, failures: &mut Vec<String>| {
            if predicate != member {
                failures.push(format!(
                    "{item}: graph predicate is {predicate} but type membership is {member}"
                ));
            }
        };

        check(
            "C3-free",
            report.triangle_free,
            c3_free_class(case),
            &mut failures,
        );

        let is_cycle = report.cycle.is_some();
        let cn_member = cyclic_prime_power(case, 4..=4) || elementary_p2(case, 4);
        check("C_n", is_cycle, cn_member, &mut failures);
        if is_cycle && report.cycle != Some(3) {
            failures.push(format!(
                "cycle of length {:?}, only C_3 may occur",
                report.cycle
            ));
        }

        let is_path = matches!(report.path, Some(n) if n >= 1);
        let pn_member = cyclic_prime_power(case, 3..=3) || cyclic_pq(case);
        check("P_n", is_path, pn_member, &mut failures);
        if is_path && report.path != Some(1) {
            failures.push(format!(
                "path of length {:?}, only P_1 may occur",
                report.path
            ));
        }

        let is_k4 = pg.vertex_count() == 4 && report.complete;
        let k4_member = cyclic_prime_power(case, 5..=5)
            || cyclic_p2q(case)
            || elementary_p2(case, 9)
            || is_q8(case, &q8);
        check("K_4", is_k4, k4_member, &mut failures);

        let no_claw_subgraph = !contains_k13_subgraph(&pg.graph);
        let claw_member = cyclic_prime_power(case, 2..=4)
            || cyclic_pq(case)
            || elementary_p2(case, 4)
            || is_a4(case, &a4);
        check(
            "K_{1,3}-subgraph-free",
            no_claw_subgraph,
            claw_member,
            &mut failures,
        );

        b.record(&case.spec_string(), failures);
    }
    b.finish()
}

/// Triangle-free ⟺ bipartite ⟺ complete bipartite ⟺ tree ⟺ star on every
/// corpus graph; P_2-subgraph-free groups are exactly Z_{p^2}, Z_{p^3},
/// Z_{pq}; girth is 3 or infinite, infinite exactly on the triangle-free
/// class.
pub fn verify_corollary_equivalences(cases: &[Case]) -> TheoremReport {
    let mut b = ReportBuilder::new(
        "corollary-equivalences",
        "triangle-free, bipartite, complete-bipartite, tree and star are \
         equivalent on these graphs; P_2-free holds exactly for Z_{p^2}, \
         Z_{p^3}, Z_{pq}; girth is 3 or infinity",
        cases.len(),
    );
    b.note(
        "P_2-free uses subgraph containment (max degree <= 1); the induced \
         reading would admit every complete graph"
            .to_string(),
    );
    for case in cases {
        let (Some(pg), Some(r)) = (&case.gamma, &case.report) else {
            continue;
        };
        let mut failures = Vec::new();
        let five = [
            r.triangle_free,
            r.bipartite,
            r.complete_bipartite,
            r.tree,
            r.star,
        ];
        if five.iter().any(|&x| x != five[0]) {
            failures.push(format!(
                "equivalence broken: triangle_free={} bipartite={} complete_bipartite={} tree={} star={}",
                five[0], five[1], five[2], five[3], five[4]
            ));
        }
        let p2_free = !contains_p2_subgraph(&pg.graph);
        let p2_member = cyclic_prime_power(case, 2..=3) || cyclic_pq(case);
        if p2_free != p2_member {
            failures.push(format!(
                "P_2-free: graph predicate is {p2_free} but type membership is {p2_member}"
            ));
        }
        match r.girth {
            Extent::Finite(3) => {
                if c3_free_class(case) {
                    failures.push("girth 3 on a group of the triangle-free class".into());
                }
            }
            Extent::Infinite => {
                if !c3_free_class(case) {
                    failures.push("infinite girth outside the triangle-free class".into());
                }
            }
            Extent::Finite(g) => {
                failures.push(format!("girth {g}; only 3 or infinity may occur"));
            }
        }
        b.record(&case.spec_string(), failures);
    }
    b.finish()
}

/// Totally disconnected ⟺ the group is Z_{p²}.
pub fn verify_totally_disconnected(cases: &[Case]) -> TheoremReport {
    let mut b = ReportBuilder::new(
        "totally-disconnected",
        "the permutability graph is edgeless exactly when the group is Z_{p^2}",
        cases.len(),
    );
    for case in cases {
        let Some(r) = &case.report else { continue };
        let mut failures = Vec::new();
        let td = r.totally_disconnected;
        let member = cyclic_prime_power(case, 2..=2);
        if td != member {
            failures.push(format!(
                "totally_disconnected is {td} but Z_{{p^2}} membership is {member}"
            ));
        }
        b.record(&case.spec_string(), failures);
    }
    b.finish()
}

/// Universal-vertex consequences, the planarity classification for abelian
/// groups, and completeness for abelian and modular groups.
pub fn verify_section4(cases: &[Case]) -> TheoremReport {
    let mut b = ReportBuilder::new(
        "connectivity-regularity-planarity",
        "a universal vertex forces connectedness with diameter <= 2, and \
         regularity with a universal vertex forces completeness; an abelian \
         group has planar graph exactly when it is Z_{p^a} (a = 2..5), \
         Z_{pq}, Z_{p^2 q}, Z_2 x Z_2 or Z_3 x Z_3; abelian and modular \
         groups have complete graphs",
        cases.len(),
    );
    for case in cases {
        let (Some(pg), Some(r)) = (&case.gamma, &case.report) else {
            continue;
        };
        let mut failures = Vec::new();
        let universal = !universal_vertices(pg).is_empty();
        if universal {
            if !r.connected {
                failures.push("universal vertex in a disconnected graph".into());
            }
            if let Extent::Finite(d) = r.diameter {
                if d > 2 {
                    failures.push(format!("universal vertex but diameter {d}"));
                }
            } else {
                failures.push("universal vertex but infinite diameter".into());
            }
            if r.regular && !r.complete {
                failures.push("regular with a universal vertex but not complete".into());
            }
        }
        if case.abelian() {
            let member = cyclic_prime_power(case, 2..=5)
                || cyclic_pq(case)
                || cyclic_p2q(case)
                || elementary_p2(case, 4)
                || elementary_p2(case, 9);
            if r.planar != member {
                failures.push(format!(
                    "planar is {} but planar-type membership is {member}",
                    r.planar
                ));
            }
            if !r.complete {
                failures.push("abelian group with a non-complete graph".into());
            }
        }
        // Modular groups have all subgroups permutable except M_8: for p = 2
        // the exponent s = alpha - 2 must be at least 2, and M_8 is dihedral.
        if let GroupSpec::Modular { p, alpha } = case.spec {
            if (p > 2 || alpha >= 4) && !r.complete {
                failures.push("modular group with a non-complete graph".into());
            }
        }
        b.record(&case.spec_string(), failures);
    }
    b.finish()
}

/// Graph-level characterizations: within the corpus, K_4 identifies Q_8
/// among nonabelian groups, K_{1,3} identifies the S_3 class, and
/// K_3 ∪ 4K_1 identifies A_4.
pub fn verify_characterizations(cases: &[Case]) -> TheoremReport {
    let q8 = GroupSpec::Quaternion(8).build().unwrap();
    let s3 = GroupSpec::Symmetric(3).build().unwrap();
    let a4 = GroupSpec::Alternating(4).build().unwrap();
    let a4_graph = named_graph("K3+4K1").unwrap();
    let mut b = ReportBuilder::new(
        "characterizations",
        "within the corpus: the only nonabelian group with graph K_4 is Q_8; \
         the only group with graph K_{1,3} is S_3 (D_6 and SD 3 2 1 1 collapse \
         to the same class); the only group with graph K_3 + 4K_1 is A_4",
        cases.len(),
    );
    let (mut n_k4, mut n_star, mut n_a4) = (0usize, 0usize, 0usize);
    for case in cases {
        let (Some(pg), Some(r)) = (&case.gamma, &case.report) else {
            continue;
        };
        let mut failures = Vec::new();
        if pg.vertex_count() == 4 && r.complete && !case.abelian() {
            n_k4 += 1;
            if !is_q8(case, &q8) {
                failures.push("nonabelian group with graph K_4 is not Q_8".into());
            }
        }
        if pg.vertex_count() == 4 && r.star {
            n_star += 1;
            if case.order() != 6
                || !group_isomorphic(case.small_table(), &s3).expect("order 6 under cap")
            {
                failures.push("group with graph K_{1,3} is not S_3".into());
            }
        }
        if pg.vertex_count() == 7
            && is_isomorphic(&pg.graph, &a4_graph)
                .expect("7 vertices")
                .is_some()
        {
            n_a4 += 1;
            if !is_a4(case, &a4) {
                failures.push("group with graph K_3 + 4K_1 is not A_4".into());
            }
        }
        b.record(&case.spec_string(), failures);
    }
    b.note(format!(
        "matches found: {n_k4} nonabelian K_4, {n_star} K_{{1,3}}, {n_a4} K_3+4K_1"
    ));
    // The three order-6 nonabelian constructions must be one isomorphism class.
    let order6: Vec<&Case> = cases
        .iter()
        .filter(|c| c.order() == 6 && !c.abelian())
        .collect();
    for w in order6.windows(2) {
        if !group_isomorphic(w[0].small_table(), w[1].small_table()).expect("order 6 under cap") {
            b.report.counterexamples.push(format!(
                "{} and {} are not isomorphic",
                w[0].spec_string(),
                w[1].spec_string()
            ));
        }
    }
    b.finish()
}

/// Structural facts for nonabelian groups: outside the special cases
/// (Q_8 -> K_4, order pq -> K_{1,q}, A_4 -> K_3 + 4K_1) the graph has a
/// triangle, a K_{1,3} subgraph and at least five vertices.
pub fn verify_nonabelian_props(cases: &[Case]) -> TheoremReport {
    let q8 = GroupSpec::Quaternion(8).build().unwrap();
    let a4 = GroupSpec::Alternating(4).build().unwrap();
    let mut b = ReportBuilder::new(
        "nonabelian-structure",
        "a nonabelian group of order pq has graph K_{1,q}; Q_8 has K_4; A_4 \
         has K_3 + 4K_1; every other nonabelian group has a triangle, a \
         K_{1,3} subgraph and at least five vertices",
        cases.len(),
    );
    for case in cases {
        if case.abelian() {
            continue;
        }
        let (Some(pg), Some(r)) = (&case.gamma, &case.report) else {
            continue;
        };
        let mut failures = Vec::new();
        if is_q8(case, &q8) {
            if !(pg.vertex_count() == 4 && r.complete) {
                failures.push("Q_8 graph is not K_4".into());
            }
        } else if case.shape() == [1, 1] {
            let q = case
                .tags
                .factorization
                .iter()
                .map(|&(p, _)| p)
                .max()
                .unwrap() as usize;
            if !(r.star && pg.vertex_count() == q + 1) {
                failures.push(format!(
                    "order-pq group: expected K_{{1,{q}}}, got {} vertices (star: {})",
                    pg.vertex_count(),
                    r.star
                ));
            }
        } else if is_a4(case, &a4) {
            let expected = named_graph("K3+4K1").unwrap();
            if is_isomorphic(&pg.graph, &expected)
                .expect("7 vertices")
                .is_none()
            {
                failures.push("A_4 graph is not K_3 + 4K_1".into());
            }
        } else {
            if r.triangle_free {
                failures.push("no triangle".into());
            }
            if !contains_k13_subgraph(&pg.graph) {
                failures.push("no K_{1,3} subgraph".into());
            }
            if pg.vertex_count() < 5 {
                failures.push(format!("only {} vertices", pg.vertex_count()));
            }
        }
        b.record(&case.spec_string(), failures);
    }
    b.finish()
}

/// The unicyclic classification is verified for abelian groups; nonabelian
/// corpus groups with unicyclic graphs are reported informationally.
pub fn verify_unicyclic(cases: &[Case]) -> TheoremReport {
    let mut b = ReportBuilder::new(
        "unicyclic-abelian",
        "an abelian group has unicyclic graph (cyclomatic number 1) exactly \
         when it is Z_{p^4} or Z_2 x Z_2",
        cases.len(),
    );
    let mut informational: Vec<String> = Vec::new();
    for case in cases {
        let Some(r) = &case.report else { continue };
        if !case.abelian() {
            if r.unicyclic {
                informational.push(case.spec_string());
            }
            continue;
        }
        let mut failures = Vec::new();
        let member = cyclic_prime_power(case, 4..=4) || elementary_p2(case, 4);
        if r.unicyclic != member {
            failures.push(format!(
                "unicyclic is {} but type membership is {member}",
                r.unicyclic
            ));
        }
        b.record(&case.spec_string(), failures);
    }
    if !informational.is_empty() {
        b.note(format!(
            "informational: nonabelian groups with unicyclic graphs: {}",
            informational.join(", ")
        ));
    }
    b.finish()
}

/// Runs every verifier in a fixed order.
pub fn run_all_verifiers(cases: &[Case]) -> Vec<TheoremReport> {
    vec![
        verify_cyclic_complete(cases),
        verify_main_theorem(cases),
        verify_corollary_equivalences(cases),
        verify_totally_disconnected(cases),
        verify_section4(cases),
        verify_characterizations(cases),
        verify_nonabelian_props(cases),
        verify_unicyclic(cases),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{build_corpus, prepare_cases, CorpusConfig};

    fn small_cases() -> Vec<Case> {
        let corpus = build_corpus(&CorpusConfig {
            max_order: 32,
            ..CorpusConfig::default()
        })
        .unwrap();
        prepare_cases(&corpus)
    }

    #[test]
    fn all_verifiers_pass_on_small_corpus() {
        let cases = small_cases();
        for report in run_all_verifiers(&cases) {
            assert!(
                report.pass,
                "{} failed: {:?}",
                report.theorem, report.counterexamples
            );
            assert_eq!(report.pass, report.counterexamples.is_empty());
        }
    }

    #[test]
    fn spot_check_examples() {
        let cases = small_cases();
        let by_spec = |s: &str| {
            cases
                .iter()
                .find(|c| c.spec_string() == s)
                .unwrap_or_else(|| panic!("{s} in corpus"))
        };
        // Z_12 and Z_18 are cyclic p^2 q: graph K_4.
        for s in ["Z 12", "Z 18", "Z 20", "Z 32"] {
            let c = by_spec(s);
            let r = c.report.as_ref().unwrap();
            assert!(r.complete);
            assert_eq!(c.gamma.as_ref().unwrap().vertex_count(), 4, "{s}");
        }
        // Z_9 -> single vertex, totally disconnected.
        let z9 = by_spec("Z 9");
        assert!(z9.report.as_ref().unwrap().totally_disconnected);
        // Z_2 x Z_2 -> C_3.
        let v4 = by_spec("Z 2 x Z 2");
        assert_eq!(v4.report.as_ref().unwrap().cycle, Some(3));
        // Q_8 -> K_4; A_4 -> claw-free (induced) with 7 vertices.
        let q8 = by_spec("Q 8");
        assert!(q8.report.as_ref().unwrap().complete);
        let a4 = by_spec("A 4");
        assert!(a4.report.as_ref().unwrap().claw_free);
        assert_eq!(a4.gamma.as_ref().unwrap().vertex_count(), 7);
        // M_27: girth 3.
        let m27 = by_spec("M 3 3");
        assert_eq!(m27.report.as_ref().unwrap().girth, Extent::Finite(3));
        // Z_8: P_2-free (graph is K_2).
        let z8 = by_spec("Z 8");
        assert!(!contains_p2_subgraph(&z8.gamma.as_ref().unwrap().graph));
    }

    #[test]
    fn reports_are_deterministic() {
        let cases = small_cases();
        let a = serde_json::to_string(&run_all_verifiers(&cases)).unwrap();
        let b = serde_json::to_string(&run_all_verifiers(&cases)).unwrap();
        assert_eq!(a, b);
    }
}
