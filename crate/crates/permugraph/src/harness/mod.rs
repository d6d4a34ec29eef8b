//! Corpus generation and mechanical verification of the classification
//! statements.
//!
//! The corpus holds every abelian isomorphism class up to the order cap
//! (via prime-power partitions) plus all named-family instances in range.
//! Each verifier scans the corpus and records per-group verdicts; the
//! "only if" directions are necessarily relative to the corpus, and every
//! report says so in its scope note.

mod corpus;
mod verifiers;

pub use corpus::{build_corpus, corpus_specs, Corpus, CorpusConfig, CorpusEntry, FamilyKind, Tags};
pub use verifiers::{
    run_all_verifiers, verify_characterizations, verify_corollary_equivalences,
    verify_cyclic_complete, verify_main_theorem, verify_nonabelian_props, verify_section4,
    verify_totally_disconnected, verify_unicyclic, Case, TheoremReport, Verdict,
};

use rayon::prelude::*;

use crate::analysis::analyze;
use crate::error::Result;
use crate::group::{GroupSpec, GroupTable};
use crate::permgraph::build_gamma_c;

/// Tables are kept on a prepared case only up to this order: the verifiers
/// need them solely for brute-force group isomorphism, which is capped at
/// order 64. Dropping the rest keeps large corpus runs in bounded memory.
const KEEP_TABLE_MAX_ORDER: usize = 64;

fn make_case(spec: GroupSpec, table: GroupTable, family: FamilyKind) -> Case {
    let tags = Tags::for_table(&table, family);
    let gamma = build_gamma_c(&table).ok();
    let report = gamma.as_ref().map(|pg| analyze(&pg.graph));
    Case {
        spec,
        order: table.order(),
        tags,
        table: (table.order() <= KEEP_TABLE_MAX_ORDER).then_some(table),
        gamma,
        report,
    }
}

/// Precomputes the graph and analysis report of every corpus entry, in
/// parallel, with results ordered by corpus index.
pub fn prepare_cases(corpus: &Corpus) -> Vec<Case> {
    corpus
        .entries
        .par_iter()
        .map(|entry| make_case(entry.spec.clone(), entry.table.clone(), entry.tags.family))
        .collect()
}

/// Streaming variant: builds each group, prepares its case and drops the
/// table immediately, so memory stays bounded even for order caps in the
/// thousands.
pub fn prepare_cases_from_config(config: &CorpusConfig) -> Result<Vec<Case>> {
    corpus_specs(config)
        .into_par_iter()
        .map(|(spec, family)| {
            let table = spec.build()?;
            Ok(make_case(spec, table, family))
        })
        .collect()
}
