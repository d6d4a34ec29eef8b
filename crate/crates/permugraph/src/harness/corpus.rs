//! Deterministic corpus of finite groups.

use crate::arith::{factorize, is_prime, partitions};
use crate::error::Result;
use crate::group::{GroupSpec, GroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Abelian,
    Dihedral,
    Quaternion,
    Modular,
    Semidirect,
    Symmetric,
    Alternating,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Abelian,
        FamilyKind::Dihedral,
        FamilyKind::Quaternion,
        FamilyKind::Modular,
        FamilyKind::Semidirect,
        FamilyKind::Symmetric,
        FamilyKind::Alternating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Abelian => "abelian",
            FamilyKind::Dihedral => "dihedral",
            FamilyKind::Quaternion => "quaternion",
            FamilyKind::Modular => "modular",
            FamilyKind::Semidirect => "semidirect",
            FamilyKind::Symmetric => "symmetric",
            FamilyKind::Alternating => "alternating",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyKind> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone)]
pub struct CorpusConfig {
    pub max_order: usize,
    pub families: Vec<FamilyKind>,
    /// Degree bound for S_m / A_m instances (order bound still applies).
    pub perm_degree_cap: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            max_order: 200,
            families: FamilyKind::ALL.to_vec(),
            perm_degree_cap: 5,
        }
    }
}

/// Classification tags carried by every corpus entry.
#[derive(Debug, Clone)]
pub struct Tags {
    pub abelian: bool,
    pub cyclic: bool,
    pub factorization: Vec<(u64, u32)>,
    pub family: FamilyKind,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub spec: GroupSpec,
    pub table: GroupTable,
    pub tags: Tags,
}

impl CorpusEntry {
    pub fn spec_string(&self) -> String {
        self.spec.to_string()
    }
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub max_order: usize,
}

impl Tags {
    pub(crate) fn for_table(table: &GroupTable, family: FamilyKind) -> Self {
        Tags {
            abelian: table.is_abelian(),
            cyclic: table.is_cyclic(),
            factorization: factorize(table.order() as u64),
            family,
        }
    }
}

fn push_entry(entries: &mut Vec<CorpusEntry>, spec: GroupSpec, family: FamilyKind) -> Result<()> {
    let table = spec.build()?;
    let tags = Tags::for_table(&table, family);
    entries.push(CorpusEntry { spec, table, tags });
    Ok(())
}

/// One abelian group per isomorphism class of each order 2..=max:
/// all combinations of partitions of the prime exponents. The fully cyclic
/// class is constructed as `Z n`; the rest as products of prime-power
/// cyclic factors (primes ascending, exponents descending).
fn abelian_specs(max: usize) -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    for n in 2..=max as u64 {
        let fac = factorize(n);
        let per_prime: Vec<Vec<Vec<u32>>> = fac.iter().map(|&(_, e)| partitions(e)).collect();
        let mut combo = vec![0usize; fac.len()];
        loop {
            let mut factors: Vec<u64> = Vec::new();
            for (i, &(p, _)) in fac.iter().enumerate() {
                for &e in &per_prime[i][combo[i]] {
                    factors.push(p.pow(e));
                }
            }
            let spec = if factors.len() == fac.len() {
                // one factor per prime: the cyclic class
                GroupSpec::Cyclic(n)
            } else {
                factors
                    .iter()
                    .map(|&f| GroupSpec::Cyclic(f))
                    .reduce(|a, b| GroupSpec::Product(Box::new(a), Box::new(b)))
                    .unwrap()
            };
            specs.push(spec);
            // next combination
            let mut i = 0;
            loop {
                if i == combo.len() {
                    break;
                }
                combo[i] += 1;
                if combo[i] < per_prime[i].len() {
                    break;
                }
                combo[i] = 0;
                i += 1;
            }
            if i == combo.len() {
                break;
            }
        }
    }
    specs
}

/// The deterministic spec sequence of the corpus: all abelian isomorphism
/// classes, then the family instances in range.
pub fn corpus_specs(config: &CorpusConfig) -> Vec<(GroupSpec, FamilyKind)> {
    let max = config.max_order;
    let mut specs = Vec::new();
    let has = |f: FamilyKind| config.families.contains(&f);

    if has(FamilyKind::Abelian) {
        for spec in abelian_specs(max) {
            specs.push((spec, FamilyKind::Abelian));
        }
    }
    if has(FamilyKind::Dihedral) {
        for n in 3..=(max as u64 / 2) {
            specs.push((GroupSpec::Dihedral(2 * n), FamilyKind::Dihedral));
        }
    }
    if has(FamilyKind::Quaternion) {
        for n in 2..=(max as u64 / 4) {
            specs.push((GroupSpec::Quaternion(4 * n), FamilyKind::Quaternion));
        }
    }
    if has(FamilyKind::Modular) {
        for p in 2..=max as u64 {
            if !is_prime(p) {
                continue;
            }
            let mut alpha = 3u32;
            while let Some(order) = p.checked_pow(alpha) {
                if order > max as u64 {
                    break;
                }
                specs.push((GroupSpec::Modular { p, alpha }, FamilyKind::Modular));
                alpha += 1;
            }
        }
    }
    if has(FamilyKind::Semidirect) {
        // Nonabelian instances only: t >= 1. The t = 0 construction is the
        // direct product and duplicates an abelian class.
        for q in 2..=max as u64 {
            if !is_prime(q) {
                continue;
            }
            for p in 2..=max as u64 {
                if p == q || !is_prime(p) {
                    continue;
                }
                let mut alpha = 1u32;
                while let Some(pa) = p.checked_pow(alpha) {
                    let Some(order) = q.checked_mul(pa) else {
                        break;
                    };
                    if order > max as u64 {
                        break;
                    }
                    for t in 1..=alpha {
                        if (q - 1) % p.pow(t) == 0 {
                            specs.push((
                                GroupSpec::Semidirect { q, p, alpha, t },
                                FamilyKind::Semidirect,
                            ));
                        }
                    }
                    alpha += 1;
                }
            }
        }
    }
    if has(FamilyKind::Symmetric) {
        let mut fact = 1usize;
        for m in 2..=config.perm_degree_cap as u64 {
            fact *= m as usize;
            if m >= 3 && fact <= max {
                specs.push((GroupSpec::Symmetric(m), FamilyKind::Symmetric));
            }
        }
    }
    if has(FamilyKind::Alternating) {
        let mut fact = 1usize;
        for m in 2..=config.perm_degree_cap as u64 {
            fact *= m as usize;
            if m >= 3 && fact / 2 <= max {
                specs.push((GroupSpec::Alternating(m), FamilyKind::Alternating));
            }
        }
    }
    specs
}

/// Builds the corpus deterministically; identical configs give identical
/// entry sequences. Holds every Cayley table, so memory grows with the cube
/// of the cap; the streaming path in `prepare_cases_from_config` avoids
/// that for large verification runs.
pub fn build_corpus(config: &CorpusConfig) -> Result<Corpus> {
    let mut entries = Vec::new();
    for (spec, family) in corpus_specs(config) {
        push_entry(&mut entries, spec, family)?;
    }
    Ok(Corpus {
        entries,
        max_order: config.max_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_class_counts() {
        // Oracle: sum over 2 <= n <= N of the product of partition counts of
        // the prime exponents of n.
        let oracle = |max: u64| -> usize {
            (2..=max)
                .map(|n| {
                    factorize(n)
                        .iter()
                        .map(|&(_, e)| partitions(e).len())
                        .product::<usize>()
                })
                .sum()
        };
        assert_eq!(oracle(16), 24);
        let config = CorpusConfig {
            max_order: 16,
            families: vec![FamilyKind::Abelian],
            ..CorpusConfig::default()
        };
        let corpus = build_corpus(&config).unwrap();
        assert_eq!(corpus.entries.len(), 24);
        assert_eq!(corpus.entries.len(), oracle(16));
        // all abelian, one per class: element-order statistics distinct per order
        for e in &corpus.entries {
            assert!(e.tags.abelian);
        }
        let larger = build_corpus(&CorpusConfig {
            max_order: 200,
            families: vec![FamilyKind::Abelian],
            ..CorpusConfig::default()
        })
        .unwrap();
        assert_eq!(larger.entries.len(), oracle(200));
        assert_eq!(larger.entries.len(), 388);
    }

    #[test]
    fn family_ranges() {
        let corpus = build_corpus(&CorpusConfig {
            max_order: 16,
            ..CorpusConfig::default()
        })
        .unwrap();
        let specs: Vec<String> = corpus
            .entries
            .iter()
            .map(CorpusEntry::spec_string)
            .collect();
        assert!(specs.contains(&"Q 8".to_string()));
        assert!(specs.contains(&"D 8".to_string()));
        assert!(specs.contains(&"D 16".to_string()));
        assert!(specs.contains(&"M 2 3".to_string()));
        assert!(specs.contains(&"SD 3 2 1 1".to_string()));
        assert!(specs.contains(&"A 4".to_string()));
        assert!(!specs.contains(&"S 4".to_string())); // order 24 > 16
        let corpus12 = build_corpus(&CorpusConfig {
            max_order: 12,
            ..CorpusConfig::default()
        })
        .unwrap();
        let specs12: Vec<String> = corpus12
            .entries
            .iter()
            .map(CorpusEntry::spec_string)
            .collect();
        assert!(specs12.contains(&"A 4".to_string()));
        assert!(specs12.contains(&"Q 8".to_string()));
    }

    #[test]
    fn determinism() {
        let a = build_corpus(&CorpusConfig::default()).unwrap();
        let b = build_corpus(&CorpusConfig::default()).unwrap();
        let sa: Vec<String> = a.entries.iter().map(CorpusEntry::spec_string).collect();
        let sb: Vec<String> = b.entries.iter().map(CorpusEntry::spec_string).collect();
        assert_eq!(sa, sb);
    }
}
