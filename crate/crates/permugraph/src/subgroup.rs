//! Cyclic-subgroup enumeration, permutability of subgroup pairs, and
//! subgroup-set algebra.
//!
//! Two subgroups H, K permute when HK = KH as sets; equivalently HK is a
//! subgroup. `permutes` decides this by materializing both product sets in
//! full (no early exit), and two independent routes — closure of HK, and the
//! |HK| = |H|·|K|/|H∩K| size identity combined with generated-subgroup
//! closure — are exposed for cross-checking.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// An immutable sorted set of element indices forming a subgroup, with a
/// generator witness when the subgroup is known cyclic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubgroupSet {
    elements: Vec<u16>,
    generator: Option<u16>,
}

impl SubgroupSet {
    pub(crate) fn new(mut elements: Vec<u16>, generator: Option<u16>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self {
            elements,
            generator,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u16] {
        &self.elements
    }

    pub fn generator(&self) -> Option<usize> {
        self.generator.map(usize::from)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&(x as u16)).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole_group(&self, g: &GroupTable) -> bool {
        self.elements.len() == g.order()
    }

    /// Closure and identity-membership check, by direct loop.
    pub fn is_subgroup_of(&self, g: &GroupTable) -> bool {
        if !self.contains(GroupTable::IDENTITY) {
            return false;
        }
        if g.order() % self.order() != 0 {
            return false;
        }
        for &a in &self.elements {
            if !self.contains(g.inv(a as usize)) {
                return false;
            }
            for &b in &self.elements {
                if !self.contains(g.mul(a as usize, b as usize)) {
                    return false;
                }
            }
        }
        true
    }
}

/// All distinct cyclic subgroups of a group, canonically ordered by
/// (order, lexicographic element set).
#[derive(Debug, Clone)]
pub struct CyclicCatalog {
    /// Every ⟨x⟩ for x in G, deduplicated by element set. Includes the
    /// trivial subgroup and, when G is cyclic, G itself.
    pub all: Vec<SubgroupSet>,
    /// `all` minus the trivial subgroup and the whole group.
    pub proper: Vec<SubgroupSet>,
}

/// Enumerates ⟨x⟩ for every element, deduplicating by element set. The
/// generator witness of each entry is its smallest generating element.
pub fn cyclic_subgroups(g: &GroupTable) -> CyclicCatalog {
    let n = g.order();
    let mut by_set: HashMap<Vec<u16>, u16> = HashMap::new();
    for x in 0..n {
        let mut elems: Vec<u16> = Vec::new();
        let mut cur = GroupTable::IDENTITY;
        loop {
            elems.push(cur as u16);
            cur = g.mul(cur, x);
            if cur == GroupTable::IDENTITY {
                break;
            }
        }
        elems.sort_unstable();
        by_set.entry(elems).or_insert(x as u16);
    }
    let mut all: Vec<SubgroupSet> = by_set
        .into_iter()
        .map(|(elements, generator)| SubgroupSet {
            elements,
            generator: Some(generator),
        })
        .collect();
    all.sort_unstable_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    let proper = all
        .iter()
        .filter(|s| !s.is_trivial() && s.order() != n)
        .cloned()
        .collect();
    CyclicCatalog { all, proper }
}

/// The product set HK = {h·k : h ∈ H, k ∈ K}, sorted. Materialized in full.
pub fn set_product(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> Vec<u16> {
    let n = g.order();
    let mut bits = vec![0u64; n.div_ceil(64)];
    for &a in h.elements() {
        let row = g.mul_row(a as usize);
        for &b in k.elements() {
            let x = row[b as usize] as usize;
            bits[x / 64] |= 1 << (x % 64);
        }
    }
    collect_bits(&bits)
}

fn collect_bits(bits: &[u64]) -> Vec<u16> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let tz = word.trailing_zeros() as usize;
            out.push((w * 64 + tz) as u16);
            word &= word - 1;
        }
    }
    out
}

/// HK = KH as sets.
pub fn permutes(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> bool {
    set_product(g, h, k) == set_product(g, k, h)
}

/// Independent route: H and K permute iff HK is closed under multiplication
/// (a nonempty finite subset closed under the operation is a subgroup).
pub fn permutes_by_closure(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> bool {
    let hk = set_product(g, h, k);
    let n = g.order();
    let mut bits = vec![0u64; n.div_ceil(64)];
    for &x in &hk {
        bits[x as usize / 64] |= 1 << (x as usize % 64);
    }
    for &a in &hk {
        let row = g.mul_row(a as usize);
        for &b in &hk {
            let x = row[b as usize] as usize;
            if bits[x / 64] & (1 << (x % 64)) == 0 {
                return false;
            }
        }
    }
    true
}

/// Independent route: |HK| always equals |H|·|K|/|H∩K|, and HK is a subgroup
/// iff the subgroup generated by H ∪ K has exactly that size.
pub fn permutes_by_size(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> bool {
    let inter = h
        .elements()
        .iter()
        .filter(|&&x| k.contains(x as usize))
        .count();
    let expected = h.order() * k.order() / inter;
    let mut seed: Vec<u16> = h.elements().to_vec();
    seed.extend_from_slice(k.elements());
    subgroup_generated(g, &seed).order() == expected
}

/// Least subgroup containing the seed: breadth-first closure under
/// multiplication and inversion. Returns the whole group when the seed
/// generates it (not an error).
pub fn subgroup_generated(g: &GroupTable, seed: &[u16]) -> SubgroupSet {
    assert!(!seed.is_empty(), "seed must be nonempty");
    let n = g.order();
    let mut member = vec![false; n];
    let mut elems: Vec<u16> = Vec::new();
    let push = |x: usize, member: &mut Vec<bool>, elems: &mut Vec<u16>, queue: &mut Vec<usize>| {
        if !member[x] {
            member[x] = true;
            elems.push(x as u16);
            queue.push(x);
        }
    };
    let mut queue = Vec::new();
    push(GroupTable::IDENTITY, &mut member, &mut elems, &mut queue);
    for &s in seed {
        push(s as usize, &mut member, &mut elems, &mut queue);
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        push(g.inv(x), &mut member, &mut elems, &mut queue);
        for i in 0..queue.len() {
            let y = queue[i];
            push(g.mul(x, y), &mut member, &mut elems, &mut queue);
            push(g.mul(y, x), &mut member, &mut elems, &mut queue);
        }
    }
    // Witness cyclicity: ⟨x⟩ equals the closure iff ord(x) matches its size.
    let size = elems.len() as u32;
    let generator = elems
        .iter()
        .copied()
        .filter(|&x| g.elem_order(x as usize) == size)
        .min();
    SubgroupSet::new(elems, generator)
}

/// H is normal iff gHg⁻¹ = H for every g.
pub fn is_normal(g: &GroupTable, h: &SubgroupSet) -> bool {
    for x in 0..g.order() {
        let xi = g.inv(x);
        for &a in h.elements() {
            if !h.contains(g.mul(g.mul(x, a as usize), xi)) {
                return false;
            }
        }
    }
    true
}

/// Cap for the all-subgroup enumeration.
pub const ALL_SUBGROUPS_MAX_ORDER: usize = 200;

/// Every subgroup of the group, computed by iterated pairwise join-closure
/// starting from the cyclic catalog, to fixpoint. Includes the trivial
/// subgroup and the whole group; canonically ordered.
pub fn all_subgroups(g: &GroupTable) -> Result<Vec<SubgroupSet>> {
    if g.order() > ALL_SUBGROUPS_MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "group order for all-subgroup enumeration",
            got: g.order(),
            cap: ALL_SUBGROUPS_MAX_ORDER,
        });
    }
    let catalog = cyclic_subgroups(g);
    let mut subs: Vec<SubgroupSet> = catalog.all.clone();
    let mut seen: std::collections::HashSet<Vec<u16>> =
        subs.iter().map(|s| s.elements.clone()).collect();
    // Pair every subgroup (including newly found ones) with every other.
    let mut i = 0;
    while i < subs.len() {
        let mut j = 0;
        while j < i {
            let mut seed = subs[i].elements.clone();
            seed.extend_from_slice(&subs[j].elements);
            let joined = subgroup_generated(g, &seed);
            if seen.insert(joined.elements.clone()) {
                subs.push(joined);
            }
            j += 1;
        }
        i += 1;
    }
    subs.sort_unstable_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(subs)
}
