//! Finite groups as explicit Cayley tables with exact element arithmetic.
//!
//! Every group is an order-n multiplication table over element indices
//! `0..n`, with the identity always at index 0. Family constructors fix a
//! canonical element enumeration so tables are reproducible bit-for-bit.

mod families;
mod iso;
mod spec;

pub use families::{
    make_alternating, make_cyclic, make_dihedral, make_direct_product, make_from_generators,
    make_generalized_quaternion, make_metacyclic_semidirect, make_modular, make_symmetric,
};
pub use iso::group_isomorphic;
pub use spec::GroupSpec;

use crate::error::{Error, Result};
use crate::subgroup::SubgroupSet;

/// Default maximum group order; Cayley tables are O(n²) memory.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Full triple-loop associativity check up to this order, sampled beyond.
const FULL_ASSOC_CHECK_ORDER: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 100_000;

/// A finite group given by its Cayley table. Immutable after construction;
/// safe to share read-only across workers.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elem_order: Vec<u32>,
    abelian: bool,
    spec: GroupSpec,
}

impl GroupTable {
    /// The identity element is index 0 in every table.
    pub const IDENTITY: usize = 0;

    /// Validates and finishes a raw multiplication table: index 0 must be a
    /// two-sided identity, rows/columns must be permutations, inverses must
    /// exist, and associativity is checked (exhaustively for order ≤ 64,
    /// on 10⁵ deterministic pseudo-random triples beyond).
    pub fn from_mul_table(spec: GroupSpec, order: usize, mul: Vec<u16>) -> Result<Self> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::NotAGroup(format!(
                "table size {} does not match order {order}",
                mul.len()
            )));
        }
        if order > u16::MAX as usize {
            return Err(Error::SizeLimit {
                what: "group order",
                got: order,
                cap: u16::MAX as usize,
            });
        }
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::NotAGroup(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        // Latin-square check: every row and column is a permutation.
        let mut row_seen = vec![false; order];
        let mut col_seen = vec![false; order];
        for a in 0..order {
            row_seen.iter_mut().for_each(|x| *x = false);
            col_seen.iter_mut().for_each(|x| *x = false);
            for b in 0..order {
                let r = at(a, b);
                let c = at(b, a);
                if r >= order || row_seen[r] || c >= order || col_seen[c] {
                    return Err(Error::NotAGroup(format!(
                        "row/column {a} is not a permutation"
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        if order <= FULL_ASSOC_CHECK_ORDER {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::NotAGroup(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // splitmix64 with a fixed seed keeps construction deterministic.
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = move || {
                state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                z ^ (z >> 31)
            };
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = (next() % order as u64) as usize;
                let b = (next() % order as u64) as usize;
                let c = (next() % order as u64) as usize;
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        let mut inv = vec![0u16; order];
        for a in 0..order {
            let mut found = false;
            for b in 0..order {
                if at(a, b) == 0 {
                    inv[a] = b as u16;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::NotAGroup(format!("element {a} has no inverse")));
            }
        }
        let mut elem_order = vec![0u32; order];
        for a in 0..order {
            let mut k = 1u32;
            let mut x = a;
            while x != 0 {
                x = at(x, a);
                k += 1;
            }
            elem_order[a] = k;
            if order as u32 % k != 0 {
                return Err(Error::NotAGroup(format!(
                    "order of element {a} does not divide the group order"
                )));
            }
        }
        let mut abelian = true;
        'outer: for a in 0..order {
            for b in (a + 1)..order {
                if at(a, b) != at(b, a) {
                    abelian = false;
                    break 'outer;
                }
            }
        }
        Ok(Self {
            order,
            mul,
            inv,
            elem_order,
            abelian,
            spec,
        })
    }

    /// The order-1 group. Not reachable through the spec grammar; used as a
    /// product identity and by `make_alternating(2)`.
    pub fn trivial() -> Self {
        Self::from_mul_table(GroupSpec::TableLiteral("1".into()), 1, vec![0]).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// The least k ≥ 1 with a^k = identity.
    pub fn elem_order(&self, a: usize) -> u32 {
        self.elem_order[a]
    }

    pub fn pow(&self, a: usize, k: u32) -> usize {
        let mut acc = Self::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    /// Cyclic ⟺ some element has order n.
    pub fn is_cyclic(&self) -> bool {
        self.elem_order.iter().any(|&k| k as usize == self.order)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Raw row access for product-set accumulation.
    pub(crate) fn mul_row(&self, a: usize) -> &[u16] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    /// Realizes a subgroup as a standalone group table. Elements are
    /// reindexed in ascending order of their index in the parent, which puts
    /// the identity at 0. Returns the table and the map from new indices
    /// back to parent elements.
    pub fn subgroup_table(&self, sub: &SubgroupSet) -> Result<(GroupTable, Vec<usize>)> {
        let elems: Vec<usize> = sub.elements().iter().map(|&e| e as usize).collect();
        let m = elems.len();
        let pos = |e: usize| -> Result<usize> {
            elems
                .binary_search(&e)
                .map_err(|_| Error::NotAGroup("set is not closed under multiplication".into()))
        };
        let mut mul = vec![0u16; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                mul[i * m + j] = pos(self.mul(a, b))? as u16;
            }
        }
        let spec = GroupSpec::TableLiteral(format!("{m}"));
        Ok((GroupTable::from_mul_table(spec, m, mul)?, elems))
    }
}

/// Free-function form of [`GroupTable::elem_order`].
pub fn element_order(g: &GroupTable, a: usize) -> u32 {
    g.elem_order(a)
}
