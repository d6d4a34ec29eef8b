//! Brute-force group isomorphism with generator-image pruning.
//!
//! Used to map corpus entries onto isomorphism types at small orders;
//! capped at order 64 — the classification statements only need collision
//! resolution there, and family tags are trusted above the cap.

use super::GroupTable;
use crate::error::{Error, Result};

const MAX_ISO_ORDER: usize = 64;

/// Decides whether two groups are isomorphic. Exact; errors above order 64.
pub fn group_isomorphic(a: &GroupTable, b: &GroupTable) -> Result<bool> {
    let n = a.order();
    if n > MAX_ISO_ORDER || b.order() > MAX_ISO_ORDER {
        return Err(Error::SizeLimit {
            what: "group order for isomorphism testing",
            got: n.max(b.order()),
            cap: MAX_ISO_ORDER,
        });
    }
    if n != b.order() {
        return Ok(false);
    }
    // Order statistics are isomorphism invariants; cheap reject.
    let mut oa: Vec<u32> = (0..n).map(|x| a.elem_order(x)).collect();
    let mut ob: Vec<u32> = (0..n).map(|x| b.elem_order(x)).collect();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob {
        return Ok(false);
    }
    if a.is_abelian() != b.is_abelian() {
        return Ok(false);
    }
    // Greedy generating sequence for a: repeatedly adjoin the smallest
    // element outside the current closure.
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = vec![false; n];
    closed[0] = true;
    let mut closure_size = 1;
    while closure_size < n {
        let next = (0..n).find(|&x| !closed[x]).unwrap();
        gens.push(next);
        // close under multiplication by existing elements on both sides
        let mut stack: Vec<usize> = vec![next];
        closed[next] = true;
        closure_size += 1;
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if closed[y] {
                    for z in [a.mul(x, y), a.mul(y, x)] {
                        if !closed[z] {
                            closed[z] = true;
                            closure_size += 1;
                            stack.push(z);
                        }
                    }
                }
            }
        }
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[0] = 0;
    used[0] = true;
    Ok(assign(a, b, &gens, 0, &mut phi, &mut used))
}

/// Extends the partial map by choosing an image for gens[k]; propagation
/// replays products so conflicts prune early.
fn assign(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    k: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = a.order();
    if k == gens.len() {
        // phi is total and consistent on the BFS products; confirm the full
        // homomorphism property.
        debug_assert!(phi.iter().all(|&x| x != usize::MAX));
        for x in 0..n {
            for y in 0..n {
                if phi[a.mul(x, y)] != b.mul(phi[x], phi[y]) {
                    return false;
                }
            }
        }
        return true;
    }
    let g = gens[k];
    let candidates: Vec<usize> = (0..n)
        .filter(|&v| !used[v] && b.elem_order(v) == a.elem_order(g))
        .collect();
    for v in candidates {
        let mut added: Vec<usize> = Vec::new();
        if extend(a, b, g, v, phi, used, &mut added) && assign(a, b, gens, k + 1, phi, used) {
            return true;
        }
        for x in added {
            used[phi[x]] = false;
            phi[x] = usize::MAX;
        }
    }
    false
}

/// Sets phi[g] = v and closes the map under products with the known domain.
/// Records newly mapped elements in `added`; returns false on conflict.
fn extend(
    a: &GroupTable,
    b: &GroupTable,
    g: usize,
    v: usize,
    phi: &mut [usize],
    used: &mut [bool],
    added: &mut Vec<usize>,
) -> bool {
    let n = a.order();
    let set = |x: usize,
               fx: usize,
               phi: &mut [usize],
               used: &mut [bool],
               added: &mut Vec<usize>|
     -> bool {
        if phi[x] != usize::MAX {
            return phi[x] == fx;
        }
        if used[fx] {
            return false;
        }
        phi[x] = fx;
        used[fx] = true;
        added.push(x);
        true
    };
    if !set(g, v, phi, used, added) {
        return false;
    }
    let mut head = added.len().saturating_sub(1);
    // Worklist over newly mapped elements; pair them with every mapped
    // element on both sides.
    loop {
        if head >= added.len() {
            break;
        }
        let x = added[head];
        head += 1;
        for y in 0..n {
            if phi[y] == usize::MAX {
                continue;
            }
            let (p1, q1) = (a.mul(x, y), b.mul(phi[x], phi[y]));
            if !set(p1, q1, phi, used, added) {
                return false;
            }
            let (p2, q2) = (a.mul(y, x), b.mul(phi[y], phi[x]));
            if !set(p2, q2, phi, used, added) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        make_alternating, make_cyclic, make_dihedral, make_direct_product,
        make_generalized_quaternion, make_metacyclic_semidirect, make_symmetric,
    };

    #[test]
    fn s3_class_collapses() {
        let s3 = make_symmetric(3).unwrap();
        let d6 = make_dihedral(6).unwrap();
        let sd = make_metacyclic_semidirect(3, 2, 1, 1).unwrap();
        assert!(group_isomorphic(&s3, &d6).unwrap());
        assert!(group_isomorphic(&s3, &sd).unwrap());
        assert!(group_isomorphic(&d6, &sd).unwrap());
    }

    #[test]
    fn distinguishes_order_8_groups() {
        let q8 = make_generalized_quaternion(8).unwrap();
        let d8 = make_dihedral(8).unwrap();
        let z8 = make_cyclic(8).unwrap();
        let z4z2 = make_direct_product(&make_cyclic(4).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert!(!group_isomorphic(&q8, &d8).unwrap());
        assert!(!group_isomorphic(&q8, &z8).unwrap());
        assert!(!group_isomorphic(&d8, &z4z2).unwrap());
        assert!(group_isomorphic(&q8, &q8).unwrap());
    }

    #[test]
    fn trivial_action_semidirect_is_direct_product() {
        // SD(q, p, alpha, 0) ≅ Z_q × Z_{p^alpha}, checked by brute force.
        for (q, p, alpha) in [(5u64, 2u64, 1u32), (3, 2, 2), (7, 2, 1), (3, 5, 1)] {
            let sd = make_metacyclic_semidirect(q, p, alpha, 0).unwrap();
            let direct = make_direct_product(
                &make_cyclic(q).unwrap(),
                &make_cyclic(p.pow(alpha)).unwrap(),
            )
            .unwrap();
            assert!(
                group_isomorphic(&sd, &direct).unwrap(),
                "SD {q} {p} {alpha} 0"
            );
        }
    }

    #[test]
    fn a4_not_dihedral() {
        let a4 = make_alternating(4).unwrap();
        let d12 = make_dihedral(12).unwrap();
        assert!(!group_isomorphic(&a4, &d12).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let g = make_cyclic(100).unwrap();
        assert!(group_isomorphic(&g, &g).is_err());
    }
}
