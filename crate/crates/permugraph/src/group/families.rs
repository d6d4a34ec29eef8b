//! Constructors for the named group families. Each fixes a canonical element
//! enumeration (powers of `a` first, then the cosets of ⟨a⟩) so that repeated
//! construction yields identical tables.

use super::{GroupSpec, GroupTable, DEFAULT_MAX_ORDER};
use crate::arith::{is_prime, multiplicative_order, pow_mod};
use crate::error::{Error, Result};
use crate::perm::Permutation;

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        return Err(Error::SizeLimit {
            what: "group order",
            got: order,
            cap,
        });
    }
    Ok(())
}

/// The additive cyclic group Z_n; element k is the residue k.
pub fn make_cyclic(n: u64) -> Result<GroupTable> {
    make_cyclic_capped(n, DEFAULT_MAX_ORDER)
}

pub(crate) fn make_cyclic_capped(n: u64, cap: usize) -> Result<GroupTable> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "cyclic group needs n >= 2, got {n}"
        )));
    }
    let n = n as usize;
    check_cap(n, cap)?;
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = ((a + b) % n) as u16;
        }
    }
    GroupTable::from_mul_table(GroupSpec::Cyclic(n as u64), n, mul)
}

/// Direct product with lexicographic element indexing: (a, b) ↦ a·|h| + b.
pub fn make_direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    make_direct_product_capped(g, h, DEFAULT_MAX_ORDER)
}

pub(crate) fn make_direct_product_capped(
    g: &GroupTable,
    h: &GroupTable,
    cap: usize,
) -> Result<GroupTable> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng.checked_mul(nh).ok_or(Error::SizeLimit {
        what: "group order",
        got: usize::MAX,
        cap,
    })?;
    check_cap(n, cap)?;
    let idx = |a: usize, b: usize| a * nh + b;
    let mut mul = vec![0u16; n * n];
    for a1 in 0..ng {
        for b1 in 0..nh {
            let i = idx(a1, b1);
            for a2 in 0..ng {
                let ga = g.mul(a1, a2);
                for b2 in 0..nh {
                    mul[i * n + idx(a2, b2)] = idx(ga, h.mul(b1, b2)) as u16;
                }
            }
        }
    }
    let spec = GroupSpec::Product(Box::new(g.spec().clone()), Box::new(h.spec().clone()));
    GroupTable::from_mul_table(spec, n, mul)
}

/// Dihedral group of order 2n (n ≥ 3): ⟨a, b | aⁿ = b² = 1, ab = ba⁻¹⟩.
/// Element ε·n + i is b^ε a^i.
pub fn make_dihedral(two_n: u64) -> Result<GroupTable> {
    make_dihedral_capped(two_n, DEFAULT_MAX_ORDER)
}

pub(crate) fn make_dihedral_capped(two_n: u64, cap: usize) -> Result<GroupTable> {
    if two_n % 2 != 0 || two_n < 6 {
        return Err(Error::InvalidParameter(format!(
            "dihedral order must be even and >= 6, got {two_n}"
        )));
    }
    let order = two_n as usize;
    check_cap(order, cap)?;
    let n = order / 2;
    // (b^e a^i)(b^f a^j) = b^{e+f} a^{(-1)^f i + j}
    let mut mul = vec![0u16; order * order];
    for e in 0..2usize {
        for i in 0..n {
            for f in 0..2usize {
                for j in 0..n {
                    let eo = (e + f) % 2;
                    let io = if f == 0 { (i + j) % n } else { (n - i + j) % n };
                    mul[(e * n + i) * order + (f * n + j)] = (eo * n + io) as u16;
                }
            }
        }
    }
    GroupTable::from_mul_table(GroupSpec::Dihedral(two_n), order, mul)
}

/// Generalized quaternion group of order 4n (n ≥ 2):
/// ⟨a, b | a²ⁿ = 1, b² = aⁿ, bab⁻¹ = a⁻¹⟩. Element ε·2n + i is b^ε a^i.
/// This is the standard presentation; the source presentation with b⁴ = 1
/// and aⁿ = b² = 1 as independent relations is inconsistent as printed.
pub fn make_generalized_quaternion(four_n: u64) -> Result<GroupTable> {
    make_generalized_quaternion_capped(four_n, DEFAULT_MAX_ORDER)
}

pub(crate) fn make_generalized_quaternion_capped(four_n: u64, cap: usize) -> Result<GroupTable> {
    if four_n % 4 != 0 || four_n < 8 {
        return Err(Error::InvalidParameter(format!(
            "generalized quaternion order must be 4n with n >= 2, got {four_n}"
        )));
    }
    let order = four_n as usize;
    check_cap(order, cap)?;
    let n = order / 4;
    let m = 2 * n;
    let mut mul = vec![0u16; order * order];
    for e in 0..2usize {
        for i in 0..m {
            for f in 0..2usize {
                for j in 0..m {
                    // (b^e a^i)(b^f a^j): for f=1 use a^i b = b a^{-i}, b² = aⁿ.
                    let (eo, io) = if f == 0 {
                        (e, (i + j) % m)
                    } else if e == 0 {
                        (1, (m - i + j) % m)
                    } else {
                        (0, (n + m - i + j) % m)
                    };
                    mul[(e * m + i) * order + (f * m + j)] = (eo * m + io) as u16;
                }
            }
        }
    }
    GroupTable::from_mul_table(GroupSpec::Quaternion(four_n), order, mul)
}

/// Modular group of order p^α (α ≥ 3):
/// ⟨a, b | a^{p^{α-1}} = b^p = 1, bab⁻¹ = a^{p^{α-2}+1}⟩.
/// Element ε·p^{α-1} + i is a^i b^ε.
pub fn make_modular(p: u64, alpha: u32) -> Result<GroupTable> {
    make_modular_capped(p, alpha, DEFAULT_MAX_ORDER)
}

pub(crate) fn make_modular_capped(p: u64, alpha: u32, cap: usize) -> Result<GroupTable> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if alpha < 3 {
        return Err(Error::InvalidParameter(format!(
            "modular group needs alpha >= 3, got {alpha}"
        )));
    }
    let order_u64 = p
        .checked_pow(alpha)
        .ok_or(Error::InvalidParameter("p^alpha overflows".into()))?;
    let order = order_u64 as usize;
    check_cap(order, cap)?;
    let m = order / p as usize; // p^{α-1}
    let r = p.pow(alpha - 2) + 1;
    let pu = p as usize;
    // (a^i b^e)(a^j b^f) = a^{i + j·r^e} b^{e+f}
    let mut r_pow = vec![0u64; pu];
    for (e, slot) in r_pow.iter_mut().enumerate() {
        *slot = pow_mod(r, e as u64, m as u64);
    }
    let mut mul = vec![0u16; order * order];
    for e in 0..pu {
        for i in 0..m {
            for f in 0..pu {
                for j in 0..m {
                    let eo = (e + f) % pu;
                    let io = (i + (j as u64 * r_pow[e] % m as u64) as usize) % m;
                    mul[(e * m + i) * order + (f * m + j)] = (eo * m + io) as u16;
                }
            }
        }
    }
    GroupTable::from_mul_table(GroupSpec::Modular { p, alpha }, order, mul)
}

/// Semidirect product Z_q ⋊_t Z_{p^α} =
/// ⟨a, b | a^q = b^{p^α} = 1, bab⁻¹ = a^i, ord_q(i) = p^t⟩, with i chosen as
/// the smallest integer in [2, q-1] of multiplicative order exactly p^t
/// modulo q (i = 1 when t = 0, which is the direct product).
/// Element ε·q + j is a^j b^ε.
pub fn make_metacyclic_semidirect(q: u64, p: u64, alpha: u32, t: u32) -> Result<GroupTable> {
    make_metacyclic_semidirect_capped(q, p, alpha, t, DEFAULT_MAX_ORDER)
}

pub(crate) fn make_metacyclic_semidirect_capped(
    q: u64,
    p: u64,
    alpha: u32,
    t: u32,
    cap: usize,
) -> Result<GroupTable> {
    if !is_prime(q) || !is_prime(p) {
        return Err(Error::InvalidParameter(format!(
            "semidirect product needs primes, got q={q}, p={p}"
        )));
    }
    if p == q {
        return Err(Error::InvalidParameter(
            "primes p and q must be distinct".into(),
        ));
    }
    if alpha < 1 {
        return Err(Error::InvalidParameter("alpha must be >= 1".into()));
    }
    if t > alpha {
        return Err(Error::InvalidParameter(format!(
            "t = {t} exceeds alpha = {alpha}; ord(i) must divide ord(b)"
        )));
    }
    let pt = p
        .checked_pow(t)
        .ok_or(Error::InvalidParameter("p^t overflows".into()))?;
    if (q - 1) % pt != 0 {
        return Err(Error::InvalidParameter(format!(
            "p^t = {pt} does not divide q - 1 = {}",
            q - 1
        )));
    }
    let pa = p
        .checked_pow(alpha)
        .ok_or(Error::InvalidParameter("p^alpha overflows".into()))?;
    let order_u64 = q
        .checked_mul(pa)
        .ok_or(Error::InvalidParameter("q * p^alpha overflows".into()))?;
    let order = order_u64 as usize;
    check_cap(order, cap)?;
    let i = if t == 0 {
        1
    } else {
        (2..q)
            .find(|&x| multiplicative_order(x, q) == pt)
            .expect("p^t | q-1 guarantees an element of that order in (Z/q)*")
    };
    let qu = q as usize;
    let pau = pa as usize;
    // (a^j b^e)(a^k b^f) = a^{j + k·i^e} b^{e+f}
    let mut i_pow = vec![0u64; pau];
    for (e, slot) in i_pow.iter_mut().enumerate() {
        *slot = pow_mod(i, e as u64, q);
    }
    let mut mul = vec![0u16; order * order];
    for e in 0..pau {
        for j in 0..qu {
            for f in 0..pau {
                for k in 0..qu {
                    let eo = (e + f) % pau;
                    let jo = (j + (k as u64 * i_pow[e] % q) as usize) % qu;
                    mul[(e * qu + j) * order + (f * qu + k)] = (eo * qu + jo) as u16;
                }
            }
        }
    }
    GroupTable::from_mul_table(GroupSpec::Semidirect { q, p, alpha, t }, order, mul)
}

/// Default cap on the permutation degree for S_m / A_m.
pub const MAX_PERM_DEGREE: usize = 6;

fn perm_table(spec: GroupSpec, perms: Vec<Permutation>) -> Result<GroupTable> {
    let n = perms.len();
    let index: std::collections::HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.image(), i))
        .collect();
    let mut mul = vec![0u16; n * n];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            mul[i * n + j] = index[a.compose(b).image()] as u16;
        }
    }
    GroupTable::from_mul_table(spec, n, mul)
}

fn all_perms(m: usize) -> Vec<Permutation> {
    // Lexicographic enumeration of image arrays; the identity comes first.
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn rec(m: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == m {
            out.push(Permutation::from_image(cur.clone()).unwrap());
            return;
        }
        for x in 0..m {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(m, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(m, &mut cur, &mut used, &mut out);
    out
}

/// The symmetric group S_m on {0..m-1}, elements in lexicographic order of
/// their image arrays.
pub fn make_symmetric(m: usize) -> Result<GroupTable> {
    if !(2..=MAX_PERM_DEGREE).contains(&m) {
        return Err(if m < 2 {
            Error::InvalidParameter(format!("symmetric group needs 2 <= m, got {m}"))
        } else {
            Error::SizeLimit {
                what: "permutation degree",
                got: m,
                cap: MAX_PERM_DEGREE,
            }
        });
    }
    perm_table(GroupSpec::Symmetric(m as u64), all_perms(m))
}

/// The alternating group A_m, same enumeration filtered to even permutations.
pub fn make_alternating(m: usize) -> Result<GroupTable> {
    if !(2..=MAX_PERM_DEGREE).contains(&m) {
        return Err(if m < 2 {
            Error::InvalidParameter(format!("alternating group needs 2 <= m, got {m}"))
        } else {
            Error::SizeLimit {
                what: "permutation degree",
                got: m,
                cap: MAX_PERM_DEGREE,
            }
        });
    }
    let perms: Vec<Permutation> = all_perms(m)
        .into_iter()
        .filter(Permutation::is_even)
        .collect();
    perm_table(GroupSpec::Alternating(m as u64), perms)
}

/// Closure of a generating set of permutations under composition, sorted
/// lexicographically (the identity sorts first and gets index 0).
pub fn make_from_generators(perms: &[Permutation]) -> Result<GroupTable> {
    make_from_generators_capped(perms, DEFAULT_MAX_ORDER)
}

pub(crate) fn make_from_generators_capped(perms: &[Permutation], cap: usize) -> Result<GroupTable> {
    if perms.is_empty() {
        return Err(Error::InvalidParameter(
            "at least one generator is required".into(),
        ));
    }
    let m = perms.iter().map(Permutation::degree).max().unwrap();
    let gens: Vec<Permutation> = perms.iter().map(|p| p.padded(m)).collect();
    let mut elems: Vec<Permutation> = vec![Permutation::identity(m)];
    let mut seen: std::collections::HashSet<Vec<usize>> =
        std::collections::HashSet::from([elems[0].image().to_vec()]);
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        head += 1;
        for g in &gens {
            let next = cur.compose(g);
            if seen.insert(next.image().to_vec()) {
                if elems.len() >= cap {
                    return Err(Error::SizeLimit {
                        what: "generated group order",
                        got: elems.len() + 1,
                        cap,
                    });
                }
                elems.push(next);
            }
        }
    }
    elems.sort();
    let spec = GroupSpec::Generated(gens);
    perm_table(spec, elems)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        assert!(make_cyclic(1).is_err());
        assert!(make_dihedral(7).is_err());
        assert!(make_dihedral(4).is_err());
        assert!(make_generalized_quaternion(10).is_err());
        assert!(make_generalized_quaternion(4).is_err());
        assert!(make_modular(4, 3).is_err());
        assert!(make_metacyclic_semidirect(5, 3, 1, 1).is_err()); // 3 does not divide 4
        assert!(make_metacyclic_semidirect(7, 7, 1, 1).is_err());
        assert!(make_symmetric(7).is_err());
        assert!(make_cyclic_capped(5000, DEFAULT_MAX_ORDER).is_err());
    }

    #[test]
    fn dihedral_presentation_relations() {
        // Verified directly against the table: a = index 1, b = index n.
        for two_n in [6u64, 8, 12] {
            let g = make_dihedral(two_n).unwrap();
            let n = (two_n / 2) as usize;
            let a = 1;
            let b = n;
            assert_eq!(g.pow(a, n as u32), GroupTable::IDENTITY);
            assert_eq!(g.pow(b, 2), GroupTable::IDENTITY);
            // ab = ba^{-1}
            assert_eq!(g.mul(a, b), g.mul(b, g.inv(a)));
            assert_eq!(g.elem_order(a), n as u32);
        }
    }

    #[test]
    fn dihedral_6_is_s3_shape() {
        let g = make_dihedral(6).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        // three reflections of order 2
        let count = (0..6).filter(|&x| g.elem_order(x) == 2).count();
        assert_eq!(count, 3);
    }

    #[test]
    fn quaternion_relations_and_unique_involution() {
        let g = make_generalized_quaternion(8).unwrap();
        let n = 2; // Q_8 = Q_{4n} with n = 2
        let a = 1;
        let b = 2 * n; // first coset element
        assert_eq!(g.pow(a, 2 * n as u32), GroupTable::IDENTITY);
        assert_eq!(g.mul(b, b), g.pow(a, n as u32)); // b² = aⁿ
        assert_eq!(g.mul(g.mul(b, a), g.inv(b)), g.inv(a)); // bab⁻¹ = a⁻¹
        assert_eq!(g.elem_order(b), 4);
        // exactly one element of order 2, found by scanning the order table
        let involutions: Vec<usize> = (0..8).filter(|&x| g.elem_order(x) == 2).collect();
        assert_eq!(involutions, vec![n]);
        // same scan for Q_16 and Q_24
        for four_n in [16u64, 24] {
            let g = make_generalized_quaternion(four_n).unwrap();
            let involutions = (0..g.order()).filter(|&x| g.elem_order(x) == 2).count();
            assert_eq!(involutions, 1, "Q_{four_n} must have a unique involution");
        }
    }

    #[test]
    fn modular_relations() {
        for (p, alpha) in [(2u64, 4u32), (3, 3)] {
            let g = make_modular(p, alpha).unwrap();
            assert_eq!(g.order(), p.pow(alpha) as usize);
            let m = p.pow(alpha - 1) as usize;
            let a = 1;
            let b = m; // first coset element
            let r = (p.pow(alpha - 2) + 1) as u32;
            assert_eq!(g.pow(a, m as u32), GroupTable::IDENTITY);
            assert_eq!(g.pow(b, p as u32), GroupTable::IDENTITY);
            assert_eq!(g.mul(g.mul(b, a), g.inv(b)), g.pow(a, r));
        }
    }

    #[test]
    fn semidirect_relations_and_trivial_action() {
        let g = make_metacyclic_semidirect(3, 2, 1, 1).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian()); // ≅ S_3
        let g21 = make_metacyclic_semidirect(7, 3, 1, 1).unwrap();
        assert_eq!(g21.order(), 21);
        assert!(!g21.is_abelian());
        // t = 0 gives the direct product; Z_5 x Z_2 is abelian (≅ Z_10)
        let g10 = make_metacyclic_semidirect(5, 2, 1, 0).unwrap();
        assert!(g10.is_abelian());
        assert!(g10.is_cyclic());
    }

    #[test]
    fn symmetric_and_alternating() {
        assert_eq!(make_symmetric(3).unwrap().order(), 6);
        assert_eq!(make_symmetric(4).unwrap().order(), 24);
        let a4 = make_alternating(4).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.is_abelian());
        assert_eq!(make_alternating(2).unwrap().order(), 1);
    }

    #[test]
    fn generator_closure() {
        let c4 = make_from_generators(&[Permutation::parse_cycles("(0 1 2 3)").unwrap()]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_cyclic());
        let s3 = make_from_generators(&[
            Permutation::parse_cycles("(0 1)").unwrap(),
            Permutation::parse_cycles("(0 1 2)").unwrap(),
        ])
        .unwrap();
        assert_eq!(s3.order(), 6);
        // {(0 1 2), (1 2 3)} generates A_4: brute-force closure gives 12.
        let a4 = make_from_generators(&[
            Permutation::parse_cycles("(0 1 2)").unwrap(),
            Permutation::parse_cycles("(1 2 3)").unwrap(),
        ])
        .unwrap();
        assert_eq!(a4.order(), 12);
        // cap is enforced
        let too_big = make_from_generators_capped(
            &[
                Permutation::parse_cycles("(0 1)").unwrap(),
                Permutation::parse_cycles("(0 1 2 3 4 5)").unwrap(),
            ],
            100,
        );
        assert!(too_big.is_err());
    }

    #[test]
    fn product_with_trivial_factor() {
        let g = make_cyclic(6).unwrap();
        let t = GroupTable::trivial();
        let p = make_direct_product(&g, &t).unwrap();
        assert_eq!(p.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(p.mul(a, b), g.mul(a, b));
            }
        }
    }
}
