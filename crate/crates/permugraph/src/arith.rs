//! Elementary number theory helpers: trial-division factorization, divisor
//! counting, multiplicative orders and integer partitions (used to enumerate
//! abelian isomorphism classes).

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Trial-division primality test; adequate for the desk-scale orders here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, returned as (prime, exponent)
/// pairs with primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// τ(n): the number of positive divisors of n.
pub fn tau(n: u64) -> u64 {
    assert!(n >= 1, "tau is defined for positive integers");
    factorize(n)
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product()
}

/// a^k mod m.
pub fn pow_mod(a: u64, mut k: u64, m: u64) -> u64 {
    let mut base = a % m;
    let mut acc = 1 % m;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        k >>= 1;
    }
    acc
}

/// Multiplicative order of a modulo m, assuming gcd(a, m) = 1.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    assert!(m >= 2 && gcd(a % m, m) == 1);
    let mut k = 1;
    let mut x = a % m;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    k
}

/// All partitions of `k` into non-increasing positive parts.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn rec(k: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        let mut first = max.min(k);
        while first >= 1 {
            cur.push(first);
            rec(k - first, first, cur, out);
            cur.pop();
            first -= 1;
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_values() {
        assert_eq!(tau(12), 6);
        assert_eq!(tau(1), 1);
        assert_eq!(tau(16), 5); // p^4 for p = 2
        assert_eq!(tau(7), 2);
    }

    #[test]
    fn factorize_roundtrip() {
        for n in 1..500u64 {
            let f = factorize(n);
            let back: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n);
            for &(p, _) in &f {
                assert!(is_prime(p));
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 7), 3);
        assert_eq!(multiplicative_order(3, 7), 6);
        assert_eq!(multiplicative_order(2, 3), 2);
    }

    #[test]
    fn partition_counts() {
        // p(0..=7) = 1,1,2,3,5,7,11,15
        let expect = [1, 1, 2, 3, 5, 7, 11, 15];
        for (k, &want) in expect.iter().enumerate() {
            assert_eq!(partitions(k as u32).len(), want);
        }
    }
}
