//! Permutations on {0..m-1}, the carrier for the symmetric/alternating and
//! generator-closure constructions. Cycle notation is accepted on input and
//! produced on output, e.g. `(0 1 2)(3 4)`.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored as its image array: `image[x]` is where `x` maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from an image array, checking bijectivity.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let m = image.len();
        let mut seen = vec![false; m];
        for &x in &image {
            if x >= m || seen[x] {
                return Err(Error::InvalidParameter(
                    "permutation image array is not a bijection".into(),
                ));
            }
            seen[x] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(m: usize) -> Self {
        Self {
            image: (0..m).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            image: (0..self.degree())
                .map(|x| self.image[other.image[x]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.degree()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Self { image }
    }

    /// Extends the domain to `m` points, fixing the new ones.
    pub fn padded(&self, m: usize) -> Self {
        assert!(m >= self.degree());
        let mut image = self.image.clone();
        image.extend(image.len()..m);
        Self { image }
    }

    /// Sign of the permutation: true when even.
    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut odd_transpositions = 0usize;
        for start in 0..n {
            if !seen[start] {
                let mut len = 0;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.image[x];
                    len += 1;
                }
                odd_transpositions += len - 1;
            }
        }
        odd_transpositions % 2 == 0
    }

    /// Parses cycle notation like `(0 1 2)(3 4)`; `()` is the identity on an
    /// empty domain. The domain is the largest point mentioned plus one.
    pub fn parse_cycles(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in permutation {s:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!(
                    "unexpected text in permutation {s:?}"
                )));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced '(' in permutation {s:?}")))?;
            let inner = &rest[open + 1..close];
            let points: Vec<usize> = inner
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in permutation {s:?}")))
                })
                .collect::<Result<_>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = rest[close + 1..].trim_start();
        }
        let m = cycles
            .iter()
            .flat_map(|c| c.iter())
            .max()
            .map_or(0, |&mx| mx + 1);
        let mut image: Vec<usize> = (0..m).collect();
        for c in &cycles {
            let mut distinct = c.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != c.len() {
                return Err(Error::Parse(format!("repeated point in cycle of {s:?}")));
            }
            for (i, &x) in c.iter().enumerate() {
                image[x] = c[(i + 1) % c.len()];
            }
        }
        // Cycles must be disjoint for the image to stay a bijection.
        Self::from_image(image)
            .map_err(|_| Error::Parse(format!("cycles are not disjoint in {s:?}")))
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle form with fixed points omitted; identity prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.image[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse_cycles("(0 1 2)(3 4)").unwrap();
        assert_eq!(p.image(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        let q = Permutation::parse_cycles(&p.to_string()).unwrap();
        assert_eq!(p, q);
        assert_eq!(Permutation::parse_cycles("()").unwrap().degree(), 0);
    }

    #[test]
    fn compose_inverse() {
        let p = Permutation::parse_cycles("(0 1 2 3)").unwrap();
        let id = Permutation::identity(4);
        assert_eq!(p.compose(&p.inverse()), id);
        assert_eq!(p.inverse().compose(&p), id);
        // (0 1)(0 1 2) applied right-to-left: x -> (0 1 2) -> (0 1)
        let a = Permutation::parse_cycles("(0 1)").unwrap().padded(3);
        let b = Permutation::parse_cycles("(0 1 2)").unwrap();
        assert_eq!(a.compose(&b).image(), &[0, 2, 1]);
    }

    #[test]
    fn parity() {
        assert!(Permutation::parse_cycles("(0 1 2)").unwrap().is_even());
        assert!(!Permutation::parse_cycles("(0 1)").unwrap().is_even());
        assert!(Permutation::identity(5).is_even());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles("(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles("(0 0)").is_err());
        assert!(Permutation::from_image(vec![0, 0]).is_err());
    }
}
