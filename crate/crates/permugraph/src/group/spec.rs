//! The textual group-spec grammar and its parsed form.
//!
//! Grammar (one line, whitespace-separated tokens):
//!
//! ```text
//! Z n  |  D n  |  Q n  |  M p alpha  |  SD q p alpha t  |  S n  |  A n
//! P <perm>;<perm>;...          cycle notation, e.g. P (0 1);(0 1 2)
//! <spec> x <spec>              direct product, left-associative
//! ```
//!
//! `D n` and `Q n` take the group order (so `D 8` is the dihedral group of
//! order 8 and `Q 8` the quaternion group).

use std::fmt;

use super::families;
use super::{GroupTable, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Parsed descriptor of a group construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// `Z n`
    Cyclic(u64),
    /// `D n` (order n)
    Dihedral(u64),
    /// `Q n` (order n)
    Quaternion(u64),
    /// `M p alpha`
    Modular { p: u64, alpha: u32 },
    /// `SD q p alpha t`
    Semidirect { q: u64, p: u64, alpha: u32, t: u32 },
    /// `S n`
    Symmetric(u64),
    /// `A n`
    Alternating(u64),
    /// `P <perm>;...`
    Generated(Vec<Permutation>),
    /// `<spec> x <spec>`, left-associative
    Product(Box<GroupSpec>, Box<GroupSpec>),
    /// Provenance tag for tables built directly from a multiplication table
    /// (subgroup realizations, tests). Not part of the grammar.
    TableLiteral(String),
}

impl GroupSpec {
    /// Parses the textual grammar.
    pub fn parse(input: &str) -> Result<Self> {
        let tokens: Vec<&str> = input.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse("empty group spec".into()));
        }
        // Split on top-level `x` tokens; every factor is a family spec.
        let mut factors: Vec<&[&str]> = Vec::new();
        let mut start = 0;
        for (i, tok) in tokens.iter().enumerate() {
            if *tok == "x" {
                factors.push(&tokens[start..i]);
                start = i + 1;
            }
        }
        factors.push(&tokens[start..]);
        let mut parsed = factors
            .into_iter()
            .map(|f| Self::parse_factor(f, input))
            .collect::<Result<Vec<_>>>()?
            .into_iter();
        let first = parsed.next().unwrap();
        Ok(parsed.fold(first, |acc, next| {
            GroupSpec::Product(Box::new(acc), Box::new(next))
        }))
    }

    fn parse_factor(tokens: &[&str], whole: &str) -> Result<Self> {
        let err = |msg: &str| Error::Parse(format!("{msg} in group spec {whole:?}"));
        if tokens.is_empty() {
            return Err(err("empty factor"));
        }
        let num = |t: &str| -> Result<u64> {
            t.parse::<u64>()
                .map_err(|_| err(&format!("expected an integer, got {t:?}")))
        };
        let arity = |want: usize| -> Result<()> {
            if tokens.len() != want + 1 {
                Err(err(&format!(
                    "family {:?} takes {want} parameter(s), got {}",
                    tokens[0],
                    tokens.len() - 1
                )))
            } else {
                Ok(())
            }
        };
        match tokens[0] {
            "Z" => {
                arity(1)?;
                Ok(GroupSpec::Cyclic(num(tokens[1])?))
            }
            "D" => {
                arity(1)?;
                Ok(GroupSpec::Dihedral(num(tokens[1])?))
            }
            "Q" => {
                arity(1)?;
                Ok(GroupSpec::Quaternion(num(tokens[1])?))
            }
            "M" => {
                arity(2)?;
                Ok(GroupSpec::Modular {
                    p: num(tokens[1])?,
                    alpha: num(tokens[2])? as u32,
                })
            }
            "SD" => {
                arity(4)?;
                Ok(GroupSpec::Semidirect {
                    q: num(tokens[1])?,
                    p: num(tokens[2])?,
                    alpha: num(tokens[3])? as u32,
                    t: num(tokens[4])? as u32,
                })
            }
            "S" => {
                arity(1)?;
                Ok(GroupSpec::Symmetric(num(tokens[1])?))
            }
            "A" => {
                arity(1)?;
                Ok(GroupSpec::Alternating(num(tokens[1])?))
            }
            "P" => {
                let body = tokens[1..].join(" ");
                if body.is_empty() {
                    return Err(err("P needs at least one permutation"));
                }
                let perms = body
                    .split(';')
                    .map(Permutation::parse_cycles)
                    .collect::<Result<Vec<_>>>()?;
                let degree = perms.iter().map(Permutation::degree).max().unwrap_or(0);
                Ok(GroupSpec::Generated(
                    perms.into_iter().map(|p| p.padded(degree)).collect(),
                ))
            }
            other => Err(err(&format!("unknown family tag {other:?}"))),
        }
    }

    /// Builds the group table with the default order cap.
    pub fn build(&self) -> Result<GroupTable> {
        self.build_with_cap(DEFAULT_MAX_ORDER)
    }

    /// Builds the group table with an explicit order cap.
    pub fn build_with_cap(&self, cap: usize) -> Result<GroupTable> {
        match self {
            GroupSpec::Cyclic(n) => families::make_cyclic_capped(*n, cap),
            GroupSpec::Dihedral(n) => families::make_dihedral_capped(*n, cap),
            GroupSpec::Quaternion(n) => families::make_generalized_quaternion_capped(*n, cap),
            GroupSpec::Modular { p, alpha } => families::make_modular_capped(*p, *alpha, cap),
            GroupSpec::Semidirect { q, p, alpha, t } => {
                families::make_metacyclic_semidirect_capped(*q, *p, *alpha, *t, cap)
            }
            GroupSpec::Symmetric(n) => families::make_symmetric(*n as usize),
            GroupSpec::Alternating(n) => families::make_alternating(*n as usize),
            GroupSpec::Generated(perms) => families::make_from_generators_capped(perms, cap),
            GroupSpec::Product(a, b) => {
                let left = a.build_with_cap(cap)?;
                let right = b.build_with_cap(cap)?;
                families::make_direct_product_capped(&left, &right, cap)
            }
            GroupSpec::TableLiteral(tag) => Err(Error::InvalidParameter(format!(
                "table literal {tag:?} cannot be rebuilt from its spec"
            ))),
        }
    }

    /// Family tag, used for corpus classification.
    pub fn family(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::Dihedral(_) => "dihedral",
            GroupSpec::Quaternion(_) => "generalized-quaternion",
            GroupSpec::Modular { .. } => "modular-p",
            GroupSpec::Semidirect { .. } => "metacyclic-semidirect",
            GroupSpec::Symmetric(_) => "symmetric",
            GroupSpec::Alternating(_) => "alternating",
            GroupSpec::Generated(_) => "perm-generated",
            GroupSpec::Product(_, _) => "abelian-product",
            GroupSpec::TableLiteral(_) => "table-literal",
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z {n}"),
            GroupSpec::Dihedral(n) => write!(f, "D {n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q {n}"),
            GroupSpec::Modular { p, alpha } => write!(f, "M {p} {alpha}"),
            GroupSpec::Semidirect { q, p, alpha, t } => write!(f, "SD {q} {p} {alpha} {t}"),
            GroupSpec::Symmetric(n) => write!(f, "S {n}"),
            GroupSpec::Alternating(n) => write!(f, "A {n}"),
            GroupSpec::Generated(perms) => {
                write!(f, "P ")?;
                for (i, p) in perms.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GroupSpec::Product(a, b) => write!(f, "{a} x {b}"),
            GroupSpec::TableLiteral(tag) => write!(f, "table<{tag}>"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let s = GroupSpec::parse("Z 4 x Z 2").unwrap();
        assert_eq!(
            s,
            GroupSpec::Product(
                Box::new(GroupSpec::Cyclic(4)),
                Box::new(GroupSpec::Cyclic(2))
            )
        );
        assert_eq!(
            GroupSpec::parse("SD 3 2 2 1").unwrap(),
            GroupSpec::Semidirect {
                q: 3,
                p: 2,
                alpha: 2,
                t: 1
            }
        );
        assert_eq!(GroupSpec::parse("Q 8").unwrap(), GroupSpec::Quaternion(8));
        // left-associative products
        let s = GroupSpec::parse("Z 2 x Z 2 x Z 3").unwrap();
        assert_eq!(s.to_string(), "Z 2 x Z 2 x Z 3");
        match s {
            GroupSpec::Product(left, _) => assert!(matches!(*left, GroupSpec::Product(_, _))),
            _ => panic!("expected product"),
        }
    }

    #[test]
    fn parse_errors() {
        assert!(GroupSpec::parse("").is_err());
        assert!(GroupSpec::parse("Z").is_err());
        assert!(GroupSpec::parse("Z two").is_err());
        assert!(GroupSpec::parse("W 5").is_err());
        assert!(GroupSpec::parse("Z 4 x").is_err());
        assert!(GroupSpec::parse("M 3").is_err());
    }

    #[test]
    fn roundtrip_through_grammar() {
        for s in [
            "Z 12",
            "D 8",
            "Q 16",
            "M 3 3",
            "SD 7 3 1 1",
            "S 4",
            "A 5",
            "Z 4 x Z 2",
            "Z 2 x Z 2 x Z 5",
            "P (0 1 2);(1 2 3)",
            "P (0 1 2 3)",
        ] {
            let spec = GroupSpec::parse(s).unwrap();
            let printed = spec.to_string();
            assert_eq!(printed, s);
            assert_eq!(GroupSpec::parse(&printed).unwrap(), spec);
        }
    }

    #[test]
    fn build_dispatches() {
        assert_eq!(
            GroupSpec::parse("Z 4 x Z 2")
                .unwrap()
                .build()
                .unwrap()
                .order(),
            8
        );
        assert_eq!(
            GroupSpec::parse("P (0 1);(0 1 2)")
                .unwrap()
                .build()
                .unwrap()
                .order(),
            6
        );
    }
}
