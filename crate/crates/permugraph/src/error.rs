//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A constructor parameter violates its family constraints.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A construction would exceed a configured size cap.
    #[error("size limit exceeded: {what} is {got}, cap is {cap}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    /// A group-spec string (or graph name) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// The permutability graph is undefined: only the trivial group and
    /// groups of prime order have no proper nontrivial cyclic subgroup.
    #[error(
        "permutability graph undefined for {0}: the group has no proper nontrivial cyclic subgroup"
    )]
    UndefinedGraph(String),

    /// A constructed multiplication table failed the group-axiom checks.
    #[error("not a group table: {0}")]
    NotAGroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;
