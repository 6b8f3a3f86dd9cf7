use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group too large: closure exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("element {index} belongs to a different group")]
    ForeignElement { index: usize },

    #[error("subgroup is not normal: conjugating {n} by {g} leaves the subgroup")]
    NotNormal { g: usize, n: usize },

    #[error("section is not elementary abelian: {0}")]
    NotElementaryAbelian(String),

    #[error("section too large: {count} subspaces exceed the enumeration cap of {cap}")]
    SectionTooLarge { count: u128, cap: u128 },

    #[error("more than {cap} normal subgroups to enumerate")]
    TooManySubgroups { cap: usize },

    #[error("subgroup is not abelian: {a} and {b} do not commute")]
    NotAbelian { a: usize, b: usize },

    #[error("index {index} is beyond the computed series (length {len})")]
    IndexBeyondClass { index: usize, len: usize },

    #[error("character table cap exceeded: group order {order} > cap {cap}")]
    CharacterCap { order: usize, cap: usize },

    #[error("character table consistency failure: {0}")]
    CharacterConsistency(String),

    #[error("unknown builtin family `{0}`")]
    UnknownFamily(String),

    #[error("parse error in {path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error("expected-fact mismatch: {fact} {actual} \u{2260} {expected} (group {name})")]
    ExpectedMismatch {
        name: String,
        fact: &'static str,
        actual: String,
        expected: String,
    },

    #[error("I/O error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Errors that come from a configured size limit rather than from bad
    /// input or a broken invariant.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::GroupTooLarge { .. }
                | Error::SectionTooLarge { .. }
                | Error::TooManySubgroups { .. }
                | Error::CharacterCap { .. }
        )
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
