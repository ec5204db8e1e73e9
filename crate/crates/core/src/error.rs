use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed sequence literal; `position` is a byte offset into the input.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("literal at position {position} does not fit in 64 bits")]
    ValueOverflow { position: usize },

    #[error("arithmetic overflow computing {what} at n={n}")]
    Overflow { what: &'static str, n: u64 },

    #[error("contract violation: {0}")]
    Contract(String),

    /// A pigeonhole window would need more values than we are willing to materialize.
    #[error("window of {0} values exceeds the materialization limit")]
    Capacity(u64),

    #[error("guard rail: {0}")]
    GuardRail(String),

    #[error("clause '{clause}' failed: {detail}")]
    ClauseFailed { clause: String, detail: String },

    /// Something a lemma rules out happened. Always a bug.
    #[error("internal invariant failure: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn overflow(what: &'static str, n: u64) -> Self {
        Error::Overflow { what, n }
    }

    /// True for errors caused by bad user input rather than by the computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::ValueOverflow { .. } | Error::GuardRail(_)
        )
    }
}
