use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair {{{u},{v}}} is oriented more than once")]
    ConflictingArc { u: usize, v: usize },
    #[error("pair {{{u},{v}}} has no orientation")]
    IncompleteTournament { u: usize, v: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    BadVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} orientation bits, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("malformed tournament record: {0}")]
    BadFormat(String),
    #[error("offsets do not define a tournament on {n} vertices (difference {offset})")]
    NotATournament { n: usize, offset: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("({u},{v}) is not an arc")]
    NotAnArc { u: usize, v: usize },
    #[error("expected a 5-vertex tournament, got {0} vertices")]
    WrongOrder(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
