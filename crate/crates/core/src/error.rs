use thiserror::Error;

/// Errors raised by the enumeration, indexing and census routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: result does not fit in 64 bits")]
    Overflow { op: &'static str },

    #[error("{0} is not a Dyck number")]
    NotMember(u64),

    #[error("{0} is not a member of any triplet")]
    NotInTriplet(u64),

    #[error("{0} is neither 1 nor a lone term, so it roots no tree")]
    NotARoot(u64),

    #[error("{op}: argument {value} is outside the supported domain")]
    OutOfDomain { op: &'static str, value: i64 },

    #[error("ballot table has no row {0}")]
    BeyondTable(usize),

    #[error("unknown sequence name `{0}`")]
    UnknownSequence(String),

    #[error("b-file line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("b-file line {line}: expected index {expected}, found {found}")]
    NonConsecutive {
        line: usize,
        expected: i64,
        found: i64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn overflow(op: &'static str) -> Error {
    Error::Overflow { op }
}
