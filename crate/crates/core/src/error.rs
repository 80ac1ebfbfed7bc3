use alloc::string::String;
use core::fmt;

/// Failures reported by monoid, fraction and torsion operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidError {
    /// An element was handed to a monoid instance it does not belong to.
    ForeignElement { expected: String, found: String },
    /// `a` does not left-divide `c`, so `left_cancel(a, c)` has no answer.
    NotLeftMultiple,
    /// The two elements have no common right multiple.
    NoCommonMultiple,
    /// An exhaustive search could not finish within its configured bound.
    SearchBoundExceeded { bound: usize },
    /// Word reversing did not terminate within its step cap.
    StepBoundExceeded { cap: usize },
    /// A generator index outside `0..count`.
    GeneratorOutOfRange { index: usize, count: usize },
    /// A pair sequence is too short for the requested identity.
    InsufficientPairs { needed: usize, available: usize },
    /// Data that does not describe a valid element of the instance.
    Malformed(String),
    /// A mathematical guarantee failed to hold. Always a bug.
    InternalInvariantViolation(String),
}

impl fmt::Display for MonoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidError::ForeignElement { expected, found } => {
                write!(f, "element of {found} used in monoid {expected}")
            }
            MonoidError::NotLeftMultiple => f.write_str("not a left multiple"),
            MonoidError::NoCommonMultiple => f.write_str("no common right multiple"),
            MonoidError::SearchBoundExceeded { bound } => {
                write!(f, "exhaustive search exceeded its bound of {bound}")
            }
            MonoidError::StepBoundExceeded { cap } => {
                write!(f, "word reversing exceeded {cap} steps")
            }
            MonoidError::GeneratorOutOfRange { index, count } => {
                write!(f, "generator index {index} out of range (monoid has {count})")
            }
            MonoidError::InsufficientPairs { needed, available } => {
                write!(f, "need {needed} pairs, sequence has {available}")
            }
            MonoidError::Malformed(msg) => write!(f, "malformed element: {msg}"),
            MonoidError::InternalInvariantViolation(msg) => {
                write!(f, "internal invariant violated: {msg}")
            }
        }
    }
}

impl core::error::Error for MonoidError {}

pub type Result<T> = core::result::Result<T, MonoidError>;
