use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two polynomials over different numbers of x-variables were combined.
    RankMismatch { left: usize, right: usize },
    /// A one-line word is not a permutation of `1..=n`.
    NotAPermutation,
    /// A column or sequence that must have distinct entries repeats `value`.
    RepeatedEntry { value: usize },
    /// An entry lies outside `1..=n`.
    EntryOutOfRange { value: usize, n: usize },
    /// A partition has more nonzero parts than the rank allows.
    TooManyParts { parts: usize, max: usize },
    /// A sequence that must be weakly decreasing is not.
    NotAPartition,
    /// A shape or top row that must be strictly decreasing is not.
    NotStrict,
    /// An index argument is out of its admissible range.
    IndexOutOfRange { index: usize, bound: usize },
    /// Evaluation hit `0^k` with `k < 0`.
    ZeroToNegativePower,
    /// A filling or configuration fails the HHL conditions.
    NotHhl,
    /// A tableau fails the semistandard conditions.
    NotSemistandard,
    /// A triangular array fails the Gelfand-Tsetlin conditions.
    NotGtPattern,
    /// A value expected in a column is absent.
    ValueAbsent { value: usize },
    /// A generic precondition failure.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            Error::NotAPermutation => f.write_str("not a permutation"),
            Error::RepeatedEntry { value } => write!(f, "repeated entry {value}"),
            Error::EntryOutOfRange { value, n } => {
                write!(f, "entry {value} outside 1..={n}")
            }
            Error::TooManyParts { parts, max } => {
                write!(
                    f,
                    "partition has {parts} nonzero parts, at most {max} allowed"
                )
            }
            Error::NotAPartition => f.write_str("parts are not weakly decreasing"),
            Error::NotStrict => f.write_str("sequence is not strictly decreasing"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::ZeroToNegativePower => f.write_str("zero raised to a negative power"),
            Error::NotHhl => f.write_str("configuration is not HHL"),
            Error::NotSemistandard => f.write_str("tableau is not semistandard"),
            Error::NotGtPattern => f.write_str("array is not a Gelfand-Tsetlin pattern"),
            Error::ValueAbsent { value } => write!(f, "value {value} is absent"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
