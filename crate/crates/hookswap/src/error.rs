use core::fmt;
use core::num::ParseIntError;

use crate::partition::Cell;

/// Errors reported by validating constructors and fallible operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Partition parts must be weakly decreasing.
    PartsNotDecreasing {
        index: usize,
        prev: usize,
        next: usize,
    },
    /// Partition parts must be strictly positive.
    PartNotPositive { index: usize },
    /// The cell does not lie in the diagram of the partition.
    CellOutOfDiagram { cell: Cell },
    /// A malformed cell encoding (expected "x,y" with 1-based coordinates).
    CellEncoding,
    /// The partition has a part larger than the column bound of the box.
    PartExceedsBox { largest: usize, bound: usize },
    /// A named structural invariant was violated.
    Invariant(&'static str),
    /// The target statistics do not preserve the required sum.
    TargetSumMismatch { current: usize, target: usize },
    /// q-binomial lower index out of range.
    BinomialIndexOutOfRange { n: usize, k: usize },
    /// Series operands must share the same truncation degree.
    DegreeMismatch { left: usize, right: usize },
    /// The inverse Pochhammer expansion needs a starting exponent of at least 1.
    PochhammerStartZero,
    /// A component of a text encoding is not a valid integer.
    IntParse(ParseIntError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PartsNotDecreasing { index, prev, next } => write!(
                f,
                "parts must be weakly decreasing: parts[{}] = {} < parts[{}] = {}",
                index,
                next,
                index - 1,
                prev
            ),
            Error::PartNotPositive { index } => {
                write!(f, "parts must be positive: parts[{index}] is zero")
            }
            Error::CellOutOfDiagram { cell } => {
                write!(f, "cell {cell} lies outside the diagram")
            }
            Error::CellEncoding => write!(f, "cell must be encoded as \"x,y\" with x, y >= 1"),
            Error::PartExceedsBox { largest, bound } => {
                write!(f, "largest part {largest} exceeds the column bound {bound}")
            }
            Error::Invariant(what) => write!(f, "invariant violated: {what}"),
            Error::TargetSumMismatch { current, target } => write!(
                f,
                "target statistics must preserve the sum: current {current}, target {target}"
            ),
            Error::BinomialIndexOutOfRange { n, k } => {
                write!(f, "q-binomial index out of range: k = {k} > n = {n}")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "series truncation degrees differ: {left} vs {right}")
            }
            Error::PochhammerStartZero => {
                write!(
                    f,
                    "inverse Pochhammer expansion requires a start exponent >= 1"
                )
            }
            Error::IntParse(e) => write!(f, "invalid integer: {e}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseIntError> for Error {
    fn from(e: ParseIntError) -> Self {
        Error::IntParse(e)
    }
}
