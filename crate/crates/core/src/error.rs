use core::fmt;

use alloc::string::String;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Code length does not equal n(n-1)/2.
    LengthMismatch { expected: usize, found: usize },
    BadAlphabet(char),
    OrderTooLarge(usize),
    ZeroPolynomial,
    BadSize { order: usize, k: usize },
    /// Complete or empty graph handed to a two-distance solver.
    NotTwoDistanceGraph,
    PositiveDimensionalUnexpected,
    RankMismatch { certified: usize, numeric: usize },
    InvalidInterval,
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { expected, found } => {
                write!(f, "code has length {found}, expected {expected}")
            }
            Error::BadAlphabet(c) => write!(f, "unexpected character {c:?} in graph code"),
            Error::OrderTooLarge(n) => write!(f, "graph order {n} is too large"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::BadSize { order, k } => write!(f, "no {k}x{k} minors in a matrix of order {order}"),
            Error::NotTwoDistanceGraph => f.write_str("complete and empty graphs carry a single distance"),
            Error::PositiveDimensionalUnexpected => f.write_str("rank system has infinitely many solutions"),
            Error::RankMismatch { certified, numeric } => {
                write!(f, "numeric rank {numeric} disagrees with certified rank {certified}")
            }
            Error::InvalidInterval => f.write_str("interval does not isolate a single root"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
