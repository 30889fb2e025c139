use alloc::string::String;
use core::fmt;

/// Every failure the library reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A generator id was used with two different parities.
    Context(String),
    /// A generator had no value at the evaluation point.
    Unassigned(String),
    /// The value assigned to a generator has the wrong parity or is not a Grassmann element.
    Assignment(String),
    /// A series or ring element has no inverse.
    NotInvertible(String),
    /// Not enough known coefficients to finish a series computation.
    OrderExhausted,
    /// Sizes or degrees of the arguments do not agree.
    Size(String),
    /// An argument lies outside the domain of the operation.
    Domain(String),
    /// A tableau filling is not standard.
    NotStandard,
    /// A pole survived consecutive evaluation in the fusion procedure.
    Fusion(String),
    /// The spectrum of a supermatrix body is degenerate.
    DegenerateSpectrum(String),
    /// Parse or format error.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Context(s) => write!(f, "generator context mismatch: {s}"),
            Error::Unassigned(s) => write!(f, "generator {s} has no assigned value"),
            Error::Assignment(s) => write!(f, "bad assignment: {s}"),
            Error::NotInvertible(s) => write!(f, "not invertible: {s}"),
            Error::OrderExhausted => write!(f, "truncation order exhausted"),
            Error::Size(s) => write!(f, "size mismatch: {s}"),
            Error::Domain(s) => write!(f, "outside domain: {s}"),
            Error::NotStandard => write!(f, "tableau is not standard"),
            Error::Fusion(s) => write!(f, "fusion procedure: {s}"),
            Error::DegenerateSpectrum(s) => write!(f, "degenerate spectrum: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
