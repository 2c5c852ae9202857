//! Error type shared by all core modules.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inputs live in polynomial rings of different widths, or a free-module
    /// element does not fit the ambient rank.
    Dimension(String),
    /// Division by zero in F_p.
    DivisionByZero,
    /// An operation that requires homogeneous input received an
    /// inhomogeneous element.
    Inhomogeneous(String),
    /// Invalid argument (empty saturation set, zero divisor, bad width, ...).
    Invalid(String),
    /// A degree bound is required but none is available.
    MissingBound(String),
    /// The requested invariant needs a complete Betti table.
    IncompleteTable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(m) => write!(f, "dimension mismatch: {m}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Inhomogeneous(m) => write!(f, "inhomogeneous input: {m}"),
            Error::Invalid(m) => write!(f, "invalid argument: {m}"),
            Error::MissingBound(m) => write!(f, "missing degree bound: {m}"),
            Error::IncompleteTable(m) => write!(f, "incomplete table: {m}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
