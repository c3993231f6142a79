use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    Domain(&'static str),
    /// An argument is valid in principle but outside the validated
    /// double-precision envelope.
    Range { what: &'static str, value: f64, limit: f64 },
    /// Two algebraically equivalent evaluation routes disagreed.
    Inconsistent { what: &'static str, a: f64, b: f64 },
    /// An iterative numerical procedure failed to converge.
    NoConvergence(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Range { what, value, limit } => {
                write!(f, "range error: {what} = {value} exceeds {limit}")
            }
            Error::Inconsistent { what, a, b } => {
                write!(f, "internal inconsistency in {what}: {a} vs {b}")
            }
            Error::NoConvergence(what) => write!(f, "no convergence: {what}"),
        }
    }
}

impl core::error::Error for Error {}
