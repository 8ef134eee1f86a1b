//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A descriptor or table failed structural validation.
    Malformed(String),
    /// A size or enumeration cap was exceeded.
    CapExceeded {
        what: String,
        needed: u128,
        cap: u128,
    },
    /// The symbolic marker for the ring of integers cannot be materialized.
    NonArtinian,
    /// A non-central idempotent (the witness) blocks an abelian-only operation.
    NotAbelian { witness: usize },
    /// The subgroup passed to a quotient construction is not normal.
    NotNormal,
    /// A two-sided ideal was required.
    NotTwoSided,
    /// A proper ideal was required.
    ImproperIdeal,
    /// The ideal passed to idempotent lifting is not nilpotent.
    NotNilpotent,
    /// The element passed to idempotent lifting is not idempotent mod the ideal.
    NotIdempotent,
    /// The ring is not local.
    NotLocal,
    /// A named precondition of the operation does not hold.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(msg) => write!(f, "malformed input: {msg}"),
            Error::CapExceeded { what, needed, cap } => {
                write!(f, "cap exceeded for {what}: needed {needed}, cap {cap}")
            }
            Error::NonArtinian => {
                write!(
                    f,
                    "the integer-ring marker is non-artinian and cannot be materialized"
                )
            }
            Error::NotAbelian { witness } => {
                write!(
                    f,
                    "ring is not abelian: element {witness} is a non-central idempotent"
                )
            }
            Error::NotNormal => write!(f, "subgroup is not normal"),
            Error::NotTwoSided => write!(f, "ideal is not two-sided"),
            Error::ImproperIdeal => write!(f, "ideal is not proper"),
            Error::NotNilpotent => write!(f, "ideal is not nilpotent"),
            Error::NotIdempotent => write!(f, "element is not idempotent modulo the ideal"),
            Error::NotLocal => write!(f, "ring is not local"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
