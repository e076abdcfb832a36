use thiserror::Error;

/// Errors raised by the library.
///
/// Precondition failures carry enough context to locate the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length {0} must be odd and at least 1")]
    EvenLength(u32),
    #[error("extension degree {0} exceeds the supported maximum of 64")]
    ExtensionTooLarge(u32),
    #[error("residue {0} is not in the index set of the ambient ring")]
    NotInIndexSet(u32),
    #[error("set is not a union of 4-cyclotomic cosets (residue {0} breaks closure)")]
    NotCosetClosed(u32),
    #[error("multiplier {b} is not a unit modulo {modulus}")]
    NotAUnit { b: i64, modulus: u32 },
    #[error("invalid splitting: {0}")]
    InvalidSplitting(String),
    #[error("ambient rings differ: {0}")]
    AmbientMismatch(String),
    #[error("{n1} is not admissible: gcd({n1}, 2^{e}+1) = {g} with j = {j}")]
    NotAdmissible { n1: u32, j: u32, e: u32, g: u64 },
    #[error("length {n} has no 3^i * n1 factorisation with admissible n1 > 1")]
    NoCanonicalSplitting { n: u32 },
    #[error("enumeration needs 2^{0} splittings; use the streaming iterator")]
    TooManySplittings(u32),
    #[error("generator coefficient is not in GF(4)")]
    GeneratorNotOverBase,
    #[error("code length {0} exceeds the packed search limit of 128")]
    LengthTooLarge(u32),
    #[error("defining set is not dual-containing")]
    NotDualContaining,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
