use alloc::string::String;
use core::fmt;

/// Errors reported by the library.
///
/// Verification *failures* (an array that is not an OOA, a set of columns
/// that is not covered) are data, not errors; they are reported through
/// [`crate::ooa::CoverageReport`]. `Error` is reserved for violated
/// preconditions and malformed inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` is not prime.
    NotPrime(u64),
    /// Requested cardinality is not a prime power.
    NotPrimePower(u64),
    /// Field larger than the supported desk scale (~2^20 elements).
    FieldTooLarge(u64),
    /// Element code outside `[0, q)`.
    BadElementCode { code: u64, q: u64 },
    /// Multiplicative inverse of zero.
    DivisionByZero,
    /// Discrete logarithm of zero.
    LogOfZero,
    /// The two operands belong to different fields.
    FieldMismatch,
    /// Extension/base cardinalities are incompatible (base^t != ext).
    NotASubfield { base: u64, ext: u64 },
    /// A polynomial that had to be monic is not.
    NotMonic,
    /// The zero polynomial where a nonzero one is required.
    ZeroPolynomial,
    /// The characteristic polynomial is not primitive.
    NotPrimitive,
    /// All-zero LFSR seed.
    ZeroSeed,
    /// Seed length does not match the polynomial degree.
    BadSeedLength { expected: usize, got: usize },
    /// Zero where a nonzero field element is required.
    ZeroArgument,
    /// The addressed subinterval is not a run of zeroes of the stated length.
    NotAZeroRun { start: usize, length: usize },
    /// Run matching failed to pair runs bijectively (generator bug).
    RunMatchingFailed,
    /// Run census disagrees with the expected m-sequence counts.
    RunCensusMismatch(String),
    /// Degree or size constraint violated.
    BadDimension(String),
    /// Array parameters are inconsistent (N != lambda * v^t, symbol range, ...).
    BadArray(String),
    /// Unknown column label or vertex.
    UnknownLabel(String),
    /// Vertex map is not a hypergraph homomorphism.
    NotAHomomorphism(String),
    /// Text format parse error.
    Parse(String),
    /// Construction failed its own verification.
    ConstructionInvalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::FieldTooLarge(q) => write!(f, "field of {q} elements exceeds desk scale"),
            Error::BadElementCode { code, q } => {
                write!(
                    f,
                    "element code {code} out of range for field of {q} elements"
                )
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::LogOfZero => write!(f, "discrete logarithm of zero is undefined"),
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::NotASubfield { base, ext } => {
                write!(
                    f,
                    "field of {base} elements is not a subfield of one of {ext}"
                )
            }
            Error::NotMonic => write!(f, "polynomial is not monic"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::NotPrimitive => write!(f, "polynomial is not primitive"),
            Error::ZeroSeed => write!(f, "LFSR seed must be nonzero"),
            Error::BadSeedLength { expected, got } => {
                write!(f, "seed has {got} symbols, expected {expected}")
            }
            Error::ZeroArgument => write!(f, "argument must be nonzero"),
            Error::NotAZeroRun { start, length } => {
                write!(f, "no run of zeroes of length {length} at position {start}")
            }
            Error::RunMatchingFailed => write!(f, "run matching is not a bijection"),
            Error::RunCensusMismatch(s) => write!(f, "run census mismatch: {s}"),
            Error::BadDimension(s) => write!(f, "dimension error: {s}"),
            Error::BadArray(s) => write!(f, "bad array: {s}"),
            Error::UnknownLabel(s) => write!(f, "unknown label: {s}"),
            Error::NotAHomomorphism(s) => write!(f, "not a homomorphism: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::ConstructionInvalid(s) => write!(f, "construction failed verification: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
