use thiserror::Error;

/// Errors raised by semigroup, partition and quotient operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("generators have gcd {0}, expected 1")]
    NonCoprimeGenerators(u64),
    #[error("{0} is not an element of the semigroup")]
    ApNotMember(u64),
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("operation undefined for the full monoid N")]
    FullMonoid,
    #[error("d = {d} exceeds the enumeration limit {max}")]
    LimitExceeded { d: u64, max: u64 },
    #[error("residues sum to {sum}, which is not 0 mod {d}")]
    BadResidueSum { d: u64, sum: u64 },
    #[error("{value} is outside [0, {d})")]
    OutOfRange { value: u64, d: u64 },
    #[error("supplied generators do not generate the semigroup")]
    NotAGeneratingSet,
    #[error("Frobenius number {0} is even")]
    EvenFrobenius(i64),
    #[error("inadmissible rho {rho}: {reason}")]
    BadRho { rho: u64, reason: String },
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("integer overflow")]
    Overflow,
    #[error("cannot parse generators: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
