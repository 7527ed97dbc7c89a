use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot parse scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: group acts on {group} points but the arrangement has {expected} hyperplanes")]
    DegreeMismatch { group: usize, expected: usize },

    #[error("dimension mismatch: expected {expected} coefficients, found {found} (hyperplane {index})")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("hyperplane {0} has an all-zero normal vector")]
    ZeroNormal(usize),

    #[error("index {index} out of range for {n} hyperplanes")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("flat is empty (inconsistent intersection)")]
    InconsistentFlat,

    #[error("hyperplane {0} cannot be restricted: not a unique proper hyperplane of the restriction")]
    NotRestrictable(usize),

    #[error("orbit exceeds enumeration budget of {budget} sets; use the pseudo-minimal image instead")]
    OrbitBudgetExceeded { budget: usize },

    #[error("exhaustive automorphism check limited to {limit} hyperplanes, arrangement has {n}")]
    ExhaustiveBound { n: usize, limit: usize },

    #[error("brute-force enumeration limited to {limit} hyperplanes, arrangement has {n}")]
    BruteForceBound { n: usize, limit: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is too small for this arrangement")]
    PrimeTooSmall(u64),

    #[error("finite-field interpolation failed: primes too small, increase bound")]
    InterpolationFailed,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("degenerate point configuration: {0}")]
    DegenerateConfiguration(String),

    #[error("supplied group is not a subgroup of the automorphism group")]
    NotAutomorphism,

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::FieldMismatch { .. } => "field_mismatch",
            Error::InvalidField(_) => "invalid_field",
            Error::ParseScalar { .. } => "parse_scalar",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ZeroNormal(_) => "zero_normal",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::InconsistentFlat => "inconsistent_flat",
            Error::NotRestrictable(_) => "not_restrictable",
            Error::OrbitBudgetExceeded { .. } => "orbit_budget_exceeded",
            Error::ExhaustiveBound { .. } => "exhaustive_bound",
            Error::BruteForceBound { .. } => "brute_force_bound",
            Error::NotPrime(_) => "not_prime",
            Error::PrimeTooSmall(_) => "prime_too_small",
            Error::InterpolationFailed => "interpolation_failed",
            Error::Unsupported(_) => "unsupported",
            Error::InvalidFamily(_) => "invalid_family",
            Error::DegenerateConfiguration(_) => "degenerate_configuration",
            Error::NotAutomorphism => "not_automorphism",
            Error::Format(_) => "format",
        }
    }
}
