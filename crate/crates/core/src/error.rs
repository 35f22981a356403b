use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} out of range for order {order}")]
    DegreeOutOfRange { order: i64, degree: i64 },

    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),

    #[error("order {0} is not even")]
    OrderNotEven(i64),

    /// A rational result that must be an integer was not. Every identity in
    /// this crate is exact, so this always signals an internal bug.
    #[error("non-integral result in {context}: {value}")]
    NonIntegral { context: &'static str, value: String },

    #[error("explicit enumeration limited to m <= {limit}, got m = {m}")]
    EnumerationLimit { m: i64, limit: i64 },

    #[error("range violation: {0}")]
    RangeViolation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported claim: {0}")]
    UnsupportedClaim(String),

    #[error("identity {identity} violated: lhs = {lhs}, rhs = {rhs}")]
    IdentityViolation {
        identity: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

impl Error {
    /// Internal invariant violations, as opposed to bad caller input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NonIntegral { .. } | Error::IdentityViolation { .. })
    }
}
