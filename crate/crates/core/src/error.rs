use thiserror::Error;

/// Errors raised by semigroup and ideal computations.
///
/// Variants other than [`Error::InternalInconsistency`] are domain errors: the
/// input falls outside the region where an operation is defined.
/// `InternalInconsistency` means two routes that must agree by theory did not,
/// which can only be an implementation bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),

    #[error("generators have gcd {0}, so the semigroup is not numerical")]
    GcdNotOne(i64),

    #[error("operation is undefined for the full semigroup N")]
    FullSemigroup,

    #[error("ideals live over different semigroups")]
    MixedSemigroups,

    #[error("ideal is not contained in the semigroup ring")]
    NotIntegral,

    #[error("first ideal is not contained in the second")]
    NotNested,

    #[error("operation requires a proper ideal")]
    UnitIdeal,

    #[error("semigroup is not minimally generated by three elements")]
    NotThreeGenerated,

    #[error("semigroup is symmetric")]
    SymmetricSemigroup,

    #[error("{0} has more than one positive representation")]
    AmbiguousRepresentation(i64),

    #[error("oracle window of {needed} cells exceeds cap {cap}")]
    WindowTooSmall { needed: u64, cap: u64 },

    #[error("membership sieve of {0} cells is too large")]
    SieveTooLarge(u64),

    #[error("integer overflow")]
    Overflow,

    #[error("{0:?} is not a base-10 integer")]
    InvalidNumber(String),

    #[error("{0:?} is not a family template of terms `k*n+b`")]
    InvalidTemplate(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::NonPositiveGenerator(_) => "NonPositiveGenerator",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::FullSemigroup => "FullSemigroup",
            Error::MixedSemigroups => "MixedSemigroups",
            Error::NotIntegral => "NotIntegral",
            Error::NotNested => "NotNested",
            Error::UnitIdeal => "UnitIdeal",
            Error::NotThreeGenerated => "NotThreeGenerated",
            Error::SymmetricSemigroup => "SymmetricSemigroup",
            Error::AmbiguousRepresentation(_) => "AmbiguousRepresentation",
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::SieveTooLarge(_) => "SieveTooLarge",
            Error::Overflow => "Overflow",
            Error::InvalidNumber(_) => "InvalidNumber",
            Error::InvalidTemplate(_) => "InvalidTemplate",
            Error::InternalInconsistency(_) => "InternalInconsistency",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalInconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn inconsistency(msg: impl Into<String>) -> Error {
    Error::InternalInconsistency(msg.into())
}
