use thiserror::Error;

/// Errors raised by every fallible operation of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("free-group rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit: {0}")]
    NotUnit(String),
    #[error("element is not a member of the module: {0}")]
    NotMember(String),
    #[error("containment precondition violated: {0}")]
    NotContained(String),
    #[error("the zero module is not a valid base for this operation")]
    ZeroModule,
    #[error(
        "submodules of K[F]^k with k > 1 need a free group of rank >= 2; \
         the rank-1 normal-form route is not implemented"
    )]
    RankOneFreeGroup,
    #[error("basis completion exceeded {0} insertions")]
    CompletionCap(usize),
    #[error("basis element is not a binomial u - v: {0}")]
    NonBinomial(String),
    #[error("enumeration needs {needed} cases, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("word measures need a finite prime field")]
    NotFiniteField,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidField(_) => "invalid_field",
            Error::FieldMismatch(..) => "field_mismatch",
            Error::RankMismatch(..) => "rank_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::ZeroElement => "zero_element",
            Error::InvalidWord(_) => "invalid_word",
            Error::Parse { .. } => "parse",
            Error::DivisionByZero => "division_by_zero",
            Error::NotUnit(_) => "not_unit",
            Error::NotMember(_) => "not_member",
            Error::NotContained(_) => "not_contained",
            Error::ZeroModule => "zero_module",
            Error::RankOneFreeGroup => "rank_one_free_group",
            Error::CompletionCap(_) => "completion_cap",
            Error::NonBinomial(_) => "non_binomial",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::NotFiniteField => "not_finite_field",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}
