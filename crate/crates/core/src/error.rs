use thiserror::Error;

pub type Result<T, E = FormError> = std::result::Result<T, E>;

/// Every failure the models, the engine and the theorem checkers can report.
///
/// Subobjects and objects are rendered into the variants as text so that the
/// error is independent of the model that raised it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("parent-mismatch: {what} is not a subobject of {expected}")]
    ParentMismatch { what: String, expected: String },

    #[error("not-normal: {sub} is not normal in {object}")]
    NotNormal { object: String, sub: String },

    #[error("not-conormal: {sub} is not conormal in {object}")]
    NotConormal { object: String, sub: String },

    #[error("not-an-isomorphism: {0}")]
    NotAnIsomorphism(String),

    #[error("not-composable: {0}")]
    NotComposable(String),

    #[error("not-a-homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("no-factorization: {0}")]
    NoFactorization(String),

    #[error("model-capability: {0}")]
    ModelCapability(String),

    #[error("invalid-table: {0}")]
    InvalidTable(String),

    #[error("invalid-ring: {0}")]
    InvalidRing(String),

    #[error("out-of-range: element {index} in an object of order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("not-a-subgroup: {0}")]
    NotASubgroup(String),

    #[error("not-an-additive-subgroup: {0}")]
    NotASubobject(String),

    #[error("invalid-zigzag: {0}")]
    InvalidZigzag(String),

    #[error("not-inducible: {0}")]
    NotInducible(String),

    #[error("internal-consistency: {0}")]
    InternalConsistency(String),

    #[error("hypothesis-violation: {theorem}: {hypothesis}")]
    HypothesisViolation { theorem: String, hypothesis: String },

    #[error("normality-violation: {0}")]
    NormalityViolation(String),
}

impl FormError {
    pub fn hypothesis(theorem: &str, hypothesis: impl Into<String>) -> Self {
        FormError::HypothesisViolation { theorem: theorem.to_string(), hypothesis: hypothesis.into() }
    }

    /// The short kebab-case tag printed before the colon.
    pub fn kind(&self) -> &'static str {
        match self {
            FormError::ParentMismatch { .. } => "parent-mismatch",
            FormError::NotNormal { .. } => "not-normal",
            FormError::NotConormal { .. } => "not-conormal",
            FormError::NotAnIsomorphism(_) => "not-an-isomorphism",
            FormError::NotComposable(_) => "not-composable",
            FormError::NotAHomomorphism(_) => "not-a-homomorphism",
            FormError::NoFactorization(_) => "no-factorization",
            FormError::ModelCapability(_) => "model-capability",
            FormError::InvalidTable(_) => "invalid-table",
            FormError::InvalidRing(_) => "invalid-ring",
            FormError::OutOfRange { .. } => "out-of-range",
            FormError::NotASubgroup(_) => "not-a-subgroup",
            FormError::NotASubobject(_) => "not-an-additive-subgroup",
            FormError::InvalidZigzag(_) => "invalid-zigzag",
            FormError::NotInducible(_) => "not-inducible",
            FormError::InternalConsistency(_) => "internal-consistency",
            FormError::HypothesisViolation { .. } => "hypothesis-violation",
            FormError::NormalityViolation(_) => "normality-violation",
        }
    }
}
