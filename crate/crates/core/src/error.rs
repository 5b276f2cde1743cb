use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("coefficient {0} is not defined over F{1}")]
    NotInField(String, u64),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operands belong to different polynomial rings")]
    ContextMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Gröbner basis step budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("the unit ideal has no Krull dimension")]
    UnitIdeal,
    #[error("`{0}` lies in the ideal, so it is zero in the quotient")]
    Degenerate(String),
    #[error("dimension search supports at most 64 variables, got {0}")]
    TooManyVariables(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("ideal is not a monomial ideal")]
    NotMonomial,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("monomial engine supports at most 64 variables, got {0}")]
    TooManyVariables(usize),
    #[error("localization at {0} is the zero ring: the ideal is not contained in the prime")]
    EmptyLocalization(String),
    #[error("operands belong to different polynomial rings")]
    ContextMismatch,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("poset over {vars} variables exceeds the cap of {cap}")]
    TooManyVariables { vars: usize, cap: usize },
    #[error("{0} does not contain the ideal")]
    NotInPoset(String),
    #[error("{0} is not a minimal prime")]
    NotMinimal(String),
    #[error("chain construction requires {0}")]
    Precondition(String),
    #[error("no eligible prime at step {step} of the chain from {from}")]
    Infeasible { step: usize, from: String },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("the ideal is the unit ideal in the local ring; T would be zero")]
    UnitIdeal,
    #[error("unsupported input class: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter constraint violated: {0}")]
    Constraint(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{name}` takes {expected} parameter(s), got {got}")]
    Arity { name: String, expected: usize, got: usize },
}

impl AnalyzeError {
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            AnalyzeError::Ideal(IdealError::BudgetExceeded(_) | IdealError::TooManyVariables(_))
                | AnalyzeError::Monomial(MonomialError::Ideal(IdealError::BudgetExceeded(_)))
                | AnalyzeError::Spectra(SpectraError::TooManyVariables { .. })
                | AnalyzeError::Monomial(MonomialError::TooManyVariables(_))
        )
    }
}
