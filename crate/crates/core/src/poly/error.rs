use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unbound variable `{0}` in substitution")]
    UnboundVariable(String),
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("resultant undefined: both polynomials are constant in `{0}`")]
    ConstantInVariable(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not univariate in `{0}`")]
    NotUnivariate(String),
}
