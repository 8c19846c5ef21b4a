use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("degree exceeds cap of {cap} (at position {position})")]
    DegreeCap { position: usize, cap: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined for a constant polynomial")]
    ConstantPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("{0} is less than 2")]
    BelowTwo(BigInt),
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("primality of {0} cannot be decided deterministically at this size")]
    PrimalityUndecided(BigInt),
    #[error("leading coefficient is zero")]
    ZeroLeading,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid series coefficient '{0}'")]
    SeriesSyntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error("valuation sequence has no finite entry")]
    AllInfinite,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("index pair (j={j}, l={ell}) out of range for degree {n}")]
    IndexOutOfRange { j: usize, ell: usize, n: usize },
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("constant term must have absolute value at least 2")]
    UnitConstantTerm,
    #[error("constant term {0} is too large to factor (limit 10^12)")]
    ConstantTooLarge(BigInt),
    #[error("hypothesis ({condition}) fails: {reason}")]
    Hypothesis {
        condition: &'static str,
        reason: String,
    },
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("degree {degree} exceeds the oracle cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("polynomial must be primitive with nonzero constant term and degree at least 2")]
    Precondition,
    #[error("sample value {0} is too large to enumerate divisors")]
    ValueTooLarge(BigInt),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
