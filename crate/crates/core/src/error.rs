//! Error type shared by every module of the crate.

use std::fmt;

/// Which structural condition a level family or module triple violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The level-0 cone is not contained in the real axis.
    RealAtZero,
    /// A nonzero level forces every higher level of the same parity to be full.
    ParityFull,
    /// A level containing some pair `±u` forces every higher level to be full.
    SymmetricFull,
    /// The declared minimum level is the zero cone.
    ZeroLeading,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::RealAtZero => "condition (i): level 0 must lie on the real axis",
            Condition::ParityFull => "condition (ii): levels above a nonzero level of the same parity must be full",
            Condition::SymmetricFull => "condition (iii): levels above a level containing some ±u must be full",
            Condition::ZeroLeading => "the minimum level must be a nonzero cone",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by a series with no known nonzero coefficient")]
    DivisionByZero,
    #[error("quotient has negative valuation")]
    NegativeValuation,
    #[error("valuation undetermined: every known coefficient below X^{0} vanishes")]
    UndefinedValuation(u32),
    #[error("precision too low: need at least {needed}, have {have}")]
    Precision { needed: u32, have: u32 },
    #[error("series is not in A: constant coefficient {0} is not real")]
    NotInA(String),
    #[error("not a strict unit: constant coefficient is {0}")]
    NotStrictUnit(String),
    #[error("valuations {0} and {1} have different parity")]
    ParityMismatch(u32, u32),
    #[error("valuation order violated: {0}")]
    ValuationOrder(String),
    #[error("pseudo-angular components differ: {0} vs {1}")]
    PanMismatch(String, String),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("invalid direction: {0}")]
    InvalidDirection(String),
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("not finitely generated")]
    NotFinitelyGenerated,
    #[error("invalid module: {0}")]
    InvalidModule(Condition),
    #[error("invalid level family: {0}")]
    InvalidFamily(String),
    #[error("invalid final segment: {0}")]
    InvalidSegment(String),
    #[error("invalid F4 submodule: {0}")]
    InvalidSubmodule(String),
    #[error("invalid classifier: {0}")]
    InvalidClassifier(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("not in the maximal ideal: {0}")]
    NotInMaximalIdeal(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("input limit exceeded: {0}")]
    Limit(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::DivisionByZero => "division_by_zero",
            Error::NegativeValuation => "negative_valuation",
            Error::UndefinedValuation(_) => "undefined_valuation",
            Error::Precision { .. } => "precision",
            Error::NotInA(_) => "not_in_a",
            Error::NotStrictUnit(_) => "not_strict_unit",
            Error::ParityMismatch(..) => "parity_mismatch",
            Error::ValuationOrder(_) => "valuation_order",
            Error::PanMismatch(..) => "pan_mismatch",
            Error::ZeroScalar => "zero_scalar",
            Error::InvalidDirection(_) => "invalid_direction",
            Error::InvalidCone(_) => "invalid_cone",
            Error::NotFinitelyGenerated => "not_finitely_generated",
            Error::InvalidModule(Condition::RealAtZero) => "condition_i",
            Error::InvalidModule(Condition::ParityFull) => "condition_ii",
            Error::InvalidModule(Condition::SymmetricFull) => "condition_iii",
            Error::InvalidModule(Condition::ZeroLeading) => "zero_leading_level",
            Error::InvalidFamily(_) => "invalid_family",
            Error::InvalidSegment(_) => "invalid_segment",
            Error::InvalidSubmodule(_) => "invalid_submodule",
            Error::InvalidClassifier(_) => "invalid_classifier",
            Error::InvalidDescriptor(_) => "invalid_descriptor",
            Error::NotInMaximalIdeal(_) => "not_in_maximal_ideal",
            Error::Overflow(_) => "overflow",
            Error::Limit(_) => "limit",
            Error::Json(_) => "json",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
