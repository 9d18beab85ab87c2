use thiserror::Error;

use crate::ordered_group::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element has negative value")]
    NegativeValue,
    #[error("value is not zero")]
    NonzeroValue,
    #[error("balls are not comparable")]
    NotComparable,
    #[error("not a pseudo Cauchy sequence at indices {0:?}")]
    NotPseudoCauchy(Vec<usize>),
    #[error("sequence has a limit in the base field")]
    LimitInK,
    #[error("approximation type is not immediate")]
    NotImmediate,
    #[error("budget of {0} terms exhausted")]
    BudgetExhausted(usize),
    #[error("radius outside the support")]
    OutOfSupport,
    #[error("realization needs a dense value group")]
    DenseValueGroupRequired,
    #[error("realization needs an infinite residue field")]
    InfiniteResidueRequired,
    #[error("fragment is not of canonical shape: {0}")]
    InvalidFragment(String),
    #[error("index set is bounded above")]
    UpsilonBoundedAbove,
    #[error("degree assertion violated by {0}")]
    AssertionViolated(String),
    #[error("value of {0} is not fixed")]
    NotActuallyTranscendental(String),
    #[error("trivial approximation type")]
    TrivialType,
    #[error("empty approximation type")]
    EmptyType,
    #[error("algebraic immediate types cannot be realized")]
    UnsupportedAlgebraicImmediate,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Stable variant name, as reported by the command line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Group(g) => match g {
                GroupError::MixedCuts => "MixedCuts",
                GroupError::RankMismatch => "RankMismatch",
                GroupError::UnsupportedCut => "UnsupportedCut",
                GroupError::InfiniteNegation => "InfiniteNegation",
                GroupError::NotInGroup(..) => "NotInGroup",
                GroupError::Parse(_) => "Parse",
            },
            Error::DivisionByZero => "DivisionByZero",
            Error::NegativeValue => "NegativeValue",
            Error::NonzeroValue => "NonzeroValue",
            Error::NotComparable => "NotComparable",
            Error::NotPseudoCauchy(_) => "NotPseudoCauchy",
            Error::LimitInK => "LimitInK",
            Error::NotImmediate => "NotImmediate",
            Error::BudgetExhausted(_) => "BudgetExhausted",
            Error::OutOfSupport => "OutOfSupport",
            Error::DenseValueGroupRequired => "DenseValueGroupRequired",
            Error::InfiniteResidueRequired => "InfiniteResidueRequired",
            Error::InvalidFragment(_) => "InvalidFragment",
            Error::UpsilonBoundedAbove => "UpsilonBoundedAbove",
            Error::AssertionViolated(_) => "AssertionViolated",
            Error::NotActuallyTranscendental(_) => "NotActuallyTranscendental",
            Error::TrivialType => "TrivialType",
            Error::EmptyType => "EmptyType",
            Error::UnsupportedAlgebraicImmediate => "UnsupportedAlgebraicImmediate",
            Error::Parse(_) => "Parse",
            Error::Invalid(_) => "Invalid",
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Group(GroupError::Parse(_)))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
