use alloc::string::String;
use alloc::vec::Vec;

use crate::poly::ExpVec;

/// Coordinate axis of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl core::fmt::Display for Axis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the assignment")]
    PoleAtAssignment,
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("negative exponent at {pos}")]
    NegativeExponent { pos: usize },
    #[error("unknown symbol `{name}`")]
    UnknownSymbol { name: String },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("unsupported arity {arity}")]
    ArityUnsupported { arity: usize },
    #[error("not convenient: the Newton polygon does not meet the {missing} axis")]
    NotConvenient { missing: Axis },
    #[error("segment is not a face of the Newton polygon")]
    SegmentMismatch,
    #[error("finiteness undecided at degree cap {cap} ({} standard monomials found)", partial.len())]
    CapExceeded { cap: u32, partial: Vec<ExpVec> },
    #[error("jet colength not stabilized at cap {cap}")]
    NotStabilized { cap: u32 },
    #[error("critical point is not isolated")]
    NonIsolated,
    #[error("Milnor number methods disagree: {0}")]
    OracleDisagreement(String),
    #[error("germ has a nonzero constant term")]
    NonzeroConstant,
    #[error("total does not restrict to the base at {symbol} = 0")]
    BaseMismatch { symbol: String },
    #[error("family has a nonzero value at the origin")]
    NonzeroAtOrigin,
    #[error("generic fiber has a non-isolated critical point")]
    GenericNonIsolated,
    #[error("sampled minimum {min} attained only once; use more samples")]
    SampleInconsistent { min: u32 },
    #[error("search grid is empty")]
    EmptyGrid,
    #[error("grid has {size} families, above the budget of {budget}")]
    GridTooLarge { size: u64, budget: u64 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("no transversal coordinate change found after {attempts} draws")]
    NoTransversalChange { attempts: u32 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::PoleAtAssignment => "PoleAtAssignment",
            Error::Syntax { .. } => "SyntaxError",
            Error::NegativeExponent { .. } => "NegativeExponent",
            Error::UnknownSymbol { .. } => "UnknownSymbol",
            Error::InvalidRing(_) => "InvalidRing",
            Error::ArityMismatch(_) => "ArityMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ArityUnsupported { .. } => "ArityUnsupported",
            Error::NotConvenient { .. } => "NotConvenient",
            Error::SegmentMismatch => "SegmentMismatch",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotStabilized { .. } => "NotStabilized",
            Error::NonIsolated => "NonIsolated",
            Error::OracleDisagreement(_) => "OracleDisagreement",
            Error::NonzeroConstant => "NonzeroConstant",
            Error::BaseMismatch { .. } => "BaseMismatch",
            Error::NonzeroAtOrigin => "NonzeroAtOrigin",
            Error::GenericNonIsolated => "GenericNonIsolated",
            Error::SampleInconsistent { .. } => "SampleInconsistent",
            Error::EmptyGrid => "EmptyGrid",
            Error::GridTooLarge { .. } => "GridTooLarge",
            Error::InvalidGrid(_) => "InvalidGrid",
            Error::NoTransversalChange { .. } => "NoTransversalChange",
        }
    }

    /// Whether the error comes from malformed input rather than from a
    /// computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::NegativeExponent { .. }
                | Error::UnknownSymbol { .. }
                | Error::InvalidRing(_)
                | Error::InvalidGrid(_)
                | Error::EmptyGrid
                | Error::GridTooLarge { .. }
        )
    }
}
