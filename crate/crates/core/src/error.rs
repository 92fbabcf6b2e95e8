//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by operations with nontrivial preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A complement was requested for an empty curve.
    #[error("empty curve")]
    EmptyCurve,

    /// An operation defined only on pure points received a mixed one.
    #[error("pure points required: ({0}, {1}) is mixed")]
    PureRequired(i32, i32),

    /// Two distinct points were required.
    #[error("distinct points required")]
    DistinctRequired,

    /// The slant map has no preimage at a mixed point.
    #[error("not in range of the slant map: ({0}, {1}) is mixed")]
    NotInSlantRange(i32, i32),

    /// A Jordan-curve operation received a set that is not a Jordan curve.
    #[error("hypothesis violated: not a Jordan curve")]
    NotJordanCurve,

    /// A Jordan-curve theorem operation needs more than four points.
    #[error("hypothesis violated: curve has {0} points, more than 4 required")]
    CurveTooSmall(usize),

    /// Curve surgery was requested at an ineligible point.
    #[error("surgery hypothesis violated: {0}")]
    SurgeryHypothesis(String),

    /// A window exceeds the enumeration area cap.
    #[error("window area {area} exceeds cap {cap}")]
    WindowTooLarge { area: u64, cap: u64 },

    /// Window bounds are inverted.
    #[error("invalid window: min bound exceeds max bound")]
    InvalidWindow,

    /// An unknown verification suite was requested.
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    /// A structural invariant that the theory guarantees failed to hold.
    /// Surfacing it as an error lets suites report it as a counterexample
    /// instead of aborting.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
