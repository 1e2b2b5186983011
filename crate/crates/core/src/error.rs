use thiserror::Error;

use crate::lattice::DivisorClass;

/// Domain errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Rejected at `GramLattice` construction time.
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    /// The operation is only proved for the determinantal-quartic profile
    /// (gram matrix [[4, 6], [6, 4]]); the effectivity criterion behind it
    /// does not hold for other surfaces.
    #[error(
        "unsupported lattice profile: this criterion is proved only for the \
         general determinantal quartic (gram [[4, 6], [6, 4]])"
    )]
    UnsupportedLattice,

    /// Scan box below the documented minimum for the enumeration.
    #[error("scan box {got} too small: this enumeration requires at least {min}")]
    BoxTooSmall { min: i64, got: i64 },

    /// A candidate landed on the outer shell of the scan box, so the box
    /// cannot be trusted to be exhaustive.
    #[error("candidate {class} lies on the scan-box boundary ({bound}); enlarge the box")]
    BoundaryHit { class: DivisorClass, bound: i64 },

    /// Curve-level invariants are only defined for effective classes.
    #[error("divisor class {0} is not effective")]
    NotEffective(DivisorClass),

    /// Curve-level invariants are undefined for the zero class.
    #[error("divisor class is zero; curve invariants are undefined")]
    ZeroClass,

    /// `classify` was asked about a class outside both candidate lists.
    #[error("{0} is not a candidate first Chern class for either branch")]
    NotACandidate(DivisorClass),

    /// The arguments violate a documented precondition of the operation.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Malformed Hilbert function input.
    #[error("invalid Hilbert function: {0}")]
    InvalidHilbert(String),
}

impl Error {
    /// Stable machine-readable name, used by the CLI envelope.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidLattice(_) => "invalid-lattice",
            Error::UnsupportedLattice => "unsupported-lattice",
            Error::BoxTooSmall { .. } => "box-too-small",
            Error::BoundaryHit { .. } => "boundary-hit",
            Error::NotEffective(_) => "not-effective",
            Error::ZeroClass => "zero-class",
            Error::NotACandidate(_) => "not-a-candidate",
            Error::Precondition(_) => "precondition",
            Error::InvalidHilbert(_) => "invalid-hilbert",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
