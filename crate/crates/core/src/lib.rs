//! Exact-arithmetic engine for the rank-2 bundle classification on general
//! determinantal quartic surfaces.
//!
//! The crate works over the rank-2 Picard lattice spanned by the plane
//! section `h` and a projectively normal sextic `A` with `h² = A² = 4`,
//! `h·A = 6`. On top of the intersection form it builds, in order:
//!
//! * exact Euler characteristics and line-bundle cohomology ([`lattice`],
//!   [`cohomology`]);
//! * the integral effectivity criterion and the scan-box enumerations of
//!   candidate first Chern classes ([`divisor`]);
//! * Macaulay growth bounds for Hilbert functions of point schemes
//!   ([`hilbert`]);
//! * the case-elimination engine that reproduces the full classification of
//!   initialized indecomposable aCM bundles of rank 2, with machine-checkable
//!   deduction traces ([`classifier`], [`table`], [`trace`]).
//!
//! Every computation is plain integer arithmetic; there is no floating point
//! in any logic path.

pub mod classifier;
pub mod cohomology;
pub mod divisor;
pub mod error;
pub mod hilbert;
pub mod lattice;
pub mod table;
pub mod trace;

pub use classifier::{
    classify_candidate, classify_effective, divisorial_case_analysis, divisorial_case_pairs,
    eliminate_divisorial, eliminate_noneffective, full_classification, ulrich_bound_check,
    CandidateVerdict, Classification, DivisorialOutcome, DivisorialVerdict, ExistenceSource,
    Outcome, Realization, ResidualPart, SectionSplit, UlrichCheck, ZeroLocus,
};
pub use cohomology::{cohomology_line, h1_vanishes, CohomologyTriple, H2_STRUCTURE_SHEAF};
pub use divisor::{
    acm_line_class, curve_invariants, effectivity, enumerate_c1_effective,
    enumerate_c1_noneffective, enumerate_initialized_acm_lines, is_acm_line,
    is_globally_generated, is_initialized_line, AcmLineClass, CandidateList, EffectivityKind,
    EffectivityStatus, ListProvenance, WatanabeCase,
};
pub use error::{Error, Result};
pub use hilbert::{
    admissible_point_hilbert, cb_degree_facts, macaulay_bound, AdmissibilityReport, CbDegreeFacts,
    HilbertFunction, HilbertViolation,
};
pub use lattice::{
    chi_line, chi_rank2, intersect, parity_class, self_intersection, twist_rank2, CurveInvariants,
    DivisorClass, GramLattice, ParityClass, ParityReport, Rank2Invariants,
};
pub use table::{generate_table_a, TableA, TableARow};
pub use trace::{
    replay_trace, DeductionStep, ReplayFailure, ReplayReport, RuleId, RuleSource, TraceFact,
};

use serde::{Deserialize, Serialize};

/// A non-fatal note attached to an output: documented deviations of the
/// reference presentation, sign and label remarks, and similar flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Warning {
    pub code: String,
    pub message: String,
}

impl Warning {
    pub fn new(code: impl Into<String>, message: impl Into<String>) -> Self {
        Warning { code: code.into(), message: message.into() }
    }
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.code, self.message)
    }
}
