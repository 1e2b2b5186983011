//! Deduction steps and trace replay.
//!
//! Every elimination and every narrowing the classifier performs is recorded
//! as a [`DeductionStep`] whose numeric facts are plain lattice or
//! cohomology statements. [`replay_trace`] recomputes each fact from scratch
//! on the default lattice; a classifier trace must always replay, and any
//! tampering is detected as a mismatch.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cohomology::{cohomology_line_default, CohomologyTriple};
use crate::hilbert::{macaulay_bound, max_independent_planes};
use crate::lattice::{
    chi_line, chi_rank2, intersect, self_intersection, twist_rank2, DivisorClass, GramLattice,
    Rank2Invariants,
};

/// Identifier of the rule that fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum RuleId {
    /// The extension defining the bundle splits because the obstruction
    /// space `H¹(O(2D - c1))` vanishes.
    Split,
    /// `h¹(O(c1 - D + t·h)) - h²(O(D + t·h)) > 0` forces `h¹(E(t·h)) > 0`.
    Obstruct { twist: i64 },
    /// `c1·h` exceeds 12, emptying the window for `c2`.
    DegreeBound,
    /// Section counting shows the bundle decomposes as a sum of two line
    /// bundles.
    Decompose,
    /// `c2 = 0` would give a section without zeros.
    EmptyZeroLocus,
    /// A single point cannot be Cayley-Bacharach for a globally generated
    /// determinant with sections.
    PointNotCayleyBacharach,
    /// Dualizing and twisting lands on invariants the non-effective branch
    /// already ruled out.
    DualTwistReduction,
    /// Macaulay growth rejects the Hilbert function of the zero locus.
    HilbertGrowth,
    /// An Euler-characteristic identity pins `c2`.
    ChiForcing,
    /// Connecting-map bound `h¹(E) >= h¹(O(c1))` in the point scenario.
    SectionBound,
    /// Twisted bound `h¹(E^∨(h)) >= h¹(O(h - c1)) - 3` in the point scenario.
    TwistedSectionBound,
    /// Plane-count facts exclude small `c2` values.
    PlaneCount,
    /// A nonzero obstruction space witnesses that indecomposable extensions
    /// exist (survivor justification, not an elimination).
    NonSplitWitness,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::Split => write!(f, "split"),
            RuleId::Obstruct { twist } => write!(f, "obstruct({twist})"),
            RuleId::DegreeBound => write!(f, "degree-bound"),
            RuleId::Decompose => write!(f, "decompose"),
            RuleId::EmptyZeroLocus => write!(f, "empty-zero-locus"),
            RuleId::PointNotCayleyBacharach => write!(f, "point-not-cayley-bacharach"),
            RuleId::DualTwistReduction => write!(f, "dual-twist-reduction"),
            RuleId::HilbertGrowth => write!(f, "hilbert-growth"),
            RuleId::ChiForcing => write!(f, "chi-forcing"),
            RuleId::SectionBound => write!(f, "section-bound"),
            RuleId::TwistedSectionBound => write!(f, "twisted-section-bound"),
            RuleId::PlaneCount => write!(f, "plane-count"),
            RuleId::NonSplitWitness => write!(f, "non-split-witness"),
        }
    }
}

/// The mathematical principle a rule leans on; named rule metadata only,
/// nothing is re-proved here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleSource {
    /// Vanishing of the extension group splits the sequence.
    ExtensionSplitting,
    /// `h¹` of every hyperplane twist of an aCM bundle vanishes.
    AcmVanishing,
    /// Riemann-Roch on the surface.
    RiemannRoch,
    /// Serre correspondence between rank-2 bundles and Cayley-Bacharach
    /// subschemes.
    SerreCorrespondence,
    /// Effective classes are globally generated.
    GlobalGeneration,
    /// Macaulay growth bound for standard graded algebras.
    MacaulayGrowth,
    /// `U·V` is even for any two classes, so odd `c2` forbids splitting.
    IntersectionParity,
    /// Sections of indecomposable bundles vanish somewhere.
    NonEmptyZeroLocus,
    /// Generator bound for initialized aCM modules.
    GeneratorBound,
    /// The aCM property is closed under duals and hyperplane twists.
    AcmTwistClosure,
}

/// One replayable fact: an equality the lattice, cohomology or Hilbert
/// modules can recompute independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "fact")]
pub enum TraceFact {
    Cohomology { class: DivisorClass, triple: CohomologyTriple },
    ChiLine { class: DivisorClass, chi: i64 },
    Intersection { left: DivisorClass, right: DivisorClass, value: i64 },
    SelfIntersection { class: DivisorClass, value: i64 },
    ChiRank2 { invariants: Rank2Invariants, chi: i64 },
    Twisted { input: Rank2Invariants, twist: DivisorClass, dualized: bool, output: Rank2Invariants },
    MacaulayBound { value: u64, degree: u32, bound: u64 },
    PlanesThroughScheme { degree: u64, planes: u64 },
}

impl TraceFact {
    /// Recompute the fact on the default lattice.
    pub fn holds(&self) -> bool {
        let lattice = GramLattice::determinantal_quartic();
        match *self {
            TraceFact::Cohomology { class, triple } => cohomology_line_default(class) == triple,
            TraceFact::ChiLine { class, chi } => chi_line(class, &lattice) == chi,
            TraceFact::Intersection { left, right, value } => intersect(left, right, &lattice) == value,
            TraceFact::SelfIntersection { class, value } => self_intersection(class, &lattice) == value,
            TraceFact::ChiRank2 { invariants, chi } => chi_rank2(invariants, &lattice) == chi,
            TraceFact::Twisted { input, twist, dualized, output } => {
                twist_rank2(input, twist, dualized, &lattice) == output
            }
            TraceFact::MacaulayBound { value, degree, bound } => macaulay_bound(value, degree) == bound,
            TraceFact::PlanesThroughScheme { degree, planes } => max_independent_planes(degree) == planes,
        }
    }
}

impl fmt::Display for TraceFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceFact::Cohomology { class, triple } => write!(f, "h(O({class})) = {triple}"),
            TraceFact::ChiLine { class, chi } => write!(f, "chi(O({class})) = {chi}"),
            TraceFact::Intersection { left, right, value } => write!(f, "({left})·({right}) = {value}"),
            TraceFact::SelfIntersection { class, value } => write!(f, "({class})² = {value}"),
            TraceFact::ChiRank2 { invariants, chi } => write!(f, "chi{invariants} = {chi}"),
            TraceFact::Twisted { input, twist, dualized, output } => {
                let op = if *dualized { "dual-twist" } else { "twist" };
                write!(f, "{op} of {input} by {twist} = {output}")
            }
            TraceFact::MacaulayBound { value, degree, bound } => {
                write!(f, "growth bound of {value} at degree {degree} = {bound}")
            }
            TraceFact::PlanesThroughScheme { degree, planes } => {
                write!(f, "a degree-{degree} scheme lies on at most {planes} independent planes")
            }
        }
    }
}

/// A single step of a deduction, with the rule, a readable statement, the
/// facts it consumed and the principle it cites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeductionStep {
    pub rule: RuleId,
    pub statement: String,
    pub facts: Vec<TraceFact>,
    pub citation: RuleSource,
}

impl DeductionStep {
    pub fn new(
        rule: RuleId,
        statement: impl Into<String>,
        facts: Vec<TraceFact>,
        citation: RuleSource,
    ) -> Self {
        DeductionStep { rule, statement: statement.into(), facts, citation }
    }
}

/// A fact that failed to replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayFailure {
    pub step_index: usize,
    pub fact_index: usize,
    pub fact: TraceFact,
}

/// Outcome of replaying a trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub steps: usize,
    pub facts_checked: usize,
    pub failures: Vec<ReplayFailure>,
}

impl ReplayReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Recompute every numeric fact of every step. An empty trace replays
/// trivially.
pub fn replay_trace(trace: &[DeductionStep]) -> ReplayReport {
    let mut facts_checked = 0;
    let mut failures = Vec::new();
    for (step_index, step) in trace.iter().enumerate() {
        for (fact_index, fact) in step.facts.iter().enumerate() {
            facts_checked += 1;
            if !fact.holds() {
                failures.push(ReplayFailure { step_index, fact_index, fact: fact.clone() });
            }
        }
    }
    ReplayReport { steps: trace.len(), facts_checked, failures }
}
