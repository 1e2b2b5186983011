//! Effectivity, global generation, initializedness and the aCM line-bundle
//! classification on the determinantal-quartic lattice, together with the
//! scan-box enumerations of candidate first Chern classes.
//!
//! The effectivity criterion is purely integral: `D` is effective iff
//! `D = 0` or (`D·h >= 2` and `D² >= 4`). The real hyperbola that bounds the
//! effective region is never evaluated here; it only reappears in SVG
//! rendering on the CLI side.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, CurveInvariants, DivisorClass, GramLattice};

/// Effectivity verdict for a divisor class, with the two integers the test
/// actually looked at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectivityStatus {
    pub kind: EffectivityKind,
    pub d_squared: i64,
    pub dh: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EffectivityKind {
    /// The zero class; counts as effective.
    Zero,
    /// `D` is the class of a curve.
    Effective,
    /// `-D` is effective and `D` is not zero.
    AntiEffective,
    /// Neither `D` nor `-D` is effective.
    NeitherEffective,
}

impl EffectivityStatus {
    /// Effective in the inclusive sense: the class of a (possibly empty)
    /// curve, i.e. `h⁰(O(D)) ≠ 0`.
    pub fn is_effective(&self) -> bool {
        matches!(self.kind, EffectivityKind::Zero | EffectivityKind::Effective)
    }
}

impl fmt::Display for EffectivityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EffectivityKind::Zero => "zero",
            EffectivityKind::Effective => "effective",
            EffectivityKind::AntiEffective => "anti-effective",
            EffectivityKind::NeitherEffective => "neither-effective",
        };
        write!(f, "{s}")
    }
}

fn ensure_default(lattice: &GramLattice) -> Result<()> {
    if lattice.is_determinantal_quartic() {
        Ok(())
    } else {
        Err(Error::UnsupportedLattice)
    }
}

/// Raw effectivity test on the default lattice: nonzero `D` is effective
/// iff `D·h >= 2` and `D² >= 4`.
pub(crate) fn is_effective_default(d: DivisorClass) -> bool {
    if d.is_zero() {
        return true;
    }
    let l = GramLattice::determinantal_quartic();
    lattice::intersect(d, DivisorClass::H, &l) >= 2 && lattice::self_intersection(d, &l) >= 4
}

pub(crate) fn effectivity_default(d: DivisorClass) -> EffectivityStatus {
    let l = GramLattice::determinantal_quartic();
    let d_squared = lattice::self_intersection(d, &l);
    let dh = lattice::intersect(d, DivisorClass::H, &l);
    let kind = if d.is_zero() {
        EffectivityKind::Zero
    } else if is_effective_default(d) {
        EffectivityKind::Effective
    } else if is_effective_default(-d) {
        EffectivityKind::AntiEffective
    } else {
        EffectivityKind::NeitherEffective
    };
    EffectivityStatus { kind, d_squared, dh }
}

/// Classify `D` as zero / effective / anti-effective / neither.
///
/// Only defined on the determinantal-quartic profile; the criterion is not
/// proved for other lattices and this refuses to guess there.
pub fn effectivity(d: DivisorClass, lattice: &GramLattice) -> Result<EffectivityStatus> {
    ensure_default(lattice)?;
    Ok(effectivity_default(d))
}

/// `O(D)` is globally generated exactly when `D` is effective. Kept as a
/// named operation so deduction traces can cite global generation rather
/// than the raw effectivity test.
pub fn is_globally_generated(d: DivisorClass, lattice: &GramLattice) -> Result<bool> {
    ensure_default(lattice)?;
    Ok(effectivity_default(d).is_effective())
}

/// `O(D)` is initialized: `h⁰(O(D)) ≠ 0` and `h⁰(O(D - h)) = 0`.
pub fn is_initialized_line(d: DivisorClass, lattice: &GramLattice) -> Result<bool> {
    ensure_default(lattice)?;
    Ok(is_initialized_line_default(d))
}

pub(crate) fn is_initialized_line_default(d: DivisorClass) -> bool {
    effectivity_default(d).is_effective() && !effectivity_default(d - DivisorClass::H).is_effective()
}

/// The four cases of the aCM line-bundle criterion for an effective class.
///
/// On the default lattice `D²` is a multiple of 4 and `D·h` is even, so the
/// first three cases can never match there; they are implemented anyway and
/// unit-tested directly, both to document the full criterion and to keep
/// the door open for other lattice profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WatanabeCase {
    /// `D² = -2`, `1 <= D·h <= 3`: smooth rational curve of low degree.
    RationalCurve,
    /// `D² = 0`, `3 <= D·h <= 4`: arithmetic-genus-1 pencil class.
    EllipticPencil,
    /// `D² = 2`, `D·h = 5`: genus-2 quintic.
    GenusTwoQuintic,
    /// `D² = 4`, `D·h = 6`, with `h⁰(D - h) = h⁰(2h - D) = 0`:
    /// genus-3 sextic, the determinantal case.
    GenusThreeSextic,
}

/// Outcome of the aCM test for a line bundle, with the matched case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum AcmLineClass {
    /// `D = 0`: the trivial bundle, aCM and initialized.
    TrivialBundle,
    /// The effective representative of `±D` matches one of the four cases.
    Matched { case: WatanabeCase },
    /// No effective representative, or the representative matches no case.
    NotAcm,
}

impl AcmLineClass {
    pub fn is_acm(&self) -> bool {
        !matches!(self, AcmLineClass::NotAcm)
    }
}

/// Case scan for the numeric part of the criterion, independent of any
/// effectivity data. The vanishing conditions of the sextic case are the
/// caller's responsibility.
pub(crate) fn watanabe_numeric_case(d_squared: i64, dh: i64) -> Option<WatanabeCase> {
    match (d_squared, dh) {
        (-2, 1..=3) => Some(WatanabeCase::RationalCurve),
        (0, 3..=4) => Some(WatanabeCase::EllipticPencil),
        (2, 5) => Some(WatanabeCase::GenusTwoQuintic),
        (4, 6) => Some(WatanabeCase::GenusThreeSextic),
        _ => None,
    }
}

/// Evaluate the aCM criterion against the effective representative of `±D`.
///
/// The criterion classifies line bundles with an effective side; a class
/// with neither side effective has no representative to test and is
/// reported `NotAcm`.
pub fn acm_line_class(d: DivisorClass, lattice: &GramLattice) -> Result<AcmLineClass> {
    ensure_default(lattice)?;
    Ok(acm_line_class_default(d))
}

pub(crate) fn acm_line_class_default(d: DivisorClass) -> AcmLineClass {
    if d.is_zero() {
        return AcmLineClass::TrivialBundle;
    }
    let rep = if is_effective_default(d) {
        d
    } else if is_effective_default(-d) {
        -d
    } else {
        return AcmLineClass::NotAcm;
    };
    let l = GramLattice::determinantal_quartic();
    let d_sq = lattice::self_intersection(rep, &l);
    let dh = lattice::intersect(rep, DivisorClass::H, &l);
    match watanabe_numeric_case(d_sq, dh) {
        Some(WatanabeCase::GenusThreeSextic) => {
            let two_h = DivisorClass::new(2, 0);
            let initialized = !effectivity_default(rep - DivisorClass::H).is_effective();
            let below_quadrics = !effectivity_default(two_h - rep).is_effective();
            if initialized && below_quadrics {
                AcmLineClass::Matched { case: WatanabeCase::GenusThreeSextic }
            } else {
                AcmLineClass::NotAcm
            }
        }
        Some(case) => AcmLineClass::Matched { case },
        None => AcmLineClass::NotAcm,
    }
}

/// Convenience boolean over [`acm_line_class`].
pub fn is_acm_line(d: DivisorClass, lattice: &GramLattice) -> Result<bool> {
    Ok(acm_line_class(d, lattice)?.is_acm())
}

/// Degree `D·h`, arithmetic genus `1 + D²/2` and `h⁰ = 2 + D²/2` of the
/// curve cut by a nonzero effective class.
pub fn curve_invariants(d: DivisorClass, lattice: &GramLattice) -> Result<CurveInvariants> {
    ensure_default(lattice)?;
    if d.is_zero() {
        return Err(Error::ZeroClass);
    }
    if !is_effective_default(d) {
        return Err(Error::NotEffective(d));
    }
    let d_sq = lattice::self_intersection(d, lattice);
    Ok(CurveInvariants {
        degree: lattice::intersect(d, DivisorClass::H, lattice),
        arithmetic_genus: 1 + d_sq / 2,
        h0: 2 + d_sq / 2,
    })
}

/// Which enumeration produced a candidate list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ListProvenance {
    /// Effective branch: `D` and `6h - D` both effective.
    EffectiveBranch,
    /// Non-effective branch: `D` not effective, `D + h` and `6h - D` effective.
    NoneffectiveBranch,
    /// Initialized aCM line-bundle classes.
    InitializedAcmLines,
}

impl fmt::Display for ListProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ListProvenance::EffectiveBranch => "effective-branch",
            ListProvenance::NoneffectiveBranch => "noneffective-branch",
            ListProvenance::InitializedAcmLines => "initialized-acm-lines",
        };
        write!(f, "{s}")
    }
}

/// Duplicate-free list of divisor classes in canonical `(x, y)` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateList {
    pub provenance: ListProvenance,
    pub classes: Vec<DivisorClass>,
}

impl CandidateList {
    pub fn contains(&self, d: DivisorClass) -> bool {
        self.classes.binary_search(&d).is_ok()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Scan the square box `|x|, |y| <= scan_box`, keep classes satisfying
/// `predicate`, and fail if any hit touches the outer shell — that would
/// mean the box gives no completeness guarantee.
fn scan(
    scan_box: i64,
    min_box: i64,
    provenance: ListProvenance,
    predicate: impl Fn(DivisorClass) -> bool,
) -> Result<CandidateList> {
    if scan_box < min_box {
        return Err(Error::BoxTooSmall { min: min_box, got: scan_box });
    }
    let mut classes = Vec::new();
    for x in -scan_box..=scan_box {
        for y in -scan_box..=scan_box {
            let d = DivisorClass::new(x, y);
            if predicate(d) {
                if x.abs() == scan_box || y.abs() == scan_box {
                    return Err(Error::BoundaryHit { class: d, bound: scan_box });
                }
                classes.push(d);
            }
        }
    }
    classes.sort_unstable();
    classes.dedup();
    Ok(CandidateList { provenance, classes })
}

/// All initialized aCM line-bundle classes in the box. On the default
/// lattice these are exactly `{0, A, 3h-A}`, the solutions of
/// `x² + 3xy + y² = 1`, `2x + 3y = 3` together with the zero class.
pub fn enumerate_initialized_acm_lines(scan_box: i64, lattice: &GramLattice) -> Result<CandidateList> {
    ensure_default(lattice)?;
    scan(scan_box, 8, ListProvenance::InitializedAcmLines, |d| {
        is_initialized_line_default(d) && acm_line_class_default(d).is_acm()
    })
}

/// Candidate effective first Chern classes: `D` effective and `6h - D`
/// effective. Returns the 17-element list.
pub fn enumerate_c1_effective(scan_box: i64, lattice: &GramLattice) -> Result<CandidateList> {
    ensure_default(lattice)?;
    let six_h = DivisorClass::new(6, 0);
    scan(scan_box, 16, ListProvenance::EffectiveBranch, |d| {
        is_effective_default(d) && is_effective_default(six_h - d)
    })
}

/// Candidate non-effective first Chern classes: `D` not effective while both
/// `D + h` and `6h - D` are effective. Returns the 7-element list.
pub fn enumerate_c1_noneffective(scan_box: i64, lattice: &GramLattice) -> Result<CandidateList> {
    ensure_default(lattice)?;
    let six_h = DivisorClass::new(6, 0);
    scan(scan_box, 16, ListProvenance::NoneffectiveBranch, |d| {
        !is_effective_default(d)
            && is_effective_default(d + DivisorClass::H)
            && is_effective_default(six_h - d)
    })
}

/// The 17 effective candidates, frozen in canonical order.
pub(crate) fn effective_candidates() -> Vec<DivisorClass> {
    [
        (0, 0),
        (0, 1),
        (0, 2),
        (1, 0),
        (1, 1),
        (2, 0),
        (2, 1),
        (3, -1),
        (3, 0),
        (3, 1),
        (4, -1),
        (4, 0),
        (5, -1),
        (5, 0),
        (6, -2),
        (6, -1),
        (6, 0),
    ]
    .into_iter()
    .map(|(x, y)| DivisorClass::new(x, y))
    .collect()
}

/// The 7 non-effective candidates, frozen in canonical order.
pub(crate) fn noneffective_candidates() -> Vec<DivisorClass> {
    [(-2, 3), (-1, 0), (-1, 1), (-1, 2), (2, -1), (5, -2), (7, -3)]
        .into_iter()
        .map(|(x, y)| DivisorClass::new(x, y))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat() -> GramLattice {
        GramLattice::determinantal_quartic()
    }

    fn d(x: i64, y: i64) -> DivisorClass {
        DivisorClass::new(x, y)
    }

    #[test]
    fn effectivity_examples() {
        let l = lat();
        assert_eq!(effectivity(DivisorClass::ZERO, &l).unwrap().kind, EffectivityKind::Zero);
        assert!(effectivity(DivisorClass::ZERO, &l).unwrap().is_effective());
        // A - h has square -4, so it is on neither side.
        assert_eq!(effectivity(d(-1, 1), &l).unwrap().kind, EffectivityKind::NeitherEffective);
        assert_eq!(effectivity(d(6, -2), &l).unwrap().kind, EffectivityKind::Effective);
        assert_eq!(effectivity(d(-1, 0), &l).unwrap().kind, EffectivityKind::AntiEffective);
    }

    #[test]
    fn effectivity_rejects_other_lattices() {
        let other = GramLattice::new(4, 7, 4).unwrap();
        assert_eq!(effectivity(DivisorClass::H, &other), Err(Error::UnsupportedLattice));
        assert_eq!(curve_invariants(DivisorClass::H, &other), Err(Error::UnsupportedLattice));
    }

    #[test]
    fn global_generation_examples() {
        let l = lat();
        assert!(is_globally_generated(DivisorClass::A, &l).unwrap());
        assert!(!is_globally_generated(d(-1, 1), &l).unwrap());
        assert!(is_globally_generated(DivisorClass::ZERO, &l).unwrap());
    }

    #[test]
    fn initialized_examples() {
        let l = lat();
        assert!(is_initialized_line(DivisorClass::A, &l).unwrap());
        // h - h = 0 is effective, so O(h) has sections one twist down.
        assert!(!is_initialized_line(DivisorClass::H, &l).unwrap());
        assert!(is_initialized_line(DivisorClass::ZERO, &l).unwrap());
    }

    #[test]
    fn acm_line_examples() {
        let l = lat();
        assert_eq!(
            acm_line_class(DivisorClass::A, &l).unwrap(),
            AcmLineClass::Matched { case: WatanabeCase::GenusThreeSextic }
        );
        assert_eq!(acm_line_class(d(2, -1), &l).unwrap(), AcmLineClass::NotAcm);
        assert_eq!(acm_line_class(DivisorClass::ZERO, &l).unwrap(), AcmLineClass::TrivialBundle);
        // anti-effective side is tested through its effective representative
        assert_eq!(
            acm_line_class(-DivisorClass::A, &l).unwrap(),
            AcmLineClass::Matched { case: WatanabeCase::GenusThreeSextic }
        );
        // h matches no case: h·h = 4, and h - h = 0 is effective anyway
        assert_eq!(acm_line_class(DivisorClass::H, &l).unwrap(), AcmLineClass::NotAcm);
    }

    #[test]
    fn watanabe_small_cases_match_synthetic_data() {
        assert_eq!(watanabe_numeric_case(-2, 2), Some(WatanabeCase::RationalCurve));
        assert_eq!(watanabe_numeric_case(0, 3), Some(WatanabeCase::EllipticPencil));
        assert_eq!(watanabe_numeric_case(2, 5), Some(WatanabeCase::GenusTwoQuintic));
        assert_eq!(watanabe_numeric_case(4, 6), Some(WatanabeCase::GenusThreeSextic));
        assert_eq!(watanabe_numeric_case(4, 4), None);
        assert_eq!(watanabe_numeric_case(-2, 4), None);
    }

    #[test]
    fn watanabe_low_cases_unreachable_on_default_lattice() {
        // D² ≡ 0 (mod 4) and D·h even exclude the first three cases.
        let l = lat();
        for x in -20..=20 {
            for y in -20..=20 {
                let c = acm_line_class_default(d(x, y));
                if let AcmLineClass::Matched { case } = c {
                    assert_eq!(case, WatanabeCase::GenusThreeSextic, "at ({x}, {y})");
                }
                let d_sq = lattice::self_intersection(d(x, y), &l);
                let dh = lattice::intersect(d(x, y), DivisorClass::H, &l);
                assert_eq!(d_sq.rem_euclid(4), 0);
                assert_eq!(dh % 2, 0);
            }
        }
    }

    #[test]
    fn acm_lines_enumeration() {
        let l = lat();
        let list = enumerate_initialized_acm_lines(32, &l).unwrap();
        assert_eq!(list.classes, vec![d(0, 0), d(0, 1), d(3, -1)]);
        assert_eq!(enumerate_initialized_acm_lines(8, &l).unwrap().classes, list.classes);
        assert!(!list.contains(DivisorClass::H));
        assert!(matches!(
            enumerate_initialized_acm_lines(7, &l),
            Err(Error::BoxTooSmall { min: 8, got: 7 })
        ));
    }

    #[test]
    fn acm_line_system_oracle() {
        // Nonzero initialized aCM classes solve x²+3xy+y² = 1, 2x+3y = 3.
        let mut solutions = Vec::new();
        for x in -32..=32i64 {
            for y in -32..=32i64 {
                if x * x + 3 * x * y + y * y == 1 && 2 * x + 3 * y == 3 {
                    solutions.push(d(x, y));
                }
            }
        }
        solutions.sort_unstable();
        assert_eq!(solutions, vec![d(0, 1), d(3, -1)]);
    }

    #[test]
    fn effective_candidate_list() {
        let l = lat();
        let list = enumerate_c1_effective(32, &l).unwrap();
        assert_eq!(list.classes, effective_candidates());
        assert_eq!(list.len(), 17);
        assert!(!list.contains(d(1, 2))); // 6h - (h+2A) has square -4
        assert!(list.contains(DivisorClass::ZERO));
        assert!(list.contains(d(6, 0)));
    }

    #[test]
    fn noneffective_candidate_list() {
        let l = lat();
        let list = enumerate_c1_noneffective(32, &l).unwrap();
        assert_eq!(list.classes, noneffective_candidates());
        assert_eq!(list.len(), 7);
        assert!(list.contains(d(-1, 0)));
        let two_h_minus_a = d(2, -1);
        assert!(list.contains(two_h_minus_a));
        assert_eq!(lattice::self_intersection(two_h_minus_a, &l), -4);
    }

    #[test]
    fn enumerations_are_box_stable() {
        let l = lat();
        for scan_box in [16, 32, 64] {
            assert_eq!(enumerate_c1_effective(scan_box, &l).unwrap().classes, effective_candidates());
            assert_eq!(
                enumerate_c1_noneffective(scan_box, &l).unwrap().classes,
                noneffective_candidates()
            );
        }
        assert!(matches!(enumerate_c1_effective(15, &l), Err(Error::BoxTooSmall { .. })));
    }

    #[test]
    fn curve_invariant_examples() {
        let l = lat();
        let a = curve_invariants(DivisorClass::A, &l).unwrap();
        assert_eq!(a, CurveInvariants { degree: 6, arithmetic_genus: 3, h0: 4 });
        let dual = curve_invariants(d(3, -1), &l).unwrap();
        assert_eq!(dual, a);
        // plane quartic: genus (4-1)(4-2)/2 = 3
        let h = curve_invariants(DivisorClass::H, &l).unwrap();
        assert_eq!(h, CurveInvariants { degree: 4, arithmetic_genus: 3, h0: 4 });
        assert_eq!(curve_invariants(DivisorClass::ZERO, &l), Err(Error::ZeroClass));
        assert_eq!(curve_invariants(d(-1, 1), &l), Err(Error::NotEffective(d(-1, 1))));
    }

    #[test]
    fn candidate_members_satisfy_branch_constraints() {
        let six_h = d(6, 0);
        for &c in &effective_candidates() {
            assert!(is_effective_default(c));
            assert!(is_effective_default(six_h - c), "6h - {c} must be effective");
        }
        for &c in &noneffective_candidates() {
            let status = effectivity_default(c);
            assert!(
                matches!(
                    status.kind,
                    EffectivityKind::AntiEffective | EffectivityKind::NeitherEffective
                ),
                "{c} must not be effective"
            );
            assert!(is_effective_default(c + DivisorClass::H));
            assert!(is_effective_default(six_h - c));
        }
    }
}
