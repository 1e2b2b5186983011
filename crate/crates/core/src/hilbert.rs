//! Macaulay growth bounds and admissibility of Hilbert functions of
//! zero-dimensional subschemes, plus the handful of classical facts about
//! small schemes the classifier cites.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hilbert function prefix of a standard graded algebra: `values[i] = h(i)`,
/// with `h(0) = 1` enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        match values.first() {
            None => Err(Error::InvalidHilbert("empty value list".into())),
            Some(&1) => Ok(HilbertFunction { values }),
            Some(&v) => Err(Error::InvalidHilbert(format!("h(0) must be 1, got {v}"))),
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Macaulay representation of `value` in degree `degree`: the unique
/// expansion `value = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_j, j)` with
/// `a_d > a_{d-1} > ... > a_j >= j >= 1`, found greedily.
fn macaulay_representation(value: u64, degree: u32) -> Vec<(u64, u64)> {
    let mut parts = Vec::new();
    let mut remaining = value;
    let mut i = u64::from(degree);
    while remaining > 0 && i >= 1 {
        let mut a = i;
        while binomial(a + 1, i) <= remaining {
            a += 1;
        }
        parts.push((a, i));
        remaining -= binomial(a, i);
        i -= 1;
    }
    debug_assert_eq!(remaining, 0, "greedy expansion must terminate");
    parts
}

/// Maximal admissible `h(degree + 1)` for a standard graded algebra
/// generated in degree 1 with `h(degree) = value`: each binomial `C(a, i)`
/// of the representation is bumped to `C(a + 1, i + 1)`.
pub fn macaulay_bound(value: u64, degree: u32) -> u64 {
    assert!(degree >= 1, "growth bound is defined from degree 1 on");
    macaulay_representation(value, degree)
        .into_iter()
        .map(|(a, i)| binomial(a + 1, i + 1))
        .sum()
}

/// Why a Hilbert function prefix was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum HilbertViolation {
    /// `h(degree)` exceeds the Macaulay bound from the previous degree.
    GrowthExceedsBound { degree: u32, value: u64, bound: u64 },
    /// The function decreases before stabilizing.
    Decreasing { degree: u32, value: u64, previous: u64 },
    /// An entry exceeds the degree of the scheme.
    ExceedsTotalDegree { degree: u32, value: u64, total: u64 },
}

impl fmt::Display for HilbertViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HilbertViolation::GrowthExceedsBound { degree, value, bound } => {
                write!(f, "h({degree}) = {value} exceeds the growth bound {bound}")
            }
            HilbertViolation::Decreasing { degree, value, previous } => {
                write!(f, "h({degree}) = {value} drops below h({}) = {previous}", degree - 1)
            }
            HilbertViolation::ExceedsTotalDegree { degree, value, total } => {
                write!(f, "h({degree}) = {value} exceeds the scheme degree {total}")
            }
        }
    }
}

/// Admissibility verdict with the first violation when there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub violation: Option<HilbertViolation>,
}

/// Whether the prefix can be the Hilbert function of a zero-dimensional
/// subscheme of degree `total_degree`: values nondecreasing, capped by the
/// degree (where the function stabilizes), and every consecutive growth
/// within the Macaulay bound.
pub fn admissible_point_hilbert(hf: &HilbertFunction, total_degree: u64) -> AdmissibilityReport {
    let values = hf.values();
    for (i, &v) in values.iter().enumerate().skip(1) {
        let degree = i as u32;
        let previous = values[i - 1];
        if v > total_degree {
            return reject(HilbertViolation::ExceedsTotalDegree { degree, value: v, total: total_degree });
        }
        if v < previous {
            return reject(HilbertViolation::Decreasing { degree, value: v, previous });
        }
        if degree >= 2 {
            let bound = macaulay_bound(previous, degree - 1);
            if v > bound {
                return reject(HilbertViolation::GrowthExceedsBound { degree, value: v, bound });
            }
        }
    }
    AdmissibilityReport { admissible: true, violation: None }
}

fn reject(violation: HilbertViolation) -> AdmissibilityReport {
    AdmissibilityReport { admissible: false, violation: Some(violation) }
}

/// Maximal number of linearly independent planes of projective 3-space
/// containing a zero-dimensional scheme of the given degree: 4 for the empty
/// scheme, 3 for a point, 2 from degree two on (a length-2 subscheme spans a
/// line, and three independent planes meet in a single reduced point).
pub fn max_independent_planes(degree: u64) -> u64 {
    match degree {
        0 => 4,
        1 => 3,
        _ => 2,
    }
}

/// Classical facts about a zero-dimensional subscheme of projective 3-space
/// that the case analysis cites by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CbDegreeFacts {
    pub degree: u64,
    /// Subschemes of degree at most 2 are arithmetically Gorenstein.
    pub always_gorenstein: bool,
    /// See [`max_independent_planes`].
    pub max_independent_planes: u64,
    /// A single point is never Cayley-Bacharach with respect to a globally
    /// generated line bundle with sections: some section misses the point.
    pub cb_wrt_globally_generated_possible: bool,
    /// Smallest twist `σ` with `h(σ)` at the scheme degree and
    /// `h(σ - 1)` strictly below it, when the prefix shows one; for an
    /// arithmetically Gorenstein scheme this is the Cayley-Bacharach twist.
    pub cb_twist: Option<u32>,
}

/// Emit the named facts for a scheme of the given degree and Hilbert
/// function. Total and deterministic for every degree >= 1.
pub fn cb_degree_facts(scheme_degree: u64, hf: &HilbertFunction) -> CbDegreeFacts {
    assert!(scheme_degree >= 1, "facts are stated for nonempty schemes");
    let values = hf.values();
    let cb_twist = values.iter().enumerate().skip(1).find_map(|(i, &v)| {
        (v == scheme_degree && values[i - 1] < scheme_degree).then_some(i as u32)
    });
    CbDegreeFacts {
        degree: scheme_degree,
        always_gorenstein: scheme_degree <= 2,
        max_independent_planes: max_independent_planes(scheme_degree),
        cb_wrt_globally_generated_possible: scheme_degree >= 2,
        cb_twist,
    }
}
