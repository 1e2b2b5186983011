//! Exact intersection-form arithmetic on a rank-2 Picard lattice.
//!
//! The default profile is the lattice of a general determinantal quartic
//! surface: generators `h` (plane section) and `A` (projectively normal
//! sextic of genus 3) with `h² = A² = 4` and `h·A = 6`. Everything here is
//! plain integer arithmetic; no floating point enters any logic path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Symmetric integer intersection matrix of a rank-2 lattice.
///
/// Only `g12` is stored once, so symmetry holds by construction. Validation
/// enforces the two facts every operation silently relies on:
///
/// * `g11` and `g22` are even, so `D²` is always even and the Euler
///   characteristic of a line bundle is an integer;
/// * the determinant is negative (hyperbolic signature, as for the Picard
///   lattice of a projective surface).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramLattice {
    g11: i64,
    g12: i64,
    g22: i64,
}

impl GramLattice {
    /// Build a lattice, rejecting profiles that break the even/hyperbolic
    /// invariants.
    pub fn new(g11: i64, g12: i64, g22: i64) -> Result<Self> {
        if g11 % 2 != 0 || g22 % 2 != 0 {
            return Err(Error::InvalidLattice(format!(
                "diagonal entries must be even, got g11 = {g11}, g22 = {g22}"
            )));
        }
        let det = g11 * g22 - g12 * g12;
        if det >= 0 {
            return Err(Error::InvalidLattice(format!(
                "determinant must be negative (hyperbolic signature), got {det}"
            )));
        }
        Ok(GramLattice { g11, g12, g22 })
    }

    /// The Picard lattice of a general determinantal quartic surface:
    /// `[[4, 6], [6, 4]]`, determinant -20.
    pub const fn determinantal_quartic() -> Self {
        GramLattice { g11: 4, g12: 6, g22: 4 }
    }

    /// Whether this is the determinantal-quartic profile. The effectivity
    /// criterion and everything downstream of it is only proved there.
    pub fn is_determinantal_quartic(&self) -> bool {
        *self == Self::determinantal_quartic()
    }

    pub fn g11(&self) -> i64 {
        self.g11
    }

    pub fn g12(&self) -> i64 {
        self.g12
    }

    pub fn g22(&self) -> i64 {
        self.g22
    }

    pub fn determinant(&self) -> i64 {
        self.g11 * self.g22 - self.g12 * self.g12
    }
}

impl Default for GramLattice {
    fn default() -> Self {
        Self::determinantal_quartic()
    }
}

impl fmt::Display for GramLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.g11, self.g12, self.g12, self.g22)
    }
}

/// Integer divisor class `x·h + y·A`.
///
/// The derived `Ord` is lexicographic in `(x, y)`, which is the canonical
/// order used by every candidate list and table in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub x: i64,
    pub y: i64,
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { x: 0, y: 0 };
    /// Plane-section class.
    pub const H: DivisorClass = DivisorClass { x: 1, y: 0 };
    /// Sextic-curve class.
    pub const A: DivisorClass = DivisorClass { x: 0, y: 1 };

    pub const fn new(x: i64, y: i64) -> Self {
        DivisorClass { x, y }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.x, -self.y)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * rhs.x, self * rhs.y)
    }
}

impl fmt::Display for DivisorClass {
    /// Compact symbolic form: `0`, `h`, `A`, `3h-A`, `2A-5h`, `-2h-A`, ...
    /// The term with positive coefficient leads when there is one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let term = |coeff: i64, sym: char| -> String {
            match coeff {
                1 => sym.to_string(),
                -1 => format!("-{sym}"),
                c => format!("{c}{sym}"),
            }
        };
        let h_first = self.x > 0 || self.y <= 0;
        let (first, second) = if h_first {
            ((self.x, 'h'), (self.y, 'A'))
        } else {
            ((self.y, 'A'), (self.x, 'h'))
        };
        let mut out = String::new();
        if first.0 != 0 {
            out.push_str(&term(first.0, first.1));
        }
        if second.0 != 0 {
            if !out.is_empty() && second.0 > 0 {
                out.push('+');
            }
            out.push_str(&term(second.0, second.1));
        }
        write!(f, "{out}")
    }
}

/// Serialized as `{"x": .., "y": .., "label": ".."}`; the label is purely
/// informational and ignored on input.
impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("DivisorClass", 3)?;
        s.serialize_field("x", &self.x)?;
        s.serialize_field("y", &self.y)?;
        s.serialize_field("label", &self.to_string())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for DivisorClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            x: i64,
            y: i64,
            #[serde(default)]
            #[allow(dead_code)]
            label: Option<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.x.abs() > (1 << 40) || raw.y.abs() > (1 << 40) {
            return Err(D::Error::custom("divisor coordinates out of range"));
        }
        Ok(DivisorClass::new(raw.x, raw.y))
    }
}

/// Chern data of a rank-2 bundle: first Chern class and integer `c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rank2Invariants {
    pub c1: DivisorClass,
    pub c2: i64,
}

impl Rank2Invariants {
    pub const fn new(c1: DivisorClass, c2: i64) -> Self {
        Rank2Invariants { c1, c2 }
    }
}

impl fmt::Display for Rank2Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(c1 = {}, c2 = {})", self.c1, self.c2)
    }
}

/// Degree, arithmetic genus and section count of the curve cut by a nonzero
/// effective class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInvariants {
    pub degree: i64,
    pub arithmetic_genus: i64,
    pub h0: i64,
}

/// Which congruence class `D²` falls in on the default lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParityClass {
    /// Both coordinates even: `D² ≡ 0 (mod 16)`.
    #[serde(rename = "0-mod-16")]
    ZeroMod16,
    /// Not both even: `D² ≡ 4 (mod 8)`.
    #[serde(rename = "4-mod-8")]
    FourMod8,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityClass::ZeroMod16 => write!(f, "0 mod 16"),
            ParityClass::FourMod8 => write!(f, "4 mod 8"),
        }
    }
}

/// Bilinear intersection form. On the default lattice
/// `D·U = 4 x_D x_U + 6 (x_D y_U + y_D x_U) + 4 y_D y_U`.
pub fn intersect(d: DivisorClass, u: DivisorClass, lattice: &GramLattice) -> i64 {
    lattice.g11 * d.x * u.x + lattice.g12 * (d.x * u.y + d.y * u.x) + lattice.g22 * d.y * u.y
}

/// Self-intersection `D²`.
pub fn self_intersection(d: DivisorClass, lattice: &GramLattice) -> i64 {
    intersect(d, d, lattice)
}

/// Halve an even quantity. The lattice invariants make odd input
/// unreachable; the check documents that rather than guarding real input.
fn half_even(n: i64) -> i64 {
    assert!(n % 2 == 0, "lattice invariant broken: {n} is odd");
    n / 2
}

/// Euler characteristic of the line bundle `O(D)`: `χ = 2 + D²/2`.
pub fn chi_line(d: DivisorClass, lattice: &GramLattice) -> i64 {
    2 + half_even(self_intersection(d, lattice))
}

/// Euler characteristic of a rank-2 bundle: `χ = 4 + c1²/2 - c2`.
pub fn chi_rank2(inv: Rank2Invariants, lattice: &GramLattice) -> i64 {
    4 + half_even(self_intersection(inv.c1, lattice)) - inv.c2
}

/// Chern data of `E ⊗ O(T)`, or of `E^∨ ⊗ O(T)` when `dualize` is set.
///
/// Twist: `(c1 + 2T, c2 + c1·T + T²)`. Dual twist: `(-c1 + 2T, c2 - c1·T + T²)`.
pub fn twist_rank2(
    inv: Rank2Invariants,
    twist: DivisorClass,
    dualize: bool,
    lattice: &GramLattice,
) -> Rank2Invariants {
    let t_sq = self_intersection(twist, lattice);
    let c1_t = intersect(inv.c1, twist, lattice);
    if dualize {
        Rank2Invariants::new(-inv.c1 + 2 * twist, inv.c2 - c1_t + t_sq)
    } else {
        Rank2Invariants::new(inv.c1 + 2 * twist, inv.c2 + c1_t + t_sq)
    }
}

/// Report with the congruence class of `D²` and the witnessing parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    pub class: ParityClass,
    pub d_squared: i64,
    pub x_even: bool,
    pub y_even: bool,
}

/// Congruence class of `D²`: `0 (mod 16)` exactly when both coordinates are
/// even, `4 (mod 8)` otherwise. The dichotomy is specific to the default
/// lattice, so other profiles are rejected.
pub fn parity_class(d: DivisorClass, lattice: &GramLattice) -> Result<ParityReport> {
    if !lattice.is_determinantal_quartic() {
        return Err(Error::UnsupportedLattice);
    }
    let d_sq = self_intersection(d, lattice);
    let x_even = d.x % 2 == 0;
    let y_even = d.y % 2 == 0;
    let class = if x_even && y_even {
        debug_assert_eq!(d_sq.rem_euclid(16), 0);
        ParityClass::ZeroMod16
    } else {
        debug_assert_eq!(d_sq.rem_euclid(8), 4);
        ParityClass::FourMod8
    };
    Ok(ParityReport { class, d_squared: d_sq, x_even, y_even })
}
