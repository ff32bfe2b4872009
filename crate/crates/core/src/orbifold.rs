//! Minimal handlebody orbifolds, their Euler characteristics, the genus
//! arithmetic `|G| = 24(g-1)` and the gluing case analysis for quotients of
//! strongly maximally symmetric actions.
//!
//! A handlebody orbifold here is two 3-disk orbifolds `D³/G1`, `D³/G2` joined
//! along a 2-disk suborbifold `D²/H`, recorded by its fundamental group
//! `G1 *_H G2`.
//!
//! Sign convention: `χ = 1/|G1| + 1/|G2| - 1/|H|`. This is the convention in
//! which `χ(V/G) = χ(V)/|G| = (1-g)/|G|` for a genus `g` handlebody `V`, so
//! the minimal orbifolds have `χ = -1/24`. The opposite overall sign would
//! make all of them `+1/24`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentations::CatalogueGroup;
use crate::tetra::LabeledTetrahedron;

pub type Rational = Ratio<i64>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error("{0} is not an amalgamating disk group (expected Zbar_n or Z_n)")]
    NotDiskGroup(CatalogueGroup),
    #[error("{group} has no disk suborbifold with group {disk}")]
    Inadmissible { group: CatalogueGroup, disk: CatalogueGroup },
    #[error("malformed amalgam {0:?}, expected `G1 *_H G2`")]
    Malformed(String),
    #[error(transparent)]
    Catalogue(#[from] crate::presentations::CatalogueError),
    #[error("unknown handlebody orbifold {0:?}, expected H2..H5 or Ht2..Ht5")]
    UnknownType(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GenusError {
    #[error("Euler characteristic {0} is not negative")]
    NonNegativeChi(Rational),
    #[error("order {order} with χ = {chi} gives a non-integral genus")]
    NonIntegral { order: u64, chi: Rational },
}

#[derive(Debug, Clone, Deserialize)]
struct TableEntry {
    name: String,
    points: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
struct TableFile {
    group: Vec<TableEntry>,
}

/// Which disk groups `Zbar_n` / `Z_n` each 3-disk group admits.
#[derive(Debug, Clone)]
pub struct AdmissibilityTable {
    entries: Vec<TableEntry>,
}

/// Shipped table text.
pub const ADMISSIBILITY_TOML: &str = include_str!("../data/admissibility.toml");

impl AdmissibilityTable {
    pub fn parse(text: &str) -> Result<Self, toml::de::Error> {
        let file: TableFile = toml::from_str(text)?;
        Ok(Self { entries: file.group })
    }

    /// The shipped table.
    pub fn builtin() -> &'static Self {
        static TABLE: OnceLock<AdmissibilityTable> = OnceLock::new();
        TABLE.get_or_init(|| Self::parse(ADMISSIBILITY_TOML).expect("shipped admissibility table parses"))
    }

    fn family_name(g: CatalogueGroup) -> Option<&'static str> {
        use CatalogueGroup::*;
        Some(match g {
            Dbar(_) => "Dbar",
            D2Star(_) => "D2*",
            Abar4 => "Abar4",
            Sbar4 => "Sbar4",
            Abar5 => "Abar5",
            D(_) => "D",
            A4 => "A4",
            S4 => "S4",
            A5 => "A5",
            Zbar(_) | Z(_) => return None,
        })
    }

    /// Orders of the singular points of `S²/g` where a disk suborbifold can sit.
    pub fn points(&self, g: CatalogueGroup) -> Vec<u32> {
        let Some(name) = Self::family_name(g) else {
            return vec![];
        };
        let Some(entry) = self.entries.iter().find(|e| e.name == name) else {
            return vec![];
        };
        entry
            .points
            .iter()
            .filter_map(|p| match p.as_str() {
                "k" => g.parameter(),
                s => s.parse().ok(),
            })
            .collect()
    }

    /// Whether `disk` (a `Zbar_n` or `Z_n`) is the group of a disk suborbifold
    /// of the boundary of `D³/g`.
    pub fn admits(&self, g: CatalogueGroup, disk: CatalogueGroup) -> bool {
        let n = match (disk, g.is_orientation_preserving()) {
            (CatalogueGroup::Zbar(n), false) | (CatalogueGroup::Z(n), true) => n,
            _ => return false,
        };
        self.points(g).contains(&n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OrientationClass {
    OrientationReversingFamily,
    OrientationPreservingFamily,
}

/// `g1 *_h g2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Amalgam {
    g1: CatalogueGroup,
    h: CatalogueGroup,
    g2: CatalogueGroup,
}

impl Amalgam {
    /// Checks `h` against the shipped admissibility table.
    pub fn new(g1: CatalogueGroup, h: CatalogueGroup, g2: CatalogueGroup) -> Result<Self, OrbifoldError> {
        let (g1, h, g2) = (g1.validated()?, h.validated()?, g2.validated()?);
        if !matches!(h, CatalogueGroup::Zbar(_) | CatalogueGroup::Z(_)) {
            return Err(OrbifoldError::NotDiskGroup(h));
        }
        let table = AdmissibilityTable::builtin();
        for g in [g1, g2] {
            if !table.admits(g, h) {
                return Err(OrbifoldError::Inadmissible { group: g, disk: h });
            }
        }
        Ok(Self { g1, h, g2 })
    }

    pub fn g1(&self) -> CatalogueGroup {
        self.g1
    }

    pub fn h(&self) -> CatalogueGroup {
        self.h
    }

    pub fn g2(&self) -> CatalogueGroup {
        self.g2
    }

    pub fn orientation_class(&self) -> OrientationClass {
        if self.h.is_orientation_preserving() {
            OrientationClass::OrientationPreservingFamily
        } else {
            OrientationClass::OrientationReversingFamily
        }
    }

    /// The handlebody orbifold `H_n` (for `Dbar_n *_Zbar_n G`) or `H̃_n`
    /// (for `D2*n *_Zbar_n G`), if this is one of the eight minimal amalgams.
    pub fn minimal_type(&self) -> Option<MinimalOrbifoldType> {
        let position = minimal_amalgams(false).iter().position(|a| a == self)?;
        let family = if position < 4 { Family::H } else { Family::HTilde };
        Some(MinimalOrbifoldType { family, n: position as u32 % 4 + 2 })
    }
}

impl fmt::Display for Amalgam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} *_{} {}", self.g1, self.h, self.g2)
    }
}

impl FromStr for Amalgam {
    type Err = OrbifoldError;

    /// Parses `Dbar5 *_Zbar5 Abar5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || OrbifoldError::Malformed(s.to_string());
        let parts: Vec<&str> = s.split_whitespace().collect();
        let [g1, h, g2] = parts[..] else {
            return Err(malformed());
        };
        let h = h.strip_prefix("*_").ok_or_else(malformed)?;
        Amalgam::new(g1.parse()?, h.parse()?, g2.parse()?)
    }
}

fn inverse_order(g: CatalogueGroup) -> Rational {
    Rational::new(1, g.order() as i64)
}

/// `1/|G1| + 1/|G2| - 1/|H|`, exact.
pub fn chi_orb(a: &Amalgam) -> Rational {
    inverse_order(a.g1) + inverse_order(a.g2) - inverse_order(a.h)
}

/// The eight minimal orientation-reversing amalgams, `H2..H5` then `H̃2..H̃5`,
/// followed by the four orientation-preserving ones when requested.
pub fn minimal_amalgams(include_orientation_preserving: bool) -> Vec<Amalgam> {
    use CatalogueGroup::*;
    let mut list = vec![];
    let big = |n: u32, reversing: bool| match (n, reversing) {
        (2, true) => Dbar(3),
        (3, true) => Abar4,
        (4, true) => Sbar4,
        (5, true) => Abar5,
        (2, false) => D(3),
        (3, false) => A4,
        (4, false) => S4,
        (5, false) => A5,
        _ => unreachable!(),
    };
    for n in 2..=5 {
        list.push(Amalgam::new(Dbar(n), Zbar(n), big(n, true)).expect("admissible"));
    }
    for n in 2..=5 {
        list.push(Amalgam::new(D2Star(n), Zbar(n), big(n, true)).expect("admissible"));
    }
    if include_orientation_preserving {
        for n in 2..=5 {
            list.push(Amalgam::new(D(n), Z(n), big(n, false)).expect("admissible"));
        }
    }
    list
}

/// Largest dihedral-family parameter of `G1`, `G2` considered by
/// [`search_minimal`]; never below 5 so the polyhedral cases are reachable.
pub fn search_parameter_bound(max_n: u32) -> u32 {
    max_n.max(5)
}

/// All admissible orientation-reversing amalgams `G1 *_Zbar_n G2` with
/// `n ≤ max_n` and `χ < 0`, sorted by `χ` descending (ties by name).
///
/// Each unordered pair appears once, with `|G1| ≤ |G2|`. The disk groups
/// range over `Zbar_2..=Zbar_max_n`; `G1` and `G2` range over the
/// orientation-reversing 3-disk groups of the admissibility table with
/// dihedral parameters up to [`search_parameter_bound`].
pub fn search_minimal(max_n: u32) -> Vec<(Amalgam, Rational)> {
    assert!(max_n >= 2, "max_n must be at least 2");
    use CatalogueGroup::*;
    let bound = search_parameter_bound(max_n);
    let mut groups: Vec<CatalogueGroup> = (2..=bound).flat_map(|k| [Dbar(k), D2Star(k)]).collect();
    groups.extend([Abar4, Sbar4, Abar5]);
    groups.sort_by_key(|g| (g.order(), *g));

    let table = AdmissibilityTable::builtin();
    let mut out = vec![];
    for n in 2..=max_n {
        let h = Zbar(n);
        let sides: Vec<CatalogueGroup> = groups.iter().copied().filter(|&g| table.admits(g, h)).collect();
        for (i, &g1) in sides.iter().enumerate() {
            for &g2 in &sides[i..] {
                let a = Amalgam::new(g1, h, g2).expect("filtered by admissibility");
                let chi = chi_orb(&a);
                if chi < Rational::from_integer(0) {
                    out.push((a, chi));
                }
            }
        }
    }
    out.sort_by(|(a, x), (b, y)| y.cmp(x).then_with(|| a.to_string().cmp(&b.to_string())));
    out
}

/// Summary of a [`search_minimal`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityCheck {
    /// Largest negative `χ` found.
    pub top: Option<Rational>,
    /// Amalgams attaining `top`.
    pub achievers: Vec<Amalgam>,
    /// Amalgams with `-1/24 < χ < 0`.
    pub in_gap: Vec<Amalgam>,
}

impl MinimalityCheck {
    pub fn of(entries: &[(Amalgam, Rational)]) -> Self {
        let top = entries.first().map(|(_, chi)| *chi);
        let achievers = entries
            .iter()
            .filter(|(_, chi)| Some(*chi) == top)
            .map(|(a, _)| *a)
            .collect();
        let floor = Rational::new(-1, 24);
        let in_gap = entries.iter().filter(|(_, chi)| *chi > floor).map(|(a, _)| *a).collect();
        Self { top, achievers, in_gap }
    }

    /// `top = -1/24`, nothing in the gap, and the achievers are exactly the
    /// minimal amalgams with disk parameter `≤ max_n`.
    pub fn confirms_minimal_octet(&self, max_n: u32) -> bool {
        let expected: BTreeSet<Amalgam> = minimal_amalgams(false)
            .into_iter()
            .filter(|a| a.h.parameter().is_some_and(|n| n <= max_n))
            .collect();
        let found: BTreeSet<Amalgam> = self.achievers.iter().copied().collect();
        self.top == Some(Rational::new(-1, 24)) && self.in_gap.is_empty() && found == expected
    }
}

/// `g = 1 - χ·|G|`, from multiplicativity of `χ` under the covering `V → V/G`.
pub fn genus_from_order(order: u64, chi: Rational) -> Result<u64, GenusError> {
    if chi >= Rational::from_integer(0) {
        return Err(GenusError::NonNegativeChi(chi));
    }
    let product = Rational::from_integer(order as i64) * chi;
    if !product.is_integer() {
        return Err(GenusError::NonIntegral { order, chi });
    }
    Ok((1 - product.to_integer()) as u64)
}

/// `|G| = k(g-1)` solved for `g`, e.g. `k = 24` or `k = 48`.
pub fn genus_at_factor(order: u64, factor: u64) -> Result<u64, GenusError> {
    genus_from_order(order, Rational::new(-1, factor as i64))
}

/// Whether the handlebody orbifold is some `H_n` or some `H̃_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    H,
    HTilde,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::H => f.write_str("H"),
            Family::HTilde => f.write_str("Ht"),
        }
    }
}

/// Boundary 2-orbifold of a minimal handlebody orbifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Boundary {
    /// Square `D²([2,2,2,3])` with reflector sides.
    Square2223,
    /// Disk `D²(2,[2,3])`: cone point of order 2, corners `D2` and `D3`.
    Disk2_23,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MinimalOrbifoldType {
    family: Family,
    n: u32,
}

impl MinimalOrbifoldType {
    pub fn new(family: Family, n: u32) -> Option<Self> {
        (2..=5).contains(&n).then_some(Self { family, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn boundary(&self) -> Boundary {
        match self.family {
            Family::H => Boundary::Square2223,
            Family::HTilde => Boundary::Disk2_23,
        }
    }

    pub fn amalgam(&self) -> Amalgam {
        let offset = if self.family == Family::H { 0 } else { 4 };
        minimal_amalgams(false)[offset + self.n as usize - 2]
    }

    /// `H2..H5`, `Ht2..Ht5`.
    pub fn all() -> impl Iterator<Item = Self> {
        [Family::H, Family::HTilde]
            .into_iter()
            .flat_map(|family| (2..=5).map(move |n| Self { family, n }))
    }
}

impl fmt::Display for MinimalOrbifoldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.n)
    }
}

impl FromStr for MinimalOrbifoldType {
    type Err = OrbifoldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || OrbifoldError::UnknownType(s.to_string());
        let (family, digits) = match s.strip_prefix("Ht") {
            Some(rest) => (Family::HTilde, rest),
            None => (Family::H, s.strip_prefix('H').ok_or_else(unknown)?),
        };
        let n = digits.parse().map_err(|_| unknown())?;
        Self::new(family, n).ok_or_else(unknown)
    }
}

/// Boundary identification, up to isotopy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GluingMap {
    Identity,
    Reflection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GluingSpec {
    pub left: MinimalOrbifoldType,
    pub right: MinimalOrbifoldType,
    pub map: GluingMap,
}

impl GluingSpec {
    /// The full `8 × 8 × 2` domain.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(128);
        for left in MinimalOrbifoldType::all() {
            for right in MinimalOrbifoldType::all() {
                for map in [GluingMap::Identity, GluingMap::Reflection] {
                    out.push(Self { left, right, map });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassificationOutcome {
    /// Boundaries `D²([2,2,2,3])` and `D²(2,[2,3])` are not homeomorphic.
    TypeMismatch,
    /// Identity gluing with `n ≠ m` creates a bad 2-suborbifold.
    BadOrbifold(u32, u32),
    /// The double of a minimal handlebody orbifold along its boundary.
    Double(Family, u32),
    /// The Coxeter tetrahedral orbifold `C(n,m;2,2;2,3)`.
    CoxeterQuotient(u32, u32),
    /// The twisted orbifold `C(n,m;3,3;2,2)/τ`.
    TwistedCoxeterQuotient(u32, u32),
}

impl fmt::Display for ClassificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationOutcome::TypeMismatch => f.write_str("TypeMismatch"),
            ClassificationOutcome::BadOrbifold(n, m) => write!(f, "BadOrbifold({n},{m})"),
            ClassificationOutcome::Double(family, n) => write!(f, "Double({family},{n})"),
            ClassificationOutcome::CoxeterQuotient(n, m) => write!(f, "CoxeterQuotient({n},{m})"),
            ClassificationOutcome::TwistedCoxeterQuotient(n, m) => {
                write!(f, "TwistedCoxeterQuotient({n},{m})")
            }
        }
    }
}

/// What gluing two minimal handlebody orbifolds along their boundaries gives.
pub fn classify_gluing(spec: &GluingSpec) -> ClassificationOutcome {
    let (left, right) = (spec.left, spec.right);
    if left.family != right.family {
        return ClassificationOutcome::TypeMismatch;
    }
    let (n, m) = (left.n, right.n);
    match (spec.map, left.family) {
        (GluingMap::Identity, family) if n == m => ClassificationOutcome::Double(family, n),
        (GluingMap::Identity, _) => ClassificationOutcome::BadOrbifold(n, m),
        (GluingMap::Reflection, Family::H) => ClassificationOutcome::CoxeterQuotient(n, m),
        (GluingMap::Reflection, Family::HTilde) => ClassificationOutcome::TwistedCoxeterQuotient(n, m),
    }
}

/// The Coxeter tetrahedron whose (twisted) reflection orbifold the outcome
/// describes; `None` for doubles, bad orbifolds and type mismatches.
pub fn quotient_tetrahedron(outcome: &ClassificationOutcome) -> Option<LabeledTetrahedron> {
    match *outcome {
        ClassificationOutcome::CoxeterQuotient(n, m) => LabeledTetrahedron::coxeter_family(n, m).ok(),
        ClassificationOutcome::TwistedCoxeterQuotient(n, m) => {
            LabeledTetrahedron::twisted_family(n, m).ok()
        }
        _ => None,
    }
}
