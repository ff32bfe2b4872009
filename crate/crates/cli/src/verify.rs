//! `verify-paper`: regenerates every numeric claim as an exact string and
//! compares it with the literal expected value.

use std::time::Instant;

use maxsym::orbifold::{genus_at_factor, MinimalityCheck};
use maxsym::presentations::{CatalogueGroup, SubgroupSelector};
use maxsym::{
    chi_orb, classify_geometry, classify_gluing, genus_from_order, minimal_amalgams, quotient_tetrahedron,
    search_minimal, subgroup_words, tc, Amalgam, ClassificationOutcome, EnumerationResult, Family, GluingMap,
    GluingSpec, LabeledTetrahedron, MinimalOrbifoldType, Presentation, Rational, DEFAULT_BUDGET,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::commands::{Rendered, Status};
use crate::{to_csv, to_json, Format, GroupFamily};

pub const SCHEMA: &str = "maxsym.verification-report/1";

/// Budget under which Euclidean and hyperbolic groups must not complete.
pub const INFINITE_BUDGET: usize = 100_000;

type Compute = Box<dyn Fn() -> String + Send + Sync>;

/// One claim: its literal expected value and how to recompute it.
pub struct CheckSpec {
    pub id: String,
    pub anchor: &'static str,
    pub expected: String,
    compute: Compute,
}

impl CheckSpec {
    pub fn new(
        id: impl Into<String>,
        anchor: &'static str,
        expected: impl Into<String>,
        compute: impl Fn() -> String + Send + Sync + 'static,
    ) -> Self {
        Self { id: id.into(), anchor, expected: expected.into(), compute: Box::new(compute) }
    }

    fn run(&self) -> CheckRecord {
        let start = Instant::now();
        let computed = (self.compute)();
        let elapsed_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
        CheckRecord {
            id: self.id.clone(),
            anchor: self.anchor.to_string(),
            pass: computed == self.expected,
            expected: self.expected.clone(),
            computed,
            elapsed_ms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub schema: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => to_csv(&self.checks),
            Format::Text => {
                let mut out = String::new();
                for c in &self.checks {
                    if c.pass {
                        out += &format!("PASS {}: {}\n", c.id, c.computed);
                    } else {
                        out += &format!("FAIL {}: computed {}, expected {}\n", c.id, c.computed, c.expected);
                    }
                }
                out += &format!("{} checks: {} passed, {} failed\n", self.checks.len(), self.passed, self.failed);
                out
            }
        }
    }
}

/// Runs every check, concurrently, and reports them sorted by id.
pub fn run_checks(specs: &[CheckSpec]) -> VerificationReport {
    let mut checks: Vec<CheckRecord> = specs.par_iter().map(CheckSpec::run).collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = checks.iter().filter(|c| c.pass).count();
    VerificationReport { schema: SCHEMA.to_string(), passed, failed: checks.len() - passed, checks }
}

/// Renders the report of `specs`; status is `Failed` if any check fails.
pub fn verify_with(specs: &[CheckSpec], format: Format) -> Rendered {
    let report = run_checks(specs);
    let status = if report.failed == 0 { Status::Success } else { Status::Failed };
    Rendered { stdout: report.render(format), status }
}

pub fn verify_paper(format: Format) -> Rendered {
    verify_with(&suite(), format)
}

fn order_string(p: &Presentation, budget: usize) -> String {
    match tc::order(p, budget) {
        Ok(EnumerationResult::Completed { index, .. }) => index.to_string(),
        Ok(EnumerationResult::Exceeded { .. }) => "exceeded".to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn family_order(family: GroupFamily, n: u32, m: u32, budget: usize) -> String {
    match family.presentation(n, m) {
        Ok(p) => order_string(&p, budget),
        Err(e) => format!("error: {e}"),
    }
}

fn family_genus(family: GroupFamily, n: u32, m: u32) -> String {
    let order = family_order(family, n, m, DEFAULT_BUDGET);
    match order.parse::<u64>() {
        Ok(o) => match genus_at_factor(o, family.genus_factor()) {
            Ok(g) => g.to_string(),
            Err(e) => format!("error: {e}"),
        },
        Err(_) => order,
    }
}

fn family_geometry(family: GroupFamily, n: u32, m: u32) -> String {
    match family.tetrahedron(n, m) {
        Ok(t) => classify_geometry(&t).to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn reflection_index(family: GroupFamily, n: u32, m: u32) -> String {
    let run = || -> Result<String, String> {
        let p = family.presentation(n, m)?;
        let h = subgroup_words(&p, SubgroupSelector::ReflectionSubgroup).map_err(|e| e.to_string())?;
        let r = tc::index(&p, &h, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        Ok(r.index().map_or("exceeded".to_string(), |i| i.to_string()))
    };
    run().unwrap_or_else(|e| format!("error: {e}"))
}

fn geometry_split(family: GroupFamily) -> String {
    let mut counts = [0; 3];
    for n in 2..=5 {
        for m in n..=5 {
            match family_geometry(family, n, m).as_str() {
                "Spherical" => counts[0] += 1,
                "Euclidean" => counts[1] += 1,
                "Hyperbolic" => counts[2] += 1,
                _ => {}
            }
        }
    }
    format!("{}/{}/{}", counts[0], counts[1], counts[2])
}

fn chi_string(a: &Amalgam) -> String {
    format!("{a}: {}", chi_orb(a))
}

fn gluing_counts() -> String {
    let names = ["TypeMismatch", "Double", "BadOrbifold", "CoxeterQuotient", "TwistedCoxeterQuotient"];
    let mut counts = [0; 5];
    for spec in GluingSpec::all() {
        counts[match classify_gluing(&spec) {
            ClassificationOutcome::TypeMismatch => 0,
            ClassificationOutcome::Double(..) => 1,
            ClassificationOutcome::BadOrbifold(..) => 2,
            ClassificationOutcome::CoxeterQuotient(..) => 3,
            ClassificationOutcome::TwistedCoxeterQuotient(..) => 4,
        }] += 1;
    }
    names.iter().zip(counts).map(|(n, c)| format!("{n} {c}")).collect::<Vec<_>>().join(", ")
}

fn glue_string(left: &str, right: &str, map: GluingMap) -> String {
    match (left.parse::<MinimalOrbifoldType>(), right.parse::<MinimalOrbifoldType>()) {
        (Ok(left), Ok(right)) => classify_gluing(&GluingSpec { left, right, map }).to_string(),
        _ => "error: unknown orbifold type".to_string(),
    }
}

fn quotient_string(outcome: ClassificationOutcome) -> String {
    match quotient_tetrahedron(&outcome) {
        Some(t) => format!("{t} {}", classify_geometry(&t)),
        None => "NotApplicable".to_string(),
    }
}

fn genus_string(result: Result<u64, impl ToString>) -> String {
    result.map_or_else(|e| format!("error: {}", e.to_string()), |g| g.to_string())
}

/// Every check, in no particular order.
pub fn suite() -> Vec<CheckSpec> {
    use GroupFamily::*;
    let mut s = vec![];

    let untwisted_geometry = [
        ((2, 2), "Spherical"),
        ((2, 3), "Spherical"),
        ((2, 4), "Spherical"),
        ((2, 5), "Spherical"),
        ((3, 3), "Spherical"),
        ((3, 4), "Spherical"),
        ((3, 5), "Spherical"),
        ((4, 4), "Euclidean"),
        ((4, 5), "Hyperbolic"),
        ((5, 5), "Hyperbolic"),
    ];
    for ((n, m), class) in untwisted_geometry {
        s.push(CheckSpec::new(format!("geometry.C.{n}-{m}"), "geometry lists: C(n,m;2,2;2,3)", class, move || {
            family_geometry(C, n, m)
        }));
    }
    s.push(CheckSpec::new("geometry.C.split", "geometry lists: C(n,m;2,2;2,3)", "7/1/2", || geometry_split(C)));

    let twisted_geometry = [
        ((2, 2), "Spherical"),
        ((2, 3), "Spherical"),
        ((2, 4), "Spherical"),
        ((3, 3), "Euclidean"),
        ((2, 5), "Hyperbolic"),
        ((3, 4), "Hyperbolic"),
        ((3, 5), "Hyperbolic"),
        ((4, 4), "Hyperbolic"),
        ((4, 5), "Hyperbolic"),
        ((5, 5), "Hyperbolic"),
    ];
    for ((n, m), class) in twisted_geometry {
        s.push(CheckSpec::new(
            format!("geometry.Ctau.{n}-{m}"),
            "geometry lists: C(n,m;3,3;2,2)",
            class,
            move || family_geometry(Ctau, n, m),
        ));
    }
    s.push(CheckSpec::new("geometry.Ctau.split", "geometry lists: C(n,m;3,3;2,2)", "3/1/6", || {
        geometry_split(Ctau)
    }));

    let doubly_twisted_geometry = [
        (Cmu, 2, "Spherical"),
        (Cmu, 3, "Spherical"),
        (Cmu, 4, "Euclidean"),
        (Cmu, 5, "Hyperbolic"),
        (Ctaumu, 2, "Spherical"),
        (Ctaumu, 3, "Euclidean"),
        (Ctaumu, 4, "Hyperbolic"),
        (Ctaumu, 5, "Hyperbolic"),
    ];
    for (family, n, class) in doubly_twisted_geometry {
        s.push(CheckSpec::new(
            format!("geometry.{family}.{n}-{n}"),
            "twisted geometry assignment: C_mu(n,n), C_taumu(n,n)",
            class,
            move || family_geometry(family, n, n),
        ));
    }

    let untwisted = [((2, 2), 24, 2), ((2, 3), 48, 3), ((2, 4), 96, 5), ((2, 5), 240, 11), ((3, 3), 120, 6)];
    let untwisted = untwisted.into_iter().chain([((3, 4), 384, 17), ((3, 5), 14400, 601)]);
    for ((n, m), order, genus) in untwisted {
        let anchor = "corollary: untwisted genera 2, 3, 5, 11, 6, 17, 601";
        s.push(CheckSpec::new(format!("order.C.{n}-{m}"), anchor, order.to_string(), move || {
            family_order(C, n, m, DEFAULT_BUDGET)
        }));
        s.push(CheckSpec::new(format!("genus.C.{n}-{m}"), anchor, genus.to_string(), move || {
            family_genus(C, n, m)
        }));
    }

    for ((n, m), order, genus) in [((2, 2), 72, 4), ((2, 3), 240, 11), ((2, 4), 2304, 97)] {
        let anchor = "corollary: twisted genera 4, 11, 97";
        s.push(CheckSpec::new(format!("order.Ctau.{n}-{m}"), anchor, order.to_string(), move || {
            family_order(Ctau, n, m, DEFAULT_BUDGET)
        }));
        s.push(CheckSpec::new(format!("genus.Ctau.{n}-{m}"), anchor, genus.to_string(), move || {
            family_genus(Ctau, n, m)
        }));
        s.push(CheckSpec::new(
            format!("index.reflection.Ctau.{n}-{m}"),
            "reflection subgroup of index two",
            "2",
            move || reflection_index(Ctau, n, m),
        ));
    }
    s.push(CheckSpec::new("index.reflection.Ctaumu.2-2", "reflection subgroup of index four", "4", || {
        reflection_index(Ctaumu, 2, 2)
    }));

    for (family, n, order, genus) in [(Cmu, 2, 48, 2), (Cmu, 3, 240, 6), (Ctaumu, 2, 144, 4)] {
        let anchor = "proposition: genera 2, 4, 6 at 48(g-1)";
        s.push(CheckSpec::new(format!("order.{family}.{n}-{n}"), anchor, order.to_string(), move || {
            family_order(family, n, n, DEFAULT_BUDGET)
        }));
        s.push(CheckSpec::new(format!("genus.{family}.{n}-{n}"), anchor, genus.to_string(), move || {
            family_genus(family, n, n)
        }));
    }

    let minimal = [
        "Dbar2 *_Zbar2 Dbar3",
        "Dbar3 *_Zbar3 Abar4",
        "Dbar4 *_Zbar4 Sbar4",
        "Dbar5 *_Zbar5 Abar5",
        "D2*2 *_Zbar2 Dbar3",
        "D2*3 *_Zbar3 Abar4",
        "D2*4 *_Zbar4 Sbar4",
        "D2*5 *_Zbar5 Abar5",
    ];
    for (i, name) in minimal.into_iter().enumerate() {
        let family = if i < 4 { Family::H } else { Family::HTilde };
        let n = i as u32 % 4 + 2;
        s.push(CheckSpec::new(
            format!("chi.minimal.{family}{n}"),
            "minimal handlebody orbifolds have chi = -1/24",
            format!("{name}: -1/24"),
            move || match MinimalOrbifoldType::new(family, n) {
                Some(t) => chi_string(&t.amalgam()),
                None => "error: no such type".to_string(),
            },
        ));
    }
    let orientation_preserving = ["D2 *_Z2 D3", "D3 *_Z3 A4", "D4 *_Z4 S4", "D5 *_Z5 A5"];
    for (i, name) in orientation_preserving.into_iter().enumerate() {
        s.push(CheckSpec::new(
            format!("chi.orientation-preserving.{}", i + 2),
            "orientation-preserving amalgams have chi = -1/12",
            format!("{name}: -1/12"),
            move || match minimal_amalgams(true).get(8 + i) {
                Some(a) => chi_string(a),
                None => "error: missing amalgam".to_string(),
            },
        ));
    }
    s.push(CheckSpec::new(
        "search.minimal.100",
        "no admissible amalgam with chi in (-1/24, 0)",
        "top -1/24 by 8 amalgams, none in gap",
        || {
            let check = MinimalityCheck::of(&search_minimal(100));
            let top = check.top.map_or("none".to_string(), |r| r.to_string());
            let gap = if check.in_gap.is_empty() { "none".to_string() } else { check.in_gap.len().to_string() };
            format!("top {top} by {} amalgams, {gap} in gap", check.achievers.len())
        },
    ));

    s.push(CheckSpec::new("genus.hyperbolic.24", "genus-11 hyperbolic example: 240 = 24(g-1)", "11", || {
        genus_string(genus_from_order(240, Rational::new(-1, 24)))
    }));
    s.push(CheckSpec::new("genus.hyperbolic.48", "genus-11 hyperbolic example: 480 = 48(g-1)", "11", || {
        genus_string(genus_from_order(480, Rational::new(-1, 48)))
    }));

    let anchor = "gluing theorem: case analysis";
    s.push(CheckSpec::new(
        "glue.counts",
        anchor,
        "TypeMismatch 64, Double 8, BadOrbifold 24, CoxeterQuotient 16, TwistedCoxeterQuotient 16",
        gluing_counts,
    ));
    let spots = [
        ("H5", "H5", GluingMap::Identity, "Double(H,5)"),
        ("H4", "H5", GluingMap::Identity, "BadOrbifold(4,5)"),
        ("Ht3", "Ht4", GluingMap::Reflection, "TwistedCoxeterQuotient(3,4)"),
        ("H2", "Ht2", GluingMap::Identity, "TypeMismatch"),
        ("H3", "H5", GluingMap::Reflection, "CoxeterQuotient(3,5)"),
    ];
    for (left, right, map, expected) in spots {
        let tag = if map == GluingMap::Identity { "id" } else { "refl" };
        s.push(CheckSpec::new(format!("glue.{left}.{right}.{tag}"), anchor, expected, move || {
            glue_string(left, right, map)
        }));
    }
    let quotients = [
        (ClassificationOutcome::CoxeterQuotient(4, 5), "C(4,5;2,2;2,3) Hyperbolic"),
        (ClassificationOutcome::TwistedCoxeterQuotient(2, 4), "C(2,4;3,3;2,2) Spherical"),
        (ClassificationOutcome::Double(Family::H, 3), "NotApplicable"),
    ];
    for (outcome, expected) in quotients {
        s.push(CheckSpec::new(format!("quotient.{outcome}"), "quotient tetrahedra", expected, move || {
            quotient_string(outcome)
        }));
    }

    for (group, order) in [(CatalogueGroup::Abar4, 24), (CatalogueGroup::Sbar4, 48), (CatalogueGroup::Abar5, 120)] {
        s.push(CheckSpec::new(
            format!("catalogue.order.{group}"),
            "extended triangle groups [2,3,3], [2,3,4], [2,3,5]",
            order.to_string(),
            move || order_string(&group.presentation(), DEFAULT_BUDGET),
        ));
    }

    let infinite = [(C, 4, 4), (C, 4, 5), (C, 5, 5), (Ctau, 3, 3), (Ctau, 2, 5), (Cmu, 5, 5), (Ctaumu, 3, 3)];
    for (family, n, m) in infinite {
        s.push(CheckSpec::new(
            format!("exceeded.{family}.{n}-{m}"),
            "Euclidean and hyperbolic groups are infinite",
            "exceeded",
            move || family_order(family, n, m, INFINITE_BUDGET),
        ));
    }

    s.push(CheckSpec::new(
        "tetrahedron.C.3-5",
        "Coxeter tetrahedron convention C(n,m) = C(n,m;2,2;2,3)",
        "C(3,5;2,2;2,3)",
        || LabeledTetrahedron::coxeter_family(3, 5).map_or_else(|e| format!("error: {e}"), |t| t.to_string()),
    ));
    s
}
