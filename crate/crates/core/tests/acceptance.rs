//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use maxsym::orbifold::MinimalityCheck;
use maxsym::presentations::{CatalogueGroup, SubgroupSelector};
use maxsym::tc;
use maxsym::*;

const SPHERICAL_BUDGET: usize = 1_000_000;
const INFINITE_BUDGET: usize = 100_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn order(p: &Presentation) -> Result<u64, String> {
    tc::order(p, SPHERICAL_BUDGET)
        .map_err(|e| e.to_string())?
        .index()
        .map(|i| i as u64)
        .ok_or_else(|| "enumeration exceeded its budget".to_string())
}

fn c(n: u32, m: u32) -> LabeledTetrahedron {
    LabeledTetrahedron::coxeter_family(n, m).unwrap()
}

fn ct(n: u32, m: u32) -> LabeledTetrahedron {
    LabeledTetrahedron::twisted_family(n, m).unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn untwisted_genera() -> Outcome {
    let start = Instant::now();
    let cases = [(2, 2, 2), (2, 3, 3), (2, 4, 5), (2, 5, 11), (3, 3, 6), (3, 4, 17), (3, 5, 601)];
    let mut got = vec![];
    for (n, m, genus) in cases {
        let ord = order(&coxeter_presentation(&c(n, m)))?;
        ensure(ord % 24 == 0, || format!("C({n},{m}) order {ord} not divisible by 24"))?;
        let g = ord / 24 + 1;
        ensure(g == genus, || format!("C({n},{m}): order {ord} gives g = {g}, expected {genus}"))?;
        got.push(g);
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("g = {got:?} in {:?}", start.elapsed()))
}

fn twisted_genera() -> Outcome {
    let start = Instant::now();
    let mut got = vec![];
    for (n, m, expected_order, genus) in [(2, 2, 72, 4), (2, 3, 240, 11), (2, 4, 2304, 97)] {
        let p = twisted_presentation(&ct(n, m), &[Twist::Tau]).map_err(|e| e.to_string())?;
        let ord = order(&p)?;
        ensure(ord == expected_order, || format!("C_tau({n},{m}) order {ord}, expected {expected_order}"))?;
        let g = ord / 24 + 1;
        ensure(ord % 24 == 0 && g == genus, || format!("C_tau({n},{m}) gives g = {g}, expected {genus}"))?;
        got.push((ord, g));
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("(order, g) = {got:?} in {:?}", start.elapsed()))
}

fn reflection_index(t: &LabeledTetrahedron, twists: &[Twist]) -> Result<usize, String> {
    let p = twisted_presentation(t, twists).map_err(|e| e.to_string())?;
    let h = subgroup_words(&p, SubgroupSelector::ReflectionSubgroup).map_err(|e| e.to_string())?;
    tc::index(&p, &h, SPHERICAL_BUDGET)
        .map_err(|e| e.to_string())?
        .index()
        .ok_or_else(|| "index enumeration exceeded its budget".to_string())
}

fn subgroup_indices() -> Outcome {
    for (n, m) in [(2, 2), (2, 3), (2, 4)] {
        let i = reflection_index(&ct(n, m), &[Twist::Tau])?;
        ensure(i == 2, || format!("reflection subgroup index {i} in C_tau({n},{m})"))?;
    }
    let i = reflection_index(&ct(2, 2), &[Twist::Tau, Twist::Mu])?;
    ensure(i == 4, || format!("reflection subgroup index {i} in C_taumu(2,2)"))?;
    Ok("index 2 in C_tau(2,2), C_tau(2,3), C_tau(2,4); index 4 in C_taumu(2,2)".into())
}

fn geometry_lists() -> Outcome {
    use GeometryClass::*;
    let split = |make: fn(u32, u32) -> LabeledTetrahedron| {
        let mut counts = BTreeMap::new();
        for n in 2..=5 {
            for m in n..=5 {
                *counts.entry(classify_geometry(&make(n, m))).or_insert(0) += 1;
            }
        }
        [Spherical, Euclidean, Hyperbolic].map(|k| counts.get(&k).copied().unwrap_or(0))
    };
    let untwisted = split(c);
    ensure(untwisted == [7, 1, 2], || format!("C(n,m) split {untwisted:?}"))?;
    let twisted = split(ct);
    ensure(twisted == [3, 1, 6], || format!("C_tau(n,m) split {twisted:?}"))?;

    // members of each list, not just the counts
    let lists: [(&str, Vec<LabeledTetrahedron>, GeometryClass); 6] = [
        ("C spherical", vec![c(2, 2), c(2, 3), c(2, 4), c(2, 5), c(3, 3), c(3, 4), c(3, 5)], Spherical),
        ("C euclidean", vec![c(4, 4)], Euclidean),
        ("C hyperbolic", vec![c(4, 5), c(5, 5)], Hyperbolic),
        ("Ctau spherical", vec![ct(2, 2), ct(2, 3), ct(2, 4)], Spherical),
        ("Ctau euclidean", vec![ct(3, 3)], Euclidean),
        ("Ctau hyperbolic", vec![ct(2, 5), ct(3, 4), ct(3, 5), ct(4, 4), ct(4, 5), ct(5, 5)], Hyperbolic),
    ];
    for (name, members, class) in &lists {
        for t in members {
            let got = classify_geometry(t);
            ensure(got == *class, || format!("{name}: {t} classified {got}"))?;
        }
    }

    // C_mu(n,n) lives on C(n,n;2,2;2,3), C_taumu(n,n) on C(n,n;3,3;2,2)
    let section3 = [
        ("C_mu(2,2)", c(2, 2), Spherical),
        ("C_mu(3,3)", c(3, 3), Spherical),
        ("C_taumu(2,2)", ct(2, 2), Spherical),
        ("C_mu(4,4)", c(4, 4), Euclidean),
        ("C_taumu(3,3)", ct(3, 3), Euclidean),
        ("C_mu(5,5)", c(5, 5), Hyperbolic),
        ("C_taumu(4,4)", ct(4, 4), Hyperbolic),
        ("C_taumu(5,5)", ct(5, 5), Hyperbolic),
    ];
    for (name, t, class) in section3 {
        let got = classify_geometry(&t);
        ensure(got == class, || format!("{name} on {t} classified {got}, expected {class}"))?;
        let twists: &[Twist] = if name.starts_with("C_mu") { &[Twist::Mu] } else { &[Twist::Tau, Twist::Mu] };
        twisted_presentation(&t, twists).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("7/1/2, 3/1/6 and the 3/2/3 twisted assignment reproduced".into())
}

fn euler_characteristics() -> Outcome {
    let minus_24 = Rational::new(-1, 24);
    let minus_12 = Rational::new(-1, 12);
    let all = minimal_amalgams(true);
    for a in &all[..8] {
        let chi = chi_orb(a);
        ensure(chi == minus_24, || format!("{a}: chi = {chi}"))?;
    }
    for a in &all[8..] {
        let chi = chi_orb(a);
        ensure(chi == minus_12, || format!("{a}: chi = {chi}"))?;
    }
    let entries = search_minimal(100);
    let check = MinimalityCheck::of(&entries);
    ensure(check.in_gap.is_empty(), || format!("amalgams in (-1/24, 0): {:?}", check.in_gap))?;
    ensure(check.confirms_minimal_octet(100), || format!("search top {:?}: {:?}", check.top, check.achievers))?;
    Ok(format!("8 × -1/24, 4 × -1/12; {} negative amalgams searched, none in the gap", entries.len()))
}

fn proposition_genera() -> Outcome {
    let cases: [(&str, LabeledTetrahedron, &[Twist], u64, u64); 3] = [
        ("C_mu(2,2)", c(2, 2), &[Twist::Mu], 48, 2),
        ("C_mu(3,3)", c(3, 3), &[Twist::Mu], 240, 6),
        ("C_taumu(2,2)", ct(2, 2), &[Twist::Tau, Twist::Mu], 144, 4),
    ];
    let mut got = vec![];
    for (name, t, twists, expected_order, genus) in cases {
        let ord = order(&twisted_presentation(&t, twists).map_err(|e| e.to_string())?)?;
        ensure(ord == expected_order, || format!("{name}: order {ord}, expected {expected_order}"))?;
        let g = ord / 48 + 1;
        ensure(ord % 48 == 0 && g == genus, || format!("{name}: g = {g}, expected {genus}"))?;
        got.push(g);
    }
    Ok(format!("g = {got:?}"))
}

fn genus_eleven() -> Outcome {
    let a = genus_from_order(240, Rational::new(-1, 24)).map_err(|e| e.to_string())?;
    let b = genus_from_order(480, Rational::new(-1, 48)).map_err(|e| e.to_string())?;
    ensure(a == 11 && b == 11, || format!("got {a} and {b}"))?;
    Ok("240 = 24(g-1) and 480 = 48(g-1) both give g = 11".into())
}

fn gluing_classifier() -> Outcome {
    let mut counts = [0usize; 5];
    for spec in GluingSpec::all() {
        let outcome = classify_gluing(&spec);
        let (l, r) = (spec.left, spec.right);
        let same = l.family() == r.family();
        let expected = match (same, spec.map) {
            (false, _) => ClassificationOutcome::TypeMismatch,
            (true, GluingMap::Identity) if l.n() == r.n() => ClassificationOutcome::Double(l.family(), l.n()),
            (true, GluingMap::Identity) => ClassificationOutcome::BadOrbifold(l.n(), r.n()),
            (true, GluingMap::Reflection) if l.family() == Family::H => {
                ClassificationOutcome::CoxeterQuotient(l.n(), r.n())
            }
            (true, GluingMap::Reflection) => ClassificationOutcome::TwistedCoxeterQuotient(l.n(), r.n()),
        };
        ensure(outcome == expected, || format!("{spec:?} gave {outcome}"))?;
        counts[match outcome {
            ClassificationOutcome::TypeMismatch => 0,
            ClassificationOutcome::Double(..) => 1,
            ClassificationOutcome::BadOrbifold(..) => 2,
            ClassificationOutcome::CoxeterQuotient(..) => 3,
            ClassificationOutcome::TwistedCoxeterQuotient(..) => 4,
        }] += 1;
    }
    ensure(counts == [64, 8, 24, 16, 16], || format!("counts {counts:?}"))?;
    Ok(format!("128 cases, counts {counts:?}"))
}

fn property_suites() -> Outcome {
    let mut spherical = vec![];
    for n in 2..=5 {
        for m in n..=5 {
            for t in [c(n, m), ct(n, m)] {
                if classify_geometry(&t) == GeometryClass::Spherical {
                    spherical.push(t);
                }
            }
        }
    }
    let mut tables = 0;
    for t in &spherical {
        let p = coxeter_presentation(t);
        let r = tc::order(&p, SPHERICAL_BUDGET).map_err(|e| e.to_string())?;
        let table = r.table().ok_or_else(|| format!("{t} exceeded"))?;
        ensure(table.satisfies_relators(&p) && table.is_consistent(), || format!("{t}: relator closure fails"))?;
        tables += 1;
        let base = table.len() as u64;
        for perm in VertexPermutation::all() {
            let o = order(&coxeter_presentation(&t.relabel(perm)))?;
            ensure(o == base, || format!("{t} relabeled by {perm}: {o} != {base}"))?;
        }
        let autos = label_automorphisms(t);
        for tw in [Twist::Tau, Twist::Mu] {
            if autos.contains(&tw.permutation()) {
                let p = twisted_presentation(t, &[tw]).map_err(|e| e.to_string())?;
                let r = tc::order(&p, SPHERICAL_BUDGET).map_err(|e| e.to_string())?;
                let table = r.table().ok_or_else(|| format!("{t} twisted exceeded"))?;
                ensure(table.satisfies_relators(&p), || format!("{t} twisted: relator closure fails"))?;
                tables += 1;
                ensure(table.len() as u64 == 2 * base, || format!("{t} by {tw}: {} != 2 × {base}", table.len()))?;
            }
        }
    }

    use CatalogueGroup::*;
    let mut groups = vec![Abar4, Sbar4, Abar5, A4, S4, A5];
    for n in 2..=12 {
        groups.extend([Zbar(n), Dbar(n), D2Star(n), Z(n), D(n)]);
    }
    for g in &groups {
        let o = order(&g.presentation())?;
        ensure(o == g.order(), || format!("{g}: tc order {o}, closed form {}", g.order()))?;
    }

    let h4 = coxeter_presentation(&c(3, 5));
    let full = order(&h4)?;
    for v in 1..=4 {
        let h = subgroup_words(&h4, SubgroupSelector::VertexStabilizer(v)).map_err(|e| e.to_string())?;
        let index = tc::index(&h4, &h, SPHERICAL_BUDGET).map_err(|e| e.to_string())?.index();
        let stabilizer = order(&extended_triangle_presentation(c(3, 5).vertex_triples()[v - 1]))?;
        let index = index.ok_or("stabilizer index exceeded")? as u64;
        ensure(index * stabilizer == full, || format!("vertex {v}: {index} × {stabilizer} != {full}"))?;
        // {r1,r2,r4} is the [2,3,5] face triple, meeting at vertex 3
        if v == 3 {
            ensure(index == 120 && stabilizer == 120, || format!("vertex 3: index {index}, stabilizer {stabilizer}"))?;
        }
    }
    Ok(format!(
        "{tables} tables closed, {} spherical tetrahedra × 24 relabelings, {} catalogue groups, Lagrange 120 × 120 = 14400",
        spherical.len(),
        groups.len()
    ))
}

/// `[p,q,r]` for a vertex triple, built independently of the catalogue.
fn extended_triangle_presentation([p, q, r]: [u32; 3]) -> Presentation {
    Presentation::parse(&format!("a,b,c | a^2/b^2/c^2/(a b)^{p}/(b c)^{q}/(a c)^{r}")).unwrap()
}

fn infinite_consistency() -> Outcome {
    let infinite: Vec<(String, Presentation)> = {
        let mut v = vec![];
        for (n, m) in [(4, 4), (4, 5), (5, 5)] {
            v.push((c(n, m).to_string(), coxeter_presentation(&c(n, m))));
        }
        for (n, m) in [(3, 3), (2, 5), (3, 4), (3, 5), (4, 4), (4, 5), (5, 5)] {
            v.push((ct(n, m).to_string(), coxeter_presentation(&ct(n, m))));
            v.push((format!("C_tau({n},{m})"), twisted_presentation(&ct(n, m), &[Twist::Tau]).unwrap()));
        }
        for n in [4, 5] {
            v.push((format!("C_mu({n},{n})"), twisted_presentation(&c(n, n), &[Twist::Mu]).unwrap()));
        }
        for n in [3, 4, 5] {
            let p = twisted_presentation(&ct(n, n), &[Twist::Tau, Twist::Mu]).unwrap();
            v.push((format!("C_taumu({n},{n})"), p));
        }
        v
    };
    for (name, p) in &infinite {
        let r = tc::order(p, INFINITE_BUDGET).map_err(|e| e.to_string())?;
        ensure(r.is_exceeded(), || format!("{name} completed with {:?}", r.index()))?;
    }
    Ok(format!("{} Euclidean/hyperbolic presentations exceed 10^5 cosets", infinite.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 untwisted genera 2,3,5,11,6,17,601", untwisted_genera),
        ("2 twisted genera 4,11,97", twisted_genera),
        ("3 reflection subgroup indices 2 and 4", subgroup_indices),
        ("4 geometry lists", geometry_lists),
        ("5 Euler characteristics and minimality", euler_characteristics),
        ("6 proposition genera 2,6,4", proposition_genera),
        ("7 genus-11 arithmetic", genus_eleven),
        ("8 gluing classifier", gluing_classifier),
        ("9 property suites", property_suites),
        ("10 infinite-case consistency", infinite_consistency),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({ms} ms): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({ms} ms): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
