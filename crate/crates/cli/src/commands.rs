//! `classify`, `order` and `glue`.

use clap::ValueEnum;
use maxsym::orbifold::genus_at_factor;
use maxsym::tetra::leading_minors;
use maxsym::{
    classify_gluing, classify_geometry, coxeter_presentation, gram_matrix, quotient_tetrahedron, tc,
    ClassificationOutcome, EnumerationResult, GeometryClass, GluingMap, GluingSpec, LabeledTetrahedron,
    MinimalOrbifoldType, Presentation,
};
use serde::Serialize;
use thiserror::Error;

use crate::{to_csv, to_json, Format, GroupFamily};

/// Process exit status of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Failed,
    Exceeded,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Failed => 1,
            Status::Exceeded => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub stdout: String,
    pub status: Status,
}

impl Rendered {
    fn ok(stdout: String) -> Self {
        Self { stdout, status: Status::Success }
    }
}

/// Bad arguments; exit code 2.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("{0}")]
pub struct UsageError(pub String);

impl UsageError {
    pub const CODE: u8 = 2;
}

fn usage(e: impl ToString) -> UsageError {
    UsageError(e.to_string())
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Text => text(value),
        Format::Json => to_json(value),
        Format::Csv => to_csv(std::slice::from_ref(value)),
    }
}

#[derive(Debug, Serialize)]
struct ClassifyReport {
    tetrahedron: String,
    class: String,
    vertex_triples: String,
    leading_minors: String,
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Geometry class of the tetrahedron with labels in `C(n,m;a,b;c,d)` order.
pub fn classify(labels: &[u32], format: Format) -> Result<Rendered, UsageError> {
    let t = LabeledTetrahedron::from_slice(labels).map_err(usage)?;
    let minors = leading_minors(&gram_matrix(&t));
    let report = ClassifyReport {
        tetrahedron: t.to_string(),
        class: classify_geometry(&t).to_string(),
        vertex_triples: join(t.vertex_triples().iter().map(|v| join(v, ",")), " "),
        leading_minors: join(minors.iter().map(|d| format!("{d:.9}")), " "),
    };
    Ok(Rendered::ok(render(format, &report, |r| {
        format!(
            "{}\ntetrahedron: {}\nvertex triples: {}\nleading minors: {}\n",
            r.class, r.tetrahedron, r.vertex_triples, r.leading_minors
        )
    })))
}

/// What `order` enumerates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSource {
    Family { family: GroupFamily, n: u32, m: u32 },
    /// Coxeter group of an arbitrary labeled tetrahedron.
    Labels(Vec<u32>),
    /// Presentation in the text grammar.
    Presentation(String),
}

#[derive(Debug, Serialize)]
struct OrderReport {
    group: String,
    budget: usize,
    result: &'static str,
    order: Option<u64>,
    genus: Option<u64>,
    genus_factor: Option<u64>,
    geometry: Option<String>,
}

/// Group order by coset enumeration over the trivial subgroup.
pub fn order(source: &OrderSource, budget: usize, format: Format) -> Result<Rendered, UsageError> {
    let (group, presentation, tetrahedron, factor): (String, Presentation, Option<LabeledTetrahedron>, Option<u64>) =
        match source {
            OrderSource::Family { family, n, m } => (
                format!("{family}({n},{m})"),
                family.presentation(*n, *m).map_err(usage)?,
                Some(family.tetrahedron(*n, *m).map_err(usage)?),
                Some(family.genus_factor()),
            ),
            OrderSource::Labels(labels) => {
                let t = LabeledTetrahedron::from_slice(labels).map_err(usage)?;
                (t.to_string(), coxeter_presentation(&t), Some(t), None)
            }
            OrderSource::Presentation(text) => {
                let p = Presentation::parse(text).map_err(usage)?;
                (p.to_text(), p, None, None)
            }
        };
    let result = tc::order(&presentation, budget).map_err(usage)?;
    let geometry = tetrahedron.as_ref().map(classify_geometry);
    let mut report = OrderReport {
        group,
        budget,
        result: "completed",
        order: None,
        genus: None,
        genus_factor: factor,
        geometry: geometry.map(|g| g.to_string()),
    };
    let status = match result {
        EnumerationResult::Completed { index, .. } => {
            report.order = Some(index as u64);
            report.genus = factor.and_then(|k| genus_at_factor(index as u64, k).ok());
            Status::Success
        }
        EnumerationResult::Exceeded { .. } => {
            report.result = "exceeded";
            Status::Exceeded
        }
    };
    let stdout = render(format, &report, |r| match (r.order, r.genus, r.genus_factor) {
        (None, ..) => match &r.geometry {
            Some(g) => format!("exceeded (budget {}; geometry certificate: {g})\n", r.budget),
            None => format!("exceeded (budget {})\n", r.budget),
        },
        (Some(o), Some(g), Some(24)) => format!("{o} (genus {g})\n"),
        (Some(o), Some(g), Some(k)) => format!("{o} (genus {g} at {k}(g-1))\n"),
        (Some(o), None, Some(k)) => format!("{o} (no integral genus at {k}(g-1))\n"),
        (Some(o), _, None) => format!("{o}\n"),
    });
    Ok(Rendered { stdout, status })
}

/// Boundary identification named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    Id,
    Refl,
}

impl From<MapArg> for GluingMap {
    fn from(m: MapArg) -> Self {
        match m {
            MapArg::Id => GluingMap::Identity,
            MapArg::Refl => GluingMap::Reflection,
        }
    }
}

#[derive(Debug, Serialize)]
struct GlueReport {
    left: String,
    right: String,
    map: &'static str,
    outcome: String,
    tetrahedron: Option<String>,
    geometry: Option<String>,
}

fn lowercase_class(g: GeometryClass) -> String {
    g.to_string().to_lowercase()
}

/// Outcome of gluing two minimal handlebody orbifolds along their boundaries.
pub fn glue(left: &str, right: &str, map: GluingMap, format: Format) -> Result<Rendered, UsageError> {
    let spec = GluingSpec {
        left: left.parse::<MinimalOrbifoldType>().map_err(usage)?,
        right: right.parse::<MinimalOrbifoldType>().map_err(usage)?,
        map,
    };
    let outcome: ClassificationOutcome = classify_gluing(&spec);
    let tetrahedron = quotient_tetrahedron(&outcome);
    let report = GlueReport {
        left: spec.left.to_string(),
        right: spec.right.to_string(),
        map: match map {
            GluingMap::Identity => "id",
            GluingMap::Reflection => "refl",
        },
        outcome: outcome.to_string(),
        tetrahedron: tetrahedron.map(|t| t.to_string()),
        geometry: tetrahedron.map(|t| lowercase_class(classify_geometry(&t))),
    };
    Ok(Rendered::ok(render(format, &report, |r| match (&r.tetrahedron, &r.geometry) {
        (Some(t), Some(g)) => format!("{} — {g}\ntetrahedron: {t}\n", r.outcome),
        _ => format!("{}\n", r.outcome),
    })))
}
