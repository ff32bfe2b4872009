//! Finite presentations of tetrahedral Coxeter groups, their twisted
//! extensions and the spherical groups that occur as local groups of
//! handlebody orbifolds.

mod catalogue;
mod text;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::tetra::{label_automorphisms, LabeledTetrahedron, VertexPermutation};

pub use catalogue::{CatalogueError, CatalogueGroup};
pub use text::ParseError;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("generator names must be distinct and nonempty, got {0:?}")]
    BadGeneratorName(String),
    #[error("relator {index} refers to generator {generator}, but there are only {count}")]
    GeneratorOutOfRange { index: usize, generator: usize, count: usize },
    #[error("relator {0} freely reduces to the empty word")]
    TrivialRelator(usize),
    #[error("twist {twist} does not preserve the labels of {tetrahedron}")]
    TwistUnavailable { twist: Twist, tetrahedron: LabeledTetrahedron },
    #[error("no twist requested")]
    NoTwist,
    #[error("subgroup selector {0} does not apply to this presentation")]
    UnknownSelector(String),
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(generator: usize) -> Self {
        Self { generator, inverse: false }
    }

    pub fn inv(generator: usize) -> Self {
        Self { generator, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Self { inverse: !self.inverse, ..self }
    }
}

pub type Word = Vec<Letter>;

/// `w^k` for `k ≥ 1`.
pub fn power(word: &[Letter], k: usize) -> Word {
    word.iter().copied().cycle().take(word.len() * k).collect()
}

pub fn inverse_word(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inverted()).collect()
}

/// Free reduction (cancels adjacent `x x⁻¹` pairs).
pub fn free_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Generators plus relator words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        if generators.is_empty() {
            return Err(PresentationError::NoGenerators);
        }
        for (i, name) in generators.iter().enumerate() {
            let valid = !name.is_empty()
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                && !generators[..i].contains(name);
            if !valid {
                return Err(PresentationError::BadGeneratorName(name.clone()));
            }
        }
        for (index, rel) in relators.iter().enumerate() {
            if let Some(l) = rel.iter().find(|l| l.generator >= generators.len()) {
                return Err(PresentationError::GeneratorOutOfRange {
                    index,
                    generator: l.generator,
                    count: generators.len(),
                });
            }
            if free_reduce(rel).is_empty() {
                return Err(PresentationError::TrivialRelator(index));
            }
        }
        Ok(Self { generators, relators })
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Renders a letter as `x` or `x^-1`.
    pub fn letter_name(&self, l: Letter) -> String {
        let name = &self.generators[l.generator];
        if l.inverse {
            format!("{name}^-1")
        } else {
            name.clone()
        }
    }

    /// Parses the text form `gens | rel/rel/...`; see [`Presentation::to_text`].
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        text::parse_presentation(s)
    }

    /// Text form, e.g. `r1,r2 | r1^2/r2^2/(r1 r2)^3`.
    pub fn to_text(&self) -> String {
        text::print_presentation(self)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn reflection_names() -> Vec<String> {
    (1..=4).map(|i| format!("r{i}")).collect()
}

/// Coxeter presentation of the reflection group of `t`: generators `r1..r4`,
/// `ri` the reflection in the face opposite vertex `i`, with relators `ri²`
/// and `(ri rj)^m` where `m` labels the edge shared by faces `i` and `j`.
pub fn coxeter_presentation(t: &LabeledTetrahedron) -> Presentation {
    let mut relators = Vec::with_capacity(10);
    for i in 0..4 {
        relators.push(power(&[Letter::gen(i)], 2));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let m = t.face_pair_label(i + 1, j + 1) as usize;
            relators.push(power(&[Letter::gen(i), Letter::gen(j)], m));
        }
    }
    Presentation::new(reflection_names(), relators).expect("Coxeter presentation is well formed")
}

/// A label-preserving rotation adjoined to a Coxeter group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Twist {
    Tau,
    Mu,
}

impl Twist {
    pub fn permutation(&self) -> VertexPermutation {
        match self {
            Twist::Tau => VertexPermutation::TAU,
            Twist::Mu => VertexPermutation::MU,
        }
    }

    pub fn generator_name(&self) -> &'static str {
        match self {
            Twist::Tau => "t",
            Twist::Mu => "u",
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Tau => f.write_str("tau"),
            Twist::Mu => f.write_str("mu"),
        }
    }
}

/// Extends the Coxeter presentation of `t` by one involution per twist `σ`,
/// with `σ ri σ = r_{π(i)}` where `π` is the twist's vertex permutation.
/// With both twists present the two involutions also commute.
pub fn twisted_presentation(
    t: &LabeledTetrahedron,
    twists: &[Twist],
) -> Result<Presentation, PresentationError> {
    let mut twists = twists.to_vec();
    twists.sort_unstable();
    twists.dedup();
    if twists.is_empty() {
        return Err(PresentationError::NoTwist);
    }
    let autos = label_automorphisms(t);
    if let Some(&twist) = twists.iter().find(|tw| !autos.contains(&tw.permutation())) {
        return Err(PresentationError::TwistUnavailable { twist, tetrahedron: *t });
    }

    let base = coxeter_presentation(t);
    let mut names = base.generators.clone();
    let mut relators = base.relators.clone();
    let mut twist_gens = vec![];
    for twist in &twists {
        let s = names.len();
        names.push(twist.generator_name().to_string());
        twist_gens.push(s);
        relators.push(power(&[Letter::gen(s)], 2));
        let perm = twist.permutation();
        for i in 1..=4 {
            let image = perm.apply(i);
            relators.push(vec![
                Letter::gen(s),
                Letter::gen(i - 1),
                Letter::gen(s),
                Letter::inv(image - 1),
            ]);
        }
    }
    if let [a, b] = twist_gens[..] {
        relators.push(power(&[Letter::gen(a), Letter::gen(b)], 2));
    }
    Presentation::new(names, relators)
}

/// Named subgroups of Coxeter and twisted presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubgroupSelector {
    /// `r1..r4` inside a twisted presentation.
    ReflectionSubgroup,
    /// The three reflections in the faces through vertex `i` (1-based).
    VertexStabilizer(usize),
}

impl fmt::Display for SubgroupSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSelector::ReflectionSubgroup => f.write_str("ReflectionSubgroup"),
            SubgroupSelector::VertexStabilizer(i) => write!(f, "VertexStabilizer({i})"),
        }
    }
}

pub fn subgroup_words(
    p: &Presentation,
    which: SubgroupSelector,
) -> Result<Vec<Word>, PresentationError> {
    let has_reflections = p.generators.len() >= 4 && p.generators[..4] == reflection_names()[..];
    if !has_reflections {
        return Err(PresentationError::UnknownSelector(which.to_string()));
    }
    match which {
        SubgroupSelector::ReflectionSubgroup => Ok((0..4).map(|i| vec![Letter::gen(i)]).collect()),
        SubgroupSelector::VertexStabilizer(v) if (1..=4).contains(&v) => Ok((1..=4)
            .filter(|&face| face != v)
            .map(|face| vec![Letter::gen(face - 1)])
            .collect()),
        SubgroupSelector::VertexStabilizer(_) => {
            Err(PresentationError::UnknownSelector(which.to_string()))
        }
    }
}
