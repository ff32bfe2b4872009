//! Exact computations around strongly maximally symmetric finite group
//! actions on 3-manifolds: labeled Coxeter tetrahedra and their geometry,
//! Coxeter and twisted Coxeter group presentations, Todd–Coxeter coset
//! enumeration, minimal handlebody orbifolds and equivariant Heegaard genus.

pub mod orbifold;
pub mod presentations;
pub mod tc;
pub mod tetra;

pub use orbifold::{
    chi_orb, classify_gluing, genus_from_order, minimal_amalgams, quotient_tetrahedron, search_minimal,
    Amalgam, ClassificationOutcome, Family, GluingMap, GluingSpec, MinimalOrbifoldType, Rational,
};
pub use presentations::{
    coxeter_presentation, subgroup_words, twisted_presentation, CatalogueGroup, Letter, Presentation,
    SubgroupSelector, Twist, Word,
};
pub use tc::{enumerate, EnumerationResult, DEFAULT_BUDGET};
pub use tetra::{
    classify_geometry, enumerate_tetrahedra, gram_matrix, is_coxeter, label_automorphisms, GeometryClass,
    LabeledTetrahedron, VertexPermutation,
};
