//! Labeled tetrahedra, the Coxeter condition and geometry classification.
//!
//! A tetrahedron has vertices `1..=4`; edge `ij` joins vertices `i` and `j`
//! and carries the label `m_ij`, meaning the dihedral angle along that edge is
//! `π / m_ij`. Opposite edge pairs are `(12, 34)`, `(13, 24)` and `(14, 23)`.
//! The notation `C(n,m;a,b;c,d)` maps onto `(m12, m34) = (n, m)`,
//! `(m13, m24) = (a, b)` and `(m14, m23) = (c, d)`.
//!
//! Face `i` is the face opposite vertex `i`. Faces `i` and `j` meet along the
//! edge joining the two remaining vertices, which fixes the Gram matrix and
//! the Coxeter presentation.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

/// Tolerance used on leading principal minors of the Gram matrix.
pub const MINOR_EPSILON: f64 = 1e-9;

/// The six unordered vertex pairs in field order `12, 34, 13, 24, 14, 23`.
pub const EDGES: [(usize, usize); 6] = [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)];

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TetraError {
    #[error("edge label {label} on edge {edge} is smaller than 2")]
    LabelTooSmall { edge: &'static str, label: u32 },
    #[error("expected 6 edge labels, got {0}")]
    WrongLabelCount(usize),
}

/// A tetrahedron with an integer label `≥ 2` on every edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledTetrahedron {
    m12: u32,
    m34: u32,
    m13: u32,
    m24: u32,
    m14: u32,
    m23: u32,
}

const EDGE_NAMES: [&str; 6] = ["12", "34", "13", "24", "14", "23"];

impl LabeledTetrahedron {
    /// Builds `C(n,m;a,b;c,d)`, i.e. labels in the order
    /// `m12, m34, m13, m24, m14, m23`.
    pub fn new(n: u32, m: u32, a: u32, b: u32, c: u32, d: u32) -> Result<Self, TetraError> {
        Self::from_labels([n, m, a, b, c, d])
    }

    pub fn from_labels(labels: [u32; 6]) -> Result<Self, TetraError> {
        for (label, edge) in labels.iter().zip(EDGE_NAMES) {
            if *label < 2 {
                return Err(TetraError::LabelTooSmall { edge, label: *label });
            }
        }
        let [m12, m34, m13, m24, m14, m23] = labels;
        Ok(Self { m12, m34, m13, m24, m14, m23 })
    }

    pub fn from_slice(labels: &[u32]) -> Result<Self, TetraError> {
        let labels: [u32; 6] = labels
            .try_into()
            .map_err(|_| TetraError::WrongLabelCount(labels.len()))?;
        Self::from_labels(labels)
    }

    /// The tetrahedron `C(n,m;2,2;2,3)` underlying the groups `C(n,m)` and `C_μ(n,n)`.
    pub fn coxeter_family(n: u32, m: u32) -> Result<Self, TetraError> {
        Self::new(n, m, 2, 2, 2, 3)
    }

    /// The tetrahedron `C(n,m;3,3;2,2)` underlying `C_τ(n,m)` and `C_τμ(n,n)`.
    pub fn twisted_family(n: u32, m: u32) -> Result<Self, TetraError> {
        Self::new(n, m, 3, 3, 2, 2)
    }

    /// Labels in field order `m12, m34, m13, m24, m14, m23`.
    pub fn labels(&self) -> [u32; 6] {
        [self.m12, self.m34, self.m13, self.m24, self.m14, self.m23]
    }

    /// Label of the edge joining vertices `i` and `j` (1-based, `i != j`).
    pub fn label(&self, i: usize, j: usize) -> u32 {
        match (i.min(j), i.max(j)) {
            (1, 2) => self.m12,
            (3, 4) => self.m34,
            (1, 3) => self.m13,
            (2, 4) => self.m24,
            (1, 4) => self.m14,
            (2, 3) => self.m23,
            _ => panic!("no edge between vertices {i} and {j}"),
        }
    }

    /// Label of the edge along which faces `i` and `j` meet.
    pub fn face_pair_label(&self, i: usize, j: usize) -> u32 {
        let (k, l) = complement_pair(i, j);
        self.label(k, l)
    }

    /// The label triples at vertices 1, 2, 3, 4.
    pub fn vertex_triples(&self) -> [[u32; 3]; 4] {
        [
            [self.m12, self.m13, self.m14],
            [self.m12, self.m23, self.m24],
            [self.m13, self.m23, self.m34],
            [self.m14, self.m24, self.m34],
        ]
    }

    /// The tetrahedron `π·t` with `(π·t)_ij = t_{π(i)π(j)}`.
    pub fn relabel(&self, perm: VertexPermutation) -> Self {
        let mut labels = [0; 6];
        for (slot, &(i, j)) in labels.iter_mut().zip(EDGES.iter()) {
            *slot = self.label(perm.apply(i), perm.apply(j));
        }
        Self::from_labels(labels).expect("relabeling preserves labels")
    }

    /// Lexicographically smallest label tuple over all 24 vertex relabelings.
    pub fn canonical(&self) -> Self {
        VertexPermutation::all()
            .map(|p| self.relabel(p))
            .min()
            .expect("symmetric group is nonempty")
    }
}

impl fmt::Display for LabeledTetrahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C({},{};{},{};{},{})",
            self.m12, self.m34, self.m13, self.m24, self.m14, self.m23
        )
    }
}

/// The two vertices of `{1,2,3,4}` not in `{i, j}`, in increasing order.
pub fn complement_pair(i: usize, j: usize) -> (usize, usize) {
    assert!(i != j && (1..=4).contains(&i) && (1..=4).contains(&j));
    let mut rest = (1..=4).filter(|&v| v != i && v != j);
    (rest.next().unwrap(), rest.next().unwrap())
}

/// A permutation of the vertices `{1,2,3,4}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexPermutation([u8; 4]);

impl VertexPermutation {
    pub const IDENTITY: Self = Self([1, 2, 3, 4]);
    /// `τ = (1 2)(3 4)`
    pub const TAU: Self = Self([2, 1, 4, 3]);
    /// `μ = (1 4)(2 3)`
    pub const MU: Self = Self([4, 3, 2, 1]);
    /// `τμ = (1 3)(2 4)`
    pub const TAU_MU: Self = Self([3, 4, 1, 2]);

    /// Images of `1, 2, 3, 4`; `None` unless they form a permutation.
    pub fn from_images(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &x in &images {
            if !(1..=4).contains(&x) || seen[(x - 1) as usize] {
                return None;
            }
            seen[(x - 1) as usize] = true;
        }
        Some(Self(images))
    }

    pub fn images(&self) -> [u8; 4] {
        self.0
    }

    pub fn apply(&self, vertex: usize) -> usize {
        self.0[vertex - 1] as usize
    }

    /// `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut images = [0; 4];
        for (v, slot) in images.iter_mut().enumerate() {
            *slot = self.0[other.0[v] as usize - 1];
        }
        Self(images)
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0; 4];
        for (v, &img) in self.0.iter().enumerate() {
            images[img as usize - 1] = v as u8 + 1;
        }
        Self(images)
    }

    pub fn is_even(&self) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }

    /// All 24 permutations in lexicographic order of their image tuples.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..256u16).filter_map(|code| {
            let digit = |shift: u16| (code >> shift) as u8 % 4 + 1;
            let images = [digit(6), digit(4), digit(2), digit(0)];
            Self::from_images(images)
        })
    }

    /// The 12 rotations (even permutations).
    pub fn rotations() -> impl Iterator<Item = Self> {
        Self::all().filter(Self::is_even)
    }
}

impl fmt::Display for VertexPermutation {
    /// Cycle notation, e.g. `(1 2)(3 4)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 4];
        let mut wrote = false;
        for start in 1..=4usize {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut v = start;
            let mut first = true;
            while !seen[v - 1] {
                seen[v - 1] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
                first = false;
                v = self.apply(v);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GeometryClass {
    Spherical,
    Euclidean,
    Hyperbolic,
    NotCoxeter,
}

impl GeometryClass {
    pub fn is_infinite(&self) -> bool {
        matches!(self, GeometryClass::Euclidean | GeometryClass::Hyperbolic)
    }
}

impl fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GeometryClass::Spherical => "Spherical",
            GeometryClass::Euclidean => "Euclidean",
            GeometryClass::Hyperbolic => "Hyperbolic",
            GeometryClass::NotCoxeter => "NotCoxeter",
        };
        f.write_str(s)
    }
}

/// `1/a + 1/b + 1/c > 1`, decided exactly.
pub fn is_spherical_triple(triple: [u32; 3]) -> bool {
    let sum: Ratio<u64> = triple.iter().map(|&x| Ratio::new(1, x as u64)).sum();
    sum > Ratio::from_integer(1)
}

/// Every vertex link is a spherical triangle.
pub fn is_coxeter(t: &LabeledTetrahedron) -> bool {
    t.vertex_triples().into_iter().all(is_spherical_triple)
}

pub type GramMatrix = [[f64; 4]; 4];

/// Gram matrix of the face normals: `1` on the diagonal, `-cos(π/m)` off it,
/// where `m` labels the edge shared by the two faces.
pub fn gram_matrix(t: &LabeledTetrahedron) -> GramMatrix {
    let mut g = [[0.0; 4]; 4];
    for i in 1..=4 {
        for j in 1..=4 {
            g[i - 1][j - 1] = if i == j {
                1.0
            } else {
                -(std::f64::consts::PI / t.face_pair_label(i, j) as f64).cos()
            };
        }
    }
    g
}

fn determinant(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
        }
    }
    det
}

/// Leading principal minors of orders 1 through 4.
pub fn leading_minors(g: &GramMatrix) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (k, slot) in out.iter_mut().enumerate() {
        let sub = (0..=k).map(|i| g[i][..=k].to_vec()).collect();
        *slot = determinant(sub);
    }
    out
}

/// Sylvester-criterion classification of a Coxeter tetrahedron.
///
/// # Panics
///
/// Panics if a tetrahedron passing [`is_coxeter`] matches none of the three
/// minor-sign patterns. The vertex condition makes the first three leading
/// minors positive, so this indicates a defect rather than a bad input.
pub fn classify_geometry(t: &LabeledTetrahedron) -> GeometryClass {
    if !is_coxeter(t) {
        return GeometryClass::NotCoxeter;
    }
    let [m1, m2, m3, det] = leading_minors(&gram_matrix(t));
    let eps = MINOR_EPSILON;
    let head_positive = m1 > eps && m2 > eps && m3 > eps;
    match head_positive {
        true if det > eps => GeometryClass::Spherical,
        true if det.abs() <= eps => GeometryClass::Euclidean,
        true if det < -eps => GeometryClass::Hyperbolic,
        _ => panic!("Gram matrix of {t} matches no signature pattern: minors {m1}, {m2}, {m3}, {det}"),
    }
}

/// Rotations `π` with `m_{π(i)π(j)} = m_ij` for every edge.
pub fn label_automorphisms(t: &LabeledTetrahedron) -> BTreeSet<VertexPermutation> {
    VertexPermutation::rotations()
        .filter(|&p| t.relabel(p) == *t)
        .collect()
}

/// All Coxeter tetrahedra with labels `≤ max_label`, in canonical form and
/// sorted, each paired with its geometry.
pub fn enumerate_tetrahedra(max_label: u32) -> Vec<(LabeledTetrahedron, GeometryClass)> {
    assert!(max_label >= 2, "max_label must be at least 2");
    let range = 2..=max_label;
    let mut found = BTreeSet::new();
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    for e in range.clone() {
                        for f in range.clone() {
                            let t = LabeledTetrahedron::from_labels([a, b, c, d, e, f])
                                .expect("labels are at least 2");
                            if is_coxeter(&t) {
                                found.insert(t.canonical());
                            }
                        }
                    }
                }
            }
        }
    }
    found
        .into_iter()
        .map(|t| (t, classify_geometry(&t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tet(l: [u32; 6]) -> LabeledTetrahedron {
        LabeledTetrahedron::from_labels(l).unwrap()
    }

    #[test]
    fn coxeter_condition() {
        assert!(is_coxeter(&tet([5, 5, 2, 2, 2, 3])));
        assert!(is_coxeter(&tet([2, 2, 2, 2, 2, 2])));
        // vertex 2 triple (6,3,2) sums to exactly 1
        let t = tet([6, 2, 2, 2, 2, 3]);
        assert_eq!(t.vertex_triples()[1], [6, 3, 2]);
        assert!(!is_coxeter(&t));
    }

    #[test]
    fn rejects_small_labels() {
        assert_eq!(
            LabeledTetrahedron::new(2, 1, 2, 2, 2, 2),
            Err(TetraError::LabelTooSmall { edge: "34", label: 1 })
        );
        assert_eq!(
            LabeledTetrahedron::from_slice(&[2, 2, 2]),
            Err(TetraError::WrongLabelCount(3))
        );
    }

    #[test]
    fn gram_of_right_angled_is_identity() {
        let g = gram_matrix(&tet([2; 6]));
        for (i, row) in g.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((x - want).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn gram_entries_follow_opposite_edges() {
        let g = gram_matrix(&tet([2, 3, 2, 2, 2, 3]));
        let mut halves = vec![];
        for i in 0..4 {
            for j in i + 1..4 {
                if (g[i][j] + 0.5).abs() < 1e-12 {
                    halves.push((i + 1, j + 1));
                } else {
                    assert!(g[i][j].abs() < 1e-15);
                }
            }
        }
        // m34 feeds faces (1,2); m23 feeds faces (1,4)
        assert_eq!(halves, vec![(1, 2), (1, 4)]);
    }

    #[test]
    fn euclidean_determinant_vanishes() {
        let det = leading_minors(&gram_matrix(&tet([4, 4, 2, 2, 2, 3])))[3];
        assert!(det.abs() < 1e-9, "{det}");
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_geometry(&tet([3, 5, 2, 2, 2, 3])), GeometryClass::Spherical);
        assert_eq!(classify_geometry(&tet([3, 3, 3, 3, 2, 2])), GeometryClass::Euclidean);
        assert_eq!(classify_geometry(&tet([5, 5, 3, 3, 2, 2])), GeometryClass::Hyperbolic);
        assert_eq!(classify_geometry(&tet([6, 2, 2, 2, 2, 3])), GeometryClass::NotCoxeter);
    }

    #[test]
    fn permutation_group_laws() {
        use VertexPermutation as P;
        for p in [P::TAU, P::MU, P::TAU_MU] {
            assert_eq!(p.compose(&p), P::IDENTITY);
            assert!(p.is_even());
        }
        assert_eq!(P::TAU.compose(&P::MU), P::TAU_MU);
        assert_eq!(P::MU.compose(&P::TAU), P::TAU_MU);
        assert_eq!(P::TAU.compose(&P::TAU_MU), P::MU);
        assert_eq!(P::all().count(), 24);
        assert_eq!(P::rotations().count(), 12);
        assert_eq!(P::TAU.to_string(), "(1 2)(3 4)");
        assert_eq!(P::MU.to_string(), "(1 4)(2 3)");
        assert_eq!(P::IDENTITY.to_string(), "()");
        for p in P::all() {
            assert_eq!(p.compose(&p.inverse()), P::IDENTITY);
        }
    }

    #[test]
    fn automorphism_examples() {
        use VertexPermutation as P;
        let auts = label_automorphisms(&tet([5, 5, 3, 3, 2, 2]));
        for p in [P::IDENTITY, P::TAU, P::MU, P::TAU_MU] {
            assert!(auts.contains(&p));
        }
        let auts = label_automorphisms(&tet([2, 5, 3, 3, 2, 2]));
        assert!(auts.contains(&P::TAU) && !auts.contains(&P::MU));
        let auts = label_automorphisms(&tet([2, 3, 2, 2, 2, 3]));
        for p in [P::TAU, P::MU, P::TAU_MU] {
            assert!(!auts.contains(&p));
        }
    }

    #[test]
    fn enumeration_small() {
        let all = enumerate_tetrahedra(2);
        assert_eq!(all, vec![(tet([2; 6]), GeometryClass::Spherical)]);
    }

    fn family_split(make: fn(u32, u32) -> Result<LabeledTetrahedron, TetraError>) -> [usize; 3] {
        let all = enumerate_tetrahedra(5);
        let mut counts = [0; 3];
        for n in 2..=5 {
            for m in n..=5 {
                let c = make(n, m).unwrap().canonical();
                let (_, class) = all.iter().find(|(t, _)| *t == c).expect("family member enumerated");
                counts[match class {
                    GeometryClass::Spherical => 0,
                    GeometryClass::Euclidean => 1,
                    GeometryClass::Hyperbolic => 2,
                    GeometryClass::NotCoxeter => unreachable!(),
                }] += 1;
            }
        }
        counts
    }

    #[test]
    fn enumeration_family_splits() {
        assert_eq!(family_split(LabeledTetrahedron::coxeter_family), [7, 1, 2]);
        assert_eq!(family_split(LabeledTetrahedron::twisted_family), [3, 1, 6]);
    }

    #[test]
    fn enumeration_is_sorted_canonical_and_spherical_at_vertices() {
        let all = enumerate_tetrahedra(5);
        assert!(all.windows(2).all(|w| w[0].0 < w[1].0));
        for (t, class) in &all {
            assert_eq!(t.canonical(), *t);
            assert_ne!(*class, GeometryClass::NotCoxeter);
            for mut triple in t.vertex_triples() {
                triple.sort_unstable();
                assert!(matches!(triple, [2, 2, _] | [2, 3, 3] | [2, 3, 4] | [2, 3, 5]), "{triple:?}");
            }
        }
    }

    #[test]
    fn minors_stay_clear_of_epsilon_band() {
        for (t, _) in enumerate_tetrahedra(5) {
            for p in VertexPermutation::all() {
                let minors = leading_minors(&gram_matrix(&t.relabel(p)));
                let smallest = minors.iter().map(|x| x.abs()).fold(f64::INFINITY, f64::min);
                assert!(!(1e-12..=1e-6).contains(&smallest), "{t}: {minors:?}");
            }
        }
    }
}
