use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use super::{power, Letter, Presentation};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CatalogueError {
    #[error("catalogue parameter must be at least 2, got {0}")]
    ParameterTooSmall(u32),
    #[error("unknown catalogue group {0:?}")]
    UnknownName(String),
}

/// Finite spherical groups acting on the 3-disk.
///
/// ASCII names: `Zbar5`, `Dbar5`, `Abar4`, `Sbar4`, `Abar5`, `D2*5` for the
/// orientation-reversing groups and `Z5`, `D5`, `A4`, `S4`, `A5` for their
/// orientation-preserving counterparts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CatalogueGroup {
    /// Extended cyclic group, dihedral of order `2n`.
    Zbar(u32),
    /// Extended dihedral group `[2,2,n]`.
    Dbar(u32),
    /// Extended tetrahedral group `[2,3,3]`.
    Abar4,
    /// Extended octahedral group `[2,3,4]`.
    Sbar4,
    /// Extended dodecahedral group `[2,3,5]`.
    Abar5,
    /// Order `4n`, index two in `[2,2,2n]` and abstractly dihedral.
    D2Star(u32),
    Z(u32),
    /// Dihedral triangle group `(2,2,n)`.
    D(u32),
    A4,
    S4,
    A5,
}

impl CatalogueGroup {
    /// Checks the parameter of the families indexed by `n`.
    pub fn validated(self) -> Result<Self, CatalogueError> {
        match self.parameter() {
            Some(n) if n < 2 => Err(CatalogueError::ParameterTooSmall(n)),
            _ => Ok(self),
        }
    }

    pub fn parameter(&self) -> Option<u32> {
        use CatalogueGroup::*;
        match *self {
            Zbar(n) | Dbar(n) | D2Star(n) | Z(n) | D(n) => Some(n),
            Abar4 | Sbar4 | Abar5 | A4 | S4 | A5 => None,
        }
    }

    /// Closed-form group order.
    pub fn order(&self) -> u64 {
        use CatalogueGroup::*;
        match *self {
            Zbar(n) => 2 * n as u64,
            Dbar(n) => 4 * n as u64,
            Abar4 => 24,
            Sbar4 => 48,
            Abar5 => 120,
            D2Star(n) => 4 * n as u64,
            Z(n) => n as u64,
            D(n) => 2 * n as u64,
            A4 => 12,
            S4 => 24,
            A5 => 60,
        }
    }

    pub fn is_orientation_preserving(&self) -> bool {
        use CatalogueGroup::*;
        matches!(self, Z(_) | D(_) | A4 | S4 | A5)
    }

    pub fn presentation(&self) -> Presentation {
        use CatalogueGroup::*;
        match *self {
            Zbar(n) => dihedral(n),
            Dbar(n) => extended_triangle(2, 2, n),
            Abar4 => extended_triangle(2, 3, 3),
            Sbar4 => extended_triangle(2, 3, 4),
            Abar5 => extended_triangle(2, 3, 5),
            D2Star(n) => dihedral(2 * n),
            Z(n) => Presentation::new(vec!["x".into()], vec![power(&[Letter::gen(0)], n as usize)])
                .expect("cyclic presentation is well formed"),
            D(n) => triangle(2, 2, n),
            A4 => triangle(2, 3, 3),
            S4 => triangle(2, 3, 4),
            A5 => triangle(2, 3, 5),
        }
    }
}

/// `<a, b | a², b², (ab)^n>`, order `2n`.
fn dihedral(n: u32) -> Presentation {
    let (a, b) = (Letter::gen(0), Letter::gen(1));
    Presentation::new(
        vec!["a".into(), "b".into()],
        vec![power(&[a], 2), power(&[b], 2), power(&[a, b], n as usize)],
    )
    .expect("dihedral presentation is well formed")
}

/// Reflection group `[p,q,r]` of a spherical triangle.
fn extended_triangle(p: u32, q: u32, r: u32) -> Presentation {
    let (a, b, c) = (Letter::gen(0), Letter::gen(1), Letter::gen(2));
    Presentation::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![
            power(&[a], 2),
            power(&[b], 2),
            power(&[c], 2),
            power(&[a, b], p as usize),
            power(&[b, c], q as usize),
            power(&[a, c], r as usize),
        ],
    )
    .expect("triangle presentation is well formed")
}

/// Rotation group `(p,q,r)`.
fn triangle(p: u32, q: u32, r: u32) -> Presentation {
    let (x, y) = (Letter::gen(0), Letter::gen(1));
    Presentation::new(
        vec!["x".into(), "y".into()],
        vec![power(&[x], p as usize), power(&[y], q as usize), power(&[x, y], r as usize)],
    )
    .expect("triangle presentation is well formed")
}

impl fmt::Display for CatalogueGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CatalogueGroup::*;
        match self {
            Zbar(n) => write!(f, "Zbar{n}"),
            Dbar(n) => write!(f, "Dbar{n}"),
            Abar4 => f.write_str("Abar4"),
            Sbar4 => f.write_str("Sbar4"),
            Abar5 => f.write_str("Abar5"),
            D2Star(n) => write!(f, "D2*{n}"),
            Z(n) => write!(f, "Z{n}"),
            D(n) => write!(f, "D{n}"),
            A4 => f.write_str("A4"),
            S4 => f.write_str("S4"),
            A5 => f.write_str("A5"),
        }
    }
}

impl FromStr for CatalogueGroup {
    type Err = CatalogueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use CatalogueGroup::*;
        let unknown = || CatalogueError::UnknownName(s.to_string());
        let fixed = match s {
            "Abar4" => Some(Abar4),
            "Sbar4" => Some(Sbar4),
            "Abar5" => Some(Abar5),
            "A4" => Some(A4),
            "S4" => Some(S4),
            "A5" => Some(A5),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let families: [(&str, fn(u32) -> CatalogueGroup); 5] =
            [("Zbar", Zbar), ("Dbar", Dbar), ("D2*", D2Star), ("Z", Z), ("D", D)];
        for (prefix, make) in families {
            if let Some(rest) = s.strip_prefix(prefix) {
                if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                    let n = rest.parse().map_err(|_| unknown())?;
                    return make(n).validated();
                }
            }
        }
        Err(unknown())
    }
}
