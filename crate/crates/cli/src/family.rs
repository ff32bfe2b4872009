use std::fmt;

use clap::ValueEnum;
use maxsym::{coxeter_presentation, twisted_presentation, LabeledTetrahedron, Presentation, Twist};

/// The four group families named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum GroupFamily {
    #[value(name = "C")]
    C,
    #[value(name = "Ctau")]
    Ctau,
    #[value(name = "Cmu")]
    Cmu,
    #[value(name = "Ctaumu")]
    Ctaumu,
}

impl GroupFamily {
    /// `C`, `Cmu` live on `C(n,m;2,2;2,3)`; `Ctau`, `Ctaumu` on `C(n,m;3,3;2,2)`.
    pub fn tetrahedron(self, n: u32, m: u32) -> Result<LabeledTetrahedron, String> {
        if matches!(self, GroupFamily::Cmu | GroupFamily::Ctaumu) && n != m {
            return Err(format!("{self} needs n = m, got n = {n}, m = {m}"));
        }
        let t = match self {
            GroupFamily::C | GroupFamily::Cmu => LabeledTetrahedron::coxeter_family(n, m),
            GroupFamily::Ctau | GroupFamily::Ctaumu => LabeledTetrahedron::twisted_family(n, m),
        };
        t.map_err(|e| e.to_string())
    }

    pub fn twists(self) -> &'static [Twist] {
        match self {
            GroupFamily::C => &[],
            GroupFamily::Ctau => &[Twist::Tau],
            GroupFamily::Cmu => &[Twist::Mu],
            GroupFamily::Ctaumu => &[Twist::Tau, Twist::Mu],
        }
    }

    pub fn presentation(self, n: u32, m: u32) -> Result<Presentation, String> {
        let t = self.tetrahedron(n, m)?;
        if self == GroupFamily::C {
            return Ok(coxeter_presentation(&t));
        }
        twisted_presentation(&t, self.twists()).map_err(|e| e.to_string())
    }

    /// `k` in `|G| = k(g-1)`.
    pub fn genus_factor(self) -> u64 {
        match self {
            GroupFamily::C | GroupFamily::Ctau => 24,
            GroupFamily::Cmu | GroupFamily::Ctaumu => 48,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupFamily::C => "C",
            GroupFamily::Ctau => "Ctau",
            GroupFamily::Cmu => "Cmu",
            GroupFamily::Ctaumu => "Ctaumu",
        })
    }
}
