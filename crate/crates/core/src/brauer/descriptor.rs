//! Boundary types of a hyperplane section and the Galois-module shape of `Br(Ū)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::is_squarefree;
use crate::error::{Error, Result};

/// A squarefree integer `d ∉ {0, 1}`, standing for the field `Q(√d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct QuadraticClass(i64);

impl QuadraticClass {
    pub fn new(d: i64) -> Result<Self> {
        if d == 1 || !is_squarefree(d) {
            return Err(Error::InvalidInput(format!("{d} is not a squarefree integer other than 0 and 1")));
        }
        Ok(Self(d))
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

impl TryFrom<i64> for QuadraticClass {
    type Error = Error;
    fn try_from(d: i64) -> Result<Self> {
        Self::new(d)
    }
}

impl From<QuadraticClass> for i64 {
    fn from(d: QuadraticClass) -> i64 {
        d.0
    }
}

impl fmt::Display for QuadraticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConicIntersection {
    Tangent,
    TwoRational,
    Quadratic(QuadraticClass),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularCubicKind {
    Cuspidal,
    NodalSplit,
    NodalNonsplit(QuadraticClass),
}

/// Galois group of the field of definition of three coplanar lines,
/// with the quadratic subfield where there is one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaloisType {
    Trivial,
    C2(QuadraticClass),
    C3,
    S3(QuadraticClass),
}

impl GaloisType {
    pub fn quadratic_class(&self) -> Option<QuadraticClass> {
        match *self {
            GaloisType::C2(d) | GaloisType::S3(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for GaloisType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisType::Trivial => write!(f, "trivial"),
            GaloisType::C2(d) => write!(f, "C2 (d = {d})"),
            GaloisType::C3 => write!(f, "C3"),
            GaloisType::S3(d) => write!(f, "S3 (d = {d})"),
        }
    }
}

/// How a hyperplane meets the cubic surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum BoundaryDescriptor {
    LineConic { intersection: ConicIntersection },
    Irreducible { kind: SingularCubicKind },
    ThreeLines { galois: GaloisType, eckardt: bool },
}

impl BoundaryDescriptor {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("boundary descriptor: {e}")))
    }

    /// One representative of every variant, with `d` drawn from `ds`.
    pub fn all_variants(ds: &[QuadraticClass]) -> Vec<Self> {
        use BoundaryDescriptor::*;
        let mut out = vec![
            LineConic { intersection: ConicIntersection::Tangent },
            LineConic { intersection: ConicIntersection::TwoRational },
            Irreducible { kind: SingularCubicKind::Cuspidal },
            Irreducible { kind: SingularCubicKind::NodalSplit },
        ];
        for &d in ds {
            out.push(LineConic { intersection: ConicIntersection::Quadratic(d) });
            out.push(Irreducible { kind: SingularCubicKind::NodalNonsplit(d) });
        }
        let mut galois = vec![GaloisType::Trivial, GaloisType::C3];
        for &d in ds {
            galois.push(GaloisType::C2(d));
            galois.push(GaloisType::S3(d));
        }
        for g in galois {
            for eckardt in [false, true] {
                out.push(ThreeLines { galois: g, eckardt });
            }
        }
        out
    }
}

impl fmt::Display for BoundaryDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryDescriptor::LineConic { intersection } => match intersection {
                ConicIntersection::Tangent => write!(f, "line + conic, tangent"),
                ConicIntersection::TwoRational => write!(f, "line + conic, two rational points"),
                ConicIntersection::Quadratic(d) => write!(f, "line + conic, meeting in a point of degree 2 over Q(√{d})"),
            },
            BoundaryDescriptor::Irreducible { kind } => match kind {
                SingularCubicKind::Cuspidal => write!(f, "cuspidal cubic"),
                SingularCubicKind::NodalSplit => write!(f, "nodal cubic, split"),
                SingularCubicKind::NodalNonsplit(d) => write!(f, "nodal cubic, non-split over Q(√{d})"),
            },
            BoundaryDescriptor::ThreeLines { galois, eckardt } => {
                write!(f, "three lines, Galois type {galois}")?;
                if *eckardt {
                    write!(f, ", through an Eckardt point")?;
                }
                Ok(())
            }
        }
    }
}

/// `Br(Ū)` as a Galois module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", content = "d", rename_all = "snake_case")]
pub enum GeometricBrauer {
    Zero,
    /// `Q/Z(-1)`.
    FullTwist,
    /// The system `M_d/nM_d(-1)` with `M_d = Ind_{Q(√d)/Q} Z / Z`.
    DTwist(QuadraticClass),
}

impl fmt::Display for GeometricBrauer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometricBrauer::Zero => write!(f, "0"),
            GeometricBrauer::FullTwist => write!(f, "Q/Z(-1)"),
            GeometricBrauer::DTwist(d) => write!(f, "Q/Z(-1) twisted by Q(√{d})"),
        }
    }
}

pub fn geometric_brauer(b: &BoundaryDescriptor) -> GeometricBrauer {
    use BoundaryDescriptor::*;
    match *b {
        LineConic { intersection: ConicIntersection::Tangent }
        | Irreducible { kind: SingularCubicKind::Cuspidal }
        | ThreeLines { eckardt: true, .. } => GeometricBrauer::Zero,
        LineConic { intersection: ConicIntersection::TwoRational }
        | Irreducible { kind: SingularCubicKind::NodalSplit }
        | ThreeLines { galois: GaloisType::Trivial | GaloisType::C3, .. } => GeometricBrauer::FullTwist,
        LineConic { intersection: ConicIntersection::Quadratic(d) }
        | Irreducible { kind: SingularCubicKind::NodalNonsplit(d) }
        | ThreeLines { galois: GaloisType::C2(d) | GaloisType::S3(d), .. } => GeometricBrauer::DTwist(d),
    }
}
