//! Machine-readable records of the invariant families and named cubics, and
//! a validator that recomputes what can be recomputed.
//!
//! The catalog format is line oriented:
//!
//! ```text
//! # comment
//! [family V3]
//! order = 3
//! weights = 0,0,0,1,1,2
//! eigenvalue = 0
//! dimension = 7
//! symplectic = false
//! divisors = 12
//! rank_A = 7            # or >=13
//! hodge = no            # yes / no / unknown
//! twisted = yes
//! motivic = yes
//! rationality = conjecturally_irrational
//! cite = BG Lemma 4.7: ...
//! note = ...
//! ```
//!
//! Unknown keys, repeated single-valued keys and duplicate names are errors.

mod parse;
mod validate;

use crate::cubic::DiagonalAutomorphism;
use crate::{Error, Result};

pub use parse::load_catalog;
pub use validate::{validate_record, CheckResult};

/// Catalog shipped with the crate.
pub const SHIPPED_CATALOG: &str = include_str!("../../data/catalog.txt");

/// Environment variable overriding the catalog path used by the CLI.
pub const CATALOG_ENV: &str = "CUBIC_K3_CATALOG";

pub fn shipped_catalog() -> Vec<FamilyRecord> {
    load_catalog(SHIPPED_CATALOG).expect("shipped catalog parses")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "yes" => Status::Yes,
            "no" => Status::No,
            "unknown" => Status::Unknown,
            _ => return None,
        })
    }
}

/// Association of a K3 surface in each of the three senses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K3Status {
    /// Hodge isometry of the orthogonal complement of the labelling.
    pub hodge: Status,
    /// Kuznetsov component equivalent to a twisted K3 category.
    pub twisted: Status,
    /// Isomorphism of transcendental motives.
    pub motivic: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rationality {
    Rational,
    ConjecturallyIrrational,
    Open,
}

impl Rationality {
    pub fn as_str(self) -> &'static str {
        match self {
            Rationality::Rational => "rational",
            Rationality::ConjecturallyIrrational => "conjecturally_irrational",
            Rationality::Open => "open",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "rational" => Rationality::Rational,
            "conjecturally_irrational" => Rationality::ConjecturallyIrrational,
            "open" => Rationality::Open,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankClaim {
    Exact(u32),
    AtLeast(u32),
}

impl RankClaim {
    /// Value used by the rank rules; a lower bound stands for itself.
    pub fn effective(self) -> u32 {
        match self {
            RankClaim::Exact(r) | RankClaim::AtLeast(r) => r,
        }
    }

    pub fn render(self) -> String {
        match self {
            RankClaim::Exact(r) => r.to_string(),
            RankClaim::AtLeast(r) => format!(">={r}"),
        }
    }
}

/// One family or named cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRecord {
    pub name: String,
    /// Order of the listed symmetry.
    pub order: Option<u32>,
    /// Present when the symmetry is diagonal with known weights.
    pub automorphism: Option<DiagonalAutomorphism>,
    pub eigenvalue_k: Option<u32>,
    pub claimed_dimension: Option<u32>,
    pub symplectic: bool,
    pub divisor_memberships: Vec<u64>,
    pub rank_a_claim: Option<RankClaim>,
    pub k3_status: K3Status,
    pub rationality: Rationality,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
    /// Line of the `[family ...]` header in the source document.
    pub line: usize,
}

impl FamilyRecord {
    pub fn find<'a>(records: &'a [FamilyRecord], name: &str) -> Option<&'a FamilyRecord> {
        records.iter().find(|r| r.name == name)
    }
}

/// Number of isolated fixed points of the natural automorphism of `S^[2]`
/// induced by a symplectic automorphism of prime order `p` of a K3 surface.
pub fn fixed_point_count_on_f(order_p: u64) -> Result<u32> {
    match order_p {
        3 => Ok(27),
        5 => Ok(14),
        7 => Ok(9),
        p => Err(Error::UnsupportedPrime(p)),
    }
}

/// Coefficients of the Plücker polarization `g = 2f - (2n+1) delta` on `S^[2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolarizationClass {
    pub f_coeff: i64,
    pub delta_coeff: i64,
}

pub fn polarization_class(n: u64) -> Result<PolarizationClass> {
    if n == 0 {
        return Err(Error::NonPositiveDegree);
    }
    Ok(PolarizationClass {
        f_coeff: 2,
        delta_coeff: -(2 * n as i64 + 1),
    })
}
