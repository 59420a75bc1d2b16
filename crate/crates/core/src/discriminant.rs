//! Number-theoretic predicates on discriminants of labellings.
//!
//! A special cubic fourfold with a labelling of discriminant `d` lies in the
//! Hassett divisor `C_d`, which is non-empty iff `d >= 8` and `d = 0, 2 mod 6`.
//! On such `d` two conditions decide whether a K3 surface is associated:
//!
//! * the Hodge-theoretic condition: `d` is divisible by none of `4`, `9`, or
//!   an odd prime `p = 2 mod 3` ([`satisfies_star`]);
//! * the twisted condition: `d = f^2 g` with `g | 2n^2 + 2n + 2` for some `n`
//!   ([`satisfies_star_star`]).

use num_integer::Roots;

use crate::{Error, Result};

/// `true` iff `C_d` is non-empty.
pub fn has_labelling(d: u64) -> bool {
    d >= 8 && matches!(d % 6, 0 | 2)
}

fn prime_factors(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            out.push(p);
            while d.is_multiple_of(p) {
                d /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Hodge-theoretic admissibility of `d`.
///
/// Every labelled `d` is even, so the prime 2 is not among the excluded
/// primes `p = 2 mod 3`; only odd ones are.
pub fn satisfies_star(d: u64) -> bool {
    has_labelling(d)
        && !d.is_multiple_of(4)
        && !d.is_multiple_of(9)
        && prime_factors(d).into_iter().all(|p| p == 2 || p % 3 != 2)
}

/// A triple `(f, g, n)` with `d = f^2 g`, `0 <= n < g` and `g | 2n^2+2n+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistedWitness {
    pub f: u64,
    pub g: u64,
    pub n: u64,
}

impl TwistedWitness {
    /// Recomputes both defining relations from scratch.
    pub fn is_valid_for(&self, d: u64) -> bool {
        let (f, g, n) = (self.f as u128, self.g as u128, self.n as u128);
        f >= 1 && g >= 1 && n < g && f * f * g == d as u128 && (2 * n * n + 2 * n + 2) % g == 0
    }
}

/// Lexicographically smallest twisted witness for a labelled `d`.
///
/// `f` runs upward over integers with `f^2 | d`; for each `g = d / f^2` the
/// quantity `2n^2+2n+2 mod g` is periodic in `n` with period `g`, so only
/// `n < g` needs checking.
pub fn satisfies_star_star(d: u64) -> Result<Option<TwistedWitness>> {
    if !has_labelling(d) {
        return Err(Error::NoLabelling(d));
    }
    let mut f = 1u64;
    while f * f <= d {
        if d.is_multiple_of(f * f) {
            let g = d / (f * f);
            let g128 = g as u128;
            if let Some(n) = (0..g).find(|&n| {
                let n = n as u128;
                (2 * n * n + 2 * n + 2).is_multiple_of(g128)
            }) {
                return Ok(Some(TwistedWitness { f, g, n }));
            }
        }
        f += 1;
    }
    Ok(None)
}

/// `n >= 1` with `d = 2(n^2+n+1)`, if one exists.
pub fn fano_hilbert_param(d: u64) -> Option<u64> {
    if !d.is_multiple_of(2) {
        return None;
    }
    // n^2 + n + 1 = m  <=>  (2n+1)^2 = 4m - 3
    let m = d / 2;
    if m < 3 {
        return None;
    }
    let disc = 4 * m - 3;
    let s = disc.sqrt();
    if s * s != disc {
        return None;
    }
    let n = (s - 1) / 2;
    (n >= 1).then_some(n)
}

/// Genus `n^2+n+2` of the polarized K3 surface paired with `d = 2(n^2+n+1)`.
pub fn genus(n: u64) -> u64 {
    n * n + n + 2
}

/// All `d <= bound` satisfying the Hodge-theoretic condition, ascending.
pub fn enumerate_hodge_admissible(bound: u64) -> Vec<u64> {
    (8..=bound).filter(|&d| satisfies_star(d)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankVerdict {
    /// `rank A(X) = 1`: no associated K3 surface in any sense.
    VeryGeneral,
    Unconstrained,
    /// `rank A(X) >= 12`: the transcendental lattice embeds primitively into
    /// the K3 lattice, so a Hodge-theoretic K3 surface exists.
    ForcesHodgeK3,
}

impl RankVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RankVerdict::VeryGeneral => "very_general",
            RankVerdict::Unconstrained => "unconstrained",
            RankVerdict::ForcesHodgeK3 => "forces_hodge_k3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankClassification {
    pub rank_a: u32,
    pub verdict: RankVerdict,
}

pub(crate) fn check_rank(rank_a: i64) -> Result<u32> {
    if (1..=23).contains(&rank_a) {
        Ok(rank_a as u32)
    } else {
        Err(Error::RankOutOfRange(rank_a))
    }
}

pub fn classify_by_rank(rank_a: i64) -> Result<RankClassification> {
    let rank_a = check_rank(rank_a)?;
    let verdict = match rank_a {
        1 => RankVerdict::VeryGeneral,
        12.. => RankVerdict::ForcesHodgeK3,
        _ => RankVerdict::Unconstrained,
    };
    Ok(RankClassification { rank_a, verdict })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// From `S` with polarization of degree `2d` to the resolved quotient
    /// `Y` with polarization of degree `6d`.
    Forward,
    /// From `S` with polarization of degree `6e` to `Y` with degree `2e`.
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientCorrespondence {
    pub partner_degree: u64,
    pub source_genus: Option<u64>,
    pub partner_genus: Option<u64>,
}

/// Genus `3n^2+3n+4` of the partner of a genus `n^2+n+2` surface.
pub fn forward_partner_genus(n: u64) -> u64 {
    3 * n * n + 3 * n + 4
}

/// Genus `(m^2+m+1)/3 + 1`; errors unless `3 | m^2+m+1` (i.e. `m = 1 mod 3`).
pub fn backward_partner_genus(m: u64) -> Result<u64> {
    let q = m * m + m + 1;
    if !q.is_multiple_of(3) {
        return Err(Error::NonIntegralGenus(q));
    }
    Ok(q / 3 + 1)
}

/// Degree bookkeeping for the order-3 quotient correspondence between K3
/// surfaces with a symplectic automorphism and their resolved quotients.
///
/// `half_degree` is `d` (source degree `2d`) going forward and `e` (source
/// degree `6e`) going backward. Genera are reported only when the source
/// degree has the form `2(n^2+n+1)`.
pub fn quotient_correspondence(
    direction: Direction,
    half_degree: u64,
) -> Result<QuotientCorrespondence> {
    if half_degree == 0 {
        return Err(Error::NonPositiveDegree);
    }
    match direction {
        Direction::Forward => {
            let n = fano_hilbert_param(2 * half_degree);
            Ok(QuotientCorrespondence {
                partner_degree: 6 * half_degree,
                source_genus: n.map(genus),
                partner_genus: n.map(forward_partner_genus),
            })
        }
        Direction::Backward => {
            let m = fano_hilbert_param(6 * half_degree);
            let partner_genus = m.map(backward_partner_genus).transpose()?;
            Ok(QuotientCorrespondence {
                partner_degree: 2 * half_degree,
                source_genus: m.map(genus),
                partner_genus,
            })
        }
    }
}

/// Everything the arithmetic says about a single discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantReport {
    pub d: u64,
    pub has_labelling: bool,
    pub hodge_associated: bool,
    pub twisted_witness: Option<TwistedWitness>,
    pub fano_hilbert_n: Option<u64>,
    pub genus: Option<u64>,
}

impl DiscriminantReport {
    pub fn new(d: u64) -> Self {
        let labelled = has_labelling(d);
        let twisted_witness = if labelled {
            satisfies_star_star(d).expect("labelled d")
        } else {
            None
        };
        let fano_hilbert_n = if labelled {
            fano_hilbert_param(d)
        } else {
            None
        };
        DiscriminantReport {
            d,
            has_labelling: labelled,
            hodge_associated: satisfies_star(d),
            twisted_witness,
            fano_hilbert_n,
            genus: fano_hilbert_n.map(genus),
        }
    }
}
