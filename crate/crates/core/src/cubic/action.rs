//! Diagonal actions on the space of cubic forms.
//!
//! Every monomial is an eigenvector of a diagonal automorphism, so invariant
//! families, symplectic type and fixed loci all reduce to residue arithmetic
//! on the weight vector.

use std::collections::BTreeMap;

use super::automorphism::DiagonalAutomorphism;
use super::form::CubicForm;
use super::monomial::{monomial_basis, ExponentVector};
use crate::{Error, Result};

/// The 56 monomials grouped by eigenvalue exponent.
pub fn eigen_decomposition(a: &DiagonalAutomorphism) -> BTreeMap<u32, Vec<ExponentVector>> {
    let mut classes: BTreeMap<u32, Vec<ExponentVector>> = BTreeMap::new();
    for e in monomial_basis() {
        classes.entry(a.weight(e)).or_default().push(*e);
    }
    classes
}

pub fn eigen_class_size(a: &DiagonalAutomorphism, k: u32) -> usize {
    monomial_basis().iter().filter(|e| a.weight(e) == k).count()
}

/// Common weight `k` of all terms, so that `a^* F = zeta^k F`.
pub fn is_eigenform(f: &CubicForm, a: &DiagonalAutomorphism) -> Result<Option<u32>> {
    let mut weights = f.terms().map(|(e, _)| a.weight(e));
    let Some(k) = weights.next() else {
        return Err(Error::EmptyForm);
    };
    Ok(weights.all(|w| w == k).then_some(k))
}

/// `det(a) / lambda^2 = 1`, i.e. `sum w_i = 2k (mod n)`.
pub fn is_symplectic(a: &DiagonalAutomorphism, k: u32) -> bool {
    let n = a.order() as i64;
    (a.det_weight() as i64 - 2 * k as i64).rem_euclid(n) == 0
}

/// Dimension count of an invariant family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyDimension {
    /// Clamped at zero.
    pub value: u32,
    /// `|class k| - sum m_b^2` before clamping.
    pub raw: i64,
    pub degenerate: bool,
    /// All weights equal, so the action on `P^5` is trivial.
    pub trivial_action: bool,
}

/// Projective dimension of the eigen-system of weight `k` minus the dimension
/// of the centralizer of `a` in `PGL(6)`. The centralizer is block diagonal
/// with one `GL(m_b)` per distinct weight, so it has dimension
/// `sum m_b^2 - 1`; the two `-1`s cancel.
pub fn family_dimension(a: &DiagonalAutomorphism, k: u32) -> Result<FamilyDimension> {
    a.check_residue(k)?;
    let monomials = eigen_class_size(a, k) as i64;
    let centralizer: i64 = a
        .weight_classes()
        .values()
        .map(|vars| (vars.len() as i64).pow(2))
        .sum();
    let raw = monomials - centralizer;
    Ok(FamilyDimension {
        value: raw.max(0) as u32,
        raw,
        degenerate: raw < 0,
        trivial_action: a.is_trivial_action(),
    })
}

/// How the form meets one projective eigenspace `P(V_c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifiedLocus {
    /// The restriction vanishes identically.
    ContainedInX,
    /// Restricted cubic on a fixed subspace of dimension >= 2.
    Hypersurface(CubicForm),
    /// Zeros of a nonzero binary cubic on a fixed line, with multiplicity
    /// over an algebraically closed field.
    Points(u32),
    PointOnX,
    PointOffX,
}

impl ClassifiedLocus {
    pub fn kind(&self) -> &'static str {
        match self {
            ClassifiedLocus::ContainedInX => "contained_in_X",
            ClassifiedLocus::Hypersurface(_) => "hypersurface",
            ClassifiedLocus::Points(_) => "points",
            ClassifiedLocus::PointOnX => "point_on_X",
            ClassifiedLocus::PointOffX => "point_off_X",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLocusComponent {
    pub eigen_weight: u32,
    /// Coordinates spanning the eigenspace.
    pub variables: Vec<usize>,
    pub ambient_dim: usize,
    /// `None` for the ambient-only description.
    pub on_x: Option<ClassifiedLocus>,
}

/// Fixed locus of `a` on `P^5`: one linear subspace per realized weight.
pub fn fixed_locus_ambient(a: &DiagonalAutomorphism) -> Vec<FixedLocusComponent> {
    a.weight_classes()
        .into_iter()
        .map(|(c, vars)| FixedLocusComponent {
            eigen_weight: c,
            ambient_dim: vars.len() - 1,
            variables: vars,
            on_x: None,
        })
        .collect()
}

/// Fixed locus of `a` on the hypersurface `F = 0`, for `F` an eigenform.
pub fn fixed_locus_on_x(
    f: &CubicForm,
    a: &DiagonalAutomorphism,
) -> Result<Vec<FixedLocusComponent>> {
    if is_eigenform(f, a)?.is_none() {
        return Err(Error::NotEigenform);
    }
    Ok(fixed_locus_ambient(a)
        .into_iter()
        .map(|mut comp| {
            let restricted = f.restrict_to(&comp.variables);
            comp.on_x = Some(match (comp.ambient_dim, restricted.is_zero()) {
                (0, true) => ClassifiedLocus::PointOnX,
                (0, false) => ClassifiedLocus::PointOffX,
                (_, true) => ClassifiedLocus::ContainedInX,
                (1, false) => ClassifiedLocus::Points(3),
                (_, false) => ClassifiedLocus::Hypersurface(restricted),
            });
            comp
        })
        .collect())
}
