//! Exact arithmetic for special cubic fourfolds: labelling discriminants and
//! the numerical conditions for an associated K3 surface, Gram matrices of
//! algebraic sublattices, and diagonal automorphisms of cubic forms in six
//! variables together with a catalog of the classical invariant families.
//!
//! Everything is computed with integers, residues and big rationals; no
//! floating point is used anywhere.

pub mod catalog;
pub mod cli;
pub mod cubic;
pub mod discriminant;
mod error;
pub mod lattice;

pub use error::{Error, Result};

pub use catalog::{
    fixed_point_count_on_f, load_catalog, polarization_class, shipped_catalog, validate_record,
    CheckResult, FamilyRecord, K3Status, PolarizationClass, RankClaim, Rationality, Status,
};
pub use cubic::{
    ClassifiedLocus, CubicForm, DiagonalAutomorphism, ExponentVector, FamilyDimension,
    FixedLocusComponent, SmoothnessReport,
};
pub use discriminant::{
    classify_by_rank, enumerate_hodge_admissible, fano_hilbert_param, has_labelling,
    quotient_correspondence, satisfies_star, satisfies_star_star, Direction, DiscriminantReport,
    QuotientCorrespondence, RankClassification, RankVerdict, TwistedWitness,
};
pub use lattice::{GramMatrix, Labelling};
