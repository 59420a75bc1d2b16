//! Cubic forms in six variables and their diagonal automorphisms.

mod action;
pub mod automorphism;
mod form;
mod monomial;
mod parse;

pub use action::{
    eigen_class_size, eigen_decomposition, family_dimension, fixed_locus_ambient, fixed_locus_on_x,
    is_eigenform, is_symplectic, ClassifiedLocus, FamilyDimension, FixedLocusComponent,
};
pub use automorphism::{named_automorphism, DiagonalAutomorphism};
pub use form::{point_from_ints, CubicForm, Point, SmoothnessReport};
pub use monomial::{monomial_basis, ExponentVector, MONOMIAL_COUNT, NVARS};
