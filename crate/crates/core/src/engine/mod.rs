//! Presentations and their finite-dimensional quotients.

mod algebra;
mod quiver;
pub mod rewrite;

pub(crate) use algebra::columns_to_matrix;
pub use algebra::{
    build_algebra, build_algebra_with, default_len_bound, BasisPath, BuildOptions, Elem, FiniteAlgebra,
    ProjectiveReport,
};
pub use quiver::{Arrow, Path, Presentation, Quiver, Relation};

/// Product of two elements of `a`.
pub fn multiply(a: &FiniteAlgebra, x: &Elem, y: &Elem) -> Elem {
    a.mul(x, y)
}

pub fn projective_structure(a: &FiniteAlgebra) -> Vec<ProjectiveReport> {
    a.projective_structure()
}
