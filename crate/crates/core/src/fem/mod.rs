//! Minimal P1 finite elements on the L-shaped domain.

pub mod mesh;
pub mod solver;
pub mod sparse;
pub mod study;

pub use mesh::{build_lshape_mesh, PolygonDomain, TriMesh};
pub use solver::{
    assemble_system, corner_pole_indicator, h1_error, interpolate, solve_dirichlet, DiscreteField,
    ErrorNorms, ExactSolution, FnSolution, Localized,
};
pub use study::{
    convergence_study, limit_case_study, ConvergenceRow, ConvergenceStudy, LimitRow, LimitStudy,
};
