//! Refinement studies on the L-shape.

use crate::error::{Error, Result};
use crate::fem::mesh::{build_lshape_mesh, TriMesh};
use crate::fem::solver::{corner_pole_indicator, h1_error, interpolate, solve_dirichlet, ExactSolution};
use crate::geometry::Point2;
use crate::laplace::LaplaceField;

const CORNER: Point2 = [0.0, 0.0];

/// One level of a convergence study. Rates compare with the previous level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub level: u32,
    pub h: f64,
    pub l2: f64,
    pub h1: f64,
    pub rate_l2: Option<f64>,
    pub rate_h1: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub rows: Vec<ConvergenceRow>,
    /// Finest mesh and its discrete solution.
    pub mesh: TriMesh,
    pub values: Vec<f64>,
}

/// Solves on `base_n·2^ℓ` criss-cross meshes, ℓ = 0..levels, with source and
/// boundary data taken from `exact`, and measures the error.
pub fn convergence_study<E: ExactSolution + ?Sized>(
    exact: &E,
    base_n: usize,
    levels: u32,
) -> Result<ConvergenceStudy> {
    if levels < 3 {
        return Err(Error::validation("levels", format!("need at least 3, got {levels}")));
    }
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(levels as usize);
    let mut last = None;
    for level in 0..levels {
        let mesh = build_lshape_mesh(base_n << level)?;
        let uh = solve_dirichlet(&mesh, |p| exact.source(p), |p| exact.trace(p))?;
        let e = h1_error(&uh, exact, CORNER);
        let (rate_l2, rate_h1) = match rows.last() {
            Some(prev) => (Some((prev.l2 / e.l2).log2()), Some((prev.h1 / e.h1_semi).log2())),
            None => (None, None),
        };
        rows.push(ConvergenceRow {
            level,
            h: mesh.h(),
            l2: e.l2,
            h1: e.h1_semi,
            rate_l2,
            rate_h1,
        });
        let values = uh.values;
        last = Some((mesh, values));
    }
    let (mesh, values) = last.expect("at least three levels");
    Ok(ConvergenceStudy { rows, mesh, values })
}

/// One level of the limit-case study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitRow {
    pub level: u32,
    pub n: usize,
    pub h: f64,
    /// Largest |u_h| near the corner for the discrete solution with g = u*.
    pub corner_max: f64,
    /// Same quantity for the nodal interpolant of u*.
    pub interpolant_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitStudy {
    pub rows: Vec<LimitRow>,
    /// Finest mesh and its discrete solution.
    pub mesh: TriMesh,
    pub values: Vec<f64>,
}

/// Solves `Δu = 0` with `u = u*` on the boundary on successively refined
/// meshes and tracks the nodal maximum near the corner.
pub fn limit_case_study(field: &LaplaceField, base_n: usize, levels: u32, radius: f64) -> Result<LimitStudy> {
    if levels < 1 {
        return Err(Error::validation("levels", "need at least 1"));
    }
    let mut rows = Vec::with_capacity(levels as usize);
    let mut last = None;
    for level in 0..levels {
        let n = base_n << level;
        let mesh = build_lshape_mesh(n)?;
        let uh = solve_dirichlet(&mesh, |_| 0.0, |p| field.trace(p))?;
        let ih = interpolate(&mesh, |p| field.trace(p));
        rows.push(LimitRow {
            level,
            n,
            h: mesh.h(),
            corner_max: corner_pole_indicator(&uh, CORNER, radius)?,
            interpolant_max: corner_pole_indicator(&ih, CORNER, radius)?,
        });
        let values = uh.values;
        last = Some((mesh, values));
    }
    let (mesh, values) = last.expect("at least one level");
    Ok(LimitStudy { rows, mesh, values })
}
