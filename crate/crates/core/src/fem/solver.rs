//! P1 Galerkin assembly, Dirichlet solve and error functionals.

use crate::cutoff::{laplace_rhs, CutoffProfile};
use crate::error::{Error, Result};
use crate::fem::mesh::TriMesh;
use crate::fem::sparse::{pcg, CsrMatrix};
use crate::geometry::Point2;
use crate::laplace::LaplaceField;
use crate::quadrature::{GaussLegendre, TRIANGLE_DEG5};

/// CG stopping tolerance on the relative residual.
pub const CG_TOLERANCE: f64 = 1e-10;

/// Nodal values on a mesh.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteField<'a> {
    pub mesh: &'a TriMesh,
    pub values: Vec<f64>,
}

/// A closed-form solution of `−Δu = f`.
pub trait ExactSolution {
    fn value(&self, p: Point2) -> f64;
    fn gradient(&self, p: Point2) -> [f64; 2];
    /// `f = −Δu`
    fn source(&self, _p: Point2) -> f64 {
        0.0
    }
    /// Boundary datum at `p`; the default is the value itself.
    fn trace(&self, p: Point2) -> f64 {
        self.value(p)
    }
}

impl ExactSolution for LaplaceField {
    fn value(&self, p: Point2) -> f64 {
        self.eval(p).expect("evaluated away from the vertex")
    }

    fn gradient(&self, p: Point2) -> [f64; 2] {
        LaplaceField::gradient(self, p)
            .expect("evaluated away from the vertex")
            .cartesian
    }

    /// At a pole the edge limit is used, which is 0 when Φ vanishes on both
    /// edges.
    fn trace(&self, p: Point2) -> f64 {
        self.eval(p).unwrap_or(0.0)
    }
}

/// `η·u`, solving `−Δ(ηu) = laplace_rhs` with zero data beyond r₁.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Localized {
    pub field: LaplaceField,
    pub profile: CutoffProfile,
}

impl ExactSolution for Localized {
    fn value(&self, p: Point2) -> f64 {
        let (r, _) = self.field.frame.to_polar(p);
        self.profile.eta(r) * self.field.trace(p)
    }

    fn gradient(&self, p: Point2) -> [f64; 2] {
        let (r, theta) = self.field.frame.to_polar(p);
        let e = self.profile.eval(r);
        if e.eta == 0.0 {
            return [0.0, 0.0];
        }
        let u = self.field.value(p);
        let g = ExactSolution::gradient(&self.field, p);
        let er = self.field.frame.polar_to_cartesian(theta, 1.0, 0.0);
        [e.eta * g[0] + e.d1 * u * er[0], e.eta * g[1] + e.d1 * u * er[1]]
    }

    fn source(&self, p: Point2) -> f64 {
        laplace_rhs(&self.field, &self.profile, p).expect("evaluated away from the vertex")
    }
}

/// Closed-form solution given by plain functions.
pub struct FnSolution<U, G, F> {
    pub value: U,
    pub gradient: G,
    pub source: F,
}

impl<U, G, F> ExactSolution for FnSolution<U, G, F>
where
    U: Fn(Point2) -> f64,
    G: Fn(Point2) -> [f64; 2],
    F: Fn(Point2) -> f64,
{
    fn value(&self, p: Point2) -> f64 {
        (self.value)(p)
    }

    fn gradient(&self, p: Point2) -> [f64; 2] {
        (self.gradient)(p)
    }

    fn source(&self, p: Point2) -> f64 {
        (self.source)(p)
    }
}

fn barycentric_point(v: &[Point2; 3], b: &[f64; 3]) -> Point2 {
    [
        b[0] * v[0][0] + b[1] * v[1][0] + b[2] * v[2][0],
        b[0] * v[0][1] + b[1] * v[1][1] + b[2] * v[2][1],
    ]
}

/// Constant gradients of the three hat functions and the triangle area.
fn hat_gradients(v: &[Point2; 3]) -> ([[f64; 2]; 3], f64) {
    let det = (v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) - (v[2][0] - v[0][0]) * (v[1][1] - v[0][1]);
    let mut g = [[0.0; 2]; 3];
    for k in 0..3 {
        let (a, b) = (v[(k + 1) % 3], v[(k + 2) % 3]);
        g[k] = [(a[1] - b[1]) / det, (b[0] - a[0]) / det];
    }
    (g, 0.5 * det)
}

/// Full stiffness matrix and load vector, boundary rows included.
pub fn assemble_system<F: Fn(Point2) -> f64>(mesh: &TriMesh, f: F) -> (CsrMatrix, Vec<f64>) {
    let mut trip = Vec::with_capacity(9 * mesh.triangles.len());
    let mut load = vec![0.0; mesh.node_count()];
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let v = mesh.vertices_of(t);
        let (g, area) = hat_gradients(&v);
        for a in 0..3 {
            for b in 0..3 {
                trip.push((tri[a], tri[b], area * (g[a][0] * g[b][0] + g[a][1] * g[b][1])));
            }
        }
        for (bary, w) in TRIANGLE_DEG5.iter() {
            let fv = f(barycentric_point(&v, bary)) * w * area;
            for a in 0..3 {
                load[tri[a]] += fv * bary[a];
            }
        }
    }
    (CsrMatrix::from_triplets(mesh.node_count(), trip), load)
}

/// P1 solution of `−Δu = f` in the domain, `u = g` at boundary nodes.
pub fn solve_dirichlet<'a, F, G>(mesh: &'a TriMesh, f: F, g: G) -> Result<DiscreteField<'a>>
where
    F: Fn(Point2) -> f64,
    G: Fn(Point2) -> f64,
{
    let n = mesh.node_count();
    let (k, load) = assemble_system(mesh, f);
    let mut values = vec![0.0; n];
    let mut is_boundary = vec![false; n];
    for &i in &mesh.boundary_nodes {
        is_boundary[i] = true;
        values[i] = g(mesh.nodes[i]);
        if !values[i].is_finite() {
            return Err(Error::validation(
                "g",
                format!("boundary value at {:?} is not finite", mesh.nodes[i]),
            ));
        }
    }
    let interior: Vec<usize> = (0..n).filter(|&i| !is_boundary[i]).collect();
    let kb = k.mul_vec(&values);
    let rhs: Vec<f64> = interior.iter().map(|&i| load[i] - kb[i]).collect();
    let a = k.submatrix(&interior);
    let mut x = vec![0.0; interior.len()];
    pcg(&a, &rhs, &mut x, CG_TOLERANCE, 20 * n)?;
    for (&i, xi) in interior.iter().zip(x) {
        values[i] = xi;
    }
    Ok(DiscreteField { mesh, values })
}

/// Nodal interpolant.
pub fn interpolate<F: Fn(Point2) -> f64>(mesh: &TriMesh, f: F) -> DiscreteField<'_> {
    DiscreteField {
        mesh,
        values: mesh.nodes.iter().map(|&p| f(p)).collect(),
    }
}

/// Discrete error norms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorNorms {
    pub l2: f64,
    pub h1_semi: f64,
}

/// Dyadic levels of the collapsed rule toward the vertex.
const VERTEX_LEVELS: i32 = 40;

/// Applies `q(point, weight)` over triangle `v`. With `corner = Some(k)` the
/// triangle is collapsed onto `v[k]` (Duffy map) and integrated by tensor
/// Gauss rules on dyadic panels toward that vertex.
fn element_quadrature<Q: FnMut(Point2, f64)>(v: [Point2; 3], corner: Option<usize>, q: &mut Q) {
    let area = 0.5 * ((v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) - (v[2][0] - v[0][0]) * (v[1][1] - v[0][1]));
    let Some(k) = corner else {
        for (bary, w) in TRIANGLE_DEG5.iter() {
            q(barycentric_point(&v, bary), w * area);
        }
        return;
    };
    let gl = GaussLegendre::new(12);
    let (c, a, b) = (v[k], v[(k + 1) % 3], v[(k + 2) % 3]);
    // x = c + s·(a − c + t·(b − a)), dx = 2·area·s ds dt
    let mut hi = 1.0;
    for _ in 0..VERTEX_LEVELS {
        let lo = 0.5 * hi;
        let (sm, sh) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        for (&xs, &ws) in gl.nodes.iter().zip(&gl.weights) {
            let s = sm + sh * xs;
            for (&xt, &wt) in gl.nodes.iter().zip(&gl.weights) {
                let t = 0.5 * (1.0 + xt);
                let p = [
                    c[0] + s * (a[0] - c[0] + t * (b[0] - a[0])),
                    c[1] + s * (a[1] - c[1] + t * (b[1] - a[1])),
                ];
                q(p, 2.0 * area * s * ws * sh * wt * 0.5);
            }
        }
        hi = lo;
    }
}

/// `‖u − u_h‖_{L²}` and `|u − u_h|_{H¹}`.
///
/// Triangles with a node at `vertex` use a collapsed rule graded toward it,
/// so singular exact solutions with λ > 0 are integrated accurately; no
/// quadrature point ever lands on the vertex.
pub fn h1_error<E: ExactSolution + ?Sized>(field: &DiscreteField<'_>, exact: &E, vertex: Point2) -> ErrorNorms {
    let mesh = field.mesh;
    let mut l2 = 0.0;
    let mut h1 = 0.0;
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let v = mesh.vertices_of(t);
        let (g, _) = hat_gradients(&v);
        let uh = tri.map(|i| field.values[i]);
        let grad_h = [
            uh[0] * g[0][0] + uh[1] * g[1][0] + uh[2] * g[2][0],
            uh[0] * g[0][1] + uh[1] * g[1][1] + uh[2] * g[2][1],
        ];
        let corner = (0..3).find(|&k| v[k] == vertex);
        let (x0, y0) = (v[0][0], v[0][1]);
        element_quadrature(v, corner, &mut |p, w| {
            // u_h is affine: value at p from the vertex-0 value and gradient
            let val_h = uh[0] + grad_h[0] * (p[0] - x0) + grad_h[1] * (p[1] - y0);
            let e = exact.value(p) - val_h;
            let ge = exact.gradient(p);
            let (dx, dy) = (ge[0] - grad_h[0], ge[1] - grad_h[1]);
            l2 += w * e * e;
            h1 += w * (dx * dx + dy * dy);
        });
    }
    ErrorNorms {
        l2: l2.sqrt(),
        h1_semi: h1.sqrt(),
    }
}

/// Largest `|u_h|` over nodes closer than `radius` to `center`.
pub fn corner_pole_indicator(field: &DiscreteField<'_>, center: Point2, radius: f64) -> Result<f64> {
    field
        .mesh
        .nodes
        .iter()
        .zip(&field.values)
        .filter(|(p, _)| (p[0] - center[0]).hypot(p[1] - center[1]) < radius)
        .map(|(_, v)| v.abs())
        .reduce(f64::max)
        .ok_or(Error::EmptyBall { radius })
}
