//! Singular exponents of corner solutions.
//!
//! Laplace exponents for the three homogeneous boundary-condition presets are
//! closed form. Stokes exponents for Dirichlet conditions are the complex
//! zeros of
//!
//! ```text
//! D(λ, ω) = 4(sin²(λω) − λ² sin²ω) = 4(sin λω − λ sin ω)(sin λω + λ sin ω)
//! ```
//!
//! They are located with the argument principle (trapezoid quadrature of
//! f'/f around rectangles, recursive subdivision) and polished by Newton's
//! method on the vanishing factor.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::angle::{reduce, Angle};
use crate::error::{Error, Result};

/// Homogeneous boundary conditions on the two corner edges θ = 0 and θ = ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BcKind {
    /// u = 0 on both edges.
    DirichletDirichlet,
    /// ∂ₙu = 0 on both edges.
    NeumannNeumann,
    /// u = 0 on θ = 0, ∂ₙu = 0 on θ = ω.
    DirichletNeumann,
}

impl BcKind {
    pub fn short_name(&self) -> &'static str {
        match self {
            BcKind::DirichletDirichlet => "dd",
            BcKind::NeumannNeumann => "nn",
            BcKind::DirichletNeumann => "dn",
        }
    }
}

impl fmt::Display for BcKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for BcKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dd" => Ok(BcKind::DirichletDirichlet),
            "nn" => Ok(BcKind::NeumannNeumann),
            "dn" => Ok(BcKind::DirichletNeumann),
            _ => Err(Error::validation("bc", format!("expected dd, nn or dn, got `{s}`"))),
        }
    }
}

/// A Laplace exponent λ = m·π/(2ω), kept as the integer `m` together with ω.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceExponent {
    half_steps: i64,
    omega: Angle,
}

impl LaplaceExponent {
    /// λ as a reduced fraction `(p, q)` of π/ω.
    pub fn pi_over_omega_multiple(&self) -> (i64, i64) {
        reduce(self.half_steps, 2)
    }

    /// λ as a reduced rational number, available when ω is a rational
    /// multiple of π.
    pub fn as_rational(&self) -> Option<(i64, i64)> {
        let (p, q) = self.omega.pi_ratio()?;
        Some(reduce(self.half_steps * q, 2 * p))
    }

    pub fn omega(&self) -> Angle {
        self.omega
    }

    pub fn value(&self) -> f64 {
        match self.as_rational() {
            Some((p, q)) => p as f64 / q as f64,
            None => self.half_steps as f64 * PI / (2.0 * self.omega.radians()),
        }
    }
}

/// λ = kπ/ω for DD and NN, λ = (k − ½)π/ω for DN.
pub fn laplace_exponent(omega: Angle, bc: BcKind, k: u32) -> Result<LaplaceExponent> {
    let half_steps = match bc {
        BcKind::NeumannNeumann => 2 * k as i64,
        BcKind::DirichletDirichlet | BcKind::DirichletNeumann if k == 0 => {
            return Err(Error::InvalidExponentIndex {
                k,
                bc: bc.short_name(),
            })
        }
        BcKind::DirichletDirichlet => 2 * k as i64,
        BcKind::DirichletNeumann => 2 * k as i64 - 1,
    };
    Ok(LaplaceExponent { half_steps, omega })
}

/// `4(sin²(λω) − λ² sin²ω)`.
pub fn stokes_determinant(lambda: Complex64, omega: f64) -> Complex64 {
    let s = (lambda * omega).sin();
    let so = omega.sin();
    4.0 * (s * s - lambda * lambda * (so * so))
}

/// d/dλ of [`stokes_determinant`]: `4(ω sin(2λω) − 2λ sin²ω)`.
pub fn stokes_determinant_derivative(lambda: Complex64, omega: f64) -> Complex64 {
    let so = omega.sin();
    4.0 * (omega * (2.0 * lambda * omega).sin() - 2.0 * lambda * (so * so))
}

/// The two transcendental equations `sin λω = ±λ sin ω` whose union of
/// roots is the root set of the determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// sin λω = +λ sin ω
    Plus,
    /// sin λω = −λ sin ω
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    /// `sin λω ∓ λ sin ω`, vanishing on this branch.
    pub fn value(self, lambda: Complex64, omega: f64) -> Complex64 {
        (lambda * omega).sin() - self.sign() * lambda * omega.sin()
    }

    pub fn derivative(self, lambda: Complex64, omega: f64) -> Complex64 {
        omega * (lambda * omega).cos() - self.sign() * omega.sin()
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

/// A root of the Stokes Dirichlet determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentRoot {
    pub lambda: Complex64,
    pub omega: f64,
    pub branch: Branch,
    /// `|D(λ, ω)|` at the refined root.
    pub residual: f64,
}

/// Axis-aligned rectangle in the complex λ-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchRegion {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl SearchRegion {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        if !(re_min < re_max) {
            return Err(Error::validation("region", "re_min must be < re_max"));
        }
        if !(im_min < im_max) {
            return Err(Error::validation("region", "im_min must be < im_max"));
        }
        Ok(SearchRegion {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }

    fn center(&self) -> Complex64 {
        Complex64::new(
            0.5 * (self.re_min + self.re_max),
            0.5 * (self.im_min + self.im_max),
        )
    }

    fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    fn contains(&self, z: Complex64, slack: f64) -> bool {
        z.re >= self.re_min - slack
            && z.re <= self.re_max + slack
            && z.im >= self.im_min - slack
            && z.im <= self.im_max + slack
    }

    /// Counterclockwise corners.
    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re_min, self.im_min),
            Complex64::new(self.re_max, self.im_min),
            Complex64::new(self.re_max, self.im_max),
            Complex64::new(self.re_min, self.im_max),
        ]
    }
}

/// Boundary minimum of the determinant below which a region is rejected.
pub const BOUNDARY_CLEARANCE: f64 = 1e-8;

const START_POINTS_PER_EDGE: usize = 512;
const MAX_POINTS_PER_EDGE: usize = 1 << 17;
const NEWTON_MAX_ITER: usize = 100;
const MAX_DEPTH: usize = 80;

/// Trapezoid approximation of `(1/2πi) ∮ f'/f dz` with `n` intervals per
/// edge, plus the minimum of `|f|` over the sample points.
fn contour_integral<F, D>(f: &F, df: &D, region: &SearchRegion, n: usize) -> (Complex64, f64)
where
    F: Fn(Complex64) -> Complex64,
    D: Fn(Complex64) -> Complex64,
{
    let c = region.corners();
    let mut total = Complex64::new(0.0, 0.0);
    let mut min_abs = f64::INFINITY;
    for e in 0..4 {
        let (a, b) = (c[e], c[(e + 1) % 4]);
        let dz = (b - a) / n as f64;
        let mut s = Complex64::new(0.0, 0.0);
        for j in 0..=n {
            let z = a + dz * j as f64;
            let fz = f(z);
            min_abs = min_abs.min(fz.norm());
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            s += w * df(z) / fz;
        }
        total += s * dz;
    }
    (total / Complex64::new(0.0, 2.0 * PI), min_abs)
}

/// Minimum of `|f|` over the boundary samples used by the first winding pass.
pub fn boundary_minimum<F: Fn(Complex64) -> Complex64>(f: F, region: &SearchRegion) -> f64 {
    let c = region.corners();
    let n = START_POINTS_PER_EDGE;
    let mut min_abs = f64::INFINITY;
    for e in 0..4 {
        let (a, b) = (c[e], c[(e + 1) % 4]);
        for j in 0..n {
            let v = f(a + (b - a) * (j as f64 / n as f64)).norm();
            min_abs = if v.is_nan() { 0.0 } else { min_abs.min(v) };
        }
    }
    min_abs
}

/// Number of zeros of `f` inside `region`, counted with multiplicity.
///
/// The sample count per edge starts at 512 and doubles until two successive
/// estimates round to the same integer and sit within 0.05 of it. Returns
/// the count and the boundary minimum of `|f|`.
pub fn winding_number<F, D>(f: F, df: D, region: &SearchRegion) -> Result<(i64, f64)>
where
    F: Fn(Complex64) -> Complex64,
    D: Fn(Complex64) -> Complex64,
{
    let mut n = START_POINTS_PER_EDGE;
    let (mut prev, mut min_abs) = contour_integral(&f, &df, region, n);
    while n < MAX_POINTS_PER_EDGE {
        n *= 2;
        let (cur, m) = contour_integral(&f, &df, region, n);
        min_abs = min_abs.min(m);
        let rounded = cur.re.round();
        if rounded == prev.re.round() && (cur.re - rounded).abs() < 0.05 && cur.im.abs() < 0.05 {
            return Ok((rounded as i64, min_abs));
        }
        prev = cur;
    }
    Err(Error::NonConvergence(format!(
        "argument-principle count did not stabilize on {region:?}"
    )))
}

fn newton_on_branch(branch: Branch, omega: f64, start: Complex64) -> Option<Complex64> {
    let mut z = start;
    for _ in 0..NEWTON_MAX_ITER {
        let f = branch.value(z, omega);
        if f == Complex64::new(0.0, 0.0) {
            return Some(z);
        }
        let d = branch.derivative(z, omega);
        if d.norm() == 0.0 || !d.is_finite() {
            return None;
        }
        let step = f / d;
        z -= step;
        if !z.is_finite() {
            return None;
        }
        if step.norm() <= 4.0 * f64::EPSILON * z.norm().max(1.0) {
            return Some(z);
        }
    }
    // Multiple roots converge linearly; accept if the residual is tiny.
    (branch.value(z, omega).norm() <= 1e-12).then_some(z)
}

/// Snaps a nearly-real root onto the real axis when Newton started on the
/// axis converges to it.
fn snap_real(branch: Branch, omega: f64, z: Complex64) -> Complex64 {
    if z.im.abs() > 1e-10 * z.re.abs().max(1.0) {
        return z;
    }
    match newton_on_branch(branch, omega, Complex64::new(z.re, 0.0)) {
        Some(w) if w.im == 0.0 && (w - z).norm() < 1e-9 * z.norm().max(1.0) => w,
        _ => z,
    }
}

/// Picks a split fraction along the longer side that keeps the new edge
/// clear of zeros of the branch function.
///
/// A zero within one sample spacing Δ of a sample z forces |f(z)| ≲ |f′(z)|Δ
/// to first order, so a cut is accepted when every sample clears that bound
/// with a safety factor.
fn split(branch: Branch, omega: f64, cell: &SearchRegion) -> (SearchRegion, SearchRegion) {
    const FRACTIONS: [f64; 9] = [0.5, 0.471, 0.529, 0.437, 0.563, 0.402, 0.598, 0.361, 0.639];
    const SAMPLES: usize = 256;
    let vertical = cell.width() >= cell.height();
    let cut_len = if vertical { cell.height() } else { cell.width() };
    let cut = |t: f64| {
        if vertical {
            cell.re_min + t * cell.width()
        } else {
            cell.im_min + t * cell.height()
        }
    };
    let line_point = |x: f64, s: f64| {
        if vertical {
            Complex64::new(x, cell.im_min + s * cell.height())
        } else {
            Complex64::new(cell.re_min + s * cell.width(), x)
        }
    };
    let step = cut_len / SAMPLES as f64;
    let mut best = (f64::NEG_INFINITY, 0.5);
    for &t in &FRACTIONS {
        let x = cut(t);
        let score = (0..=SAMPLES)
            .map(|j| {
                let z = line_point(x, j as f64 / SAMPLES as f64);
                let d = branch.derivative(z, omega).norm() * step;
                let v = branch.value(z, omega).norm();
                if d > 0.0 {
                    v / d
                } else if v > 0.0 {
                    f64::INFINITY
                } else {
                    0.0
                }
            })
            .fold(f64::INFINITY, f64::min);
        if score > 2.0 {
            best = (score, t);
            break;
        }
        if score > best.0 {
            best = (score, t);
        }
    }
    let x = cut(best.1);
    let mut lo = *cell;
    let mut hi = *cell;
    if vertical {
        lo.re_max = x;
        hi.re_min = x;
    } else {
        lo.im_max = x;
        hi.im_min = x;
    }
    (lo, hi)
}

fn localize(
    branch: Branch,
    omega: f64,
    cell: SearchRegion,
    count: i64,
    depth: usize,
    out: &mut Vec<Complex64>,
) -> Result<()> {
    if count <= 0 {
        return Ok(());
    }
    let size = cell.width().max(cell.height());
    let tiny = size <= 1e-7 * cell.center().norm().max(1.0);
    if count == 1 || tiny {
        let slack = 1e-12 * cell.center().norm().max(1.0);
        if let Some(z) = newton_on_branch(branch, omega, cell.center()) {
            if cell.contains(z, slack) {
                let z = snap_real(branch, omega, z);
                for _ in 0..count {
                    out.push(z);
                }
                return Ok(());
            }
        }
        if tiny {
            return Err(Error::NonConvergence(format!(
                "Newton failed in a minimal cell around {} ({count} roots)",
                cell.center()
            )));
        }
    }
    if depth >= MAX_DEPTH {
        return Err(Error::NonConvergence(format!(
            "subdivision depth exceeded near {}",
            cell.center()
        )));
    }
    let (lo, hi) = split(branch, omega, &cell);
    let f = |z| branch.value(z, omega);
    let df = |z| branch.derivative(z, omega);
    let (n_lo, _) = winding_number(f, df, &lo)?;
    let (n_hi, _) = winding_number(f, df, &hi)?;
    if n_lo + n_hi != count {
        return Err(Error::NonConvergence(format!(
            "inconsistent root counts {n_lo} + {n_hi} != {count} when splitting {cell:?}"
        )));
    }
    localize(branch, omega, lo, n_lo, depth + 1, out)?;
    localize(branch, omega, hi, n_hi, depth + 1, out)
}

/// All roots of the Stokes Dirichlet determinant inside `region`.
///
/// Roots are returned with multiplicity (a double root appears twice) and
/// sorted by real part, imaginary part and branch. The list length equals the
/// winding number of the determinant around the region.
pub fn find_stokes_exponents(omega: f64, region: &SearchRegion) -> Result<Vec<ExponentRoot>> {
    if !(omega > 0.0 && omega <= 2.0 * PI) {
        return Err(Error::validation("omega", format!("{omega} is outside (0, 2pi]")));
    }
    let min_abs = boundary_minimum(|z| stokes_determinant(z, omega), region);
    if !(min_abs >= BOUNDARY_CLEARANCE) {
        return Err(Error::RegionBoundaryHitsRoot { min_abs });
    }
    let (total, _) = winding_number(
        |z| stokes_determinant(z, omega),
        |z| stokes_determinant_derivative(z, omega),
        region,
    )?;

    let mut roots = Vec::new();
    for branch in [Branch::Plus, Branch::Minus] {
        let (count, _) = winding_number(
            |z| branch.value(z, omega),
            |z| branch.derivative(z, omega),
            region,
        )?;
        let mut found = Vec::new();
        localize(branch, omega, *region, count, 0, &mut found)?;
        roots.extend(found.into_iter().map(|lambda| ExponentRoot {
            lambda,
            omega,
            branch,
            residual: stokes_determinant(lambda, omega).norm(),
        }));
    }
    if roots.len() as i64 != total {
        return Err(Error::NonConvergence(format!(
            "branch root counts sum to {} but the determinant winds {total} times",
            roots.len()
        )));
    }
    roots.sort_by(|a, b| {
        a.lambda
            .re
            .total_cmp(&b.lambda.re)
            .then(a.lambda.im.total_cmp(&b.lambda.im))
            .then(a.branch.cmp(&b.branch))
    });
    Ok(roots)
}

/// ξ = min Re λ over roots with Re λ > 1e−12.
pub fn smallest_positive_exponent(roots: &[ExponentRoot]) -> Result<f64> {
    roots
        .iter()
        .map(|r| r.lambda.re)
        .filter(|&re| re > 1e-12)
        .min_by(f64::total_cmp)
        .ok_or(Error::NoPositiveRoot)
}
