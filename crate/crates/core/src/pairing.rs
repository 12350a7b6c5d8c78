//! Green-formula defects for weak and very weak corner solutions.
//!
//! For a harmonic u and a test function v vanishing on both edges,
//! `(u, Δv) − ⟨u, ∂ₙv⟩_Γ` equals the limit of an arc integral around the
//! vertex. It is zero whenever λ + ξ > 0 and jumps to −π (times c₂) at the
//! limit case λ = −ξ.

use crate::cutoff::{laplace_rhs, CutoffProfile, Smoothness};
use crate::error::{Error, Result};
use crate::geometry::{CornerFrame, Point2};
use crate::laplace::LaplaceField;
use crate::quadrature::{adaptive, GaussLegendre};
use crate::stokes::StokesField;

/// `v = η(r) r^ξ sin ξθ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestFunctionV {
    pub xi: f64,
    pub profile: CutoffProfile,
    pub frame: CornerFrame,
}

impl TestFunctionV {
    pub fn new(xi: f64, profile: CutoffProfile) -> Result<Self> {
        if !(xi > 0.0 && xi.is_finite()) {
            return Err(Error::validation("xi", format!("must be positive, got {xi}")));
        }
        Ok(TestFunctionV {
            xi,
            profile,
            frame: CornerFrame::default(),
        })
    }

    pub fn with_frame(mut self, frame: CornerFrame) -> Self {
        self.frame = frame;
        self
    }

    fn harmonic_part(&self) -> LaplaceField {
        LaplaceField::new(self.xi, 0.0, 1.0).with_frame(self.frame)
    }

    pub fn eval_polar(&self, r: f64, theta: f64) -> f64 {
        self.profile.eta(r) * r.powf(self.xi) * (self.xi * theta).sin()
    }

    /// Δv, supported in the transition annulus.
    pub fn laplacian(&self, p: Point2) -> f64 {
        // v = η·w with w harmonic, so Δv = −laplace_rhs(w)
        -laplace_rhs(&self.harmonic_part(), &self.profile, p).unwrap_or(0.0)
    }

    /// `r⁻¹∂θv` at `(r, θ)`.
    fn angular_derivative(&self, r: f64, theta: f64) -> f64 {
        self.profile.eta(r) * self.xi * r.powf(self.xi - 1.0) * (self.xi * theta).cos()
    }

    fn check_edges(&self, omega: f64) -> Result<()> {
        if (self.xi * omega).sin().abs() > 1e-12 {
            return Err(Error::validation(
                "xi",
                format!("v must vanish on θ = ω, but sin(ξω) ≠ 0 for ξ = {}, ω = {omega}", self.xi),
            ));
        }
        Ok(())
    }
}

/// Quadrature controls shared by the pairing integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSpec {
    /// Gauss–Legendre points per panel.
    pub gauss_points: usize,
    /// Maximum number of dyadic intervals toward the vertex.
    pub max_levels: u32,
    /// Stop refining once a dyadic interval contributes less than this
    /// fraction of the running sum.
    pub tail_rel: f64,
    /// Absolute tolerance for adaptive rules.
    pub tol: f64,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec {
            gauss_points: 24,
            max_levels: 40,
            tail_rel: 1e-14,
            tol: 1e-12,
        }
    }
}

/// One row of the arc-integral table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcSample {
    pub eps: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcDefect {
    /// Extrapolated ε → 0 limit.
    pub limit: f64,
    pub samples: Vec<ArcSample>,
}

fn check_l2(lambda: f64) -> Result<()> {
    if lambda <= -1.0 {
        return Err(Error::NotInL2 { lambda });
    }
    Ok(())
}

/// `∫₀^ω (u ∂ₙv − v ∂ₙu) ε dθ` on the arc r = ε, with ∂ₙ = −∂ᵣ.
pub fn arc_integral(u: &LaplaceField, v: &TestFunctionV, omega: f64, eps: f64) -> Result<f64> {
    let g = GaussLegendre::new(32);
    let xi = v.xi;
    let vr = eps.powf(xi);
    let dvr = xi * eps.powf(xi - 1.0);
    let mut err = None;
    let mut total = 0.0;
    let panels = 8;
    for k in 0..panels {
        let a = omega * k as f64 / panels as f64;
        let b = omega * (k + 1) as f64 / panels as f64;
        total += g.integrate(a, b, |t| {
            let s = (xi * t).sin();
            match (u.eval_polar(eps, t), u.gradient_polar(eps, t)) {
                (Ok(uu), Ok([ur, _])) => -(uu * dvr * s - vr * s * ur) * eps,
                (Err(e), _) | (_, Err(e)) => {
                    err.get_or_insert(e);
                    0.0
                }
            }
        });
    }
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Aitken Δ² limit of the last three terms; a constant tail is returned as is.
fn aitken(x: &[f64]) -> Result<f64> {
    let n = x.len();
    let (a, b, c) = (x[n - 3], x[n - 2], x[n - 1]);
    let d1 = b - a;
    let d2 = c - b;
    let scale = a.abs().max(b.abs()).max(c.abs());
    if (d2 - d1).abs() <= 1e-14 * scale.max(f64::MIN_POSITIVE) {
        return Ok(c);
    }
    if d1 != 0.0 && (d2 / d1).abs() >= 1.0 {
        return Err(Error::NonConvergent(format!(
            "arc integrals grow as ε → 0 (successive differences {d1:e}, {d2:e})"
        )));
    }
    Ok(c - d2 * d2 / (d2 - d1))
}

/// Arc integrals on a decreasing sequence of radii and their extrapolated
/// limit.
pub fn arc_limit_defect(
    u: &LaplaceField,
    v: &TestFunctionV,
    omega: f64,
    eps_sequence: &[f64],
) -> Result<ArcDefect> {
    check_l2(u.lambda)?;
    if eps_sequence.len() < 3 {
        return Err(Error::validation("eps", "need at least three radii"));
    }
    let r0 = v.profile.r0();
    let mut samples = Vec::with_capacity(eps_sequence.len());
    let mut prev = f64::INFINITY;
    for &eps in eps_sequence {
        if !(eps > 0.0 && eps < prev) {
            return Err(Error::validation("eps", "radii must be positive and strictly decreasing"));
        }
        if eps >= r0 {
            return Err(Error::EpsOutsidePlateau { eps, r0 });
        }
        prev = eps;
        samples.push(ArcSample {
            eps,
            value: arc_integral(u, v, omega, eps)?,
        });
    }
    let values: Vec<f64> = samples.iter().map(|s| s.value).collect();
    Ok(ArcDefect {
        limit: aitken(&values)?,
        samples,
    })
}

/// `2^{−k}·start` for k = 0..n.
pub fn dyadic_radii(start: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| start * 0.5f64.powi(k as i32)).collect()
}

/// `∫₀^R g(r) dr` for a power-law-like g: dyadic intervals toward 0, then a
/// geometric tail estimated from the last two contributions.
fn dyadic_toward_vertex<F: FnMut(f64) -> f64>(mut g: F, r_max: f64, quad: &QuadSpec) -> Result<f64> {
    let gl = GaussLegendre::new(quad.gauss_points);
    let mut total = 0.0;
    let mut last = None;
    let mut hi = r_max;
    for _ in 0..quad.max_levels {
        let lo = 0.5 * hi;
        let c = gl.integrate(lo, hi, &mut g);
        total += c;
        if let Some(prev) = last {
            let q: f64 = c / prev;
            if c.abs() <= quad.tail_rel * total.abs() {
                return Ok(total);
            }
            if q.abs() < 1.0 && q > 0.0 {
                // exact for a pure power on the plateau
                let tail = c * q / (1.0 - q);
                if tail.abs() <= quad.tail_rel * total.abs() || lo < r_max * 1e-9 {
                    return Ok(total + tail);
                }
            }
        }
        last = Some(c);
        hi = lo;
    }
    let prev = last.unwrap_or(0.0);
    Err(Error::NonConvergent(format!(
        "edge integral: {} dyadic levels, last contribution {prev:e}",
        quad.max_levels
    )))
}

/// `(u, Δv) − ⟨u, ∂ₙv⟩_Γ` evaluated as area and edge integrals.
///
/// Δv lives on the annulus r₀ < r < r₁ only. The boundary term is nonzero
/// when Φ does not vanish on an edge; it is integrated with dyadic refinement
/// toward the vertex and requires λ + ξ > 0 there.
pub fn area_pairing(u: &LaplaceField, v: &TestFunctionV, omega: f64, quad: &QuadSpec) -> Result<f64> {
    check_l2(u.lambda)?;
    v.check_edges(omega)?;
    let gl = GaussLegendre::new(quad.gauss_points);
    let (r0, r1) = (v.profile.r0(), v.profile.r1());
    let panels = 8;
    let mut area = 0.0;
    for i in 0..panels {
        let ra = r0 + (r1 - r0) * i as f64 / panels as f64;
        let rb = r0 + (r1 - r0) * (i + 1) as f64 / panels as f64;
        area += gl.integrate(ra, rb, |r| {
            let mut s = 0.0;
            for j in 0..panels {
                let ta = omega * j as f64 / panels as f64;
                let tb = omega * (j + 1) as f64 / panels as f64;
                s += gl.integrate(ta, tb, |t| {
                    let p = v.frame.from_polar(r, t);
                    u.eval_polar(r, t).unwrap_or(0.0) * v.laplacian(p)
                });
            }
            s * r
        });
    }

    let scale = u.c1.abs() + u.c2.abs();
    let mut boundary = 0.0;
    for theta in [0.0, omega] {
        let phi = u.phi(theta);
        if phi.abs() <= 1e-12 * scale {
            continue;
        }
        if !edge_integrability(u.lambda, v.xi, phi, 0.0) {
            return Err(Error::NonConvergent(format!(
                "u ∂ₙv is not integrable on the edge θ = {theta} (λ + ξ = {})",
                u.lambda + v.xi
            )));
        }
        // outward normal is −e_θ on θ = 0 and +e_θ on θ = ω
        let sign = if theta == 0.0 { -1.0 } else { 1.0 };
        let g = |r: f64| sign * u.eval_polar(r, theta).unwrap_or(0.0) * v.angular_derivative(r, theta);
        // η is only C² at r₀, so the transition is integrated on its own
        let mut transition = 0.0;
        for i in 0..panels {
            let ra = r0 + (r1 - r0) * i as f64 / panels as f64;
            let rb = r0 + (r1 - r0) * (i + 1) as f64 / panels as f64;
            transition += gl.integrate(ra, rb, g);
        }
        boundary += transition + dyadic_toward_vertex(g, r0, quad)?;
    }
    Ok(area - boundary)
}

/// Whether `u ∂ₙv` is integrable on both edges, for `u = r^λ Φ(θ)` and
/// `v = η r^ξ sin ξθ`.
pub fn edge_integrability(lambda: f64, xi: f64, phi0: f64, phi_omega: f64) -> bool {
    lambda + xi > 0.0 || (phi0 == 0.0 && phi_omega == 0.0)
}

/// Bivariate polynomial `Σ c·xⁱyʲ`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly2 {
    terms: Vec<(u32, u32, f64)>,
}

impl Poly2 {
    pub fn new(terms: Vec<(u32, u32, f64)>) -> Self {
        Poly2 { terms }
    }

    pub fn constant(c: f64) -> Self {
        Poly2::new(vec![(0, 0, c)])
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(i, j, c)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    pub fn dx(&self) -> Poly2 {
        Poly2::new(
            self.terms
                .iter()
                .filter(|t| t.0 > 0)
                .map(|&(i, j, c)| (i - 1, j, c * i as f64))
                .collect(),
        )
    }

    pub fn dy(&self) -> Poly2 {
        Poly2::new(
            self.terms
                .iter()
                .filter(|t| t.1 > 0)
                .map(|&(i, j, c)| (i, j - 1, c * j as f64))
                .collect(),
        )
    }
}

/// Smooth test pair `(b·v, b·q)` with `b` a C^∞ bump on a disc.
///
/// The polynomials are in coordinates relative to the disc center; the bump
/// equals 1 on the inner half radius and vanishes beyond `radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactTestPair {
    pub velocity: [Poly2; 2],
    pub pressure: Poly2,
    pub center: Point2,
    pub radius: f64,
}

/// Values of the localized pair at one point.
struct PairSample {
    /// `−ΔV + ∇Q`
    momentum: [f64; 2],
    /// `∇·V`
    divergence: f64,
}

struct PairDerivatives {
    v: [Poly2; 2],
    vx: [Poly2; 2],
    vy: [Poly2; 2],
    vxx: [Poly2; 2],
    vyy: [Poly2; 2],
    qx: Poly2,
    qy: Poly2,
    q: Poly2,
}

impl CompactTestPair {
    fn bump(&self) -> CutoffProfile {
        CutoffProfile::new(0.5 * self.radius, self.radius, Smoothness::CInfExp)
            .expect("radius checked positive")
    }

    fn derivatives(&self) -> PairDerivatives {
        let v = self.velocity.clone();
        let vx = [v[0].dx(), v[1].dx()];
        let vy = [v[0].dy(), v[1].dy()];
        PairDerivatives {
            vxx: [vx[0].dx(), vx[1].dx()],
            vyy: [vy[0].dy(), vy[1].dy()],
            vx,
            vy,
            v,
            qx: self.pressure.dx(),
            qy: self.pressure.dy(),
            q: self.pressure.clone(),
        }
    }

    /// Polar point `(s, φ)` about the center.
    fn sample(&self, d: &PairDerivatives, bump: &CutoffProfile, s: f64, phi: f64) -> PairSample {
        let (c, sn) = (phi.cos(), phi.sin());
        let (x, y) = (s * c, s * sn);
        let e = bump.eval(s);
        // ∇b = b′ e_s, Δb = b″ + b′/s (b′ = 0 near s = 0)
        let (bx, by, lap_b) = if e.d1 == 0.0 {
            (0.0, 0.0, 0.0)
        } else {
            (e.d1 * c, e.d1 * sn, e.d2 + e.d1 / s)
        };
        let mut momentum = [0, 1].map(|k| {
            let vk = d.v[k].eval(x, y);
            let vkx = d.vx[k].eval(x, y);
            let vky = d.vy[k].eval(x, y);
            let lap_v = d.vxx[k].eval(x, y) + d.vyy[k].eval(x, y);
            -(vk * lap_b + 2.0 * (bx * vkx + by * vky) + e.eta * lap_v)
        });
        let q = d.q.eval(x, y);
        momentum[0] += bx * q + e.eta * d.qx.eval(x, y);
        momentum[1] += by * q + e.eta * d.qy.eval(x, y);
        let divergence = bx * d.v[0].eval(x, y)
            + by * d.v[1].eval(x, y)
            + e.eta * (d.vx[0].eval(x, y) + d.vy[1].eval(x, y));
        PairSample {
            momentum,
            divergence,
        }
    }

    /// Whether the closed disc stays off both edges of the sector 0 < θ < ω.
    fn inside_sector(&self, frame: &CornerFrame, omega: f64) -> bool {
        let (rc, tc) = frame.to_polar(self.center);
        if !(tc > 0.0 && tc < omega) {
            return false;
        }
        let rel = [
            self.center[0] - frame.vertex()[0],
            self.center[1] - frame.vertex()[1],
        ];
        [0.0, omega].iter().all(|&t| {
            let d = frame.polar_to_cartesian(t, 1.0, 0.0);
            let along = rel[0] * d[0] + rel[1] * d[1];
            let dist = if along <= 0.0 {
                rc
            } else {
                (rel[0] * d[1] - rel[1] * d[0]).abs()
            };
            dist > self.radius
        })
    }
}

/// `(u, −Δv + ∇q) − (∇·v, p)` for a compactly supported test pair.
///
/// Polar quadrature about the disc center: trapezoid in angle (doubled until
/// stable) and adaptive Gauss–Kronrod in radius.
pub fn stokes_very_weak_defect(
    field: &StokesField,
    pair: &CompactTestPair,
    omega: f64,
    quad: &QuadSpec,
) -> Result<f64> {
    check_l2(field.lambda.re)?;
    if !(pair.radius > 0.0) || !pair.inside_sector(&field.frame, omega) {
        return Err(Error::SupportTouchesBoundary);
    }
    let d = pair.derivatives();
    let bump = pair.bump();
    let radial = |phi: f64| -> Result<f64> {
        let (c, s) = (phi.cos(), phi.sin());
        let mut err = None;
        let v = adaptive(
            |rho| {
                let p = [pair.center[0] + rho * c, pair.center[1] + rho * s];
                let w = pair.sample(&d, &bump, rho, phi);
                match (field.velocity_cartesian(p), field.pressure(p)) {
                    (Ok(u), Ok(pr)) => {
                        (u[0] * w.momentum[0] + u[1] * w.momentum[1] - w.divergence * pr) * rho
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        err.get_or_insert(e);
                        0.0
                    }
                }
            },
            0.0,
            pair.radius,
            0.01 * quad.tol,
            0.0,
            4000,
        )?;
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    };
    let mut m = 32;
    let mut prev: Option<f64> = None;
    while m <= 8192 {
        let h = std::f64::consts::TAU / m as f64;
        let mut sum = 0.0;
        for j in 0..m {
            sum += radial(j as f64 * h)?;
        }
        let cur = sum * h;
        if let Some(p) = prev {
            if (cur - p).abs() <= quad.tol.max(1e-13 * cur.abs()) {
                return Ok(cur);
            }
        }
        prev = Some(cur);
        m *= 2;
    }
    Err(Error::NonConvergent(
        "angular trapezoid rule did not settle by 8192 points".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::{find_stokes_exponents, SearchRegion};
    use crate::stokes::dirichlet_coefficients;
    use std::f64::consts::PI;

    const OMEGA: f64 = 1.5 * PI;
    const XI: f64 = 2.0 / 3.0;

    fn v() -> TestFunctionV {
        let prof = CutoffProfile::new(0.25, 0.75, Smoothness::C2Quintic).unwrap();
        TestFunctionV::new(XI, prof).unwrap()
    }

    fn eps() -> Vec<f64> {
        dyadic_radii(0.2, 8)
    }

    #[test]
    fn limit_case_arc_is_minus_pi() {
        let u = LaplaceField::new(-XI, 0.0, -1.0);
        let d = arc_limit_defect(&u, &v(), OMEGA, &eps()).unwrap();
        assert!((d.limit + PI).abs() < 1e-10, "{}", d.limit);
        for s in &d.samples {
            assert!((s.value + PI).abs() < 1e-10);
        }
    }

    #[test]
    fn arc_defect_vanishes_above_threshold() {
        for lambda in [-0.3, XI] {
            let u = LaplaceField::new(lambda, 0.0, 1.0);
            let d = arc_limit_defect(&u, &v(), OMEGA, &eps()).unwrap();
            assert!(d.limit.abs() < 1e-8, "λ={lambda}: {}", d.limit);
        }
    }

    #[test]
    fn arc_scaling_exponent() {
        let lambda = -0.3;
        let u = LaplaceField::new(lambda, 0.0, 1.0);
        let d = arc_limit_defect(&u, &v(), OMEGA, &eps()).unwrap();
        for w in d.samples.windows(2) {
            let measured = (w[0].value / w[1].value).log2();
            assert!((measured - (lambda + XI)).abs() < 0.02 * (lambda + XI));
        }
    }

    #[test]
    fn arc_errors() {
        let u = LaplaceField::new(-1.0, 0.0, 1.0);
        assert!(matches!(
            arc_limit_defect(&u, &v(), OMEGA, &eps()),
            Err(Error::NotInL2 { .. })
        ));
        let u = LaplaceField::new(-0.3, 0.0, 1.0);
        assert!(matches!(
            arc_limit_defect(&u, &v(), OMEGA, &[0.3, 0.2, 0.1]),
            Err(Error::EpsOutsidePlateau { .. })
        ));
        let u = LaplaceField::new(-0.8, 0.0, 1.0);
        assert!(matches!(
            arc_limit_defect(&u, &v(), OMEGA, &eps()),
            Err(Error::NonConvergent(_))
        ));
    }

    #[test]
    fn area_pairing_values() {
        let q = QuadSpec::default();
        let star = LaplaceField::new(-XI, 0.0, -1.0);
        assert!((area_pairing(&star, &v(), OMEGA, &q).unwrap() + PI).abs() < 1e-10);
        let u = LaplaceField::new(-0.5, 0.0, 1.0);
        assert!(area_pairing(&u, &v(), OMEGA, &q).unwrap().abs() < 1e-10);
        // r cos θ
        let u = LaplaceField::new(1.0, 1.0, 0.0);
        assert!(area_pairing(&u, &v(), OMEGA, &q).unwrap().abs() < 1e-10);
    }

    #[test]
    fn area_pairing_with_edge_data() {
        let q = QuadSpec::default();
        for lambda in [-0.6, -0.4, -0.2, 0.0, 0.2] {
            let u = LaplaceField::new(lambda, 1.0, 1.0);
            let d = area_pairing(&u, &v(), OMEGA, &q).unwrap();
            assert!(d.abs() < 1e-10, "λ={lambda}: {d}");
        }
        let u = LaplaceField::new(-0.8, 1.0, 0.0);
        assert!(area_pairing(&u, &v(), OMEGA, &q).is_err());
    }

    #[test]
    fn edge_truth_table() {
        assert!(!edge_integrability(-0.8, XI, 1.0, 0.0));
        assert!(edge_integrability(-0.8, XI, 0.0, 0.0));
        assert!(edge_integrability(0.5, XI, 1.0, 1.0));
    }

    #[test]
    fn test_function_laplacian_matches_fd() {
        let v = v();
        let p = v.frame.from_polar(0.5, 1.0);
        let fd = crate::laplace::five_point_laplacian(
            |q| {
                let (r, t) = v.frame.to_polar(q);
                v.eval_polar(r, t)
            },
            p,
            1e-4,
        );
        assert!((fd - v.laplacian(p)).abs() < 1e-5);
    }

    fn pair(center: Point2, radius: f64) -> CompactTestPair {
        CompactTestPair {
            velocity: [
                Poly2::new(vec![(0, 0, 1.0), (1, 1, 2.0)]),
                Poly2::new(vec![(2, 0, -1.0), (0, 1, 0.5)]),
            ],
            pressure: Poly2::new(vec![(1, 0, 1.0), (0, 2, 3.0)]),
            center,
            radius,
        }
    }

    #[test]
    fn very_weak_stokes_identity() {
        let q = QuadSpec::default();
        let f1 = StokesField::basis(1, 1.0).unwrap();
        let d = stokes_very_weak_defect(&f1, &pair([0.3, 0.5], 0.2), OMEGA, &q).unwrap();
        assert!(d.abs() < 1e-8, "{d}");

        let roots =
            find_stokes_exponents(OMEGA, &SearchRegion::new(0.1, 0.9, -0.5, 0.5).unwrap()).unwrap();
        let dc = dirichlet_coefficients(OMEGA, &roots[0]).unwrap();
        let field = dc.field(CornerFrame::default());
        let c = field.frame.from_polar(0.45, 2.0);
        let d = stokes_very_weak_defect(&field, &pair(c, 0.15), OMEGA, &q).unwrap();
        assert!(d.abs() < 1e-6, "{d}");

        let weak = StokesField::new(-0.2, [0.5, 0.0, 1.0, -0.3]);
        let c = weak.frame.from_polar(0.5, 3.0);
        let d = stokes_very_weak_defect(&weak, &pair(c, 0.2), OMEGA, &q).unwrap();
        assert!(d.abs() < 1e-6, "{d}");
    }

    #[test]
    fn support_must_avoid_edges() {
        let f = StokesField::basis(1, 1.0).unwrap();
        let q = QuadSpec::default();
        for (c, r) in [([0.5, 0.1], 0.2), ([0.0, 0.0], 0.1), ([0.5, -0.5], 0.1)] {
            assert!(matches!(
                stokes_very_weak_defect(&f, &pair(c, r), OMEGA, &q),
                Err(Error::SupportTouchesBoundary)
            ));
        }
    }
}
