//! Harmonic corner solutions `u = r^λ Φ(θ)` of the Laplace equation.

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::exponents::{laplace_exponent, BcKind};
use crate::geometry::{CornerFrame, Point2};
use crate::quadrature::GaussLegendre;

/// `r^λ(c₁ cos λθ + c₂ sin λθ)` for λ ≠ 0 and `c₁ + c₂θ` for λ = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceField {
    pub lambda: f64,
    pub c1: f64,
    pub c2: f64,
    pub frame: CornerFrame,
}

/// Polar and Cartesian gradient of a field at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gradient {
    /// `(∂ᵣu, r⁻¹∂θu)`
    pub polar: [f64; 2],
    /// Global Cartesian components.
    pub cartesian: [f64; 2],
}

/// One of the two edges meeting at the corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    Theta0,
    ThetaOmega,
}

/// How a corner solution relates to the weak / very weak formulations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionClass {
    Weak,
    VeryWeak,
    LimitCase,
    NotVeryWeak,
}

impl LaplaceField {
    pub fn new(lambda: f64, c1: f64, c2: f64) -> Self {
        LaplaceField {
            lambda,
            c1,
            c2,
            frame: CornerFrame::default(),
        }
    }

    pub fn with_frame(mut self, frame: CornerFrame) -> Self {
        self.frame = frame;
        self
    }

    /// Field satisfying one of the homogeneous boundary-condition presets on
    /// the edges θ = 0 and θ = ω. The free constant is `amplitude`.
    pub fn preset(omega: Angle, bc: BcKind, k: u32, amplitude: f64) -> Result<Self> {
        let lambda = laplace_exponent(omega, bc, k)?.value();
        let (c1, c2) = match bc {
            BcKind::NeumannNeumann => (amplitude, 0.0),
            BcKind::DirichletDirichlet | BcKind::DirichletNeumann => (0.0, amplitude),
        };
        Ok(LaplaceField::new(lambda, c1, c2))
    }

    /// Φ(θ)
    pub fn phi(&self, theta: f64) -> f64 {
        if self.lambda == 0.0 {
            self.c1 + self.c2 * theta
        } else {
            let a = self.lambda * theta;
            self.c1 * a.cos() + self.c2 * a.sin()
        }
    }

    /// Φ′(θ)
    pub fn dphi(&self, theta: f64) -> f64 {
        if self.lambda == 0.0 {
            self.c2
        } else {
            let a = self.lambda * theta;
            self.lambda * (-self.c1 * a.sin() + self.c2 * a.cos())
        }
    }

    pub fn eval_polar(&self, r: f64, theta: f64) -> Result<f64> {
        if r == 0.0 {
            return match self.lambda {
                l if l > 0.0 => Ok(0.0),
                l if l == 0.0 && self.c2 == 0.0 => Ok(self.c1),
                _ => Err(Error::PoleAtVertex),
            };
        }
        if self.lambda == 0.0 {
            Ok(self.phi(theta))
        } else {
            Ok(r.powf(self.lambda) * self.phi(theta))
        }
    }

    pub fn eval(&self, p: Point2) -> Result<f64> {
        let (r, theta) = self.frame.to_polar(p);
        self.eval_polar(r, theta)
    }

    /// `(∂ᵣu, r⁻¹∂θu)` at polar coordinates `(r, θ)`.
    pub fn gradient_polar(&self, r: f64, theta: f64) -> Result<[f64; 2]> {
        if r == 0.0 {
            return Err(Error::PoleAtVertex);
        }
        let s = r.powf(self.lambda - 1.0);
        Ok([self.lambda * s * self.phi(theta), s * self.dphi(theta)])
    }

    pub fn gradient(&self, p: Point2) -> Result<Gradient> {
        let (r, theta) = self.frame.to_polar(p);
        let polar = self.gradient_polar(r, theta)?;
        Ok(Gradient {
            polar,
            cartesian: self.frame.polar_to_cartesian(theta, polar[0], polar[1]),
        })
    }

    /// Outward normal derivative on an edge of the sector 0 < θ < ω.
    pub fn normal_derivative(&self, edge: Edge, omega: f64, r: f64) -> Result<f64> {
        match edge {
            Edge::Theta0 => Ok(-self.gradient_polar(r, 0.0)?[1]),
            Edge::ThetaOmega => Ok(self.gradient_polar(r, omega)?[1]),
        }
    }

    /// Supremum (not attained) of the Sobolev orders s with u ∈ Hˢ.
    pub fn regularity_sup(&self) -> f64 {
        1.0 + self.lambda
    }
}

/// Weak for λ > 0, very weak for −min(1, ξ) < λ ≤ 0, limit case for
/// λ = −ξ with ξ < 1, and not a very weak solution otherwise.
pub fn classify(lambda: f64, xi: f64) -> SolutionClass {
    if lambda > 0.0 {
        SolutionClass::Weak
    } else if xi < 1.0 && (lambda + xi).abs() <= 1e-12 {
        SolutionClass::LimitCase
    } else if lambda > -xi.min(1.0) {
        SolutionClass::VeryWeak
    } else {
        SolutionClass::NotVeryWeak
    }
}

/// `∫∫ |∇u|² dA` over the sector part `r_inner < r < r_outer`, `0 < θ < ω`.
///
/// The radial direction is split into dyadic panels so that power-law
/// integrands are resolved near the corner.
pub fn sector_gradient_energy(field: &LaplaceField, omega: f64, r_inner: f64, r_outer: f64) -> f64 {
    assert!(0.0 < r_inner && r_inner < r_outer);
    let g = GaussLegendre::new(24);
    let angular = |r: f64| {
        g.integrate(0.0, omega, |t| {
            let [a, b] = field.gradient_polar(r, t).expect("r > 0");
            a * a + b * b
        })
    };
    let mut total = 0.0;
    let mut hi = r_outer;
    while hi > r_inner {
        let lo = (0.5 * hi).max(r_inner);
        total += g.integrate(lo, hi, |r| angular(r) * r);
        hi = lo;
    }
    total
}

/// The limit-case field `u* = r^{−ξ} sin ξθ` with ξ = π/ω.
///
/// In the `sin λθ` parametrization with λ = −ξ this is c₂ = −1.
pub fn limit_case_field(omega: Angle) -> LaplaceField {
    LaplaceField::new(-omega.xi(), 0.0, -1.0)
}

/// 5-point finite-difference Laplacian of `f` at `p` with step `h`.
pub fn five_point_laplacian<F: Fn(Point2) -> f64>(f: F, p: Point2, h: f64) -> f64 {
    let c = f(p);
    (f([p[0] + h, p[1]]) + f([p[0] - h, p[1]]) + f([p[0], p[1] + h]) + f([p[0], p[1] - h])
        - 4.0 * c)
        / (h * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const L_SHAPE: f64 = 1.5 * PI;

    fn lshape() -> Angle {
        Angle::pi_fraction(3, 2).unwrap()
    }

    #[test]
    fn eval_examples() {
        let u = LaplaceField::new(1.0, 1.0, 0.0);
        assert!((u.eval_polar(2.0, PI / 3.0).unwrap() - 1.0).abs() < 1e-15);
        let v = LaplaceField::new(-2.0 / 3.0, 0.0, 1.0);
        assert_eq!(v.eval_polar(8.0, 0.0).unwrap(), 0.0);
        let w = LaplaceField::new(0.0, 1.0, 2.0);
        assert_eq!(w.eval_polar(0.3, 1.0).unwrap(), 3.0);
        assert_eq!(w.eval_polar(7.0, 1.0).unwrap(), 3.0);
    }

    #[test]
    fn vertex_behaviour() {
        assert_eq!(LaplaceField::new(0.5, 1.0, 1.0).eval([0.0, 0.0]).unwrap(), 0.0);
        assert!(matches!(
            LaplaceField::new(-0.5, 1.0, 1.0).eval([0.0, 0.0]),
            Err(Error::PoleAtVertex)
        ));
        assert!(matches!(
            LaplaceField::new(0.0, 1.0, 1.0).eval([0.0, 0.0]),
            Err(Error::PoleAtVertex)
        ));
        assert!(LaplaceField::new(2.0, 1.0, 1.0).gradient([0.0, 0.0]).is_err());
    }

    #[test]
    fn gradient_examples() {
        let u = LaplaceField::new(1.0, 1.0, 0.0);
        for p in [[0.3, 0.2], [-1.0, 0.5], [-0.2, -0.7]] {
            let g = u.gradient(p).unwrap().cartesian;
            assert!((g[0] - 1.0).abs() < 1e-14 && g[1].abs() < 1e-14);
        }
        let v = LaplaceField::new(2.0 / 3.0, 0.0, 1.0);
        let g = v.gradient_polar(1.0, 0.0).unwrap();
        assert_eq!(g[0], 0.0);
        assert!((g[1] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let u = LaplaceField::new(-1.0 / 3.0, 0.8, -0.4);
        let p = u.frame.from_polar(0.7, 1.1);
        let h = 1e-6;
        let fx = (u.eval([p[0] + h, p[1]]).unwrap() - u.eval([p[0] - h, p[1]]).unwrap()) / (2.0 * h);
        let fy = (u.eval([p[0], p[1] + h]).unwrap() - u.eval([p[0], p[1] - h]).unwrap()) / (2.0 * h);
        let g = u.gradient(p).unwrap().cartesian;
        let scale = g[0].hypot(g[1]);
        assert!((fx - g[0]).abs() < 1e-7 * scale);
        assert!((fy - g[1]).abs() < 1e-7 * scale);
    }

    #[test]
    fn normal_derivative_examples() {
        let nn = LaplaceField::preset(lshape(), BcKind::NeumannNeumann, 1, 1.0).unwrap();
        for r in [0.1, 0.5, 2.0] {
            assert!(nn.normal_derivative(Edge::Theta0, L_SHAPE, r).unwrap().abs() < 1e-15);
            assert!(nn.normal_derivative(Edge::ThetaOmega, L_SHAPE, r).unwrap().abs() < 1e-14);
        }
        let y = LaplaceField::new(1.0, 0.0, 1.0);
        assert_eq!(y.normal_derivative(Edge::Theta0, L_SHAPE, 0.4).unwrap(), -1.0);

        let dn = LaplaceField::preset(lshape(), BcKind::DirichletNeumann, 1, 2.0).unwrap();
        let r = 0.3;
        assert!(dn.normal_derivative(Edge::ThetaOmega, L_SHAPE, r).unwrap().abs() < 1e-14);
        let want = -r.powf(dn.lambda - 1.0) * dn.lambda * 2.0;
        assert!((dn.normal_derivative(Edge::Theta0, L_SHAPE, r).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn preset_examples() {
        let u = LaplaceField::preset(lshape(), BcKind::DirichletDirichlet, 1, 1.0).unwrap();
        assert_eq!((u.lambda, u.c1, u.c2), (2.0 / 3.0, 0.0, 1.0));
        let c = LaplaceField::preset(Angle::pi_fraction(1, 1).unwrap(), BcKind::NeumannNeumann, 0, 5.0)
            .unwrap();
        for p in [[0.1, 0.2], [-3.0, 0.1]] {
            assert_eq!(c.eval(p).unwrap(), 5.0);
        }
        assert!(LaplaceField::preset(lshape(), BcKind::DirichletNeumann, 0, 1.0).is_err());
    }

    #[test]
    fn regularity() {
        assert!((LaplaceField::new(2.0 / 3.0, 0.0, 1.0).regularity_sup() - 5.0 / 3.0).abs() < 1e-15);
        assert_eq!(LaplaceField::new(0.0, 1.0, 0.0).regularity_sup(), 1.0);
        assert!((limit_case_field(lshape()).regularity_sup() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn classification() {
        let xi = 2.0 / 3.0;
        assert_eq!(classify(2.0 / 3.0, xi), SolutionClass::Weak);
        assert_eq!(classify(-0.3, xi), SolutionClass::VeryWeak);
        assert_eq!(classify(0.0, xi), SolutionClass::VeryWeak);
        assert_eq!(classify(-2.0 / 3.0, xi), SolutionClass::LimitCase);
        assert_eq!(classify(-0.8, xi), SolutionClass::NotVeryWeak);
        // convex corner: ξ > 1, no limit case inside L²
        assert_eq!(classify(-0.9, 2.0), SolutionClass::VeryWeak);
        assert_eq!(classify(-1.0, 2.0), SolutionClass::NotVeryWeak);
    }

    #[test]
    fn dyadic_energy_increments_scale_with_exponent() {
        // ΔI(ε/2)/ΔI(ε) = 2^{−2λ} where ΔI(ε) = I(ε/2) − I(ε)
        for lambda in [-2.0 / 3.0, -1.0 / 3.0, 1.0 / 3.0] {
            let u = LaplaceField::new(lambda, 0.3, 1.0);
            let eps = 1e-2;
            let i = |e: f64| sector_gradient_energy(&u, L_SHAPE, e, 1.0);
            let (i0, i1, i2) = (i(eps), i(eps / 2.0), i(eps / 4.0));
            let ratio = (i2 - i1) / (i1 - i0);
            let want = 2f64.powf(-2.0 * lambda);
            assert!((ratio / want - 1.0).abs() < 0.05, "λ={lambda}: {ratio} vs {want}");
        }
    }
}
