//! Radial cut-off functions and the right-hand sides they manufacture.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::laplace::LaplaceField;
use crate::stokes::StokesField;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    /// Quintic smoothstep, C² at both ends.
    C2Quintic,
    /// `exp(−1/t)`-based smoothed step, C^∞.
    CInfExp,
}

impl fmt::Display for Smoothness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Smoothness::C2Quintic => "quintic",
            Smoothness::CInfExp => "exp",
        })
    }
}

impl FromStr for Smoothness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quintic" => Ok(Smoothness::C2Quintic),
            "exp" => Ok(Smoothness::CInfExp),
            _ => Err(Error::validation("profile", format!("expected quintic or exp, got `{s}`"))),
        }
    }
}

/// η(r) = 1 for r ≤ r₀, 0 for r ≥ r₁, monotone in between.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffProfile {
    r0: f64,
    r1: f64,
    smoothness: Smoothness,
}

/// η and its first two radial derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaValues {
    pub eta: f64,
    pub d1: f64,
    pub d2: f64,
}

impl EtaValues {
    const ONE: EtaValues = EtaValues {
        eta: 1.0,
        d1: 0.0,
        d2: 0.0,
    };
    const ZERO: EtaValues = EtaValues {
        eta: 0.0,
        d1: 0.0,
        d2: 0.0,
    };
}

/// `(f, f′, f″)` of `f(t) = exp(−1/t)` for t > 0, zero otherwise.
fn exp_ramp(t: f64) -> (f64, f64, f64) {
    // exp(−1/t) underflows below t ≈ 1/745
    if t <= 1.0 / 700.0 {
        return (0.0, 0.0, 0.0);
    }
    let f = (-1.0 / t).exp();
    let t2 = t * t;
    (f, f / t2, f * (1.0 - 2.0 * t) / (t2 * t2))
}

impl CutoffProfile {
    pub fn new(r0: f64, r1: f64, smoothness: Smoothness) -> Result<Self> {
        if !(r0 > 0.0 && r0 < r1 && r1.is_finite()) {
            return Err(Error::validation(
                "cutoff",
                format!("need 0 < r0 < r1, got r0 = {r0}, r1 = {r1}"),
            ));
        }
        Ok(CutoffProfile { r0, r1, smoothness })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn smoothness(&self) -> Smoothness {
        self.smoothness
    }

    /// True strictly inside the transition annulus.
    pub fn in_transition(&self, r: f64) -> bool {
        r > self.r0 && r < self.r1
    }

    pub fn eval(&self, r: f64) -> EtaValues {
        if r <= self.r0 {
            return EtaValues::ONE;
        }
        if r >= self.r1 {
            return EtaValues::ZERO;
        }
        let l = self.r1 - self.r0;
        let t = (r - self.r0) / l;
        let (s, s1, s2) = match self.smoothness {
            Smoothness::C2Quintic => {
                let t2 = t * t;
                (
                    t2 * t * (10.0 - 15.0 * t + 6.0 * t2),
                    30.0 * t2 * (1.0 - t) * (1.0 - t),
                    60.0 * t * (1.0 - t) * (1.0 - 2.0 * t),
                )
            }
            Smoothness::CInfExp => {
                let (a, a1, a2) = exp_ramp(t);
                let (b, b1, b2) = exp_ramp(1.0 - t);
                // d/dt f(1−t) = −f′(1−t)
                let (b1, b2) = (-b1, b2);
                let sum = a + b;
                let num = a1 * b - a * b1;
                let num1 = a2 * b - a * b2;
                (
                    a / sum,
                    num / (sum * sum),
                    (num1 * sum - 2.0 * num * (a1 + b1)) / (sum * sum * sum),
                )
            }
        };
        EtaValues {
            eta: 1.0 - s,
            d1: -s1 / l,
            d2: -s2 / (l * l),
        }
    }

    pub fn eta(&self, r: f64) -> f64 {
        self.eval(r).eta
    }

    pub fn eta_d1(&self, r: f64) -> f64 {
        self.eval(r).d1
    }

    pub fn eta_d2(&self, r: f64) -> f64 {
        self.eval(r).d2
    }
}

/// `f = −Δ(ηu)` for a harmonic corner field u.
///
/// With Δu = 0 and ∇η = η′e_r this is `−(η″ + η′/r)u − 2η′∂_r u`; it is
/// exactly zero outside the open annulus r₀ < r < r₁.
pub fn laplace_rhs(field: &LaplaceField, profile: &CutoffProfile, p: Point2) -> Result<f64> {
    let (r, theta) = field.frame.to_polar(p);
    if !profile.in_transition(r) {
        return Ok(0.0);
    }
    let e = profile.eval(r);
    let u = field.eval_polar(r, theta)?;
    let [ur, _] = field.gradient_polar(r, theta)?;
    Ok(-(e.d2 + e.d1 / r) * u - 2.0 * e.d1 * ur)
}

/// Momentum and mass data of the cut-off Stokes field `(ηu, ηp)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesRhs {
    /// `−Δ(ηu) + ∇(ηp)`
    pub f: [f64; 2],
    /// `∇·(ηu) = η′u_r`, nonzero in the transition annulus.
    pub g: f64,
}

/// Right-hand side of the Stokes system solved by `(ηu, ηp)`.
///
/// Using −Δu + ∇p = 0 and ∇·u = 0:
/// `f = −2η′∂_r u − (η″ + η′/r)u + pη′e_r`, `g = η′u_r`.
pub fn stokes_rhs(field: &StokesField, profile: &CutoffProfile, p: Point2) -> Result<StokesRhs> {
    let (r, theta) = field.frame.to_polar(p);
    if r == 0.0 {
        return Err(Error::PoleAtVertex);
    }
    if !profile.in_transition(r) {
        return Ok(StokesRhs {
            f: [0.0, 0.0],
            g: 0.0,
        });
    }
    let e = profile.eval(r);
    let u = field.velocity_cartesian_complex(p)?;
    let pr = field.pressure_complex(p)?;
    let [ur, _] = field.velocity_polar_complex(r, theta)?;
    // ∂_r u = (λ/r) u for u = r^λ U(θ)
    let dr = field.lambda / r;
    let er = field.frame.polar_to_cartesian(theta, 1.0, 0.0);
    let lap_eta = e.d2 + e.d1 / r;
    let comp = |k: usize| {
        (-2.0 * e.d1 * dr * u[k] - lap_eta * u[k] + pr * e.d1 * er[k]).re
    };
    Ok(StokesRhs {
        f: [comp(0), comp(1)],
        g: (e.d1 * ur).re,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laplace::five_point_laplacian;

    fn profiles() -> [CutoffProfile; 2] {
        [
            CutoffProfile::new(0.25, 0.75, Smoothness::C2Quintic).unwrap(),
            CutoffProfile::new(0.25, 0.75, Smoothness::CInfExp).unwrap(),
        ]
    }

    #[test]
    fn plateau_and_midpoint() {
        for p in profiles() {
            assert_eq!(p.eval(0.1), EtaValues::ONE);
            assert_eq!(p.eval(0.9), EtaValues::ZERO);
            assert!((p.eta(0.5) - 0.5).abs() < 1e-15, "{p:?}");
        }
    }

    #[test]
    fn rejects_bad_radii() {
        assert!(CutoffProfile::new(0.5, 0.5, Smoothness::C2Quintic).is_err());
        assert!(CutoffProfile::new(0.0, 0.5, Smoothness::C2Quintic).is_err());
        assert!(CutoffProfile::new(0.7, 0.5, Smoothness::CInfExp).is_err());
    }

    #[test]
    fn derivatives_match_central_differences() {
        let h = 1e-6;
        for p in profiles() {
            for k in 1..100 {
                let r = 0.25 + 0.5 * k as f64 / 100.0;
                let e = p.eval(r);
                let d1 = (p.eta(r + h) - p.eta(r - h)) / (2.0 * h);
                let d2 = (p.eta_d1(r + h) - p.eta_d1(r - h)) / (2.0 * h);
                assert!((d1 - e.d1).abs() < 1e-8, "{p:?} r={r}");
                assert!((d2 - e.d2).abs() < 1e-6 * (1.0 + e.d2.abs()), "{p:?} r={r}");
            }
        }
    }

    #[test]
    fn monotone_in_transition() {
        for p in profiles() {
            let mut last = 1.0;
            for k in 0..=1000 {
                let v = p.eta(0.25 + 0.5 * k as f64 / 1000.0);
                assert!(v <= last + 1e-15);
                last = v;
            }
        }
    }

    #[test]
    fn quintic_second_derivative_continuous_at_ends() {
        let p = profiles()[0];
        let l = 1e-9;
        assert!(p.eta_d2(0.25 + l).abs() < 1e-6);
        assert!(p.eta_d2(0.75 - l).abs() < 1e-6);
        assert!(p.eta_d1(0.25 + l).abs() < 1e-10);
    }

    #[test]
    fn laplace_rhs_matches_fd() {
        let u = LaplaceField::new(2.0 / 3.0, 0.0, 1.0);
        for prof in profiles() {
            assert_eq!(laplace_rhs(&u, &prof, [0.1, 0.0]).unwrap(), 0.0);
            assert_eq!(laplace_rhs(&u, &prof, [0.0, 1.6]).unwrap(), 0.0);
            let p = u.frame.from_polar(0.4, 2.0);
            let f = laplace_rhs(&u, &prof, p).unwrap();
            let fd = -five_point_laplacian(
                |q| prof.eta(u.frame.to_polar(q).0) * u.eval(q).unwrap(),
                p,
                2e-4,
            );
            assert!((f - fd).abs() < 1e-5 * f.abs().max(1.0), "{f} vs {fd}");
        }
    }

    #[test]
    fn stokes_rhs_support_and_divergence() {
        let field = StokesField::new(0.6, [0.3, -0.2, 1.0, 0.5]);
        let prof = profiles()[0];
        let inside = field.frame.from_polar(0.1, 1.0);
        let outside = field.frame.from_polar(0.9, 1.0);
        for q in [inside, outside] {
            let s = stokes_rhs(&field, &prof, q).unwrap();
            assert_eq!((s.f, s.g), ([0.0, 0.0], 0.0));
        }
        let p = field.frame.from_polar(0.5, 2.5);
        let s = stokes_rhs(&field, &prof, p).unwrap();
        let h = 1e-5;
        let eu = |q: Point2| {
            let e = prof.eta(field.frame.to_polar(q).0);
            let u = field.velocity_cartesian(q).unwrap();
            [e * u[0], e * u[1]]
        };
        let div = (eu([p[0] + h, p[1]])[0] - eu([p[0] - h, p[1]])[0]
            + eu([p[0], p[1] + h])[1]
            - eu([p[0], p[1] - h])[1])
            / (2.0 * h);
        assert!((div - s.g).abs() < 1e-6, "{div} vs {}", s.g);
        assert!(stokes_rhs(&field, &prof, [0.0, 0.0]).is_err());
    }
}
