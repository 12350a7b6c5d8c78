//! Corner solutions `u = r^λ U(θ)`, `p = r^{λ−1} P(θ)` of the Stokes system.
//!
//! `U` and `P` are combinations of four basis pairs. For λ = 0 the third and
//! fourth pairs are replaced by their logarithm-free λ → 0 substitutes.
//! Coefficients and exponents are complex so that genuinely complex roots
//! of the Dirichlet determinant produce usable fields; real-valued output is
//! the real part of the complex solution, which is itself a solution.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exponents::ExponentRoot;
use crate::geometry::{CornerFrame, Point2};

type C = Complex64;

const ZERO: C = C::new(0.0, 0.0);
const ONE: C = C::new(1.0, 0.0);

fn check_index(index: usize) -> Result<()> {
    if (1..=4).contains(&index) {
        Ok(())
    } else {
        Err(Error::validation("index", format!("basis index {index} not in 1..=4")))
    }
}

/// `(U_r, U_θ, P)` of basis `index` ∈ 1..=4.
pub fn basis_polar_complex(index: usize, lambda: C, theta: f64) -> [C; 3] {
    if lambda == ZERO {
        let (s, c) = theta.sin_cos();
        let t2 = 2.0 * theta;
        let v = match index {
            1 => [c, -s, 0.0],
            2 => [s, c, 0.0],
            3 => [-c + t2 * s, -s + t2 * c, -4.0 * c],
            _ => [-s - t2 * c, c + t2 * s, -4.0 * s],
        };
        return v.map(|x| C::new(x, 0.0));
    }
    let ap = (ONE + lambda) * theta;
    let am = (ONE - lambda) * theta;
    match index {
        1 => [ap.cos(), -ap.sin(), ZERO],
        2 => [ap.sin(), ap.cos(), ZERO],
        3 => [
            (ONE - lambda) * am.cos(),
            -(ONE + lambda) * am.sin(),
            -4.0 * lambda * am.cos(),
        ],
        _ => [
            (ONE - lambda) * am.sin(),
            (ONE + lambda) * am.cos(),
            -4.0 * lambda * am.sin(),
        ],
    }
}

/// `(U_r′, U_θ′)`, derivatives of the basis velocity with respect to θ.
pub fn basis_polar_dtheta_complex(index: usize, lambda: C, theta: f64) -> [C; 2] {
    if lambda == ZERO {
        let (s, c) = theta.sin_cos();
        let t2 = 2.0 * theta;
        let v = match index {
            1 => [-s, -c],
            2 => [c, -s],
            3 => [3.0 * s + t2 * c, c - t2 * s],
            _ => [-3.0 * c + t2 * s, s + t2 * c],
        };
        return v.map(|x| C::new(x, 0.0));
    }
    let kp = ONE + lambda;
    let km = ONE - lambda;
    let ap = kp * theta;
    let am = km * theta;
    match index {
        1 => [-kp * ap.sin(), -kp * ap.cos()],
        2 => [kp * ap.cos(), -kp * ap.sin()],
        3 => [-km * km * am.sin(), -kp * km * am.cos()],
        _ => [km * km * am.cos(), -kp * km * am.sin()],
    }
}

/// Cartesian components of basis `index` in closed form (frame-local axes).
pub fn basis_cartesian_complex(index: usize, lambda: C, theta: f64) -> [C; 2] {
    if lambda == ZERO {
        let (s2, c2) = (2.0 * theta).sin_cos();
        let t2 = 2.0 * theta;
        let v = match index {
            1 => [1.0, 0.0],
            2 => [0.0, 1.0],
            3 => [-c2, t2 - s2],
            _ => [-t2 - s2, c2],
        };
        return v.map(|x| C::new(x, 0.0));
    }
    let a = lambda * theta;
    let b = (2.0 - lambda) * theta;
    match index {
        1 => [a.cos(), -a.sin()],
        2 => [a.sin(), a.cos()],
        3 => [a.cos() - lambda * b.cos(), a.sin() - lambda * b.sin()],
        _ => [-a.sin() - lambda * b.sin(), a.cos() + lambda * b.cos()],
    }
}

/// Real-λ basis values `(U_r, U_θ, P)`.
pub fn basis_polar(index: usize, lambda: f64, theta: f64) -> Result<(f64, f64, f64)> {
    check_index(index)?;
    let [ur, ut, p] = basis_polar_complex(index, C::new(lambda, 0.0), theta);
    Ok((ur.re, ut.re, p.re))
}

/// Real-λ Cartesian basis velocity in closed form.
pub fn basis_cartesian(index: usize, lambda: f64, theta: f64) -> Result<[f64; 2]> {
    check_index(index)?;
    let [a, b] = basis_cartesian_complex(index, C::new(lambda, 0.0), theta);
    Ok([a.re, b.re])
}

fn rotate(theta: f64, vr: C, vt: C) -> [C; 2] {
    let (s, c) = theta.sin_cos();
    [c * vr - s * vt, s * vr + c * vt]
}

/// `r^λ` for complex λ; zero at r = 0 when Re λ > 0.
fn rpow(r: f64, lambda: C) -> C {
    if r == 0.0 {
        ZERO
    } else if lambda.im == 0.0 {
        C::new(r.powf(lambda.re), 0.0)
    } else {
        (lambda * r.ln()).exp()
    }
}

/// A combination `Σ cᵢ (U⁽ⁱ⁾, P⁽ⁱ⁾)` with common exponent λ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesField {
    pub lambda: C,
    pub coeffs: [C; 4],
    pub frame: CornerFrame,
}

/// Result of the Dirichlet coefficient construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletCoefficients {
    pub lambda: C,
    pub coeffs: [C; 4],
    /// Both singular values of the 2×2 edge system vanish; any `(c₃, c₄)`
    /// works and `(1, 0)` was taken.
    pub double_root: bool,
    /// λ or the coefficients are genuinely complex. The edge conditions then
    /// hold for the complex field, and for its real and imaginary parts
    /// separately.
    pub complex: bool,
    pub sigma_min: f64,
    pub sigma_max: f64,
}

impl DirichletCoefficients {
    pub fn field(&self, frame: CornerFrame) -> StokesField {
        StokesField {
            lambda: self.lambda,
            coeffs: self.coeffs,
            frame,
        }
    }
}

impl StokesField {
    pub fn new(lambda: f64, coeffs: [f64; 4]) -> Self {
        StokesField {
            lambda: C::new(lambda, 0.0),
            coeffs: coeffs.map(|c| C::new(c, 0.0)),
            frame: CornerFrame::default(),
        }
    }

    pub fn new_complex(lambda: C, coeffs: [C; 4]) -> Self {
        StokesField {
            lambda,
            coeffs,
            frame: CornerFrame::default(),
        }
    }

    /// Single basis pair `index` with unit coefficient.
    pub fn basis(index: usize, lambda: f64) -> Result<Self> {
        check_index(index)?;
        let mut c = [0.0; 4];
        c[index - 1] = 1.0;
        Ok(StokesField::new(lambda, c))
    }

    pub fn with_frame(mut self, frame: CornerFrame) -> Self {
        self.frame = frame;
        self
    }

    pub fn is_real(&self) -> bool {
        self.lambda.im == 0.0 && self.coeffs.iter().all(|c| c.im == 0.0)
    }

    #[cfg(debug_assertions)]
    fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `(U(θ), P(θ))` as `[U_r, U_θ, P]`.
    pub fn angular_polar(&self, theta: f64) -> [C; 3] {
        let mut out = [ZERO; 3];
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == ZERO {
                continue;
            }
            let b = basis_polar_complex(i + 1, self.lambda, theta);
            for k in 0..3 {
                out[k] += c * b[k];
            }
        }
        out
    }

    /// `U(θ)` in frame-local Cartesian components, closed form.
    pub fn angular_cartesian(&self, theta: f64) -> [C; 2] {
        let mut out = [ZERO; 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == ZERO {
                continue;
            }
            let b = basis_cartesian_complex(i + 1, self.lambda, theta);
            out[0] += c * b[0];
            out[1] += c * b[1];
        }
        out
    }

    fn check_vertex(&self, r: f64, threshold: f64) -> Result<()> {
        if r == 0.0 && self.lambda.re <= threshold {
            Err(Error::PoleAtVertex)
        } else {
            Ok(())
        }
    }

    /// Polar velocity components `(u_r, u_θ)` at `(r, θ)`.
    pub fn velocity_polar_complex(&self, r: f64, theta: f64) -> Result<[C; 2]> {
        self.check_vertex(r, 0.0)?;
        let [ur, ut, _] = self.angular_polar(theta);
        let s = rpow(r, self.lambda);
        Ok([s * ur, s * ut])
    }

    /// Global Cartesian velocity of the complex field.
    ///
    /// Computed from the closed-form Cartesian basis; the rotated polar form
    /// is cross-checked in debug builds.
    pub fn velocity_cartesian_complex(&self, p: Point2) -> Result<[C; 2]> {
        let (r, theta) = self.frame.to_polar(p);
        self.check_vertex(r, 0.0)?;
        let s = rpow(r, self.lambda);
        let [a, b] = self.angular_cartesian(theta);
        #[cfg(debug_assertions)]
        {
            let [ur, ut, _] = self.angular_polar(theta);
            let [x, y] = rotate(theta, ur, ut);
            let scale = 1.0 + self.coeff_norm() * (1.0 + self.lambda.norm()) * (1.0 + theta);
            debug_assert!(
                (x - a).norm() <= 1e-12 * scale && (y - b).norm() <= 1e-12 * scale,
                "polar/Cartesian basis mismatch at θ = {theta}"
            );
        }
        let [e0, e1] = self.frame.edge0_direction();
        let (a, b) = (s * a, s * b);
        Ok([e0 * a - e1 * b, e1 * a + e0 * b])
    }

    /// Real part of the Cartesian velocity.
    pub fn velocity_cartesian(&self, p: Point2) -> Result<[f64; 2]> {
        let [a, b] = self.velocity_cartesian_complex(p)?;
        Ok([a.re, b.re])
    }

    /// Velocity obtained by rotating the polar components, for comparison
    /// with [`StokesField::velocity_cartesian`].
    pub fn velocity_cartesian_rotated(&self, p: Point2) -> Result<[f64; 2]> {
        let (r, theta) = self.frame.to_polar(p);
        let [ur, ut] = self.velocity_polar_complex(r, theta)?;
        let [a, b] = rotate(theta, ur, ut);
        Ok(self.frame.local_to_global([a.re, b.re]))
    }

    pub fn pressure_complex(&self, p: Point2) -> Result<C> {
        let (r, theta) = self.frame.to_polar(p);
        let [_, _, pp] = self.angular_polar(theta);
        if r == 0.0 {
            return if self.lambda.re > 1.0 {
                Ok(ZERO)
            } else if self.lambda == ONE {
                Ok(self.angular_polar(0.0)[2])
            } else {
                Err(Error::PoleAtVertex)
            };
        }
        Ok(rpow(r, self.lambda - 1.0) * pp)
    }

    /// `r^{λ−1} Σ cᵢ P⁽ⁱ⁾(θ)` (real part).
    pub fn pressure(&self, p: Point2) -> Result<f64> {
        Ok(self.pressure_complex(p)?.re)
    }

    /// `r^{λ−1}[(1+λ)U_r + U_θ′]`, evaluated analytically (real part).
    pub fn divergence_polar(&self, p: Point2) -> Result<f64> {
        let (r, theta) = self.frame.to_polar(p);
        if r == 0.0 {
            return Err(Error::PoleAtVertex);
        }
        let mut acc = ZERO;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == ZERO {
                continue;
            }
            let [ur, _, _] = basis_polar_complex(i + 1, self.lambda, theta);
            let [_, dut] = basis_polar_dtheta_complex(i + 1, self.lambda, theta);
            acc += c * ((ONE + self.lambda) * ur + dut);
        }
        Ok((rpow(r, self.lambda - 1.0) * acc).re)
    }

    /// `−Δu + ∇p` by 5-point Laplacian and central differences with step h.
    pub fn momentum_residual_fd(&self, p: Point2, h: f64) -> Result<[f64; 2]> {
        let (r, _) = self.frame.to_polar(p);
        if 4.0 * h >= r {
            return Err(Error::StepTooLarge { four_h: 4.0 * h, r });
        }
        let u = |q: Point2| self.velocity_cartesian(q);
        let c = u(p)?;
        let e = u([p[0] + h, p[1]])?;
        let w = u([p[0] - h, p[1]])?;
        let n = u([p[0], p[1] + h])?;
        let s = u([p[0], p[1] - h])?;
        let px = (self.pressure([p[0] + h, p[1]])? - self.pressure([p[0] - h, p[1]])?) / (2.0 * h);
        let py = (self.pressure([p[0], p[1] + h])? - self.pressure([p[0], p[1] - h])?) / (2.0 * h);
        let lap = |k: usize| (e[k] + w[k] + n[k] + s[k] - 4.0 * c[k]) / (h * h);
        Ok([-lap(0) + px, -lap(1) + py])
    }

    /// Suprema (not attained) of the Sobolev orders of u and p: `(1 + Re λ, Re λ)`.
    pub fn regularity_sup(&self) -> (f64, f64) {
        (1.0 + self.lambda.re, self.lambda.re)
    }
}

/// The 2×2 matrix of `U(ω)` acting on `(c₃, c₄)` after eliminating
/// `(c₁, c₂) = (−(1−λ)c₃, −(1+λ)c₄)` via `U(0) = 0`. Rows are
/// `(U_r, U_θ)`, assembled from basis evaluations.
pub fn dirichlet_edge_matrix(lambda: C, omega: f64) -> [[C; 2]; 2] {
    let b1 = basis_polar_complex(1, lambda, omega);
    let b2 = basis_polar_complex(2, lambda, omega);
    let b3 = basis_polar_complex(3, lambda, omega);
    let b4 = basis_polar_complex(4, lambda, omega);
    let (e1, e2) = eliminated_factors(lambda);
    let col3 = [e1 * b1[0] + b3[0], e1 * b1[1] + b3[1]];
    let col4 = [e2 * b2[0] + b4[0], e2 * b2[1] + b4[1]];
    [[col3[0], col4[0]], [col3[1], col4[1]]]
}

/// `(c₁/c₃, c₂/c₄)` enforced by `U(0) = 0`.
fn eliminated_factors(lambda: C) -> (C, C) {
    // U(0) for basis 3 and 4 gives (U_r, U_θ) = (1−λ, 0) and (0, 1+λ) for
    // λ ≠ 0, and (−1, 0), (0, 1) for the λ = 0 substitutes.
    let b3 = basis_polar_complex(3, lambda, 0.0);
    let b4 = basis_polar_complex(4, lambda, 0.0);
    (-b3[0], -b4[1])
}

pub fn det2(m: &[[C; 2]; 2]) -> C {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Singular values `(σ_min, σ_max)` of a complex 2×2 matrix.
fn singular_values(m: &[[C; 2]; 2]) -> (f64, f64) {
    let fro2: f64 = m.iter().flatten().map(|z| z.norm_sqr()).sum();
    let d = det2(m).norm();
    let disc = (fro2 * fro2 - 4.0 * d * d).max(0.0).sqrt();
    let smax = (0.5 * (fro2 + disc)).sqrt();
    let smin = if smax > 0.0 { d / smax } else { 0.0 };
    (smin, smax)
}

/// Coefficients of the field with `U(0) = U(ω) = 0` for a determinant root.
pub fn dirichlet_coefficients(omega: f64, root: &ExponentRoot) -> Result<DirichletCoefficients> {
    dirichlet_coefficients_for(omega, root.lambda)
}

/// As [`dirichlet_coefficients`], for a bare exponent.
///
/// `(c₃, c₄)` spans the null space of the edge matrix, normalized to unit
/// length with its first nonzero component real and positive.
pub fn dirichlet_coefficients_for(omega: f64, lambda: C) -> Result<DirichletCoefficients> {
    let m = dirichlet_edge_matrix(lambda, omega);
    let (sigma_min, sigma_max) = singular_values(&m);
    let double_root = sigma_max < 1e-10;
    if !double_root && sigma_min > 1e-6 * sigma_max.max(1.0) {
        return Err(Error::NotARoot {
            lambda: lambda.to_string(),
            sigma_min,
        });
    }
    let null = if double_root {
        [ONE, ZERO]
    } else {
        // (a, b) ⟂ the dominant row
        let r0 = m[0][0].norm_sqr() + m[0][1].norm_sqr();
        let r1 = m[1][0].norm_sqr() + m[1][1].norm_sqr();
        let row = if r0 >= r1 { m[0] } else { m[1] };
        [-row[1], row[0]]
    };
    let norm = (null[0].norm_sqr() + null[1].norm_sqr()).sqrt();
    let lead = if null[0].norm() > 1e-14 * norm { null[0] } else { null[1] };
    let phase = lead.conj() / lead.norm();
    let c3 = null[0] * phase / norm;
    let c4 = null[1] * phase / norm;
    let (e1, e2) = eliminated_factors(lambda);
    let coeffs = [e1 * c3, e2 * c4, c3, c4];
    let complex = lambda.im != 0.0 || coeffs.iter().any(|c| c.im.abs() > 1e-14);
    Ok(DirichletCoefficients {
        lambda,
        coeffs,
        double_root,
        complex,
        sigma_min,
        sigma_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn basis_examples() {
        assert_eq!(basis_polar(1, 0.5, 0.0).unwrap(), (1.0, 0.0, 0.0));
        let (ur, ut, p) = basis_polar(3, 1.0, 0.0).unwrap();
        assert_eq!((ur, ut, p), (0.0, 0.0, -4.0));
        let (ur, ut, p) = basis_polar(4, 0.0, PI / 2.0).unwrap();
        assert!(close(ur, -1.0, 1e-15) && close(ut, PI, 1e-15) && close(p, -4.0, 1e-15));
        assert!(basis_polar(5, 0.5, 0.0).is_err());
    }

    #[test]
    fn cartesian_examples() {
        let f = StokesField::basis(1, 1.0).unwrap();
        let v = f.velocity_cartesian([0.3, 0.4]).unwrap();
        assert!(close(v[0], 0.3, 1e-15) && close(v[1], -0.4, 1e-15));
        for t in [0.0, 1.0, 4.0] {
            assert_eq!(basis_cartesian(2, 0.0, t).unwrap(), [0.0, 1.0]);
        }
        // rotation of (U_r, U_θ) = (0, −3/2) by θ = π
        let v = basis_cartesian(3, 0.5, PI).unwrap();
        assert!(close(v[0], 0.0, 1e-15) && close(v[1], 1.5, 1e-15));
    }

    #[test]
    fn closed_forms_match_rotation() {
        for i in 1..=4 {
            for &l in &[0.0, -0.7, 0.3, 1.0, 1.9] {
                for k in 0..20 {
                    let t = k as f64 * 0.31;
                    let [ur, ut, _] = basis_polar_complex(i, C::new(l, 0.0), t);
                    let [x, y] = rotate(t, ur, ut);
                    let [a, b] = basis_cartesian_complex(i, C::new(l, 0.0), t);
                    assert!((x - a).norm() < 1e-13 && (y - b).norm() < 1e-13, "i={i} λ={l} θ={t}");
                }
            }
        }
    }

    #[test]
    fn theta_derivatives_match_differences() {
        let h = 1e-6;
        for i in 1..=4 {
            for &l in &[0.0, 0.45] {
                let lam = C::new(l, 0.0);
                let t = 0.9;
                let p = basis_polar_complex(i, lam, t + h);
                let m = basis_polar_complex(i, lam, t - h);
                let d = basis_polar_dtheta_complex(i, lam, t);
                for k in 0..2 {
                    assert!(((p[k] - m[k]) / (2.0 * h) - d[k]).norm() < 1e-8, "i={i} λ={l}");
                }
            }
        }
    }

    #[test]
    fn pressure_examples() {
        let f = StokesField::basis(1, 0.4).unwrap();
        assert_eq!(f.pressure([0.2, 0.5]).unwrap(), 0.0);
        let g = StokesField::basis(3, 1.0).unwrap();
        for p in [[0.3, 0.1], [-1.0, 2.0], [0.0, 0.0]] {
            assert!(close(g.pressure(p).unwrap(), -4.0, 1e-15));
        }
        let h = StokesField::basis(4, 0.0).unwrap();
        assert!(close(h.pressure([0.0, 2.0]).unwrap(), -2.0, 1e-15));
        assert!(matches!(h.pressure([0.0, 0.0]), Err(Error::PoleAtVertex)));
    }

    #[test]
    fn velocity_vertex() {
        assert_eq!(StokesField::basis(3, 0.5).unwrap().velocity_cartesian([0.0, 0.0]).unwrap(), [0.0, 0.0]);
        assert!(StokesField::basis(3, -0.5).unwrap().velocity_cartesian([0.0, 0.0]).is_err());
    }

    #[test]
    fn divergence_vanishes() {
        let f = StokesField::basis(1, 1.0).unwrap();
        assert_eq!(f.divergence_polar([0.4, 0.2]).unwrap(), 0.0);
        for i in 1..=4 {
            for &l in &[0.0, -0.3, 0.7, 2.2] {
                let f = StokesField::basis(i, l).unwrap();
                let r: f64 = 0.37;
                let d = f.divergence_polar(f.frame.from_polar(r, 2.0)).unwrap();
                assert!(d.abs() <= 1e-12 * r.powf(l - 1.0), "i={i} λ={l}: {d}");
            }
        }
    }

    #[test]
    fn momentum_residual_small() {
        let f = StokesField::basis(1, 1.0).unwrap();
        let r = f.momentum_residual_fd([1.0, 1.0], 1e-2).unwrap();
        assert!(r[0].abs() < 1e-10 && r[1].abs() < 1e-10, "{r:?}");
        let g = StokesField::basis(3, 0.0).unwrap();
        let p = g.frame.from_polar(1.0, 1.2);
        let r = g.momentum_residual_fd(p, 1e-4).unwrap();
        // roundoff floor of the stencil: 8·eps·|u|/h² ≈ 3e-7
        assert!(r[0].hypot(r[1]) < 2e-7, "{r:?}");
        assert!(matches!(
            g.momentum_residual_fd(p, 0.3),
            Err(Error::StepTooLarge { .. })
        ));
    }

    #[test]
    fn edge_matrix_determinant_is_stokes_determinant() {
        use crate::exponents::stokes_determinant;
        for (l, w) in [(C::new(0.3, 0.2), 2.0), (C::new(1.7, -0.4), 4.5), (C::new(0.0, 0.0), 1.0)] {
            if l == ZERO {
                continue;
            }
            let d = det2(&dirichlet_edge_matrix(l, w));
            let e = stokes_determinant(l, w);
            assert!((d - e).norm() < 1e-12 * e.norm().max(1.0));
        }
    }

    #[test]
    fn dirichlet_coefficients_slit() {
        let c = dirichlet_coefficients_for(2.0 * PI, C::new(0.5, 0.0)).unwrap();
        assert!(c.double_root);
        let f = c.field(CornerFrame::default());
        let [ur, ut, _] = f.angular_polar(2.0 * PI);
        assert!(ur.norm() < 1e-10 && ut.norm() < 1e-10);
    }

    #[test]
    fn dirichlet_coefficients_unit_exponent() {
        let c = dirichlet_coefficients_for(1.2, ONE).unwrap();
        assert!(!c.double_root);
        let f = c.field(CornerFrame::default());
        // zero velocity, constant pressure
        for t in [0.0, 0.5, 1.2] {
            let [ur, ut, _] = f.angular_polar(t);
            assert!(ur.norm() < 1e-14 && ut.norm() < 1e-14);
        }
    }

    #[test]
    fn not_a_root() {
        assert!(matches!(
            dirichlet_coefficients_for(1.5 * PI, C::new(0.7, 0.0)),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn regularity() {
        assert_eq!(StokesField::new(1.0, [1.0, 0.0, 0.0, 0.0]).regularity_sup(), (2.0, 1.0));
        assert_eq!(StokesField::new(0.0, [1.0, 0.0, 0.0, 0.0]).regularity_sup(), (1.0, 0.0));
        let (s, t) = StokesField::new(0.5445, [1.0; 4]).regularity_sup();
        assert!(close(s, 1.5445, 1e-15) && close(t, 0.5445, 1e-15));
    }
}
