//! Local polar frames centered at a polygon corner.

use std::f64::consts::PI;

pub type Point2 = [f64; 2];

/// Polar frame at a corner: θ is measured counterclockwise from the ray
/// `edge0_direction`, and the sector of the domain is 0 ≤ θ ≤ ω.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerFrame {
    vertex: Point2,
    edge0_direction: Point2,
}

impl Default for CornerFrame {
    fn default() -> Self {
        CornerFrame {
            vertex: [0.0, 0.0],
            edge0_direction: [1.0, 0.0],
        }
    }
}

impl CornerFrame {
    /// `direction` is normalized; it must be nonzero.
    pub fn new(vertex: Point2, direction: Point2) -> Self {
        let n = direction[0].hypot(direction[1]);
        assert!(n > 0.0, "edge direction must be nonzero");
        CornerFrame {
            vertex,
            edge0_direction: [direction[0] / n, direction[1] / n],
        }
    }

    pub fn vertex(&self) -> Point2 {
        self.vertex
    }

    pub fn edge0_direction(&self) -> Point2 {
        self.edge0_direction
    }

    /// Polar coordinates `(r, θ)` with θ ∈ [0, 2π).
    pub fn to_polar(&self, p: Point2) -> (f64, f64) {
        let dx = p[0] - self.vertex[0];
        let dy = p[1] - self.vertex[1];
        let [c, s] = self.edge0_direction;
        // rotate into the frame
        let x = c * dx + s * dy;
        let y = -s * dx + c * dy;
        let r = x.hypot(y);
        let mut theta = y.atan2(x);
        if theta < 0.0 {
            theta += 2.0 * PI;
        }
        (r, theta)
    }

    pub fn from_polar(&self, r: f64, theta: f64) -> Point2 {
        let [c, s] = self.edge0_direction;
        let (x, y) = (r * theta.cos(), r * theta.sin());
        [
            self.vertex[0] + c * x - s * y,
            self.vertex[1] + s * x + c * y,
        ]
    }

    /// Rotates polar components `(v_r, v_θ)` at angle θ into global
    /// Cartesian components.
    pub fn polar_to_cartesian(&self, theta: f64, vr: f64, vtheta: f64) -> [f64; 2] {
        let [c, s] = self.edge0_direction;
        let (ct, st) = (theta.cos(), theta.sin());
        let x = ct * vr - st * vtheta;
        let y = st * vr + ct * vtheta;
        [c * x - s * y, s * x + c * y]
    }

    /// Rotates a vector given in frame-local Cartesian components into
    /// global components.
    pub fn local_to_global(&self, v: [f64; 2]) -> [f64; 2] {
        let [c, s] = self.edge0_direction;
        [c * v[0] - s * v[1], s * v[0] + c * v[1]]
    }
}
