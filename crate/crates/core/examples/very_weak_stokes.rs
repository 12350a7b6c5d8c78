//! Distributional Stokes identity against compactly supported test pairs.
//!
//! (u, −Δv + ∇q) − (∇·v, p) vanishes for any corner solution, including
//! exponents in the very weak range, as long as the pair avoids the edges.

use std::f64::consts::PI;

use cornerkit::geometry::CornerFrame;
use cornerkit::pairing::{stokes_very_weak_defect, CompactTestPair, Poly2, QuadSpec};
use cornerkit::stokes::{dirichlet_coefficients_for, StokesField};
use num_complex::Complex64;

fn main() -> Result<(), cornerkit::error::Error> {
    let omega = 1.5 * PI;
    let frame = CornerFrame::default();
    let pair = |r: f64, theta: f64, radius: f64| CompactTestPair {
        velocity: [Poly2::new(vec![(0, 0, 1.0), (1, 1, -2.0)]), Poly2::new(vec![(2, 0, 0.5), (0, 1, 1.0)])],
        pressure: Poly2::new(vec![(1, 0, 1.0), (0, 0, -0.3)]),
        center: frame.from_polar(r, theta),
        radius,
    };
    let lcorner = dirichlet_coefficients_for(omega, Complex64::new(0.544_483_736_782_464, 0.0))?.field(frame);
    let cases = [
        ("basis 1, lambda = 1", StokesField::basis(1, 1.0)?),
        ("Dirichlet, lambda = 0.5445", lcorner),
        ("basis 3 + 4, lambda = -0.2", StokesField::new(-0.2, [0.0, 0.0, 1.0, 0.5])),
    ];
    for (name, field) in cases {
        let d = stokes_very_weak_defect(&field, &pair(0.45, 2.0, 0.15), omega, &QuadSpec::default())?;
        println!("{name:>28}: defect = {d:+.3e}");
    }
    Ok(())
}
