//! The Stokes corner solution with no-slip edges at the L-shaped corner.
//!
//! Finds the smallest exponent, builds the Dirichlet coefficients, and
//! samples velocity and pressure along a ray, checking that the velocity
//! vanishes on both edges and that the field is divergence free.

use std::f64::consts::PI;

use cornerkit::exponents::{find_stokes_exponents, SearchRegion};
use cornerkit::geometry::CornerFrame;
use cornerkit::stokes::dirichlet_coefficients;

fn main() -> Result<(), cornerkit::error::Error> {
    let omega = 1.5 * PI;
    let roots = find_stokes_exponents(omega, &SearchRegion::new(0.1, 0.9, -0.5, 0.5)?)?;
    let root = roots[0];
    println!("lambda = {:.15} ({} branch, |D| = {:.1e})", root.lambda.re, root.branch, root.residual);
    let dc = dirichlet_coefficients(omega, &root)?;
    let c: Vec<String> = dc.coeffs.iter().map(|c| format!("{:+.6}", c.re)).collect();
    println!("coefficients [{}]", c.join(", "));
    let field = dc.field(CornerFrame::default());
    for theta in [0.0, 0.25 * omega, 0.5 * omega, 0.75 * omega, omega] {
        let p = field.frame.from_polar(0.5, theta);
        let u = field.velocity_cartesian(p)?;
        println!(
            "theta = {theta:.4}: u = ({:+.3e}, {:+.3e}), p = {:+.4}, div u = {:+.1e}",
            u[0],
            u[1],
            field.pressure(p)?,
            field.divergence_polar(p)?
        );
    }
    Ok(())
}
