//! Harmonic corner solutions on the L-shaped corner and their regularity.
//!
//! Prints the three boundary-condition presets, checks the boundary
//! conditions on both edges, and classifies a range of exponents against
//! the weak / very weak theory.

use cornerkit::angle::Angle;
use cornerkit::exponents::BcKind;
use cornerkit::laplace::{classify, Edge, LaplaceField};

fn main() -> Result<(), cornerkit::error::Error> {
    let omega = Angle::pi_fraction(3, 2)?;
    let w = omega.radians();
    for bc in [BcKind::DirichletDirichlet, BcKind::NeumannNeumann, BcKind::DirichletNeumann] {
        let k = u32::from(bc != BcKind::NeumannNeumann);
        let u = LaplaceField::preset(omega, bc, k, 1.0)?;
        println!(
            "{bc} k={k}: lambda = {:.6}, u in H^s for s < {:.6}; u(1,0) = {:+.2e}, u(1,ω) = {:+.2e}, ∂ₙu(1,ω) = {:+.2e}",
            u.lambda,
            u.regularity_sup(),
            u.eval_polar(1.0, 0.0)?,
            u.eval_polar(1.0, w)?,
            u.normal_derivative(Edge::ThetaOmega, w, 1.0)?,
        );
    }
    let xi = omega.xi();
    println!("\nclassification for xi = {xi:.6}:");
    for lambda in [2.0 / 3.0, 0.0, -0.3, -2.0 / 3.0, -0.9] {
        println!("  lambda = {lambda:+.4}: {:?}", classify(lambda, xi));
    }
    Ok(())
}
