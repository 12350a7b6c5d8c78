//! Laplace and Stokes corner exponents for a few interior angles.
//!
//! Laplace exponents are exact multiples of π/ω. Stokes exponents are the
//! zeros of the Dirichlet determinant, located with the argument principle;
//! complex pairs appear once the corner is sharp enough.

use cornerkit::angle::Angle;
use cornerkit::exponents::{find_stokes_exponents, laplace_exponent, BcKind, SearchRegion};

fn main() -> Result<(), cornerkit::error::Error> {
    let region = SearchRegion::new(0.05, 3.05, -2.05, 2.05)?;
    for (p, q) in [(1, 2), (3, 4), (3, 2), (7, 4)] {
        let omega = Angle::pi_fraction(p, q)?;
        println!("omega = {omega}");
        for bc in [BcKind::DirichletDirichlet, BcKind::NeumannNeumann, BcKind::DirichletNeumann] {
            let k0 = u32::from(bc != BcKind::NeumannNeumann);
            let list: Vec<String> = (k0..k0 + 3)
                .map(|k| {
                    let e = laplace_exponent(omega, bc, k).expect("admissible index");
                    let (a, b) = e.pi_over_omega_multiple();
                    format!("{a}/{b}·π/ω = {:.6}", e.value())
                })
                .collect();
            println!("  laplace {bc}: {}", list.join(", "));
        }
        for r in find_stokes_exponents(omega.radians(), &region)? {
            println!(
                "  stokes  {:>5}: {:+.12} {:+.12}i  |D| = {:.1e}",
                r.branch.to_string(),
                r.lambda.re,
                r.lambda.im,
                r.residual
            );
        }
    }
    Ok(())
}
