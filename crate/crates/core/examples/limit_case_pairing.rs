//! The Green-formula defect across the very weak threshold.
//!
//! For u = r^λ Φ(θ) and v = η r^ξ sin ξθ, the defect (u, Δv) − ⟨u, ∂ₙv⟩
//! vanishes while λ > −ξ and equals −π at λ = −ξ for u* = r^{−ξ} sin ξθ.

use cornerkit::angle::Angle;
use cornerkit::cutoff::{CutoffProfile, Smoothness};
use cornerkit::laplace::{limit_case_field, LaplaceField};
use cornerkit::pairing::{arc_limit_defect, area_pairing, dyadic_radii, QuadSpec, TestFunctionV};

fn main() -> Result<(), cornerkit::error::Error> {
    let omega = Angle::pi_fraction(3, 2)?;
    let w = omega.radians();
    let v = TestFunctionV::new(omega.xi(), CutoffProfile::new(0.25, 0.75, Smoothness::C2Quintic)?)?;
    let eps = dyadic_radii(0.2, 8);
    let quad = QuadSpec::default();

    let star = limit_case_field(omega);
    let arc = arc_limit_defect(&star, &v, w, &eps)?;
    println!("u*: arc limit = {:.12}, area pairing = {:.12}", arc.limit, area_pairing(&star, &v, w, &quad)?);
    for s in &arc.samples {
        println!("   eps = {:.5}: {:.12}", s.eps, s.value);
    }

    println!("\nu = r^λ (cos λθ + sin λθ):");
    for lambda in [-0.6, -0.4, -0.2, 0.0, 0.2] {
        let u = LaplaceField::new(lambda, 1.0, 1.0);
        println!(
            "  lambda = {lambda:+.1}: arc limit = {:+.3e}, area pairing = {:+.3e}",
            arc_limit_defect(&u, &v, w, &eps)?.limit,
            area_pairing(&u, &v, w, &quad)?
        );
    }
    Ok(())
}
