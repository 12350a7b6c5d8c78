//! Compactly supported right-hand sides from cut-off corner solutions.
//!
//! −Δ(ηu) vanishes where η is constant, so it is supported on the
//! transition annulus; the Stokes version also carries a mass source.

use cornerkit::angle::Angle;
use cornerkit::cutoff::{laplace_rhs, stokes_rhs, CutoffProfile, Smoothness};
use cornerkit::exponents::BcKind;
use cornerkit::laplace::LaplaceField;
use cornerkit::stokes::StokesField;

fn main() -> Result<(), cornerkit::error::Error> {
    let omega = Angle::pi_fraction(3, 2)?;
    let u = LaplaceField::preset(omega, BcKind::DirichletDirichlet, 1, 1.0)?;
    let s = StokesField::basis(3, 0.5)?;
    for smooth in [Smoothness::C2Quintic, Smoothness::CInfExp] {
        let eta = CutoffProfile::new(0.25, 0.75, smooth)?;
        println!("profile {smooth}");
        println!("{:>6} {:>8} {:>12} {:>12} {:>12}", "r", "eta", "f (laplace)", "|f| (stokes)", "g (stokes)");
        for i in 0..=10 {
            let r = 0.1 * i as f64 + 0.05;
            let p = u.frame.from_polar(r, 2.0);
            let f = laplace_rhs(&u, &eta, p)?;
            let st = stokes_rhs(&s, &eta, p)?;
            println!(
                "{r:>6.2} {:>8.4} {f:>12.4e} {:>12.4e} {:>12.4e}",
                eta.eta(r),
                st.f[0].hypot(st.f[1]),
                st.g
            );
        }
    }
    Ok(())
}
