//! Observed convergence rates for corner solutions of prescribed regularity.
//!
//! Each case solves −Δu = 0 on the L-shape with the exact singular function
//! as Dirichlet data; the H¹ rate is min(λ, 1), the L² rate one more.

use cornerkit::angle::Angle;
use cornerkit::exponents::BcKind;
use cornerkit::fem::convergence_study;
use cornerkit::laplace::LaplaceField;

fn main() -> Result<(), cornerkit::error::Error> {
    let omega = Angle::pi_fraction(3, 2)?;
    for k in [1, 2] {
        let u = LaplaceField::preset(omega, BcKind::DirichletDirichlet, k, 1.0)?;
        println!("lambda = {:.6}", u.lambda);
        println!("{:>5} {:>10} {:>12} {:>12} {:>8} {:>8}", "level", "h", "l2", "h1", "rate_l2", "rate_h1");
        for row in convergence_study(&u, 8, 4)?.rows {
            let fmt = |r: Option<f64>| r.map_or("-".to_string(), |v| format!("{v:.3}"));
            println!(
                "{:>5} {:>10.5} {:>12.4e} {:>12.4e} {:>8} {:>8}",
                row.level,
                row.h,
                row.l2,
                row.h1,
                fmt(row.rate_l2),
                fmt(row.rate_h1)
            );
        }
    }
    Ok(())
}
