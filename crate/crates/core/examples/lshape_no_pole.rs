//! Discrete solution with the limit-case function as boundary datum.
//!
//! The nodal interpolant of u* = r^{−2/3} sin(2θ/3) blows up like h^{−2/3}
//! at the corner, while the finite-element solution with the same boundary
//! values stays bounded.

use cornerkit::angle::Angle;
use cornerkit::fem::limit_case_study;
use cornerkit::laplace::limit_case_field;

fn main() -> Result<(), cornerkit::error::Error> {
    let u = limit_case_field(Angle::pi_fraction(3, 2)?);
    let study = limit_case_study(&u, 8, 4, 0.1)?;
    println!("{:>4} {:>10} {:>14} {:>14}", "n", "h", "max |u_h|", "max |I_h u*|");
    let mut prev = None;
    for row in &study.rows {
        print!("{:>4} {:>10.5} {:>14.6} {:>14.6}", row.n, row.h, row.corner_max, row.interpolant_max);
        if let Some((c, i)) = prev {
            print!("   ratios {:.4} {:.4}", row.corner_max / c, row.interpolant_max / i);
        }
        println!();
        prev = Some((row.corner_max, row.interpolant_max));
    }
    Ok(())
}
