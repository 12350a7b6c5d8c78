use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use cornerkit::angle::Angle;
use cornerkit::cutoff::{laplace_rhs, stokes_rhs, CutoffProfile, Smoothness};
use cornerkit::error::Error;
use cornerkit::exponents::{
    find_stokes_exponents, stokes_determinant, stokes_determinant_derivative, winding_number, SearchRegion,
};
use cornerkit::geometry::CornerFrame;
use cornerkit::laplace::{five_point_laplacian, LaplaceField};
use cornerkit::pairing::{arc_limit_defect, area_pairing, dyadic_radii, QuadSpec, TestFunctionV};
use cornerkit::stokes::StokesField;

fn profile() -> impl Strategy<Value = CutoffProfile> {
    (0.1f64..0.5, 0.1f64..0.6, prop_oneof![Just(Smoothness::C2Quintic), Just(Smoothness::CInfExp)])
        .prop_map(|(r0, dr, s)| CutoffProfile::new(r0, r0 + dr, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn root_count_matches_winding_number(
        omega in 0.3f64..6.2,
        re_min in 0.05f64..1.5,
        width in 0.5f64..2.0,
        im in 0.2f64..1.5,
    ) {
        let region = SearchRegion::new(re_min, re_min + width, -im, im).unwrap();
        let f = |l| stokes_determinant(l, omega);
        let df = |l| stokes_determinant_derivative(l, omega);
        match (winding_number(f, df, &region), find_stokes_exponents(omega, &region)) {
            (Ok((n, _)), Ok(roots)) => prop_assert_eq!(n as usize, roots.len()),
            // a root on or next to the contour makes the count undefined
            (Err(Error::RegionBoundaryHitsRoot { .. }), _) | (_, Err(Error::RegionBoundaryHitsRoot { .. })) => {}
            (a, b) => prop_assert!(false, "{a:?} / {b:?}"),
        }
    }

    #[test]
    fn laplace_fields_are_harmonic(
        lambda in -0.95f64..3.0,
        c1 in -2.0f64..2.0,
        c2 in -2.0f64..2.0,
        r in 0.5f64..2.0,
        t in 0.3f64..4.4,
    ) {
        let u = LaplaceField::new(lambda, c1, c2);
        let p = [r * t.cos(), r * t.sin()];
        let h = 1e-3;
        let lap = five_point_laplacian(|q| u.eval(q).unwrap(), p, h);
        let scale = (c1.abs() + c2.abs()) * r.powf(lambda) / (r * r) * (1.0 + lambda.abs()).powi(4);
        prop_assert!(lap.abs() <= 1e-5 * scale.max(1e-300), "{lap} vs {scale}");
    }

    #[test]
    fn laplace_values_follow_the_frame(
        lambda in -0.9f64..2.5,
        angle in 0.0f64..2.0 * PI,
        shift in (-3.0f64..3.0, -3.0f64..3.0),
        r in 0.1f64..2.0,
        t in 0.01f64..4.7,
    ) {
        let plain = LaplaceField::new(lambda, 0.7, -0.4);
        let frame = CornerFrame::new([shift.0, shift.1], [angle.cos(), angle.sin()]);
        let moved = plain.with_frame(frame);
        let a = plain.eval_polar(r, t).unwrap();
        let b = moved.eval(frame.from_polar(r, t)).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()), "{a} vs {b}");
    }

    #[test]
    fn stokes_combinations_are_divergence_free(
        re in -0.5f64..3.0,
        im in -1.5f64..1.5,
        coeffs in proptest::array::uniform4((-1.0f64..1.0, -1.0f64..1.0)),
        r in 0.2f64..2.0,
        t in 0.0f64..2.0 * PI,
    ) {
        let c = coeffs.map(|(a, b)| Complex64::new(a, b));
        let field = StokesField::new_complex(Complex64::new(re, im), c);
        let p = [r * t.cos(), r * t.sin()];
        let u = field.velocity_cartesian_complex(p).unwrap();
        let scale = (u[0].norm() + u[1].norm()) * (2.0 + re.abs() + im.abs()) / r + 1.0;
        let div = field.divergence_polar(p).unwrap();
        prop_assert!(div.abs() <= 1e-12 * scale, "{div}");
    }

    #[test]
    fn cutoff_data_vanish_off_the_annulus(
        prof in profile(),
        lambda in 0.1f64..2.0,
        r in 0.001f64..2.0,
        t in 0.0f64..4.7,
    ) {
        prop_assume!(!prof.in_transition(r));
        let p = [r * t.cos(), r * t.sin()];
        let lap = laplace_rhs(&LaplaceField::new(lambda, 1.0, 0.5), &prof, p).unwrap();
        prop_assert_eq!(lap.to_bits(), 0);
        let s = stokes_rhs(&StokesField::new(lambda, [1.0, -0.5, 0.25, 2.0]), &prof, p).unwrap();
        prop_assert!(s.f.iter().chain([&s.g]).all(|v| v.to_bits() == 0));
    }

    #[test]
    fn arc_and_area_defects_agree(
        lambda in -0.6f64..1.5,
        c1 in -1.0f64..1.0,
        c2 in -1.0f64..1.0,
    ) {
        let omega = Angle::pi_fraction(3, 2).unwrap();
        let w = omega.radians();
        let v = TestFunctionV::new(omega.xi(), CutoffProfile::new(0.25, 0.75, Smoothness::C2Quintic).unwrap()).unwrap();
        let u = LaplaceField::new(lambda, c1, c2);
        let arc = arc_limit_defect(&u, &v, w, &dyadic_radii(0.2, 8)).unwrap().limit;
        let area = area_pairing(&u, &v, w, &QuadSpec::default()).unwrap();
        // both vanish above the threshold λ = −ξ
        prop_assert!(arc.abs() < 1e-6 && area.abs() < 1e-6, "arc {arc}, area {area}");
    }
}
