use linescheme_core::algebra::make_A;
use linescheme_core::groebner::Limits;
use linescheme_core::point_scheme::{count_points, sigma_orbits, verify_vanishing_pairs};
use linescheme_core::GaussianRational;

fn g(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

#[test]
fn generic_gamma_has_twenty_points() {
    for gamma in [1, 4, 5] {
        let r = count_points(&make_A(&g(gamma)).unwrap(), &Limits::default()).unwrap();
        assert_eq!(r.chart_counts, vec![17, 1, 1, 1], "gamma {gamma}");
        assert_eq!(r.distinct_count, 20);
        assert_eq!(r.multiplicity_profile, vec![(1, 20)]);
        assert!(r.rho1_squarefree);
        assert!(r.verified(), "{r:?}");
    }
}

#[test]
fn gamma_two_has_twelve_points() {
    let r = count_points(&make_A(&g(2)).unwrap(), &Limits::default()).unwrap();
    assert_eq!(r.total, 20);
    assert_eq!(r.distinct_count, 12);
    assert_eq!(r.multiplicity_profile, vec![(1, 4), (2, 8)]);
    assert!(!r.rho1_squarefree);
    assert_eq!(r.sigma.orbit_sizes, vec![2, 2, 4, 4]);
    assert!(r.verified(), "{r:?}");
}

#[test]
fn sigma_orbit_profile_at_one() {
    let s = sigma_orbits(&make_A(&g(1)).unwrap(), &Limits::default()).unwrap();
    assert!(s.holds());
    assert_eq!(s.orbit_sizes, vec![2, 2, 4, 4, 4, 4]);
}

#[test]
fn vanishing_pairs_and_negative_control() {
    use linescheme_core::algebra::{eval_bilinear, x_ring};
    use linescheme_core::point_scheme::basis_polys;
    let a = make_A(&g(1)).unwrap();
    assert!(verify_vanishing_pairs(&a, &Limits::default()).unwrap());
    let x = x_ring();
    // x3*x1 - x1*x3 + x2*x2 at (e1, e3)
    let v = eval_bilinear(&a.relations()[2], &basis_polys(&x, 1), &basis_polys(&x, 3));
    assert!(!v.is_zero());
}

#[test]
fn minors_agree_with_fixtures() {
    use linescheme_core::fixtures::load_fixtures;
    use linescheme_core::point_scheme::compare_minors;
    let fx = load_fixtures().unwrap();
    for gamma in [1, 4, 5] {
        let a = make_A(&g(gamma)).unwrap();
        let c = compare_minors(&a, &fx.point_scheme(&g(gamma)).unwrap()).unwrap();
        assert_eq!(c.total, 15);
        assert!(c.holds(), "gamma {gamma}: {c:?}");
    }
}
