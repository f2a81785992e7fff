use num_bigint::BigInt;
use num_traits::Zero;
use subres_core::hilbert::DegreeVector;
use subres_core::polyring::{Polynomial, ZPoly};
use subres_core::residual::*;
use subres_core::subres::{enumerate_s, MonomialSet};
use subres_core::Error;

/// Resultant of `a x^2 + b x + c` and `d x + e`, written out by hand.
fn sylvester_quadratic_linear(rs: &ResidualSystem) -> ZPoly {
    let u = rs.universe();
    let v = |name: &str| Polynomial::var_named(u, name).unwrap();
    let (a, b, c) = (v("r1_1_2_0"), v("r1_1_1_1"), v("r1_1_0_2"));
    let (d, e) = (v("r2_1_1_0"), v("r2_1_0_1"));
    &(&(&a * &e.pow(2)) - &(&(&b * &d) * &e)) + &(&c * &d.pow(2))
}

fn setup_3_2() -> ResidualSystem {
    let dv = DegreeVector::new(2, &[3, 2]).unwrap();
    let ideal = generic_points_ideal(2, 1, 1, 3, 7, 9).unwrap();
    residual_specialize(&dv, 3, &ideal, Mode::Symbolic).unwrap()
}

#[test]
fn binary_cubic_quadratic_matches_sylvester() {
    let rs = setup_3_2();
    let s = MonomialSet::parse(rs.degree_vector(), 3, "x2^3").unwrap();
    let r = residual_resultant(&rs, &s).unwrap();
    assert_eq!((r.degree_in_form(0), r.degree_in_form(1)), (1, 2));
    // the residual resultant is the resultant of the multipliers: the only
    // way the P̄_i acquire a common zero off the base point
    assert_eq!(r.primitive, sylvester_quadratic_linear(&rs).normalize_sign());
    assert!(!r.constant.is_zero());
}

#[test]
fn primitive_part_is_independent_of_s() {
    let rs = setup_3_2();
    let all = enumerate_s(rs.degree_vector(), 3, 10, 1).unwrap();
    assert!(all.len() >= 2);
    let first = residual_resultant(&rs, &all[0]).unwrap();
    for s in &all[1..] {
        assert_eq!(residual_resultant(&rs, s).unwrap().primitive, first.primitive, "S = {s}");
    }
}

#[test]
fn extra_common_zero_forces_vanishing() {
    let rs = setup_3_2();
    let s = MonomialSet::parse(rs.degree_vector(), 3, "x2^3").unwrap();
    let r = residual_resultant(&rs, &s).unwrap();
    let q = [2, -3];
    let assignment = vanishing_assignment(&rs, &q, 5, 20).unwrap();
    let forms = specialize_forms(&rs, &assignment).unwrap();
    let qv: Vec<BigInt> = q.iter().map(|&c| BigInt::from(c)).collect();
    assert!(forms.iter().all(|f| f.evaluate(&qv).is_zero()));
    assert!(forms.iter().all(|f| !f.is_zero()));
    assert!(evaluate_residual(&r.primitive, &assignment).unwrap().is_zero());
    // a base point is not an admissible extra zero
    let base = rs.ideal().points().points[0].clone();
    assert!(matches!(vanishing_assignment(&rs, &base, 5, 20), Err(Error::Precondition(_))));
}

#[test]
fn residual_degrees_over_small_cases() {
    for (n, d, nu) in [(2, vec![2, 2], 2), (2, vec![3, 3], 4), (2, vec![4, 2], 4), (3, vec![2, 2, 2], 3), (3, vec![2, 2, 1], 2)] {
        let dv = DegreeVector::new(n, &d).unwrap();
        let rho = dv.rho() as u32;
        let delta = rho - nu + 1;
        let a = subres_core::hilbert::thresholds(&dv).unwrap().a(nu as i64).unwrap() as usize;
        let ideal = generic_points_ideal(n, a, delta, rho, 3, 9).unwrap();
        let rs = residual_specialize(&dv, nu, &ideal, Mode::Symbolic).unwrap();
        let s = &enumerate_s(&dv, nu, 1, 2).unwrap()[0];
        let r = residual_resultant(&rs, s).unwrap();
        let expected = expected_residual_degrees(&dv, nu).unwrap();
        let got: Vec<u64> = (0..n).map(|i| r.degree_in_form(i) as u64).collect();
        assert_eq!(got, expected, "d = {d:?}, nu = {nu}");
    }
}

#[test]
fn chain_on_generic_and_degenerate_forms() {
    let rs = setup_3_2();
    let s = MonomialSet::parse(rs.degree_vector(), 3, "x2^3").unwrap();
    for seed in 0..5 {
        let seeded = residual_specialize(rs.degree_vector(), 3, rs.ideal(), Mode::Seeded { seed, bound: 9 }).unwrap();
        let rec = implication_chain_check(seeded.polys(), &s, rs.ideal()).unwrap();
        assert!(rec.consistent());
        assert!(rec.delta_nonzero && rec.hilbert_at_nu && rec.window_stable, "{rec:?}");
        let forms = specialize_forms(&rs, &vanishing_assignment(&rs, &[1, 4], seed, 9).unwrap()).unwrap();
        let rec = implication_chain_check(&forms, &s, rs.ideal()).unwrap();
        assert!(rec.consistent() && !rec.delta_nonzero, "{rec:?}");
    }
}

#[test]
fn chain_rejects_forms_outside_the_ideal() {
    let rs = setup_3_2();
    let s = MonomialSet::parse(rs.degree_vector(), 3, "x2^3").unwrap();
    let u = subres_core::subres::x_universe(2);
    let qs = [Polynomial::parse(&u, "x1^3").unwrap(), Polynomial::parse(&u, "x2^2").unwrap()];
    assert!(matches!(implication_chain_check(&qs, &s, rs.ideal()), Err(Error::InvalidSpecialization(_))));
    let zero = [ZPoly::zero(&u), Polynomial::parse(&u, "x2^2").unwrap()];
    assert!(matches!(implication_chain_check(&zero, &s, rs.ideal()), Err(Error::InvalidSpecialization(_))));
}

#[test]
fn ideal_export_round_trips_through_json() {
    let ideal = generic_points_ideal(3, 3, 2, 3, 1, 5).unwrap();
    let doc = ideal.to_doc();
    let text = serde_json::to_string(&doc).unwrap();
    let back: PointsIdealDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(back, doc);
    assert_eq!(back.generators[0].to_poly().unwrap(), ideal.generators()[0]);
}
