use subres_core::hilbert::{forms_dim, thresholds, DegreeVector};
use subres_core::polyring::Polynomial;
use subres_core::subres::{
    build_generic_system, build_macaulay_map, enumerate_s, subresultant, subresultant_by_minors, Method, MonomialSet,
};
use subres_core::sweep::degree_vectors;
use subres_core::Error;

fn generic(n: usize, d: &[u32]) -> subres_core::subres::GenericSystem {
    build_generic_system(&DegreeVector::new(n, d).unwrap()).unwrap()
}

#[test]
fn two_quadrics() {
    let sys = generic(2, &[2, 2]);
    let s = MonomialSet::parse(sys.degree_vector(), 2, "x1*x2").unwrap();
    let r = subresultant(&sys, &s).unwrap();
    let a0b2 = Polynomial::parse(sys.universe(), "c1_2_0*c2_0_2 - c1_0_2*c2_2_0").unwrap();
    assert_eq!(r.delta, -&a0b2);
    let wrong = MonomialSet::parse(sys.degree_vector(), 2, "x1*x2, x2^2");
    assert!(matches!(wrong, Err(Error::WrongCardinality { expected: 1, got: 2 })));
}

#[test]
fn boundary_values() {
    let sys = generic(2, &[4, 2]);
    let s = MonomialSet::parse(sys.degree_vector(), 3, "x1*x2^2, x2^3").unwrap();
    let c0 = Polynomial::parse(sys.universe(), "c2_2_0").unwrap();
    assert_eq!(subresultant(&sys, &s).unwrap().delta, c0.pow(2));

    let sys = generic(3, &[3, 1, 1]);
    let s = MonomialSet::parse(sys.degree_vector(), 2, "x1^2").unwrap();
    let delta = Polynomial::parse(sys.universe(), "c2_0_1_0*c3_0_0_1 - c2_0_0_1*c3_0_1_0").unwrap();
    let r = subresultant(&sys, &s).unwrap();
    assert!(matches!(r.method, Method::KoszulQuotient { .. }));
    assert_eq!(r.delta, delta.pow(2).normalize_sign());
}

/// Every non-square case in the default budget against the gcd of all
/// maximal minors.
#[test]
fn koszul_quotient_matches_brute_force() {
    let mut checked = 0;
    for d in degree_vectors(3, 4) {
        let dv = DegreeVector::new(3, &d).unwrap();
        let th = thresholds(&dv).unwrap();
        for nu in th.nu_min..=th.rho {
            if forms_dim(3, nu) > 15 {
                continue;
            }
            let nu = nu as u32;
            let sys = build_generic_system(&dv).unwrap();
            let mac = build_macaulay_map(sys.system(), nu);
            let surplus = mac.matrix().ncols() + th.a(nu as i64).unwrap() as usize - mac.matrix().nrows();
            if surplus == 0 || surplus > 2 {
                continue;
            }
            for s in enumerate_s(&dv, nu, 2, 11).unwrap() {
                let r = subresultant(&sys, &s).unwrap();
                assert_eq!(r.delta, subresultant_by_minors(&sys, &s).unwrap(), "d = {d:?}, nu = {nu}, S = {s}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
