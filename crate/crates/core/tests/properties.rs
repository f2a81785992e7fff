use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use subres_core::hilbert::{hilbert_value, DegreeVector};
use subres_core::irred::{irreducibility_verdict, power_form, Verdict};
use subres_core::linalg::{bareiss_determinant, expansion_determinant, leibniz_determinant, ExactMatrix};
use subres_core::polyring::{Monomial, Polynomial, VarUniverse, ZPoly};
use subres_core::subres::{build_generic_system, delta_of_specialization, enumerate_s, subresultant, x_universe, MonomialSet, PolySystem};

fn universe_xyz() -> Arc<VarUniverse> {
    VarUniverse::from_groups(&[("a", vec!["x", "y", "z"])]).unwrap()
}

fn poly_strategy(max_terms: usize, max_exp: u16) -> impl Strategy<Value = ZPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), -6i64..=6), 0..=max_terms).prop_map(|terms| {
        let u = universe_xyz();
        Polynomial::from_terms(&u, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), BigInt::from(c))))
    })
}

fn nonconstant(max_terms: usize) -> impl Strategy<Value = ZPoly> {
    poly_strategy(max_terms, 2).prop_filter("nonconstant", |p| !p.is_zero() && !p.is_constant())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn determinant_algorithms_agree(size in 1usize..=4, entries in prop::collection::vec(poly_strategy(3, 1), 16)) {
        let u = universe_xyz();
        let rows: Vec<Vec<ZPoly>> = (0..size).map(|i| entries[i * size..(i + 1) * size].to_vec()).collect();
        let m = ExactMatrix::from_rows(&u, rows).unwrap();
        let leibniz = leibniz_determinant(&m).unwrap();
        prop_assert_eq!(&expansion_determinant(&m).unwrap(), &leibniz);
        prop_assert_eq!(&bareiss_determinant(&m).unwrap(), &leibniz);
    }

    #[test]
    fn content_is_multiplicative(p in poly_strategy(4, 2), q in poly_strategy(4, 2)) {
        let prod = &p * &q;
        prop_assert_eq!(prod.integer_content(), p.integer_content() * q.integer_content());
    }

    #[test]
    fn powers_are_recognized(b in nonconstant(3), k in 2u32..=3) {
        let p = b.pow(k);
        let pf = power_form(&p).unwrap();
        prop_assert_eq!(pf.exponent % k, 0);
        let rebuilt = pf.base.pow(pf.exponent);
        prop_assert!(rebuilt == p || rebuilt == -&p);
    }

    #[test]
    fn products_are_never_certified_irreducible(p in nonconstant(3), q in nonconstant(3), seed in any::<u64>()) {
        let prod = &p * &q;
        let (_, _, prim) = prod.content_and_primitive().unwrap();
        let v = irreducibility_verdict(&prim, seed).unwrap();
        prop_assert!(!matches!(v, Verdict::Irreducible { .. }), "{} certified irreducible", prim);
    }

    #[test]
    fn hilbert_symmetry(n in 2usize..=4, d in prop::collection::vec(1u32..=5, 4), t in -3i64..12) {
        let dv = DegreeVector::new(n, &d[..n]).unwrap();
        prop_assert_eq!(hilbert_value(&dv, t), hilbert_value(&dv, dv.rho() - t));
    }

    #[test]
    fn scaling_a_form_scales_delta(coeffs in prop::collection::vec(-7i64..=7, 7), lambda in -4i64..=4, pick in 0usize..4) {
        prop_assume!(lambda != 0);
        let dv = DegreeVector::new(2, &[3, 2]).unwrap();
        let sets = enumerate_s(&dv, 3, 10, 0).unwrap();
        let s = &sets[pick % sets.len()];
        let u = x_universe(2);
        let form = |c: &[i64], d: u32| -> ZPoly {
            let terms = (0..=d).map(|k| (Monomial::from_exponents(&[(d - k) as u16, k as u16]), BigInt::from(c[k as usize])));
            Polynomial::from_terms(&u, terms)
        };
        let q1 = form(&coeffs[..4], 3);
        let q2 = form(&coeffs[4..], 2);
        prop_assume!(!q1.is_zero() && !q2.is_zero());
        let delta = |a: ZPoly, b: ZPoly| -> BigInt {
            let sys = PolySystem::new(&u, vec![a, b]).unwrap();
            match delta_of_specialization(&sys, s) {
                Ok(v) => v.as_constant().unwrap(),
                Err(subres_core::Error::GenericRankDeficient) => BigInt::zero(),
                Err(e) => panic!("{e}"),
            }
        };
        let base = delta(q1.clone(), q2.clone());
        let scaled = delta(q1.scale(&BigInt::from(lambda)), q2);
        // degree 1 in the coefficients of the cubic
        prop_assert_eq!(scaled, base * BigInt::from(lambda));
    }
}

/// Swapping the two forms swaps the coefficient groups and nothing else.
#[test]
fn form_order_does_not_matter() {
    let a = build_generic_system(&DegreeVector::new(2, &[3, 2]).unwrap()).unwrap();
    let b = build_generic_system(&DegreeVector::new(2, &[2, 3]).unwrap()).unwrap();
    for s in enumerate_s(a.degree_vector(), 3, 10, 0).unwrap() {
        let da = subresultant(&a, &s).unwrap().delta;
        let sb = MonomialSet::parse(b.degree_vector(), 3, s.to_string().trim_matches(|c| c == '{' || c == '}')).unwrap();
        let db = subresultant(&b, &sb).unwrap().delta;
        let renamed = rename_swapping(&db, a.universe());
        assert!(renamed == da || renamed == -&da, "S = {s}");
    }
}

fn rename_swapping(p: &ZPoly, target: &Arc<VarUniverse>) -> ZPoly {
    let src = p.universe();
    let map: Vec<usize> = src
        .names()
        .iter()
        .map(|n| {
            let m = if n.starts_with("c1_") {
                n.replacen("c1_", "c2_", 1)
            } else if n.starts_with("c2_") {
                n.replacen("c2_", "c1_", 1)
            } else {
                n.clone()
            };
            target.var(&m).unwrap()
        })
        .collect();
    let terms = p.terms().iter().map(|(m, c)| {
        let mut mm = Monomial::one(target.len());
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                mm.set_exponent(map[v], e);
            }
        }
        (mm, c.clone())
    });
    Polynomial::from_terms(target, terms)
}
