//! Sparse exact multivariate polynomials over the integers and the
//! rationals.
//!
//! Every polynomial lives in a [`VarUniverse`], an ordered list of variable
//! names partitioned into groups (the geometric variables `x1..xn`, and one
//! coefficient group per input polynomial). Terms are kept in descending
//! graded reverse lexicographic order with `x1 > x2 > ...`, with no zero
//! coefficients, so structural equality is mathematical equality.

mod gcd;
mod monomial;
mod parse;
mod poly;
mod serial;
mod universe;

pub use gcd::{gcd, gcd_all, restricted_gcd_degree};
pub(crate) use gcd::restrict_to_line;
pub use monomial::{monomials_of_degree, Monomial};
pub use parse::parse_monomial_list;
pub use poly::{format_monomial, Coeff, GroupDegree, Polynomial, Value};
pub use serial::{PolyDoc, TermDoc};
pub use universe::{VarGroup, VarUniverse};

/// Integer polynomial, the default coefficient domain.
pub type ZPoly = Polynomial<num_bigint::BigInt>;
/// Rational polynomial, used only inside field-mode computations.
pub type QPoly = Polynomial<num_rational::BigRational>;

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn universe() -> std::sync::Arc<VarUniverse> {
        VarUniverse::from_groups(&[
            ("x", vec!["x1", "x2"]),
            ("c", vec!["c0", "c1", "c2"]),
            ("t", vec!["t"]),
            ("a", vec!["a0", "a1", "a2"]),
            ("b", vec!["b0", "b1", "b2"]),
        ])
        .unwrap()
    }

    fn p(s: &str) -> ZPoly {
        Polynomial::parse(&universe(), s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x1 + x2") * &p("x1 - x2"), p("x1^2 - x2^2"));
        let q = p("3*x1*c0 - 7");
        assert_eq!(&q + &Polynomial::zero(&universe()), q);
        assert_eq!(&p("c0*x1^2 + c1*x1*x2") * &p("x2"), p("c0*x1^2*x2 + c1*x1*x2^2"));
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let other = VarUniverse::from_groups(&[("x", vec!["x1", "x2"])]).unwrap();
        let a = p("x1");
        let b = Polynomial::parse(&other, "x1").unwrap();
        assert!(a.try_add(&b).is_err());
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p("x1^2 - x2^2").exact_divide(&p("x1 - x2")).unwrap(), p("x1 + x2"));
        let q = p("5*c0*x1 - x2^3");
        assert_eq!(q.exact_divide(&Polynomial::one(&universe())).unwrap(), q);
        let sq = p("c0^2*x1^2 + 2*c0*c1*x1*x2 + c1^2*x2^2");
        let r = sq.exact_divide(&p("c0*x1 + c1*x2")).unwrap();
        assert_eq!(r, p("c0*x1 + c1*x2"));
        assert_eq!(&r * &p("c0*x1 + c1*x2"), sq);
        assert_eq!(p("x1^2 + 1").exact_divide(&p("x1 - x2")), Err(crate::Error::NotExactDivision));
        assert_eq!(p("3*x1").exact_divide(&p("2")), Err(crate::Error::NotExactDivision));
    }

    #[test]
    fn content_examples() {
        let (c, s, pp) = p("2*a0*b2 - 2*a2*b0").content_and_primitive().unwrap();
        // a2*b0 leads a0*b2 in grevlex
        assert_eq!((c, s), (BigInt::from(2), -1));
        assert_eq!(pp, p("a2*b0 - a0*b2"));
        let (c, s, pp) = p("-x1").content_and_primitive().unwrap();
        assert_eq!((c, s), (BigInt::from(1), -1));
        assert_eq!(pp, p("x1"));
        let (c, _, pp) = p("6*x1^2 + 9*x2^2").content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(3));
        assert_eq!(pp, p("2*x1^2 + 3*x2^2"));
        assert!(Polynomial::zero(&universe()).content_and_primitive().is_err());
    }

    #[test]
    fn specialization_examples() {
        let d = p("a0*b2 - a2*b0");
        let one = |n: i64| Value::Const(BigInt::from(n));
        let s = d.specialize(&[("a0", one(1)), ("a2", one(0)), ("b0", one(0)), ("b2", one(1))]).unwrap();
        assert!(s.is_one());
        let p1 = p("c0*x1^2 + c1*x1*x2 + c2*x2^2");
        let z = p1.specialize(&[("c0", one(0)), ("c1", one(0)), ("c2", one(0))]).unwrap();
        assert!(z.is_zero());
        let t = p("c0*c1")
            .specialize(&[("c0", Value::Poly(p("t^2"))), ("c1", Value::Poly(p("t")))])
            .unwrap();
        assert_eq!(t, p("t^3"));
        assert!(matches!(d.specialize(&[("zz", one(1))]), Err(crate::Error::UnknownVariable(_))));
    }

    #[test]
    fn rational_specialization() {
        use num_rational::BigRational;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let q = p("2*c0*x1 + x2").specialize_rational(&[("c0", half)]).unwrap();
        let (z, d) = q.clear_denominators();
        assert_eq!(d, BigInt::from(1));
        assert_eq!(z, p("x1 + x2"));
    }

    #[test]
    fn multidegree_examples() {
        let md = p("a0*b2 - a2*b0").multidegree_by_group().unwrap();
        let find = |md: &[GroupDegree], g: &str| md.iter().find(|d| d.group == g).unwrap().clone();
        assert_eq!(find(&md, "a").degree, 1);
        assert_eq!(find(&md, "b").degree, 1);
        assert!(find(&md, "a").homogeneous && find(&md, "b").homogeneous);
        let md = p("c0^2").multidegree_by_group().unwrap();
        assert_eq!(find(&md, "c").degree, 2);
        let md = p("x1 + c0").multidegree_by_group().unwrap();
        assert_eq!(find(&md, "x").degree, 1);
        assert_eq!(find(&md, "c").degree, 1);
        assert!(!find(&md, "x").homogeneous);
        assert!(ZPoly::zero(&universe()).multidegree_by_group().is_err());
    }
}
