//! One-sided irreducibility oracle for integer polynomials.
//!
//! `Reducible` is only claimed with a factor that divides exactly, and
//! `Irreducible` only when factor-degree patterns modulo several primes
//! leave no room for a proper factor. Everything else is `Inconclusive`.
//!
//! The pattern argument runs on the restriction `f(s) = p(a s + c)` to a
//! random line with integer `a`, `c`. If the top form of `p` does not vanish
//! at `a`, a factorization `p = g h` restricts to one of `f` with the same
//! degrees. Modulo a prime not dividing the leading coefficient of `f` and
//! keeping `f` squarefree, the degree of every rational factor of `f` is a
//! sum of degrees of irreducible factors mod that prime. When no degree in
//! `1..deg f` survives the intersection over primes, `f` is irreducible over
//! the rationals, hence so is `p`, and with content 1 also over the
//! integers.

pub mod fp;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{restrict_to_line, Monomial, Polynomial, ZPoly};

/// `sign * base^exponent`, with `exponent` maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerForm {
    pub base: ZPoly,
    pub exponent: u32,
    pub negated: bool,
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Candidate `k`-th root of `p` built term by term from the top: with
/// `b = t_1 + ... + t_j` fixed, the leading term of `p - b^k` must be
/// `k t_1^{k-1} t_{j+1}`. The result is verified by expansion.
fn kth_root(p: &ZPoly, k: u32) -> Option<ZPoly> {
    let u = p.universe();
    let (lm, lc) = p.leading()?;
    let root_m = lm.root(k as u16)?;
    let root_c = lc.nth_root(k);
    if root_c.pow(k) != *lc {
        return None;
    }
    let mut b = Polynomial::monomial(u, root_m.clone(), root_c.clone());
    let lead_pow = root_m.pow((k - 1) as u16);
    let lead_coeff = BigInt::from(k) * root_c.pow(k - 1);
    // a root has at most as many terms as there are monomials between its
    // leading and trailing terms; the cap only guards against runaway loops
    let cap = 4 * p.len() + 16;
    for _ in 0..cap {
        let r = p - &b.pow(k);
        let Some((rm, rc)) = r.leading() else { return Some(b) };
        let qm = lead_pow.quotient_of(rm)?;
        if qm >= root_m {
            return None;
        }
        let (qc, rem) = num_integer::Integer::div_rem(rc, &lead_coeff);
        if !rem.is_zero() {
            return None;
        }
        b = &b + &Polynomial::monomial(u, qm, qc);
    }
    None
}

/// Largest `k` and base `b` with `p = +-b^k`; `k = 1` when `p` is not a
/// proper power.
pub fn power_form(p: &ZPoly) -> Result<PowerForm> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("power_form"));
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial("power_form"));
    }
    let negated = p.leading_coeff().is_some_and(|c| c.is_negative());
    let q = if negated { -p } else { p.clone() };
    let mut g = q.total_degree().unwrap();
    for v in 0..p.universe().len() {
        g = gcd_u32(g, q.degree_in(v));
        g = gcd_u32(g, q.min_degree_in(v));
    }
    for k in (2..=g).rev() {
        if g % k != 0 {
            continue;
        }
        if let Some(b) = kth_root(&q, k) {
            // -b^k = (-b)^k for odd k
            if negated && k % 2 == 1 {
                return Ok(PowerForm { base: -b, exponent: k, negated: false });
            }
            return Ok(PowerForm { base: b, exponent: k, negated });
        }
    }
    Ok(PowerForm { base: q, exponent: 1, negated })
}

/// Exact divisibility of `p` by `candidate`.
pub fn divides(candidate: &ZPoly, p: &ZPoly) -> Result<bool> {
    candidate.divides(p)
}

/// Factor-degree pattern of the line restriction modulo one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePattern {
    pub prime: u64,
    pub factor_degrees: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternCertificate {
    /// Restriction attempt (0-based) that produced the certificate.
    pub line: usize,
    pub degree: usize,
    pub patterns: Vec<PrimePattern>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible { certificate: PatternCertificate },
    Reducible { witness: ZPoly, cofactor: ZPoly },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Irreducible { .. } => "irreducible",
            Verdict::Reducible { .. } => "reducible",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// First prime of the pattern search.
pub const FIRST_PRIME: u64 = 10007;
/// Primes tried per line.
pub const PRIMES_PER_LINE: usize = 16;
/// Line restrictions tried before giving up.
pub const LINE_ATTEMPTS: usize = 3;
const LINE_COORD_BOUND: i64 = 1000;

fn reducible(p: &ZPoly, witness: ZPoly) -> Result<Verdict> {
    let witness = witness.normalize_sign();
    let cofactor = p.exact_divide(&witness)?;
    Ok(Verdict::Reducible { witness, cofactor })
}

/// Subset sums of `degs` strictly between 0 and `total`, as a bitmask.
fn proper_subset_sums(degs: &[usize], total: usize) -> Vec<bool> {
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &d in degs {
        for s in (d..=total).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach[0] = false;
    reach[total] = false;
    reach
}

fn residue(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Irreducibility verdict for a nonconstant polynomial of content 1.
pub fn irreducibility_verdict(p: &ZPoly, seed: u64) -> Result<Verdict> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("irreducibility_verdict"));
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial("irreducibility_verdict"));
    }
    let content = p.integer_content();
    if !content.is_one() {
        return Err(Error::ContentNotOne(content.to_string()));
    }
    let pf = power_form(p)?;
    if pf.exponent >= 2 {
        return reducible(p, pf.base);
    }
    let n = p.universe().len();
    let common = p.terms().iter().skip(1).fold(p.terms()[0].0.clone(), |g, (m, _)| g.gcd(m));
    if let Some(v) = (0..n).find(|&v| common.exponent(v) > 0) {
        if p.len() > 1 || p.total_degree() != Some(1) {
            return reducible(p, Polynomial::monomial(p.universe(), Monomial::var(n, v, 1), BigInt::one()));
        }
    }
    let degree = p.total_degree().unwrap() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_reason = String::new();
    for line in 0..LINE_ATTEMPTS {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-LINE_COORD_BOUND..=LINE_COORD_BOUND)).collect();
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-LINE_COORD_BOUND..=LINE_COORD_BOUND)).collect();
        let mut alive = vec![true; degree + 1];
        alive[0] = false;
        alive[degree] = false;
        let mut patterns = Vec::new();
        for prime in fp::primes_from(FIRST_PRIME, PRIMES_PER_LINE) {
            let dir: Vec<u64> = a.iter().map(|&x| residue(x, prime)).collect();
            let off: Vec<u64> = c.iter().map(|&x| residue(x, prime)).collect();
            // None: the leading coefficient vanishes modulo this prime
            let Some(f) = restrict_to_line(p, &dir, &off, prime) else { continue };
            if !fp::is_squarefree(&f, prime) {
                continue;
            }
            let degs = fp::factor_degrees_squarefree(&f, prime);
            let sums = proper_subset_sums(&degs, degree);
            for (k, s) in sums.iter().enumerate() {
                alive[k] &= *s;
            }
            patterns.push(PrimePattern { prime, factor_degrees: degs });
            if !alive.iter().any(|&x| x) {
                return Ok(Verdict::Irreducible { certificate: PatternCertificate { line, degree, patterns } });
            }
        }
        last_reason = if patterns.is_empty() {
            "no usable prime for the line restriction (degree drop or repeated factor)".into()
        } else {
            let splits: Vec<usize> = (1..degree).filter(|&k| alive[k]).collect();
            format!("factor degrees {splits:?} consistent modulo {} primes", patterns.len())
        };
    }
    Ok(Verdict::Inconclusive { reason: last_reason })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarUniverse;

    fn u() -> std::sync::Arc<VarUniverse> {
        VarUniverse::from_groups(&[
            ("x", vec!["x1", "x2"]),
            ("a", vec!["a0", "a1", "a2"]),
            ("b", vec!["b0", "b1", "b2"]),
            ("c", vec!["c0", "c11", "c12", "c21", "c22"]),
        ])
        .unwrap()
    }

    #[test]
    fn power_form_examples() {
        let u = u();
        let p = |s: &str| Polynomial::parse(&u, s).unwrap();
        assert_eq!(power_form(&p("c0^2")).unwrap(), PowerForm { base: p("c0"), exponent: 2, negated: false });
        assert_eq!(power_form(&p("a0*b2 - a2*b0")).unwrap().exponent, 1);
        let det = p("c11*c22 - c12*c21");
        let pf = power_form(&det.pow(2)).unwrap();
        assert_eq!((pf.base.normalize_sign(), pf.exponent), (det.normalize_sign(), 2));
        let pf = power_form(&p("-(x1 + x2)^3")).unwrap();
        assert_eq!(pf.exponent, 3);
        assert_eq!(pf.base.pow(3), p("-(x1 + x2)^3"));
        assert_eq!(power_form(&p("x1^4 - x2^4")).unwrap().exponent, 1);
        assert_eq!(power_form(&p("(x1^2 + 3*x2^2)^4")).unwrap().exponent, 4);
        assert!(power_form(&p("7")).is_err());
    }

    #[test]
    fn verdict_examples() {
        let u = u();
        let p = |s: &str| Polynomial::parse(&u, s).unwrap();
        assert!(matches!(irreducibility_verdict(&p("a0*b2 - a2*b0"), 1).unwrap(), Verdict::Irreducible { .. }));
        match irreducibility_verdict(&p("c0^2"), 1).unwrap() {
            Verdict::Reducible { witness, .. } => assert_eq!(witness, p("c0")),
            v => panic!("{v:?}"),
        }
        let delta = p("c11*c22 - c12*c21");
        match irreducibility_verdict(&delta.pow(2), 1).unwrap() {
            Verdict::Reducible { witness, .. } => assert_eq!(witness, delta.normalize_sign()),
            v => panic!("{v:?}"),
        }
        // irreducible over Q but not over C; either answer is sound
        assert!(!matches!(irreducibility_verdict(&p("x1^2 + x2^2"), 1).unwrap(), Verdict::Reducible { .. }));
        assert!(matches!(irreducibility_verdict(&p("x1*x2 + x1^2"), 1).unwrap(), Verdict::Reducible { .. }));
        let prod = p("(a0 + a1*b2 - 3*c0)*(a2^2 + b0*b1 + c12)");
        assert!(!matches!(irreducibility_verdict(&prod, 4).unwrap(), Verdict::Irreducible { .. }));
        assert!(matches!(irreducibility_verdict(&p("2*c0 + 4"), 1), Err(Error::ContentNotOne(_))));
        assert!(matches!(irreducibility_verdict(&p("5"), 1), Err(Error::ConstantPolynomial(_))));
    }

    #[test]
    fn divides_examples() {
        let u = u();
        let p = |s: &str| Polynomial::parse(&u, s).unwrap();
        assert!(divides(&p("c0"), &p("c0^2")).unwrap());
        assert!(divides(&p("x1 - x2"), &p("x1^2 - x2^2")).unwrap());
        assert!(!divides(&p("c0"), &p("c0*c11 + 1")).unwrap());
    }
}
