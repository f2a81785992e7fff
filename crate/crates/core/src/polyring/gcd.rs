//! Multivariate gcd over the integers by primitive remainder sequences,
//! recursing on the most frequent common variable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::irred::fp;

type Poly = Polynomial<BigInt>;

const CHECK_PRIME: u64 = 2_147_483_647;

/// Sign-normalized gcd; integer contents are included, so
/// `gcd(2p, 2q) = 2 gcd(p, q)`, and `gcd(p, 0)` is `p` with positive leading
/// coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch);
    }
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::ZeroPolynomial("gcd")),
        (true, false) => Ok(b.normalize_sign()),
        (false, true) => Ok(a.normalize_sign()),
        (false, false) => {
            let (ca, _, pa) = a.content_and_primitive()?;
            let (cb, _, pb) = b.content_and_primitive()?;
            let c = ca.gcd(&cb);
            let g = gcd_primitive(&pa, &pb, true)?;
            Ok(g.scale(&c))
        }
    }
}

/// gcd of a list, folding left with an early exit once the running gcd is
/// a unit.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a Poly>>(polys: I) -> Result<Option<Poly>> {
    let mut acc: Option<Poly> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.normalize_sign(),
            Some(g) => {
                if g.is_one() {
                    return Ok(Some(g));
                }
                if p.is_zero() {
                    g
                } else if g.is_zero() {
                    p.normalize_sign()
                } else {
                    gcd(&g, p)?
                }
            }
        });
    }
    Ok(acc)
}

fn monomial_content(p: &Poly) -> Monomial {
    let mut it = p.terms().iter();
    let first = it.next().unwrap().0.clone();
    it.fold(first, |acc, (m, _)| acc.gcd(m))
}

fn divide_by_monomial(p: &Poly, m: &Monomial) -> Poly {
    let terms = p.terms().iter().map(|(t, c)| (m.quotient_of(t).unwrap(), c.clone())).collect();
    Polynomial::from_sorted_unchecked(p.universe(), terms)
}

// Both inputs primitive and nonzero; result primitive with positive leading
// coefficient.
fn gcd_primitive(a: &Poly, b: &Poly, top: bool) -> Result<Poly> {
    let u = a.universe().clone();
    let ma = monomial_content(a);
    let mb = monomial_content(b);
    let mg = ma.gcd(&mb);
    let mono = Polynomial::monomial(&u, mg, BigInt::one());
    let a = divide_by_monomial(a, &ma).normalize_sign();
    let b = divide_by_monomial(b, &mb).normalize_sign();
    if a.is_constant() || b.is_constant() {
        return Ok(mono);
    }
    if a == b {
        return Ok(&mono * &a);
    }
    if top && restricted_gcd_degree(&a, &b, 0x5eed) == Some(0) {
        return Ok(mono);
    }
    let core = gcd_no_monomial(&a, &b)?;
    Ok((&mono * &core).normalize_sign())
}

fn gcd_no_monomial(a: &Poly, b: &Poly) -> Result<Poly> {
    let u = a.universe().clone();
    if a.is_constant() || b.is_constant() {
        return Ok(Polynomial::one(&u));
    }
    if a.len() <= b.len() && a.divides(b)? {
        return Ok(a.normalize_sign());
    }
    if b.len() < a.len() && b.divides(a)? {
        return Ok(b.normalize_sign());
    }
    let sa = a.support_vars();
    let sb = b.support_vars();
    let only_a: Vec<usize> = sa.iter().copied().filter(|v| !sb.contains(v)).collect();
    let only_b: Vec<usize> = sb.iter().copied().filter(|v| !sa.contains(v)).collect();
    if !only_a.is_empty() {
        // a common divisor cannot involve variables absent from b
        let ca = content_in(a, &only_a)?;
        return gcd_primitive_any(&ca, b);
    }
    if !only_b.is_empty() {
        let cb = content_in(b, &only_b)?;
        return gcd_primitive_any(a, &cb);
    }
    let v = most_frequent_var(a, b, &sa);
    let ca = content_in(a, &[v])?;
    let cb = content_in(b, &[v])?;
    let gc = gcd_primitive_any(&ca, &cb)?;
    let mut x = a.exact_divide(&ca)?;
    let mut y = b.exact_divide(&cb)?;
    if x.degree_in(v) < y.degree_in(v) {
        std::mem::swap(&mut x, &mut y);
    }
    while y.degree_in(v) > 0 {
        let r = pseudo_remainder(&x, &y, v)?;
        if r.is_zero() {
            break;
        }
        x = y;
        y = primitive_in(&r, v)?;
    }
    let pp = if y.degree_in(v) == 0 { Polynomial::one(&u) } else { y.normalize_sign() };
    Ok((&gc * &pp).normalize_sign())
}

// gcd of arbitrary nonzero inputs, integer contents stripped
fn gcd_primitive_any(a: &Poly, b: &Poly) -> Result<Poly> {
    let (_, _, pa) = a.content_and_primitive()?;
    let (_, _, pb) = b.content_and_primitive()?;
    gcd_primitive(&pa, &pb, false)
}

/// Content with respect to `vars`: the gcd of the coefficients when `p` is
/// viewed as a polynomial in `vars`, integer content removed.
fn content_in(p: &Poly, vars: &[usize]) -> Result<Poly> {
    let parts = p.split_by_vars(vars);
    let mut coeffs: Vec<Poly> = parts.into_values().collect();
    coeffs.sort_by_key(|c| c.len());
    let mut acc: Option<Poly> = None;
    for c in &coeffs {
        acc = Some(match acc {
            None => c.content_and_primitive()?.2,
            Some(g) if g.is_constant() => return Ok(Polynomial::one(p.universe())),
            Some(g) => gcd_primitive_any(&g, c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Polynomial::one(p.universe())))
}

fn primitive_in(p: &Poly, v: usize) -> Result<Poly> {
    let c = content_in(p, &[v])?;
    let q = p.exact_divide(&c)?;
    Ok(q.content_and_primitive()?.2)
}

fn most_frequent_var(a: &Poly, b: &Poly, candidates: &[usize]) -> usize {
    let count = |v: usize| {
        a.terms().iter().filter(|(m, _)| m.exponent(v) > 0).count()
            + b.terms().iter().filter(|(m, _)| m.exponent(v) > 0).count()
    };
    *candidates.iter().max_by_key(|&&v| (count(v), std::cmp::Reverse(v))).unwrap()
}

/// Pseudo-remainder of `x` by `y` as polynomials in `v`.
pub(crate) fn pseudo_remainder(x: &Poly, y: &Poly, v: usize) -> Result<Poly> {
    let u = x.universe();
    let dy = y.degree_in(v);
    let coeff_at = |p: &Poly, d: u32| -> Poly {
        let terms: Vec<_> = p
            .terms()
            .iter()
            .filter(|(m, _)| m.exponent(v) as u32 == d)
            .map(|(m, c)| {
                let mut mm = m.clone();
                mm.set_exponent(v, 0);
                (mm, c.clone())
            })
            .collect();
        Polynomial::from_terms(u, terms)
    };
    let lc_y = coeff_at(y, dy);
    let mut r = x.clone();
    while !r.is_zero() && r.degree_in(v) >= dy {
        let dr = r.degree_in(v);
        let lc_r = coeff_at(&r, dr);
        let shift = Monomial::var(u.len(), v, (dr - dy) as u16);
        let t = lc_r.mul_term(&shift, &BigInt::one());
        r = &(&lc_y * &r) - &(&t * y);
        if !r.is_zero() {
            // keep coefficient growth in check
            let (_, _, pr) = r.content_and_primitive()?;
            r = pr;
        }
    }
    Ok(r)
}

/// Degree of the gcd of the restrictions of `a` and `b` to a random line,
/// modulo a large prime. It bounds the total degree of the true gcd from
/// above. `None` if the restriction dropped the degree of either input.
pub fn restricted_gcd_degree(a: &Poly, b: &Poly, seed: u64) -> Option<u32> {
    let p = CHECK_PRIME;
    let n = a.universe().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dir: Vec<u64> = (0..n).map(|_| rng.gen_range(1..p)).collect();
    let off: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
    let fa = restrict_to_line(a, &dir, &off, p)?;
    let fb = restrict_to_line(b, &dir, &off, p)?;
    fp::degree(&fp::gcd(&fa, &fb, p)).map(|d| d as u32)
}

/// `p(dir * s + off)` modulo `prime`, or `None` if its degree is below the
/// total degree of `p`.
pub(crate) fn restrict_to_line(poly: &Poly, dir: &[u64], off: &[u64], prime: u64) -> Option<fp::Fpx> {
    let d = poly.total_degree()? as usize;
    let pb = BigInt::from(prime);
    let residues: Vec<u64> = poly
        .terms()
        .iter()
        .map(|(_, c)| {
            use num_traits::ToPrimitive;
            c.mod_floor(&pb).to_u64().unwrap()
        })
        .collect();
    let n = dir.len();
    let mut values = Vec::with_capacity(d + 1);
    let mut point = vec![0u64; n];
    for s in 0..=d as u64 {
        for k in 0..n {
            point[k] = (dir[k] * s + off[k]) % prime;
        }
        let mut sum = 0u64;
        for ((m, _), &r) in poly.terms().iter().zip(&residues) {
            let mut t = r;
            for (k, &e) in m.exponents().iter().enumerate() {
                if e != 0 {
                    t = t * fp::pow_mod(point[k], e as u64, prime) % prime;
                }
            }
            sum = (sum + t) % prime;
        }
        values.push(sum);
    }
    let f = fp::interpolate(&values, prime);
    if fp::degree(&f) == Some(d) {
        Some(f)
    } else {
        None
    }
}
