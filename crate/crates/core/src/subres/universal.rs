use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::sets::MonomialSet;
use super::system::{coefficient_name, GenericSystem, X_GROUP};
use crate::error::{Error, Result};
use crate::linalg::{rank_over_q, QMatrix};
use crate::polyring::{monomials_of_degree, QPoly, ZPoly};

/// Coefficients of a form in `x1..xn` with constant rational coefficients,
/// keyed by exponent vector, after checking homogeneity of degree `d`.
fn form_coefficients(q: &QPoly, n: usize, d: u32) -> Result<HashMap<Vec<u16>, BigRational>> {
    let u = q.universe();
    let xs = u
        .group(X_GROUP)
        .ok_or_else(|| Error::InvalidSpecialization(format!("no `{X_GROUP}` group")))?
        .vars
        .clone();
    if xs.len() != n {
        return Err(Error::InvalidSpecialization(format!("{} x variables, expected {n}", xs.len())));
    }
    if q.is_zero() {
        return Err(Error::InvalidSpecialization("zero form".into()));
    }
    let mut out = HashMap::new();
    for (m, c) in q.terms() {
        if (0..u.len()).any(|v| !xs.contains(&v) && m.exponent(v) != 0) {
            return Err(Error::InvalidSpecialization("coefficients must be constants".into()));
        }
        let e: Vec<u16> = xs.iter().map(|&v| m.exponent(v)).collect();
        let deg: u32 = e.iter().map(|&k| k as u32).sum();
        if deg != d {
            return Err(Error::InvalidSpecialization(format!("term of degree {deg} in a form of degree {d}")));
        }
        out.insert(e, c.clone());
    }
    Ok(out)
}

/// Whether the multiples `m' Q_i` of degree `nu` together with `S` span the
/// whole degree-`nu` space, decided by exact rank over the rationals.
pub fn universal_property_check(sys: &GenericSystem, qs: &[QPoly], s: &MonomialSet) -> Result<bool> {
    let n = sys.n();
    let d = sys.degree_vector().degrees();
    if qs.len() != d.len() {
        return Err(Error::InvalidSpecialization(format!("{} forms for a system of {}", qs.len(), d.len())));
    }
    let coeffs = qs.iter().zip(d).map(|(q, &di)| form_coefficients(q, n, di)).collect::<Result<Vec<_>>>()?;
    let nu = s.nu();
    let basis = monomials_of_degree(n, nu);
    let mut vectors: Vec<Vec<BigRational>> = Vec::new();
    for (i, &di) in d.iter().enumerate() {
        if nu < di {
            continue;
        }
        for mp in monomials_of_degree(n, nu - di) {
            let v = basis
                .iter()
                .map(|m| {
                    let alpha: Option<Vec<u16>> = m.iter().zip(&mp).map(|(&a, &b)| a.checked_sub(b)).collect();
                    alpha.and_then(|a| coeffs[i].get(&a).cloned()).unwrap_or_else(BigRational::zero)
                })
                .collect();
            vectors.push(v);
        }
    }
    for e in s.exponents() {
        vectors.push(basis.iter().map(|m| if m == e { BigRational::one() } else { BigRational::zero() }).collect());
    }
    let q = QMatrix::new(vectors, basis.len())?;
    Ok(rank_over_q(&q) == basis.len())
}

/// Assignment of every coefficient variable `c_{i,alpha}` to the coefficient
/// of `x^alpha` in `Q_i`.
pub fn specialization_assignment(sys: &GenericSystem, qs: &[QPoly]) -> Result<Vec<(String, BigRational)>> {
    let n = sys.n();
    let d = sys.degree_vector().degrees();
    if qs.len() != d.len() {
        return Err(Error::InvalidSpecialization(format!("{} forms for a system of {}", qs.len(), d.len())));
    }
    let mut out = Vec::new();
    for (i, (q, &di)) in qs.iter().zip(d).enumerate() {
        let c = form_coefficients(q, n, di)?;
        for alpha in monomials_of_degree(n, di) {
            let v = c.get(&alpha).cloned().unwrap_or_else(BigRational::zero);
            out.push((coefficient_name(i + 1, &alpha), v));
        }
    }
    Ok(out)
}

/// Value of a polynomial in the coefficient variables under an assignment
/// that covers all of them.
pub fn evaluate_at(p: &ZPoly, assignment: &[(String, BigRational)]) -> Result<BigRational> {
    let pairs: Vec<(&str, BigRational)> = assignment.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    p.specialize_rational(&pairs)?
        .as_constant()
        .ok_or_else(|| Error::InvalidSpecialization("assignment leaves free variables".into()))
}
