use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::points::PointsIdeal;
use crate::error::{Error, Result};
use crate::hilbert::{forms_dim, thresholds, DegreeVector};
use crate::linalg::rank_integer;
use crate::polyring::{monomials_of_degree, Monomial, ZPoly};
use crate::subres::{build_macaulay_map, delta_of_specialization, validate_s, MonomialSet, PolySystem, X_GROUP};

/// Degrees past `nu` on which the Hilbert function is checked to stay at `a`.
pub const CHAIN_WINDOW: u32 = 2;

/// The three predicates `Δ(Q) ≠ 0`, `H_(Q)(nu) = a` and `H_(Q)(t) = a` for
/// `nu <= t <= nu + CHAIN_WINDOW`, with the Hilbert values behind them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub delta_nonzero: bool,
    pub hilbert_at_nu: bool,
    pub window_stable: bool,
    pub a: u64,
    /// `(t, H_(Q)(t))` over the window.
    pub hilbert: Vec<(u32, u64)>,
}

impl ChainRecord {
    /// Each predicate implies the next.
    pub fn consistent(&self) -> bool {
        (!self.delta_nonzero || self.hilbert_at_nu) && (!self.hilbert_at_nu || self.window_stable)
    }
}

fn coefficient_row(p: &ZPoly, x_vars: &[usize], basis: &[Vec<u16>]) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); basis.len()];
    for (m, c) in p.terms() {
        let e: Vec<u16> = x_vars.iter().map(|&v| m.exponent(v)).collect();
        let k = basis.iter().position(|b| *b == e).expect("homogeneous of the basis degree");
        row[k] = c.clone();
    }
    row
}

/// Checks that `q` is a nonzero form of degree `d` with constant coefficients
/// lying in the degree-`d` part of the ideal.
fn check_in_ideal(q: &ZPoly, ideal: &PointsIdeal, x_vars: &[usize], k: usize) -> Result<u32> {
    if q.is_zero() {
        return Err(Error::InvalidSpecialization(format!("form {} is zero", k + 1)));
    }
    let u = q.universe();
    if (0..u.len()).any(|v| !x_vars.contains(&v) && q.degree_in(v) > 0) {
        return Err(Error::InvalidSpecialization(format!("form {} has non-constant coefficients", k + 1)));
    }
    if !q.is_homogeneous() {
        return Err(Error::InvalidSpecialization(format!("form {} is not homogeneous", k + 1)));
    }
    let d = q.total_degree().expect("nonzero");
    let delta = ideal.delta();
    if d < delta {
        return Err(Error::InvalidSpecialization(format!("form {} has degree {d} below {delta}", k + 1)));
    }
    let n = x_vars.len();
    let basis = monomials_of_degree(n, d);
    let mut rows = Vec::new();
    for mult in monomials_of_degree(n, d - delta) {
        let m = Monomial::from_exponents(&mult);
        for g in ideal.generators() {
            let prod = g.mul_term(&m, &BigInt::from(1));
            rows.push(coefficient_row(&prod, &(0..n).collect::<Vec<_>>(), &basis));
        }
    }
    let before = rank_integer(&rows);
    rows.push(coefficient_row(q, x_vars, &basis));
    if rank_integer(&rows) != before {
        return Err(Error::InvalidSpecialization(format!("form {} is not in the ideal of the points", k + 1)));
    }
    Ok(d)
}

/// Evaluates the three predicates for forms `Q_i` taken from the ideal.
/// Hilbert values are `dim R_t` minus the rank of the degree-`t`
/// multiplication map of the `Q_i`.
pub fn implication_chain_check(qs: &[ZPoly], s: &MonomialSet, ideal: &PointsIdeal) -> Result<ChainRecord> {
    let Some(first) = qs.first() else {
        return Err(Error::InvalidSpecialization("no forms".into()));
    };
    let u = first.universe().clone();
    let x_vars = u
        .group(X_GROUP)
        .ok_or_else(|| Error::InvalidSpecialization(format!("no `{X_GROUP}` group")))?
        .vars
        .clone();
    if x_vars.len() != ideal.n() || qs.len() != ideal.n() {
        return Err(Error::InvalidSpecialization(format!(
            "{} forms in {} variables for an ideal in {} variables",
            qs.len(),
            x_vars.len(),
            ideal.n()
        )));
    }
    let degrees = qs.iter().enumerate().map(|(k, q)| check_in_ideal(q, ideal, &x_vars, k)).collect::<Result<Vec<_>>>()?;
    let dv = DegreeVector::new(ideal.n(), &degrees)?;
    let nu = s.nu();
    let s = validate_s(&dv, nu, s.exponents().to_vec())?;
    let a = thresholds(&dv)?
        .a(nu as i64)
        .ok_or_else(|| Error::OutOfRange(format!("nu = {nu} is outside the degree range")))?;
    if a != ideal.a() as u64 || ideal.delta() as i64 != dv.rho() - nu as i64 + 1 {
        return Err(Error::Precondition(format!(
            "ideal of {} points in degree {} does not match a = {a} at nu = {nu}",
            ideal.a(),
            ideal.delta()
        )));
    }
    let sys = PolySystem::new(&u, qs.to_vec())?;
    let delta_nonzero = match delta_of_specialization(&sys, &s) {
        Ok(v) => !v.is_zero(),
        Err(Error::GenericRankDeficient) => false,
        Err(e) => return Err(e),
    };
    let mut hilbert = Vec::new();
    for t in nu..=nu + CHAIN_WINDOW {
        let mac = build_macaulay_map(&sys, t);
        let rank = rank_integer(&mac.matrix().to_integers()?) as u64;
        hilbert.push((t, forms_dim(dv.n(), t as i64) - rank));
    }
    Ok(ChainRecord {
        delta_nonzero,
        hilbert_at_nu: hilbert[0].1 == a,
        window_stable: hilbert.iter().all(|&(_, h)| h == a),
        a,
        hilbert,
    })
}
