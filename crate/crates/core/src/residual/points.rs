use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::forms_dim;
use crate::linalg::{kernel_basis_over_q, rank_integer, QMatrix};
use crate::polyring::{monomials_of_degree, Monomial, PolyDoc, Polynomial, VarUniverse, ZPoly};
use crate::subres::x_universe;

/// Draws per point before giving up on distinctness.
const DRAWS_PER_POINT: usize = 200;

/// Re-seeded attempts made by [`generic_points_ideal`].
pub const MAX_ATTEMPTS: u64 = 5;

/// Integer representatives of distinct points of projective `(n-1)`-space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    pub n: usize,
    pub seed: u64,
    pub points: Vec<Vec<i64>>,
}

impl PointSet {
    /// Validates an explicit list of coordinate vectors.
    pub fn new(n: usize, seed: u64, points: Vec<Vec<i64>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("points need n >= 2 coordinates, got {n}")));
        }
        for (k, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(Error::Dimension(format!("point {} has {} coordinates, expected {n}", k + 1, p.len())));
            }
            if p.iter().all(|&c| c == 0) {
                return Err(Error::Precondition(format!("point {} is the zero vector", k + 1)));
            }
            if let Some(j) = points[..k].iter().position(|q| proportional(p, q)) {
                return Err(Error::Precondition(format!("points {} and {} coincide projectively", j + 1, k + 1)));
            }
        }
        Ok(PointSet { n, seed, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("point sets serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: PointSet = serde_json::from_str(s).map_err(|e| Error::Serialization(e.to_string()))?;
        PointSet::new(raw.n, raw.seed, raw.points)
    }
}

fn proportional(p: &[i64], q: &[i64]) -> bool {
    (0..p.len()).all(|i| (i + 1..p.len()).all(|j| p[i] as i128 * q[j] as i128 == p[j] as i128 * q[i] as i128))
}

/// `a` distinct points with coordinates drawn uniformly from `[-bound, bound]`.
pub fn random_points(n: usize, a: usize, seed: u64, bound: i64) -> Result<PointSet> {
    if n < 2 || a < 1 || bound < 1 {
        return Err(Error::Precondition(format!("need n >= 2, a >= 1, bound >= 1; got {n}, {a}, {bound}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<i64>> = Vec::with_capacity(a);
    let mut draws = 0;
    while points.len() < a {
        if draws == DRAWS_PER_POINT * a {
            return Err(Error::NotGenericPosition(format!(
                "no {a} distinct points found in {draws} draws from [-{bound}, {bound}]^{n}"
            )));
        }
        draws += 1;
        let p: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        if p.iter().any(|&c| c != 0) && !points.iter().any(|q| proportional(&p, q)) {
            points.push(p);
        }
    }
    Ok(PointSet { n, seed, points })
}

/// `x^alpha` at an integer point.
pub(crate) fn monomial_value(point: &[i64], alpha: &[u16]) -> BigInt {
    point.iter().zip(alpha).fold(BigInt::one(), |acc, (&c, &e)| acc * BigInt::from(c).pow(e as u32))
}

/// Rows are points, columns the degree-`t` monomials in descending grevlex.
fn evaluation_rows(ps: &PointSet, t: u32) -> (Vec<Vec<u16>>, Vec<Vec<BigInt>>) {
    let basis = monomials_of_degree(ps.n, t);
    let rows = ps.points.iter().map(|p| basis.iter().map(|m| monomial_value(p, m)).collect()).collect();
    (basis, rows)
}

/// One line of the generic-position certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRow {
    pub t: u32,
    /// `dim R_t`.
    pub forms: u64,
    /// Rank of the degree-`t` evaluation matrix of the points.
    pub evaluation_rank: u64,
    /// `dim R_t - dim G_t` for the ideal generated by the degree-`delta` kernel.
    pub ideal_hilbert: u64,
    /// `min(dim R_t, a)`.
    pub expected: u64,
}

impl CertificateRow {
    pub fn holds(&self) -> bool {
        self.evaluation_rank == self.expected && self.ideal_hilbert == self.expected
    }
}

/// The degree-`delta` part of the ideal of a point set, as generators, with
/// the Hilbert-function certificate up to `t_max`.
#[derive(Clone, Debug)]
pub struct PointsIdeal {
    points: PointSet,
    delta: u32,
    generators: Vec<ZPoly>,
    certificate: Vec<CertificateRow>,
}

impl PointsIdeal {
    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn a(&self) -> usize {
        self.points.len()
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn n(&self) -> usize {
        self.points.n
    }

    /// Primitive, with positive leading coefficient, in the universe `x1..xn`.
    pub fn generators(&self) -> &[ZPoly] {
        &self.generators
    }

    pub fn certificate(&self) -> &[CertificateRow] {
        &self.certificate
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        self.generators[0].universe()
    }

    pub fn to_doc(&self) -> PointsIdealDoc {
        PointsIdealDoc {
            points: self.points.clone(),
            delta: self.delta,
            generators: self.generators.iter().map(PolyDoc::from_poly).collect(),
            certificate: self.certificate.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsIdealDoc {
    pub points: PointSet,
    pub delta: u32,
    pub generators: Vec<PolyDoc>,
    pub certificate: Vec<CertificateRow>,
}

fn degree_part(gens: &[ZPoly], n: usize, delta: u32, t: u32) -> Vec<Vec<BigInt>> {
    let basis = monomials_of_degree(n, t);
    let mut rows = Vec::new();
    if t < delta {
        return rows;
    }
    for mult in monomials_of_degree(n, t - delta) {
        let m = Monomial::from_exponents(&mult);
        for g in gens {
            let prod = g.mul_term(&m, &BigInt::one());
            let mut row = vec![BigInt::zero(); basis.len()];
            for (mono, c) in prod.terms() {
                let k = basis.iter().position(|b| b.as_slice() == mono.exponents()).expect("degree-t monomial");
                row[k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Generators of the degree-`delta` forms vanishing on `ps`, certified for
/// every `t <= t_max`: the points impose independent conditions in each
/// degree, and the ideal generated by those forms has Hilbert function
/// `min(dim R_t, a)`.
pub fn points_ideal(ps: &PointSet, delta: u32, t_max: u32) -> Result<PointsIdeal> {
    let n = ps.n;
    let a = ps.len() as u64;
    let dim = forms_dim(n, delta as i64);
    if dim <= a {
        return Err(Error::Precondition(format!(
            "dim R_{delta} = {dim} forms leave no generator vanishing at {a} points"
        )));
    }
    let (basis, rows) = evaluation_rows(ps, delta);
    let kernel = kernel_basis_over_q(&QMatrix::from_integers(&rows));
    let u = x_universe(n);
    let generators: Vec<ZPoly> = kernel
        .iter()
        .map(|v| {
            let terms = basis.iter().zip(v).map(|(m, c)| (Monomial::from_exponents(m), c.clone()));
            Polynomial::from_terms(&u, terms).normalize_sign()
        })
        .collect();
    let mut certificate = Vec::new();
    for t in 0..=t_max.max(delta) {
        let forms = forms_dim(n, t as i64);
        let evaluation_rank = rank_integer(&evaluation_rows(ps, t).1) as u64;
        let ideal_rank = rank_integer(&degree_part(&generators, n, delta, t)) as u64;
        certificate.push(CertificateRow { t, forms, evaluation_rank, ideal_hilbert: forms - ideal_rank, expected: forms.min(a) });
    }
    if let Some(bad) = certificate.iter().find(|r| !r.holds()) {
        return Err(Error::NotGenericPosition(format!(
            "degree {}: evaluation rank {}, Hilbert value {}, expected {}; retry with another seed",
            bad.t, bad.evaluation_rank, bad.ideal_hilbert, bad.expected
        )));
    }
    if generators.len() as u64 != dim - a {
        return Err(Error::Internal(format!("{} generators, expected {}", generators.len(), dim - a)));
    }
    Ok(PointsIdeal { points: ps.clone(), delta, generators, certificate })
}

/// [`random_points`] followed by [`points_ideal`], re-seeding with
/// `seed + k` for `k < MAX_ATTEMPTS` until the certificate holds.
pub fn generic_points_ideal(n: usize, a: usize, delta: u32, t_max: u32, seed: u64, bound: i64) -> Result<PointsIdeal> {
    let mut last = None;
    for k in 0..MAX_ATTEMPTS {
        match random_points(n, a, seed.wrapping_add(k), bound).and_then(|ps| points_ideal(&ps, delta, t_max)) {
            Ok(ideal) => return Ok(ideal),
            Err(e @ Error::NotGenericPosition(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, s: &str) -> ZPoly {
        Polynomial::parse(&x_universe(n), s).unwrap()
    }

    #[test]
    fn explicit_ideals() {
        let g = points_ideal(&PointSet::new(2, 0, vec![vec![1, 1]]).unwrap(), 1, 3).unwrap();
        assert_eq!(g.generators(), &[poly(2, "x1 - x2")]);
        let ps = PointSet::new(3, 0, vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let g = points_ideal(&ps, 1, 1).unwrap();
        assert_eq!(g.generators(), &[poly(3, "x3")]);
        assert!(g.certificate().iter().all(CertificateRow::holds));
        // (x3) cuts out the whole line, so its Hilbert function outgrows a = 2
        assert!(matches!(points_ideal(&ps, 1, 2), Err(Error::NotGenericPosition(_))));
        let two = PointSet::new(2, 0, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(matches!(points_ideal(&two, 1, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn collinear_points_fail_the_certificate() {
        // three points on the line x3 = 0 impose only two conditions on lines
        let ps = PointSet::new(3, 0, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]).unwrap();
        assert!(matches!(points_ideal(&ps, 2, 2), Err(Error::NotGenericPosition(_))));
    }

    #[test]
    fn random_points_are_distinct_and_reproducible() {
        let a = random_points(3, 6, 11, 3).unwrap();
        assert_eq!(a, random_points(3, 6, 11, 3).unwrap());
        assert!(PointSet::new(3, 11, a.points.clone()).is_ok());
        assert_eq!(PointSet::from_json(&a.to_json()).unwrap(), a);
        assert_eq!(random_points(2, 1, 5, 4).unwrap().len(), 1);
        assert!(PointSet::new(2, 0, vec![vec![1, 2], vec![-2, -4]]).is_err());
    }

    #[test]
    fn generators_vanish_at_the_points() {
        let g = generic_points_ideal(3, 3, 2, 4, 1, 5).unwrap();
        assert_eq!(g.generators().len(), 3);
        for p in &g.points().points {
            let pt: Vec<BigInt> = p.iter().map(|&c| BigInt::from(c)).collect();
            assert!(g.generators().iter().all(|q| q.evaluate(&pt).is_zero()));
        }
    }
}
