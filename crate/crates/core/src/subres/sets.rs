use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::system::x_universe;
use crate::error::{Error, Result};
use crate::hilbert::{binomial, hilbert_u64, DegreeVector};
use crate::linalg::for_each_subset;
use crate::polyring::{format_monomial, monomials_of_degree, parse_monomial_list, Monomial};

/// A set of degree-`nu` monomials in `x1..xn`, stored as exponent vectors in
/// descending grevlex order. These index the rows deleted from the Macaulay
/// map, so `S` spans a complement of `I_nu` exactly when the subresultant is
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialSet {
    nu: u32,
    exps: Vec<Vec<u16>>,
}

pub(crate) fn display(exps: &[u16]) -> String {
    let s = format_monomial(&x_universe(exps.len()), &Monomial::from_exponents(exps));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl MonomialSet {
    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn exponents(&self) -> &[Vec<u16>] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn contains(&self, e: &[u16]) -> bool {
        self.exps.iter().any(|m| m == e)
    }

    /// Members as text, e.g. `["x1*x2^2", "x2^3"]`.
    pub fn names(&self) -> Vec<String> {
        self.exps.iter().map(|e| display(e)).collect()
    }

    /// Parses the comma-separated syntax `x1^2*x2, x2^3` and validates it.
    /// Wrong-degree members are reported at their byte offset.
    pub fn parse(dv: &DegreeVector, nu: u32, src: &str) -> Result<MonomialSet> {
        let u = x_universe(dv.n());
        let mons = parse_monomial_list(&u, src)?;
        for (pos, m) in &mons {
            if m.degree() != nu {
                return Err(Error::Parse {
                    pos: *pos,
                    msg: format!("{} has degree {}, expected {nu}", format_monomial(&u, m), m.degree()),
                });
            }
        }
        validate_s(dv, nu, mons.into_iter().map(|(_, m)| m.exponents().to_vec()).collect())
    }
}

impl fmt::Display for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

/// Accepts `S` iff every member has degree `nu`, there are no repeats, and
/// `|S| = H(nu)`.
pub fn validate_s(dv: &DegreeVector, nu: u32, members: Vec<Vec<u16>>) -> Result<MonomialSet> {
    let n = dv.n();
    let mut seen = HashSet::new();
    for e in &members {
        if e.len() != n {
            return Err(Error::Dimension(format!("monomial with {} exponents in {n} variables", e.len())));
        }
        let d: u32 = e.iter().map(|&v| v as u32).sum();
        if d != nu {
            return Err(Error::WrongDegree { monomial: display(e), expected: nu, got: d });
        }
        if !seen.insert(e.clone()) {
            return Err(Error::DuplicateMonomial(display(e)));
        }
    }
    let h = hilbert_u64(dv, nu as i64) as usize;
    if members.len() != h {
        return Err(Error::WrongCardinality { expected: h, got: members.len() });
    }
    let mut exps = members;
    exps.sort_by(|a, b| Monomial::from_exponents(b).cmp(&Monomial::from_exponents(a)));
    Ok(MonomialSet { nu, exps })
}

/// Every admissible `S` when there are at most `limit` of them, otherwise a
/// seeded uniform sample of `limit` distinct sets. Output is sorted by the
/// positions of the members in the grevlex basis.
pub fn enumerate_s(dv: &DegreeVector, nu: u32, limit: usize, seed: u64) -> Result<Vec<MonomialSet>> {
    if limit == 0 {
        return Err(Error::Config("sample limit must be at least 1".into()));
    }
    let basis = monomials_of_degree(dv.n(), nu);
    let big_n = basis.len();
    let h = hilbert_u64(dv, nu as i64) as usize;
    let total = binomial(big_n as i64, h as i64);
    let mut chosen: BTreeSet<Vec<usize>> = BTreeSet::new();
    if total <= BigInt::from(limit) {
        for_each_subset(big_n, h, |idx| {
            chosen.insert(idx.to_vec());
            true
        });
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        debug_assert!(total.to_u64().is_none_or(|t| t > limit as u64));
        while chosen.len() < limit {
            let mut idx = rand::seq::index::sample(&mut rng, big_n, h).into_vec();
            idx.sort_unstable();
            chosen.insert(idx);
        }
    }
    Ok(chosen
        .into_iter()
        .map(|idx| MonomialSet { nu, exps: idx.into_iter().map(|k| basis[k].clone()).collect() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(n: usize, d: &[u32]) -> DegreeVector {
        DegreeVector::new(n, d).unwrap()
    }

    #[test]
    fn validation_examples() {
        let d = dv(2, &[2, 2]);
        let s = validate_s(&d, 2, vec![vec![1, 1]]).unwrap();
        assert_eq!(s.names(), vec!["x1*x2"]);
        assert_eq!(
            validate_s(&d, 2, vec![vec![1, 1], vec![0, 2]]),
            Err(Error::WrongCardinality { expected: 1, got: 2 })
        );
        let d3 = dv(3, &[2, 2, 2]);
        assert!(validate_s(&d3, 2, vec![vec![2, 0, 0], vec![0, 2, 0], vec![1, 0, 1]]).is_ok());
        assert!(matches!(validate_s(&d3, 2, vec![vec![2, 0, 0], vec![2, 0, 0], vec![1, 0, 1]]), Err(Error::DuplicateMonomial(_))));
        assert!(matches!(validate_s(&d, 2, vec![vec![1, 0]]), Err(Error::WrongDegree { got: 1, .. })));
    }

    #[test]
    fn parse_reports_positions() {
        let d = dv(2, &[4, 2]);
        let s = MonomialSet::parse(&d, 3, "x2^3, x1*x2^2").unwrap();
        assert_eq!(s.exponents(), &[vec![1, 2], vec![0, 3]]);
        assert_eq!(s.to_string(), "{x1*x2^2, x2^3}");
        match MonomialSet::parse(&d, 3, "x1*x2^2, x2^2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_s(&dv(2, &[2, 2]), 2, 100, 0).unwrap().len(), 3);
        let d = dv(3, &[2, 2, 2]);
        let all = enumerate_s(&d, 3, 100, 0).unwrap();
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|s| s.len() == 1));
        let a = enumerate_s(&d, 3, 5, 42).unwrap();
        let b = enumerate_s(&d, 3, 5, 42).unwrap();
        assert_eq!(a.len(), 5);
        assert_eq!(a, b);
        let sampled = enumerate_s(&d, 2, 7, 1).unwrap();
        assert_eq!(sampled.len(), 7);
        assert!(sampled.iter().all(|s| s.len() == 3));
    }
}
