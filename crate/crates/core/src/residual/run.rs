use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::points::{generic_points_ideal, PointsIdealDoc};
use super::specialize::{
    evaluate_residual, expected_residual_degrees, residual_resultant, residual_specialize, residual_variable,
    vanishing_assignment, Mode, ResidualSystem,
};
use crate::error::{Error, Result};
use crate::hilbert::{thresholds, DegreeVector};
use crate::linalg::{determinant, ExactMatrix};
use crate::polyring::{monomials_of_degree, PolyDoc, Polynomial, ZPoly};
use crate::report::{Meta, Report};
use crate::subres::enumerate_s;

/// Coordinate bound for the base points.
pub const POINT_BOUND: i64 = 9;
const S_CHOICES: usize = 2;
const EXTRA_POINT_TRIES: usize = 100;

/// For two variables the base locus is one form `g` and `P̄_i = p_i g`, so
/// the residual resultant is the Sylvester resultant of `p_1` and `p_2`.
/// `None` for more variables.
pub fn binary_residual_resultant(rs: &ResidualSystem) -> Result<Option<ZPoly>> {
    if rs.degree_vector().n() != 2 || rs.ideal().generators().len() != 1 {
        return Ok(None);
    }
    let u = rs.universe();
    let e = rs.multiplier_degrees();
    // coefficient of x1^k x2^(e-k), in decreasing k
    let coeffs: Vec<Vec<ZPoly>> = (0..2)
        .map(|i| {
            monomials_of_degree(2, e[i])
                .iter()
                .map(|beta| Polynomial::var_named(u, &residual_variable(i + 1, 1, beta)))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let size = (e[0] + e[1]) as usize;
    if size == 0 {
        return Ok(Some(Polynomial::one(u)));
    }
    let mut rows = Vec::with_capacity(size);
    for (i, shifts) in [(0, e[1]), (1, e[0])] {
        for k in 0..shifts as usize {
            let mut row = vec![Polynomial::zero(u); size];
            for (j, c) in coeffs[i].iter().enumerate() {
                row[k + j] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(Some(determinant(&ExactMatrix::from_rows(u, rows)?)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualBody {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub nu: u32,
    pub seed: u64,
    pub a: u64,
    pub delta: u32,
    pub ideal: PointsIdealDoc,
    pub s_choices: Vec<String>,
    /// `Δ(P̄) / primitive part`, one per `S`.
    pub constants: Vec<String>,
    pub degrees_found: Vec<u32>,
    pub degrees_expected: Vec<u64>,
    pub s_independent: bool,
    /// Agreement with the Sylvester resultant; only for two variables.
    pub sylvester_match: Option<bool>,
    pub extra_point: Vec<i64>,
    pub vanishes_at_extra_point: bool,
    pub passed: bool,
    pub primitive_terms: usize,
    pub primitive: PolyDoc,
}

impl ResidualBody {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n={} d={:?} nu={} seed={}: a={} delta={} points={:?}\n",
            self.n, self.degrees, self.nu, self.seed, self.a, self.delta, self.ideal.points.points
        );
        for (s, c) in self.s_choices.iter().zip(&self.constants) {
            out.push_str(&format!("  S={s}: constant {c}\n"));
        }
        out.push_str(&format!(
            "  residual degrees {:?} (expected {:?}), {} terms, S-independent {}\n",
            self.degrees_found, self.degrees_expected, self.primitive_terms, self.s_independent
        ));
        if let Some(m) = self.sylvester_match {
            out.push_str(&format!("  matches the Sylvester resultant of the multipliers: {m}\n"));
        }
        out.push_str(&format!(
            "  extra common zero at {:?} forces vanishing: {}\n",
            self.extra_point, self.vanishes_at_extra_point
        ));
        out.push_str(if self.passed { "residual: passed\n" } else { "residual: FAILED\n" });
        out
    }
}

fn extra_point(rs: &ResidualSystem, seed: u64) -> Result<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7874_7261);
    let n = rs.degree_vector().n();
    for _ in 0..EXTRA_POINT_TRIES {
        let q: Vec<i64> = (0..n).map(|_| rng.gen_range(-POINT_BOUND..=POINT_BOUND)).collect();
        let qv: Vec<BigInt> = q.iter().map(|&c| BigInt::from(c)).collect();
        if rs.ideal().generators().iter().any(|g| !num_traits::Zero::is_zero(&g.evaluate(&qv))) {
            return Ok(q);
        }
    }
    Err(Error::Internal("no point off the base locus found".into()))
}

pub fn cmd_residual(n: usize, degrees: &[u32], nu: u32, seed: u64) -> Result<Report<ResidualBody>> {
    let start = Instant::now();
    let dv = DegreeVector::new(n, degrees)?;
    let th = thresholds(&dv)?;
    let a = th
        .a(nu as i64)
        .ok_or_else(|| Error::OutOfRange(format!("nu = {nu} outside [{}, {}]", th.nu_min, th.rho)))?;
    let delta = (th.rho - nu as i64 + 1) as u32;
    let ideal = generic_points_ideal(n, a as usize, delta, th.rho as u32, seed, POINT_BOUND)?;
    let rs = residual_specialize(&dv, nu, &ideal, Mode::Symbolic)?;
    let sets = enumerate_s(&dv, nu, S_CHOICES, seed)?;
    let results = sets.iter().map(|s| residual_resultant(&rs, s)).collect::<Result<Vec<_>>>()?;
    let first = &results[0];
    let s_independent = results.iter().all(|r| r.primitive == first.primitive);
    let sylvester_match = binary_residual_resultant(&rs)?.map(|p| p.normalize_sign() == first.primitive);
    let q = extra_point(&rs, seed)?;
    let assignment = vanishing_assignment(&rs, &q, seed, POINT_BOUND)?;
    let vanishes = num_traits::Zero::is_zero(&evaluate_residual(&first.primitive, &assignment)?);
    let degrees_found: Vec<u32> = (0..n).map(|i| first.degree_in_form(i)).collect();
    let degrees_expected = expected_residual_degrees(&dv, nu)?;
    let degrees_ok = degrees_found.iter().zip(&degrees_expected).all(|(&f, &e)| f as u64 == e);
    let body = ResidualBody {
        n,
        degrees: degrees.to_vec(),
        nu,
        seed,
        a,
        delta,
        ideal: ideal.to_doc(),
        s_choices: sets.iter().map(|s| s.to_string()).collect(),
        constants: results.iter().map(|r| r.constant.to_string()).collect(),
        degrees_found,
        degrees_expected,
        s_independent,
        sylvester_match,
        extra_point: q,
        vanishes_at_extra_point: vanishes,
        passed: degrees_ok && s_independent && sylvester_match != Some(false) && vanishes,
        primitive_terms: first.primitive.len(),
        primitive: PolyDoc::from_poly(&first.primitive),
    };
    Ok(Report::new("residual", body, Meta::new(false, 1, start.elapsed().as_secs_f64() * 1e3, Vec::new())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_for_cubic_and_quadratic() {
        let rep = cmd_residual(2, &[3, 2], 3, 1).unwrap();
        let b = &rep.body;
        assert!(b.passed, "{}", b.to_text());
        assert_eq!(b.degrees_found, vec![1, 2]);
        assert_eq!(b.sylvester_match, Some(true));
        assert_eq!(b.s_choices.len(), 2);
        assert_eq!(rep.body_json(), cmd_residual(2, &[3, 2], 3, 1).unwrap().body_json());
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(matches!(cmd_residual(2, &[3, 2], 1, 1), Err(Error::OutOfRange(_))));
    }
}
