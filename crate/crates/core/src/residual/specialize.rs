use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::points::{monomial_value, PointsIdeal};
use crate::error::{Error, Result};
use crate::hilbert::{thresholds, DegreeVector};
use crate::polyring::{monomials_of_degree, GroupDegree, Monomial, Polynomial, Value, VarUniverse, ZPoly};
use crate::subres::{delta_of_specialization, validate_s, x_universe, MonomialSet, PolySystem, X_GROUP};

/// How the multipliers `p_ij` are filled in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every coefficient of every `p_ij` is a fresh variable.
    Symbolic,
    /// Seeded integers in `[-bound, bound]`.
    Seeded { seed: u64, bound: i64 },
}

/// Forms `P̄_i = sum_j p_ij g_j` with `deg p_ij = d_i - delta`.
#[derive(Clone, Debug)]
pub struct ResidualSystem {
    degrees: DegreeVector,
    nu: u32,
    ideal: PointsIdeal,
    mode: Mode,
    system: PolySystem,
}

/// Name of the residual coefficient group of form `i` (0-based).
pub fn residual_group(i: usize) -> String {
    format!("r{}", i + 1)
}

/// The coefficient of `x^beta` in `p_ij`, 1-based `i` and `j`.
pub fn residual_variable(i: usize, j: usize, beta: &[u16]) -> String {
    let mut s = format!("r{i}_{j}");
    for e in beta {
        s.push('_');
        s.push_str(&e.to_string());
    }
    s
}

impl ResidualSystem {
    pub fn degree_vector(&self) -> &DegreeVector {
        &self.degrees
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn ideal(&self) -> &PointsIdeal {
        &self.ideal
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn system(&self) -> &PolySystem {
        &self.system
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        self.system.universe()
    }

    pub fn polys(&self) -> &[ZPoly] {
        self.system.polys()
    }

    /// Degree of each multiplier `p_ij`, per form.
    pub fn multiplier_degrees(&self) -> Vec<u32> {
        self.degrees.degrees().iter().map(|&d| d - self.ideal.delta()).collect()
    }
}

pub fn residual_specialize(dv: &DegreeVector, nu: u32, ideal: &PointsIdeal, mode: Mode) -> Result<ResidualSystem> {
    let th = thresholds(dv)?;
    if !th.in_range(nu as i64) {
        return Err(Error::OutOfRange(format!("nu = {nu} outside [{}, {}]", th.nu_min, th.rho)));
    }
    let delta = (th.rho - nu as i64 + 1) as u32;
    if ideal.delta() != delta || ideal.n() != dv.n() {
        return Err(Error::Precondition(format!(
            "ideal generated in degree {} of {} variables, need degree {delta} of {}",
            ideal.delta(),
            ideal.n(),
            dv.n()
        )));
    }
    let a = th.a(nu as i64).expect("in range") as usize;
    if ideal.a() != a {
        return Err(Error::Precondition(format!("{} points, a = {a} required", ideal.a())));
    }
    let n = dv.n();
    let m = ideal.generators().len();
    let supports: Vec<Vec<Vec<u16>>> = dv.degrees().iter().map(|&d| monomials_of_degree(n, d - delta)).collect();
    let universe = match mode {
        Mode::Seeded { .. } => x_universe(n),
        Mode::Symbolic => {
            let xs: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
            let mut groups = vec![(X_GROUP.to_string(), xs)];
            for (i, sup) in supports.iter().enumerate() {
                let names = (1..=m).flat_map(|j| sup.iter().map(move |b| residual_variable(i + 1, j, b))).collect();
                groups.push((residual_group(i), names));
            }
            VarUniverse::from_groups(&groups)?
        }
    };
    let gens: Vec<ZPoly> = ideal.generators().iter().map(|g| g.rename_into(&universe)).collect::<Result<_>>()?;
    let mut rng = match mode {
        Mode::Seeded { seed, .. } => Some(ChaCha8Rng::seed_from_u64(seed)),
        Mode::Symbolic => None,
    };
    let nv = universe.len();
    let mut polys = Vec::with_capacity(n);
    for (i, sup) in supports.iter().enumerate() {
        let mut acc = Polynomial::zero(&universe);
        for (j, g) in gens.iter().enumerate() {
            let terms: Vec<(Monomial, BigInt)> = sup
                .iter()
                .map(|beta| {
                    let mut mono = Monomial::one(nv);
                    for (k, &e) in beta.iter().enumerate() {
                        mono.set_exponent(k, e);
                    }
                    match (&mut rng, mode) {
                        (Some(r), Mode::Seeded { bound, .. }) => (mono, BigInt::from(r.gen_range(-bound..=bound))),
                        _ => {
                            let v = universe.var(&residual_variable(i + 1, j + 1, beta)).expect("declared above");
                            mono.set_exponent(v, 1);
                            (mono, BigInt::one())
                        }
                    }
                })
                .collect();
            acc = &acc + &(&Polynomial::from_terms(&universe, terms) * g);
        }
        polys.push(acc);
    }
    let system = PolySystem::new(&universe, polys)?;
    Ok(ResidualSystem { degrees: dv.clone(), nu, ideal: ideal.clone(), mode, system })
}

/// `Δ_S^ν(P̄)` split as `constant * primitive`, with `primitive` of
/// content 1 and positive leading coefficient.
#[derive(Clone, Debug)]
pub struct ResidualResult {
    pub delta: ZPoly,
    pub constant: BigInt,
    pub primitive: ZPoly,
    pub multidegree: Vec<GroupDegree>,
    pub s: MonomialSet,
}

impl ResidualResult {
    pub fn degree_in_form(&self, i: usize) -> u32 {
        let name = residual_group(i);
        self.multidegree.iter().find(|g| g.group == name).map_or(0, |g| g.degree)
    }
}

/// `prod d / d_i - a` for each form.
pub fn expected_residual_degrees(dv: &DegreeVector, nu: u32) -> Result<Vec<u64>> {
    let a = thresholds(dv)?
        .a(nu as i64)
        .ok_or_else(|| Error::OutOfRange(format!("nu = {nu} is outside the degree range")))?;
    Ok(dv.degrees().iter().map(|&d| dv.product() / d as u64 - a).collect())
}

pub fn residual_resultant(rs: &ResidualSystem, s: &MonomialSet) -> Result<ResidualResult> {
    if rs.mode != Mode::Symbolic {
        return Err(Error::Precondition("the residual resultant needs a symbolic residual system".into()));
    }
    let s = validate_s(&rs.degrees, rs.nu, s.exponents().to_vec())?;
    let delta = match delta_of_specialization(&rs.system, &s) {
        Err(Error::GenericRankDeficient) => {
            return Err(Error::Internal(format!(
                "subresultant vanishes on the residual system for S = {s}; the points ideal is not in generic position"
            )))
        }
        other => other?,
    };
    let (content, sign, primitive) = delta.content_and_primitive()?;
    let constant = if sign < 0 { -content } else { content };
    let multidegree = primitive.multidegree_by_group()?;
    for g in &multidegree {
        if !g.homogeneous {
            return Err(Error::Internal(format!("residual resultant is not homogeneous in {}", g.group)));
        }
        if g.group == X_GROUP && g.degree != 0 {
            return Err(Error::Internal("residual resultant involves the x variables".into()));
        }
    }
    let expected = expected_residual_degrees(&rs.degrees, rs.nu)?;
    let result = ResidualResult { delta, constant, primitive, multidegree, s };
    for (i, &e) in expected.iter().enumerate() {
        let got = result.degree_in_form(i) as u64;
        if got != e {
            return Err(Error::MultidegreeMismatch { group: residual_group(i), expected: e, got });
        }
    }
    Ok(result)
}

const MAX_REDRAWS: usize = 64;

/// An integer assignment of every residual variable under which all `P̄_i`
/// vanish at `q`. Each group starts from seeded values and is then corrected
/// along one coordinate whose coefficient `x^beta g_j (q)` is nonzero;
/// scaling the group by that coefficient keeps the values integral. Draws
/// that would make a multiplier vanish identically are repeated.
pub fn vanishing_assignment(rs: &ResidualSystem, q: &[i64], seed: u64, bound: i64) -> Result<Vec<(String, BigInt)>> {
    if rs.mode != Mode::Symbolic {
        return Err(Error::Precondition("vanishing conditions need a symbolic residual system".into()));
    }
    let n = rs.degrees.n();
    if q.len() != n {
        return Err(Error::Dimension(format!("point has {} coordinates, expected {n}", q.len())));
    }
    let qv: Vec<BigInt> = q.iter().map(|&c| BigInt::from(c)).collect();
    let g_at_q: Vec<BigInt> = rs.ideal.generators().iter().map(|g| g.evaluate(&qv)).collect();
    if g_at_q.iter().all(Zero::is_zero) {
        return Err(Error::Precondition("the extra point lies on the base locus".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (i, d) in rs.multiplier_degrees().into_iter().enumerate() {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (j, gq) in g_at_q.iter().enumerate() {
            for beta in monomials_of_degree(n, d) {
                names.push(residual_variable(i + 1, j + 1, &beta));
                weights.push(monomial_value(q, &beta) * gq);
            }
        }
        let pivot = weights.iter().position(|w| !w.is_zero()).expect("some g_j(q) is nonzero");
        let w = weights[pivot].clone();
        let values = (0..MAX_REDRAWS)
            .find_map(|_| {
                let mut values: Vec<BigInt> = names.iter().map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
                let value: BigInt = values.iter().zip(&weights).map(|(v, w)| v * w).sum();
                for v in values.iter_mut() {
                    *v *= &w;
                }
                values[pivot] -= value;
                values.iter().any(|v| !v.is_zero()).then_some(values)
            })
            .ok_or_else(|| Error::Precondition(format!("form {} keeps vanishing identically", i + 1)))?;
        out.extend(names.into_iter().zip(values));
    }
    Ok(out)
}

/// The forms `P̄_i` under an assignment of every residual variable, moved
/// into the universe `x1..xn`.
pub fn specialize_forms(rs: &ResidualSystem, assignment: &[(String, BigInt)]) -> Result<Vec<ZPoly>> {
    let pairs: Vec<(&str, Value)> = assignment.iter().map(|(k, v)| (k.as_str(), Value::Const(v.clone()))).collect();
    let xu = x_universe(rs.degrees.n());
    rs.polys().iter().map(|p| p.specialize(&pairs)?.rename_into(&xu)).collect()
}

/// Value of a polynomial in the residual variables under a full assignment.
pub fn evaluate_residual(p: &ZPoly, assignment: &[(String, BigInt)]) -> Result<BigInt> {
    let pairs: Vec<(&str, Value)> = assignment.iter().map(|(k, v)| (k.as_str(), Value::Const(v.clone()))).collect();
    p.specialize(&pairs)?
        .as_constant()
        .ok_or_else(|| Error::InvalidSpecialization("assignment leaves free variables".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residual::{generic_points_ideal, points_ideal, PointSet};

    #[test]
    fn shapes_of_the_specialization() {
        let dv = DegreeVector::new(2, &[3, 2]).unwrap();
        let g = points_ideal(&PointSet::new(2, 0, vec![vec![1, 1]]).unwrap(), 1, 3).unwrap();
        let rs = residual_specialize(&dv, 3, &g, Mode::Symbolic).unwrap();
        assert_eq!(rs.multiplier_degrees(), vec![2, 1]);
        assert_eq!(rs.universe().len(), 2 + 3 + 2);
        assert_eq!(rs.system().degrees(), &[3, 2]);
        let x1_minus_x2 = Polynomial::parse(rs.universe(), "x1 - x2").unwrap();
        for p in rs.polys() {
            assert!(x1_minus_x2.divides(p).unwrap());
        }
        let seeded = residual_specialize(&dv, 3, &g, Mode::Seeded { seed: 3, bound: 9 }).unwrap();
        assert_eq!(seeded.universe().len(), 2);
        assert!(residual_specialize(&dv, 2, &g, Mode::Symbolic).is_err());
    }

    #[test]
    fn variable_count() {
        let dv = DegreeVector::new(3, &[2, 2, 2]).unwrap();
        // rho = 3, nu = 2: delta = 2, a = 3, m = 3, deg p_ij = 0
        let g = generic_points_ideal(3, 3, 2, 3, 4, 5).unwrap();
        let rs = residual_specialize(&dv, 2, &g, Mode::Symbolic).unwrap();
        assert_eq!(rs.universe().len(), 3 + 3 * 3);
    }
}
