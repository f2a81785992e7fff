use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::macaulay::{build_macaulay_map, koszul_rank, koszul_syzygies, MacaulayMap};
use super::sets::{validate_s, MonomialSet};
use super::system::{GenericSystem, PolySystem, X_GROUP};
use crate::error::{Error, Result};
use crate::hilbert::{expected_multidegree, thresholds, DegreeVector};
use crate::linalg::{determinant, gcd_of_maximal_minors, random_point, rank_integer, specialized_rank, ExactMatrix};
use crate::polyring::{GroupDegree, Polynomial, ZPoly};

/// Seeds of the two independent rank probes run before symbolic work.
pub const PROBE_SEEDS: [u64; 2] = [0x5eed_0001, 0x5eed_0002];

/// Where `nu` sits relative to the degree range of a square system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Position {
    /// Below `rho - min d_i + 1`; no degree formula applies.
    BelowRange,
    /// `nu = rho - min d_i + 1`, the lowest degree of the range.
    AtBound,
    /// Strictly above the bound and at most `rho`.
    AboveBound,
}

pub fn position(dv: &DegreeVector, nu: u32) -> Result<Position> {
    let th = thresholds(dv)?;
    let nu = nu as i64;
    if nu > th.rho {
        return Err(Error::OutOfRange(format!(
            "nu = {nu} exceeds rho = {}; there the subresultant is a resultant, which this engine does not compute",
            th.rho
        )));
    }
    Ok(if nu < th.nu_min {
        Position::BelowRange
    } else if nu == th.irred_bound {
        Position::AtBound
    } else {
        Position::AboveBound
    })
}

/// How the polynomial was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// The row-deleted map is square.
    Determinant,
    /// `gcd` of maximal minors through the Koszul relations: a single
    /// maximal minor divided by the complementary minor of the relation
    /// matrix, times the gcd of the maximal minors of that matrix.
    KoszulQuotient { dropped_columns: Vec<String>, relation_minor_gcd: ZPoly },
}

#[derive(Clone, Debug)]
pub struct SubresultantResult {
    /// Sign-normalized: the grevlex leading coefficient is positive.
    pub delta: ZPoly,
    pub multidegree: Vec<GroupDegree>,
    /// Positive integer content, not divided out.
    pub content: BigInt,
    /// Whether the raw minor had to be negated to normalize the sign.
    pub negated: bool,
    pub s: MonomialSet,
    pub degrees: DegreeVector,
    pub position: Position,
    pub method: Method,
}

impl SubresultantResult {
    pub fn nu(&self) -> u32 {
        self.s.nu()
    }

    /// Degree in the coefficient group of the `i`-th form (0-based).
    pub fn degree_in_form(&self, i: usize) -> u32 {
        let name = GenericSystem::group_name(i);
        self.multidegree.iter().find(|g| g.group == name).map_or(0, |g| g.degree)
    }
}

fn row_deleted(mac: &MacaulayMap, s: &MonomialSet) -> ExactMatrix {
    let rows = mac.kept_rows(s.exponents());
    let cols: Vec<usize> = (0..mac.matrix().ncols()).collect();
    mac.matrix().submatrix(&rows, &cols)
}

fn full_rank_somewhere(m: &ExactMatrix) -> bool {
    PROBE_SEEDS.iter().any(|&seed| specialized_rank(m, seed) == m.nrows())
}

/// Picks `k` rows of `rel` that are independent at a random point,
/// preferring rows whose Macaulay column is dense (dropping those makes the
/// remaining determinant cheaper).
fn independent_rows(rel: &ExactMatrix, density: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..rel.nrows()).collect();
    order.sort_by_key(|&r| std::cmp::Reverse(density[r]));
    for seed in PROBE_SEEDS {
        let pt = random_point(rel.universe(), seed, crate::linalg::RANK_CHECK_BOUND);
        let vals = rel.evaluate(&pt);
        let mut chosen: Vec<usize> = Vec::new();
        for &r in &order {
            let mut trial: Vec<Vec<BigInt>> = chosen.iter().map(|&c| vals[c].clone()).collect();
            trial.push(vals[r].clone());
            if rank_integer(&trial) == trial.len() {
                chosen.push(r);
                if chosen.len() == k {
                    chosen.sort_unstable();
                    return Some(chosen);
                }
            }
        }
    }
    None
}

/// `gcd` of the maximal minors of the Koszul relation matrix of `sys` in
/// degree `nu`, or `None` when the row-deleted map is square.
pub fn relation_minor_gcd(sys: &PolySystem, nu: u32) -> Result<Option<ZPoly>> {
    let mac = build_macaulay_map(sys, nu);
    if koszul_rank(sys.degrees(), sys.n(), nu) == 0 {
        return Ok(None);
    }
    let rel = koszul_syzygies(sys, &mac)?;
    Ok(Some(gcd_of_maximal_minors(&rel.transpose())?))
}

/// `gcd` of the maximal minors of the `S`-row-deleted Macaulay map of an
/// arbitrary system, without sign normalization. `relation_gcd` is the gcd
/// of the maximal minors of the Koszul relation matrix of the generic system
/// with these degrees, already mapped into this system's universe; it is
/// ignored for square maps and computed from `sys` itself when `None`.
///
/// Returns [`Error::GenericRankDeficient`] when the polynomial is zero.
pub fn delta_of_system(sys: &PolySystem, s: &MonomialSet, relation_gcd: Option<&ZPoly>) -> Result<(ZPoly, Method)> {
    let nu = s.nu();
    let mac = build_macaulay_map(sys, nu);
    let m = row_deleted(&mac, s);
    let (r, c) = (m.nrows(), m.ncols());
    if r > c || !full_rank_somewhere(&m) {
        return Err(Error::GenericRankDeficient);
    }
    if r == c {
        return Ok((determinant(&m)?, Method::Determinant));
    }
    let f2 = koszul_rank(sys.degrees(), sys.n(), nu);
    let rel = koszul_syzygies(sys, &mac)?;
    if f2 != c - r {
        return Err(Error::Internal(format!("{c} columns, {r} rows and {f2} Koszul relations do not balance")));
    }
    let density: Vec<usize> = (0..c).map(|j| (0..r).filter(|&i| !m.get(i, j).is_zero()).count()).collect();
    let dropped = independent_rows(&rel, &density, f2)
        .ok_or_else(|| Error::Internal("Koszul relation matrix is rank deficient".into()))?;
    let kept: Vec<usize> = (0..c).filter(|j| !dropped.contains(j)).collect();
    let rows: Vec<usize> = (0..r).collect();
    let num = determinant(&m.submatrix(&rows, &kept))?;
    let all_rel_cols: Vec<usize> = (0..f2).collect();
    let den = determinant(&rel.submatrix(&dropped, &all_rel_cols))?;
    let quotient = num
        .exact_divide(&den)
        .map_err(|_| Error::Internal("maximal minor is not divisible by the complementary relation minor".into()))?;
    let g = match relation_gcd {
        Some(g) => g.clone(),
        None => gcd_of_maximal_minors(&rel.transpose())?,
    };
    let delta = if g.is_one() { quotient } else { &quotient * &g };
    let dropped_columns = dropped.iter().map(|&j| m.col_labels()[j].clone()).collect();
    Ok((delta, Method::KoszulQuotient { dropped_columns, relation_minor_gcd: g }))
}

/// The generic subresultant with the degrees of `sys`, evaluated at the
/// coefficients of `sys`, without sign normalization. Unlike
/// [`delta_of_system`] this never takes gcds of specialized minors, which
/// need not commute with specialization.
pub fn delta_of_specialization(sys: &PolySystem, s: &MonomialSet) -> Result<ZPoly> {
    let dv = sys.check_square()?;
    let generic = super::system::build_generic_system(&dv)?;
    let one = Polynomial::one(sys.universe());
    match relation_minor_gcd(generic.system(), s.nu())? {
        Some(g) if !g.is_one() => Err(Error::Unsupported(format!(
            "relation minors of degrees {:?} in degree {} share the factor {g}",
            dv.degrees(),
            s.nu()
        ))),
        _ => Ok(delta_of_system(sys, s, Some(&one))?.0),
    }
}

/// The subresultant of the generic system: the sign-normalized gcd of the
/// maximal minors of the Macaulay map with the rows of `S` deleted. In the
/// degree range the per-group degrees are checked against the closed form.
pub fn subresultant(sys: &GenericSystem, s: &MonomialSet) -> Result<SubresultantResult> {
    let dv = sys.degree_vector();
    let nu = s.nu();
    let position = position(dv, nu)?;
    let s = validate_s(dv, nu, s.exponents().to_vec())?;
    let (raw, method) = delta_of_system(sys.system(), &s, None)?;
    let delta = raw.normalize_sign();
    let negated = delta != raw;
    let content = delta.integer_content();
    let multidegree = delta.multidegree_by_group()?;
    if position != Position::BelowRange {
        check_multidegree(dv, nu, &multidegree, GenericSystem::group_name)?;
    }
    Ok(SubresultantResult { delta, multidegree, content, negated, s, degrees: dv.clone(), position, method })
}

/// Checks that every listed group is homogeneous, the `x` group is absent,
/// and the group of form `i` has degree `prod d / d_i - a(nu)`.
pub fn check_multidegree(
    dv: &DegreeVector,
    nu: u32,
    md: &[GroupDegree],
    group_of_form: impl Fn(usize) -> String,
) -> Result<()> {
    for g in md {
        if !g.homogeneous {
            return Err(Error::Internal(format!("not homogeneous in group {}", g.group)));
        }
        if g.group == X_GROUP && g.degree != 0 {
            return Err(Error::Internal("subresultant involves the x variables".into()));
        }
    }
    for i in 0..dv.s() {
        let name = group_of_form(i);
        let expected = expected_multidegree(dv, nu as i64, i)?;
        let got = md.iter().find(|g| g.group == name).map_or(0, |g| g.degree) as u64;
        if got != expected {
            return Err(Error::MultidegreeMismatch { group: name, expected, got });
        }
    }
    Ok(())
}

/// The same polynomial computed straight from the definition: the gcd of
/// every maximal minor of the row-deleted map. Exponential in the number of
/// surplus columns; meant as a cross-check on small cases.
pub fn subresultant_by_minors(sys: &GenericSystem, s: &MonomialSet) -> Result<ZPoly> {
    let mac = build_macaulay_map(sys.system(), s.nu());
    let m = row_deleted(&mac, s);
    if m.nrows() == 0 {
        return Ok(Polynomial::one(sys.universe()));
    }
    Ok(gcd_of_maximal_minors(&m)?.normalize_sign())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subres::{build_generic_system, MonomialSet};

    fn generic(n: usize, d: &[u32]) -> GenericSystem {
        build_generic_system(&DegreeVector::new(n, d).unwrap()).unwrap()
    }

    #[test]
    fn positions() {
        let dv = DegreeVector::new(2, &[4, 2]).unwrap();
        assert_eq!(position(&dv, 3).unwrap(), Position::AtBound);
        assert_eq!(position(&dv, 4).unwrap(), Position::AboveBound);
        assert_eq!(position(&dv, 1).unwrap(), Position::BelowRange);
        assert!(matches!(position(&dv, 5), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn quotient_agrees_with_minor_gcd() {
        for (n, d, nu) in [(3, vec![3, 1, 1], 2), (3, vec![3, 2, 1], 3), (3, vec![4, 1, 1], 3)] {
            let sys = generic(n, &d);
            for s in crate::subres::enumerate_s(sys.degree_vector(), nu, 4, 7).unwrap() {
                let r = subresultant(&sys, &s).unwrap();
                assert!(matches!(r.method, Method::KoszulQuotient { .. }));
                assert_eq!(r.delta, subresultant_by_minors(&sys, &s).unwrap(), "d = {d:?}, S = {s}");
            }
        }
    }

    #[test]
    fn zero_is_a_distinct_outcome() {
        // the kept rows x1^2, x1*x2, x2^2 miss the column x3*P3 entirely
        let sys = generic(3, &[3, 3, 1]);
        let s = MonomialSet::parse(sys.degree_vector(), 2, "x1*x3, x2*x3, x3^2").unwrap();
        assert_eq!(subresultant(&sys, &s).unwrap_err(), Error::GenericRankDeficient);
        let s = MonomialSet::parse(sys.degree_vector(), 2, "x1^2, x1*x2, x2^2").unwrap();
        let r = subresultant(&sys, &s).unwrap();
        assert_eq!(r.position, Position::BelowRange);
        assert!(!r.delta.is_zero());
    }
}
