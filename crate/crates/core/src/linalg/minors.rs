use super::det::determinant;
use super::matrix::{random_point, ExactMatrix};
use super::rational::rank_integer;
use crate::error::{Error, Result};
use crate::polyring::{gcd, Polynomial, ZPoly};

/// Seed of the generic-rank pre-check.
pub const RANK_CHECK_SEED: u64 = 0x6d61_6361_756c_6179;
/// Coordinates of the pre-check point are drawn from `[-B, B]`.
pub const RANK_CHECK_BOUND: i64 = 1_000_000;

/// Rank after specializing every variable at seeded random integers. A
/// lower bound for the generic rank, equal to it outside a proper
/// algebraic subset of choices.
pub fn specialized_rank(m: &ExactMatrix, seed: u64) -> usize {
    let pt = random_point(m.universe(), seed, RANK_CHECK_BOUND);
    rank_integer(&m.evaluate(&pt))
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        if idx[i] == i + n - k {
            return;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// gcd of all maximal (`rows x rows`) minors, sign-normalized, with integer
/// content kept. Column subsets are visited lexicographically and the fold
/// stops once the running gcd is a unit.
pub fn gcd_of_maximal_minors(m: &ExactMatrix) -> Result<ZPoly> {
    let (r, c) = (m.nrows(), m.ncols());
    if r > c {
        return Err(Error::Dimension(format!("{r}x{c} matrix has more rows than columns")));
    }
    if r == 0 {
        return Ok(Polynomial::one(m.universe()));
    }
    if specialized_rank(m, RANK_CHECK_SEED) < r {
        return Err(Error::GenericRankDeficient);
    }
    let rows: Vec<usize> = (0..r).collect();
    let mut acc: Option<ZPoly> = None;
    let mut failure = None;
    for_each_subset(c, r, |cols| {
        let minor = match determinant(&m.submatrix(&rows, cols)) {
            Ok(d) => d,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        if minor.is_zero() {
            return true;
        }
        let next = match &acc {
            None => Ok(minor.normalize_sign()),
            Some(g) => match g.divides(&minor) {
                Ok(true) => Ok(g.clone()),
                Ok(false) => gcd(g, &minor),
                Err(e) => Err(e),
            },
        };
        match next {
            Ok(g) => {
                let unit = g.is_one();
                acc = Some(g);
                !unit
            }
            Err(e) => {
                failure = Some(e);
                false
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    // the rank check found a nonzero minor, so the fold saw one too
    acc.ok_or(Error::GenericRankDeficient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarUniverse;

    #[test]
    fn subsets_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_subset(3, 3, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
        for_each_subset(3, 0, |s| {
            assert!(s.is_empty());
            true
        });
    }

    #[test]
    fn examples() {
        let u = VarUniverse::from_groups(&[("c", vec!["c0", "c1", "c2"])]).unwrap();
        let p = |s: &str| Polynomial::parse(&u, s).unwrap();
        let m = ExactMatrix::from_rows(&u, vec![vec![p("c0"), p("0")], vec![p("c1"), p("c0")], vec![p("c2"), p("c1")]])
            .unwrap()
            .transpose();
        assert!(gcd_of_maximal_minors(&m).unwrap().is_one());
        let sq = ExactMatrix::from_rows(&u, vec![vec![p("c0"), p("c1")], vec![p("c2"), p("c0")]]).unwrap();
        assert_eq!(gcd_of_maximal_minors(&sq).unwrap(), p("c0^2 - c1*c2"));
        let row = ExactMatrix::from_rows(&u, vec![vec![p("2*c0"), p("4*c0")]]).unwrap();
        assert_eq!(gcd_of_maximal_minors(&row).unwrap(), p("2*c0"));
        let deficient = ExactMatrix::from_rows(&u, vec![vec![p("c0"), p("c1")], vec![p("2*c0"), p("2*c1")]]).unwrap();
        assert_eq!(gcd_of_maximal_minors(&deficient), Err(Error::GenericRankDeficient));
    }
}
