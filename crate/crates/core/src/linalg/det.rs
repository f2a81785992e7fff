use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, ZPoly};

/// Fraction-free (Bareiss) elimination over the polynomial ring. Every
/// division is exact; a failed division is reported as an internal error.
pub fn bareiss_determinant(m: &ExactMatrix) -> Result<ZPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    let u = m.universe().clone();
    let n = m.nrows();
    if n == 0 {
        return Ok(Polynomial::one(&u));
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev = Polynomial::one(&u);
    for k in 0..n - 1 {
        let pivot = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].len());
        let Some(p) = pivot else { return Ok(Polynomial::zero(&u)) };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_divide(&prev)
                    .map_err(|_| Error::Internal("inexact division in Bareiss elimination".into()))?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Bareiss elimination on an integer matrix.
pub fn det_integer(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: m.first().map_or(0, |r| r.len()) });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return Ok(BigInt::zero()) };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Sum of many polynomials by balanced pairwise merging.
pub(crate) fn sum_polys(mut ps: Vec<ZPoly>) -> Option<ZPoly> {
    while ps.len() > 1 {
        let mut next = Vec::with_capacity(ps.len().div_ceil(2));
        let mut it = ps.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a + &b),
                None => next.push(a),
            }
        }
        ps = next;
    }
    ps.pop()
}

fn times(entry: &ZPoly, p: &ZPoly, negate: bool) -> ZPoly {
    let prod = match entry.terms() {
        [(m, c)] => p.mul_term(m, c),
        _ => entry * p,
    };
    if negate {
        -prod
    } else {
        prod
    }
}

/// All maximal minors of an `r x c` matrix (`r <= c`, `c <= 64`) by Laplace
/// expansion row after row, memoizing minors over column subsets. Keys are
/// column bitmasks. When `targets` is given only minors on those column sets
/// are produced, and intermediate subsets outside every target are pruned.
pub fn maximal_minors_by_expansion(m: &ExactMatrix, targets: Option<&[u64]>) -> Result<HashMap<u64, ZPoly>> {
    let (r, c) = (m.nrows(), m.ncols());
    if r > c {
        return Err(Error::Dimension(format!("{r}x{c} matrix has no maximal row minors")));
    }
    if c > 64 {
        return Err(Error::Unsupported(format!("expansion over {c} columns")));
    }
    let u = m.universe().clone();
    // sparse rows first keeps the early levels small
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&i| (0..c).filter(|&j| !m.get(i, j).is_zero()).count());
    let parity = permutation_parity(&order);
    let allowed = |mask: u64| targets.is_none_or(|ts| ts.iter().any(|&t| mask & !t == 0));

    let mut level: HashMap<u64, ZPoly> = HashMap::new();
    level.insert(0, Polynomial::one(&u));
    for &row in &order {
        let mut contributions: HashMap<u64, Vec<(usize, u64)>> = HashMap::new();
        for &mask in level.keys() {
            for j in 0..c {
                if mask & (1 << j) != 0 || m.get(row, j).is_zero() {
                    continue;
                }
                let next = mask | (1 << j);
                if allowed(next) {
                    contributions.entry(next).or_default().push((j, mask));
                }
            }
        }
        let mut next_level = HashMap::with_capacity(contributions.len());
        for (mask, parts) in contributions {
            let terms: Vec<ZPoly> = parts
                .into_iter()
                .map(|(j, old)| {
                    let above = (old >> j).count_ones() % 2 == 1;
                    times(m.get(row, j), &level[&old], above)
                })
                .collect();
            if let Some(s) = sum_polys(terms) {
                if !s.is_zero() {
                    next_level.insert(mask, s);
                }
            }
        }
        level = next_level;
    }
    if parity {
        for v in level.values_mut() {
            *v = -&*v;
        }
    }
    Ok(level)
}

fn permutation_parity(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut odd = false;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = p[k];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Determinant by memoized Laplace expansion.
pub fn expansion_determinant(m: &ExactMatrix) -> Result<ZPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    let n = m.nrows();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let minors = maximal_minors_by_expansion(m, Some(&[full]))?;
    Ok(minors.get(&full).cloned().unwrap_or_else(|| Polynomial::zero(m.universe())))
}

/// Determinant with the engine suited to the entries: integer Bareiss for
/// constant matrices, memoized expansion for sparse symbolic ones.
pub fn determinant(m: &ExactMatrix) -> Result<ZPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    if m.is_constant() {
        let d = det_integer(&m.to_integers()?)?;
        return Ok(Polynomial::constant(m.universe(), d));
    }
    if m.ncols() <= 24 {
        expansion_determinant(m)
    } else {
        bareiss_determinant(m)
    }
}

/// Column-subset bitmask to sorted indices.
pub fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&j| mask & (1 << j) != 0).collect()
}

pub fn indices_to_mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |acc, &j| acc | (1 << j))
}

/// Leibniz expansion over all permutations, for small test matrices.
pub fn leibniz_determinant(m: &ExactMatrix) -> Result<ZPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    let n = m.nrows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = Polynomial::zero(m.universe());
    fn rec(k: usize, perm: &mut Vec<usize>, m: &ExactMatrix, acc: &mut ZPoly) {
        let n = perm.len();
        if k == n {
            let mut t = Polynomial::one(m.universe());
            for (i, &j) in perm.iter().enumerate() {
                t = &t * m.get(i, j);
                if t.is_zero() {
                    return;
                }
            }
            if permutation_parity(perm) {
                t = -t;
            }
            *acc = &*acc + &t;
            return;
        }
        for s in k..n {
            perm.swap(k, s);
            rec(k + 1, perm, m, acc);
            perm.swap(k, s);
        }
    }
    rec(0, &mut perm, m, &mut acc);
    Ok(acc)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarUniverse;

    fn u() -> std::sync::Arc<VarUniverse> {
        VarUniverse::from_groups(&[("c", vec!["c0", "c1", "c2"])]).unwrap()
    }

    #[test]
    fn small_examples() {
        let u = u();
        let m = ExactMatrix::from_ints(&u, &[vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(bareiss_determinant(&m).unwrap().as_constant(), Some(BigInt::from(-2)));
        assert_eq!(expansion_determinant(&m).unwrap().as_constant(), Some(BigInt::from(-2)));
        let id: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| (i == j) as i64).collect()).collect();
        let m = ExactMatrix::from_ints(&u, &id).unwrap();
        assert!(determinant(&m).unwrap().is_one());
        assert!(bareiss_determinant(&m).unwrap().is_one());
        let p = |s: &str| Polynomial::parse(&u, s).unwrap();
        let tri = ExactMatrix::from_rows(&u, vec![vec![p("c0"), p("0")], vec![p("c1"), p("c0")]]).unwrap();
        assert_eq!(determinant(&tri).unwrap(), p("c0^2"));
        assert_eq!(bareiss_determinant(&tri).unwrap(), p("c0^2"));
    }

    #[test]
    fn non_square_rejected() {
        let m = ExactMatrix::from_ints(&u(), &[vec![1, 2, 3]]).unwrap();
        assert!(matches!(bareiss_determinant(&m), Err(Error::NotSquare { rows: 1, cols: 3 })));
        assert!(matches!(determinant(&m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn row_reordering_sign() {
        // the sparse row is moved first internally
        let m = ExactMatrix::from_ints(&u(), &[vec![1, 2, 3], vec![0, 0, 5], vec![7, 0, 1]]).unwrap();
        let want = det_integer(&m.to_integers().unwrap()).unwrap();
        assert_eq!(expansion_determinant(&m).unwrap().as_constant(), Some(want));
    }

    #[test]
    fn maximal_minors_of_wide_matrix() {
        let u = u();
        let p = |s: &str| Polynomial::parse(&u, s).unwrap();
        let m = ExactMatrix::from_rows(
            &u,
            vec![vec![p("c0"), p("c1"), p("c2")], vec![p("0"), p("c0"), p("c1")]],
        )
        .unwrap();
        let minors = maximal_minors_by_expansion(&m, None).unwrap();
        assert_eq!(minors[&0b011], p("c0^2"));
        assert_eq!(minors[&0b101], p("c0*c1"));
        assert_eq!(minors[&0b110], p("c1^2 - c0*c2"));
    }
}
