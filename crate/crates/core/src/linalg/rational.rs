use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};

/// Dense rational matrix for rank and kernel computations.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    pub rows: Vec<Vec<BigRational>>,
    pub ncols: usize,
}

impl QMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>, ncols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rational matrix".into()));
        }
        Ok(QMatrix { rows, ncols })
    }

    pub fn from_integers(rows: &[Vec<BigInt>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        QMatrix {
            rows: rows.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect(),
            ncols,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_integers(&rows)
    }

    /// Constant entries of an [`ExactMatrix`]; fails on symbolic entries.
    pub fn from_exact(m: &ExactMatrix) -> Result<Self> {
        let mut q = Self::from_integers(&m.to_integers()?);
        q.ncols = m.ncols();
        Ok(q)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
}

fn scaled_to_integers(row: &[BigRational]) -> Vec<BigInt> {
    let d = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| (x * BigRational::from_integer(d.clone())).to_integer()).collect()
}

fn primitive_row(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank of an integer matrix by fraction-free elimination; rows are reduced
/// to primitive form after every step to contain coefficient growth.
pub fn rank_integer(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nc = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..nc {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..nc {
                row[j] = &row[j] * &pivot_row[col] - &f * &pivot_row[j];
            }
            primitive_row(row);
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Exact rank over the rationals.
pub fn rank_over_q(m: &QMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = m.rows.iter().map(|r| scaled_to_integers(r)).collect();
    rank_integer(&rows)
}

/// Rank of a constant [`ExactMatrix`] over the rationals.
pub fn rank_exact(m: &ExactMatrix) -> Result<usize> {
    Ok(rank_integer(&m.to_integers()?))
}

/// Reduced row echelon form; returns the pivot column of each nonzero row.
pub fn rref(m: &QMatrix) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut a = m.rows.clone();
    let nc = m.ncols;
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..nc {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..nc {
                row[j] = &row[j] - &f * &pivot_row[j];
            }
        }
        pivots.push(col);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

/// Basis of the right kernel. One vector per free column in increasing
/// order; each is scaled to integers with content 1 and first nonzero entry
/// positive.
pub fn kernel_basis_over_q(m: &QMatrix) -> Vec<Vec<BigInt>> {
    let (red, pivots) = rref(m);
    let nc = m.ncols;
    let mut out = Vec::new();
    for free in 0..nc {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); nc];
        v[free] = BigRational::one();
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        let mut iv = scaled_to_integers(&v);
        primitive_row(&mut iv);
        if iv.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in iv.iter_mut() {
                *x = -&*x;
            }
        }
        out.push(iv);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_over_q(&QMatrix::from_i64(&[vec![0, 0], vec![0, 0]])), 0);
        let id = QMatrix::from_i64(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(rank_over_q(&id), 3);
        assert_eq!(rank_over_q(&QMatrix::from_i64(&[vec![1, 1], vec![2, 2], vec![3, 3]])), 1);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let q = QMatrix::new(
            vec![vec![half.clone(), BigRational::one()], vec![BigRational::one(), BigRational::from_integer(2.into())]],
            2,
        )
        .unwrap();
        assert_eq!(rank_over_q(&q), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis_over_q(&QMatrix::from_i64(&[vec![1, 0], vec![0, 1]])).is_empty());
        assert_eq!(kernel_basis_over_q(&QMatrix::from_i64(&[vec![1, -1]])), vec![ints(&[1, 1])]);
        assert_eq!(
            kernel_basis_over_q(&QMatrix::from_i64(&[vec![1, 1, 1]])),
            vec![ints(&[1, -1, 0]), ints(&[1, 0, -1])]
        );
    }
}
