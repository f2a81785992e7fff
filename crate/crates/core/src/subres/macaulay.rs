use std::collections::HashMap;

use super::sets::display;
use super::system::PolySystem;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::polyring::{monomials_of_degree, Polynomial, ZPoly};

fn quotient(m: &[u16], d: &[u16]) -> Option<Vec<u16>> {
    m.iter().zip(d).map(|(&a, &b)| a.checked_sub(b)).collect()
}

/// The degree-`nu` multiplication map `(q_i) -> sum q_i P_i`. Rows are the
/// degree-`nu` monomials in descending grevlex order; columns come in one
/// block per form, block `i` listing the multipliers `m'` of degree
/// `nu - d_i` in the same order.
#[derive(Clone, Debug)]
pub struct MacaulayMap {
    nu: u32,
    rows: Vec<Vec<u16>>,
    columns: Vec<(usize, Vec<u16>)>,
    matrix: ExactMatrix,
}

impl MacaulayMap {
    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn row_monomials(&self) -> &[Vec<u16>] {
        &self.rows
    }

    /// `(form index, multiplier)` per column.
    pub fn columns(&self) -> &[(usize, Vec<u16>)] {
        &self.columns
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn row_index(&self, m: &[u16]) -> Option<usize> {
        self.rows.iter().position(|r| r == m)
    }

    /// Rows not in `deleted`.
    pub fn kept_rows(&self, deleted: &[Vec<u16>]) -> Vec<usize> {
        (0..self.rows.len()).filter(|&k| !deleted.contains(&self.rows[k])).collect()
    }
}

fn multiplier_columns(degrees: &[u32], n: usize, nu: u32) -> Vec<(usize, Vec<u16>)> {
    let mut cols = Vec::new();
    for (i, &d) in degrees.iter().enumerate() {
        if nu >= d {
            cols.extend(monomials_of_degree(n, nu - d).into_iter().map(|m| (i, m)));
        }
    }
    cols
}

pub fn build_macaulay_map(sys: &PolySystem, nu: u32) -> MacaulayMap {
    let n = sys.n();
    let u = sys.universe();
    let rows = monomials_of_degree(n, nu);
    let columns = multiplier_columns(sys.degrees(), n, nu);
    let zero = Polynomial::zero(u);
    let mut entries = Vec::with_capacity(rows.len() * columns.len());
    for m in &rows {
        for (i, mp) in &columns {
            let e = quotient(m, mp).and_then(|alpha| sys.coefficient(*i, &alpha));
            entries.push(e.cloned().unwrap_or_else(|| zero.clone()));
        }
    }
    let row_labels = rows.iter().map(|m| display(m)).collect();
    let col_labels = columns.iter().map(|(i, m)| format!("{}*P{}", display(m), i + 1)).collect();
    let matrix = ExactMatrix::new(u, row_labels, col_labels, entries).expect("consistent Macaulay shape");
    MacaulayMap { nu, rows, columns, matrix }
}

/// Number of Koszul columns `(i < j, m'')` with `|m''| = nu - d_i - d_j`.
pub fn koszul_rank(degrees: &[u32], n: usize, nu: u32) -> usize {
    let mut count = 0;
    for i in 0..degrees.len() {
        for j in i + 1..degrees.len() {
            let dij = degrees[i] + degrees[j];
            if nu >= dij {
                count += monomials_of_degree(n, nu - dij).len();
            }
        }
    }
    count
}

/// Whether some product of three forms already has degree at most `nu`, in
/// which case the syzygies of the Macaulay map are not free.
pub fn has_second_syzygies(degrees: &[u32], nu: u32) -> bool {
    let s = degrees.len();
    for i in 0..s {
        for j in i + 1..s {
            for k in j + 1..s {
                if degrees[i] + degrees[j] + degrees[k] <= nu {
                    return true;
                }
            }
        }
    }
    false
}

/// Matrix of the Koszul relations `m''P_j e_i - m''P_i e_j` in degree `nu`.
/// Its rows follow the columns of the Macaulay map, so that
/// `M * K = 0`.
pub fn koszul_syzygies(sys: &PolySystem, mac: &MacaulayMap) -> Result<ExactMatrix> {
    let nu = mac.nu();
    if has_second_syzygies(sys.degrees(), nu) {
        return Err(Error::Unsupported(format!(
            "degree {nu} has relations among the Koszul syzygies of degrees {:?}",
            sys.degrees()
        )));
    }
    let n = sys.n();
    let u = sys.universe();
    let index: HashMap<(usize, Vec<u16>), usize> =
        mac.columns().iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
    let nrows = mac.columns().len();
    let mut cols: Vec<Vec<ZPoly>> = Vec::new();
    let mut labels = Vec::new();
    let d = sys.degrees();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if nu < d[i] + d[j] {
                continue;
            }
            for mpp in monomials_of_degree(n, nu - d[i] - d[j]) {
                let mut col = vec![Polynomial::zero(u); nrows];
                // block i carries m'' P_j, block j carries -m'' P_i
                for (block, other, negate) in [(i, j, false), (j, i, true)] {
                    for mu in monomials_of_degree(n, nu - d[block]) {
                        let Some(alpha) = quotient(&mu, &mpp) else { continue };
                        if let Some(c) = sys.coefficient(other, &alpha) {
                            col[index[&(block, mu)]] = if negate { -c } else { c.clone() };
                        }
                    }
                }
                cols.push(col);
                labels.push(format!("{}*(P{}e{} - P{}e{})", display(&mpp), j + 1, i + 1, i + 1, j + 1));
            }
        }
    }
    let entries = (0..nrows).flat_map(|r| cols.iter().map(move |c| c[r].clone())).collect();
    ExactMatrix::new(u, mac.matrix().col_labels().to_vec(), labels, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::DegreeVector;
    use crate::subres::build_generic_system;

    fn shape(n: usize, d: &[u32], nu: u32) -> (usize, usize) {
        let sys = build_generic_system(&DegreeVector::new(n, d).unwrap()).unwrap();
        let m = build_macaulay_map(sys.system(), nu);
        (m.matrix().nrows(), m.matrix().ncols())
    }

    #[test]
    fn shapes() {
        assert_eq!(shape(2, &[2, 2], 2), (3, 2));
        assert_eq!(shape(2, &[4, 2], 3), (4, 2));
        assert_eq!(shape(3, &[3, 2, 2], 4), (15, 15));
    }

    #[test]
    fn columns_are_shifted_forms() {
        let sys = build_generic_system(&DegreeVector::new(2, &[3, 2]).unwrap()).unwrap();
        let mac = build_macaulay_map(sys.system(), 3);
        let u = sys.universe();
        let x: Vec<ZPoly> = (0..2).map(|k| Polynomial::var(u, k)).collect();
        for (k, (i, mp)) in mac.columns().iter().enumerate() {
            let mut shifted = sys.polys()[*i].clone();
            for (v, &e) in mp.iter().enumerate() {
                shifted = &shifted * &x[v].pow(e as u32);
            }
            let rebuilt = mac.row_monomials().iter().enumerate().fold(Polynomial::zero(u), |acc, (r, m)| {
                let mono = m.iter().enumerate().fold(Polynomial::one(u), |a, (v, &e)| &a * &x[v].pow(e as u32));
                &acc + &(&mono * mac.matrix().get(r, k))
            });
            assert_eq!(rebuilt, shifted);
        }
    }

    #[test]
    fn koszul_columns_are_relations() {
        let sys = build_generic_system(&DegreeVector::new(3, &[3, 1, 1]).unwrap()).unwrap();
        let mac = build_macaulay_map(sys.system(), 2);
        let k = koszul_syzygies(sys.system(), &mac).unwrap();
        assert_eq!((k.nrows(), k.ncols()), (6, 1));
        let m = mac.matrix();
        for r in 0..m.nrows() {
            let s = (0..m.ncols()).fold(Polynomial::zero(sys.universe()), |acc, c| &acc + &(m.get(r, c) * k.get(c, 0)));
            assert!(s.is_zero());
        }
        assert_eq!(koszul_rank(&[3, 1, 1], 3, 2), 1);
        assert!(has_second_syzygies(&[1, 1, 1], 3));
        assert!(!has_second_syzygies(&[2, 2, 2], 3));
    }
}
