use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Value, VarUniverse, ZPoly};

/// Dense matrix of integer polynomials with labelled rows and columns.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    universe: Arc<VarUniverse>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    entries: Vec<ZPoly>,
}

fn check_unique(labels: &[String], axis: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::Dimension(format!("duplicate {axis} label `{l}`")));
        }
    }
    Ok(())
}

impl ExactMatrix {
    pub fn new(
        universe: &Arc<VarUniverse>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        entries: Vec<ZPoly>,
    ) -> Result<Self> {
        if entries.len() != row_labels.len() * col_labels.len() {
            return Err(Error::Dimension(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                row_labels.len(),
                col_labels.len()
            )));
        }
        check_unique(&row_labels, "row")?;
        check_unique(&col_labels, "column")?;
        if entries.iter().any(|e| e.universe() != universe) {
            return Err(Error::UniverseMismatch);
        }
        Ok(ExactMatrix { universe: universe.clone(), row_labels, col_labels, entries })
    }

    /// Unlabelled matrix from rows; labels are `r0, r1, ...` and `c0, c1, ...`.
    pub fn from_rows(universe: &Arc<VarUniverse>, rows: Vec<Vec<ZPoly>>) -> Result<Self> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != nc) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(
            universe,
            (0..nr).map(|i| format!("r{i}")).collect(),
            (0..nc).map(|j| format!("c{j}")).collect(),
            rows.into_iter().flatten().collect(),
        )
    }

    pub fn from_ints(universe: &Arc<VarUniverse>, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Polynomial::constant(universe, BigInt::from(v))).collect())
            .collect();
        Self::from_rows(universe, rows)
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        &self.universe
    }

    pub fn nrows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> &ZPoly {
        &self.entries[i * self.ncols() + j]
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|e| e.is_constant())
    }

    pub fn rows(&self) -> Vec<Vec<ZPoly>> {
        (0..self.nrows()).map(|i| (0..self.ncols()).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        ExactMatrix {
            universe: self.universe.clone(),
            row_labels: rows.iter().map(|&i| self.row_labels[i].clone()).collect(),
            col_labels: cols.iter().map(|&j| self.col_labels[j].clone()).collect(),
            entries,
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let (nr, nc) = (self.nrows(), self.ncols());
        let entries = (0..nc).flat_map(|j| (0..nr).map(move |i| (i, j))).map(|(i, j)| self.get(i, j).clone()).collect();
        ExactMatrix {
            universe: self.universe.clone(),
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            entries,
        }
    }

    /// Integer entries; fails on symbolic entries.
    pub fn to_integers(&self) -> Result<Vec<Vec<BigInt>>> {
        (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.get(i, j).as_constant().ok_or(Error::SymbolicEntries)).collect())
            .collect()
    }

    /// Evaluates every entry at the given full point of the universe.
    pub fn evaluate(&self, point: &[BigInt]) -> Vec<Vec<BigInt>> {
        (0..self.nrows()).map(|i| (0..self.ncols()).map(|j| self.get(i, j).evaluate(point)).collect()).collect()
    }

    /// Entrywise substitution (see [`Polynomial::substitute`]).
    pub fn substitute(&self, by_var: &[Option<&Value>]) -> Result<ExactMatrix> {
        let entries = self.entries.iter().map(|e| e.substitute(by_var)).collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix { entries, ..self.clone() })
    }
}

/// A point with independent seeded integer coordinates in `[-bound, bound]`.
pub fn random_point(universe: &VarUniverse, seed: u64, bound: i64) -> Vec<BigInt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..universe.len()).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
}
