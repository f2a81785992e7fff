//! Hilbert functions of complete intersections and the degree thresholds
//! that govern subresultants of generic systems.
//!
//! For `s` generic forms of degrees `d_1..d_s` in `n` variables the Hilbert
//! series of the quotient is `prod (1 - z^{d_i}) / (1 - z)^n`. Values are
//! obtained by expanding the numerator exactly and convolving with the
//! binomial series of `(1 - z)^{-n}`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of variables and the degrees of the forms, as given by the caller,
/// together with the descending sort the theory is stated in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVector {
    n: usize,
    degrees: Vec<u32>,
    sorted: Vec<u32>,
    /// `sorted[k] == degrees[perm[k]]`
    perm: Vec<usize>,
}

impl DegreeVector {
    pub fn new(n: usize, degrees: &[u32]) -> Result<Self> {
        if degrees.is_empty() || degrees.len() > n {
            return Err(Error::InvalidDegrees(format!("need 1 <= s <= n, got s = {} with n = {n}", degrees.len())));
        }
        if let Some(d) = degrees.iter().find(|&&d| d == 0) {
            return Err(Error::InvalidDegrees(format!("degree {d} is not positive")));
        }
        let mut perm: Vec<usize> = (0..degrees.len()).collect();
        // stable, so equal degrees keep their input order
        perm.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]));
        let sorted = perm.iter().map(|&k| degrees[k]).collect();
        Ok(DegreeVector { n, degrees: degrees.to_vec(), sorted, perm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn sorted(&self) -> &[u32] {
        &self.sorted
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_sorted_descending(&self) -> bool {
        self.degrees == self.sorted
    }

    pub fn min_degree(&self) -> u32 {
        *self.sorted.last().unwrap()
    }

    pub fn is_square(&self) -> bool {
        self.s() == self.n
    }

    /// `sum (d_i - 1)`.
    pub fn rho(&self) -> i64 {
        self.degrees.iter().map(|&d| d as i64 - 1).sum()
    }

    pub fn product(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }

    /// The same variables with the `i`-th form removed.
    pub fn without(&self, i: usize) -> Option<DegreeVector> {
        if self.s() < 2 {
            return None;
        }
        let rest: Vec<u32> = self.degrees.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &d)| d).collect();
        DegreeVector::new(self.n, &rest).ok()
    }
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn binomial_u64(n: i64, k: i64) -> u64 {
    binomial(n, k).to_u64().expect("binomial fits in u64")
}

/// Dimension of the space of forms of degree `t` in `n` variables.
pub fn forms_dim(n: usize, t: i64) -> u64 {
    if t < 0 {
        0
    } else {
        binomial_u64(t + n as i64 - 1, n as i64 - 1)
    }
}

fn numerator(degrees: &[u32]) -> Vec<BigInt> {
    let mut num = vec![BigInt::one()];
    for &d in degrees {
        let d = d as usize;
        let mut next = vec![BigInt::zero(); num.len() + d];
        for (k, c) in num.iter().enumerate() {
            next[k] += c;
            next[k + d] -= c;
        }
        num = next;
    }
    num
}

/// Coefficient of `z^t` in `prod (1 - z^{d_i}) / (1 - z)^n`.
pub fn hilbert_value(dv: &DegreeVector, t: i64) -> BigInt {
    if t < 0 {
        return BigInt::zero();
    }
    let n = dv.n as i64;
    let num = numerator(&dv.degrees);
    let mut sum = BigInt::zero();
    for (k, c) in num.iter().enumerate() {
        let k = k as i64;
        if k > t {
            break;
        }
        if !c.is_zero() {
            sum += c * binomial(t - k + n - 1, n - 1);
        }
    }
    sum
}

pub fn hilbert_u64(dv: &DegreeVector, t: i64) -> u64 {
    hilbert_value(dv, t).to_u64().expect("Hilbert value is a non-negative machine integer")
}

/// The critical degree, the base-point count and the two degree bounds of a
/// square system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    pub rho: i64,
    /// Subresultants are not identically zero for `nu > nonvanish_bound`.
    pub nonvanish_bound: i64,
    /// Subresultants are irreducible for `nu > irred_bound`.
    pub irred_bound: i64,
    /// Smallest `nu` of the range where the degree formula applies.
    pub nu_min: i64,
    /// Largest `nu` of that range (`rho`).
    pub nu_max: i64,
    n: usize,
}

impl Thresholds {
    /// `a(nu) = C(rho - nu + n - 1, n - 1)` on `[nu_min, nu_max]`.
    pub fn a(&self, nu: i64) -> Option<u64> {
        if nu < self.nu_min || nu > self.nu_max {
            return None;
        }
        Some(binomial_u64(self.rho - nu + self.n as i64 - 1, self.n as i64 - 1))
    }

    pub fn in_range(&self, nu: i64) -> bool {
        (self.nu_min..=self.nu_max).contains(&nu)
    }

    pub fn above_irred_bound(&self, nu: i64) -> bool {
        nu > self.irred_bound
    }
}

pub fn thresholds(dv: &DegreeVector) -> Result<Thresholds> {
    if !dv.is_square() {
        return Err(Error::InvalidDegrees(format!("thresholds need s = n, got s = {} and n = {}", dv.s(), dv.n)));
    }
    let rho = dv.rho();
    let dmin = dv.min_degree() as i64;
    let sum: i64 = dv.degrees.iter().map(|&d| d as i64).sum();
    Ok(Thresholds {
        rho,
        nonvanish_bound: sum - dv.n as i64 - dmin,
        irred_bound: rho - dmin + 1,
        nu_min: rho - dmin + 1,
        nu_max: rho,
        n: dv.n,
    })
}

/// Degree of a subresultant in the coefficients of the `i`-th form, by both
/// `prod d / d_i - a(nu)` and `H_{d without d_i}(nu - d_i)`; the two must
/// agree.
pub fn expected_multidegree(dv: &DegreeVector, nu: i64, i: usize) -> Result<u64> {
    let th = thresholds(dv)?;
    if i >= dv.s() {
        return Err(Error::InvalidDegrees(format!("form index {i} out of range")));
    }
    if nu < th.nu_min {
        return Err(Error::OutOfRange(format!("degree formula needs nu >= {}, got {nu}", th.nu_min)));
    }
    let a = if nu <= th.rho { th.a(nu).unwrap() } else { 0 };
    let direct = dv.product() / dv.degrees[i] as u64 - a;
    let via_h = match dv.without(i) {
        Some(rest) => hilbert_u64(&rest, nu - dv.degrees[i] as i64),
        // a single form in one variable: the quotient by nothing
        None => forms_dim(dv.n, nu - dv.degrees[i] as i64),
    };
    if direct != via_h {
        return Err(Error::Internal(format!(
            "degree formulas disagree for {:?}, nu = {nu}, i = {i}: {direct} vs {via_h}",
            dv.degrees
        )));
    }
    Ok(direct)
}

/// `H_{d without d_i}(t - d_i) = H_{d without d_i}(t) - H_d(t)`.
pub fn ses_identity_check(dv: &DegreeVector, i: usize, t: i64) -> bool {
    let di = dv.degrees[i] as i64;
    let (shifted, plain) = match dv.without(i) {
        Some(rest) => (hilbert_value(&rest, t - di), hilbert_value(&rest, t)),
        None => (BigInt::from(forms_dim(dv.n, t - di)), BigInt::from(forms_dim(dv.n, t))),
    };
    shifted == plain - hilbert_value(dv, t)
}
