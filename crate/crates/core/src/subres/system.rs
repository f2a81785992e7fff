use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hilbert::DegreeVector;
use crate::polyring::{monomials_of_degree, Monomial, Polynomial, VarUniverse, ZPoly};

/// Name of the variable group holding `x1..xn`.
pub const X_GROUP: &str = "x";

/// Universe holding only `x1..xn`, in the group [`X_GROUP`].
pub fn x_universe(n: usize) -> Arc<VarUniverse> {
    let xs: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
    VarUniverse::from_groups(&[(X_GROUP.to_string(), xs)]).expect("x1..xn is a valid universe")
}

/// Name of the coefficient variable of `x^alpha` in the `i`-th generic form
/// (1-based `i`), e.g. `c1_2_0` for `x1^2` in `P1` with two variables.
pub fn coefficient_name(i: usize, alpha: &[u16]) -> String {
    let mut s = format!("c{i}");
    for e in alpha {
        s.push('_');
        s.push_str(&e.to_string());
    }
    s
}

/// Forms `P_1..P_s`, homogeneous in `x1..xn`, whose coefficients are
/// polynomials in the remaining variables of the universe.
#[derive(Clone, Debug)]
pub struct PolySystem {
    universe: Arc<VarUniverse>,
    x_vars: Vec<usize>,
    degrees: Vec<u32>,
    polys: Vec<ZPoly>,
    coeffs: Vec<HashMap<Vec<u16>, ZPoly>>,
}

impl PolySystem {
    /// The universe must contain a group named `x`; each form must be
    /// homogeneous in it of positive degree.
    pub fn new(universe: &Arc<VarUniverse>, polys: Vec<ZPoly>) -> Result<Self> {
        let xg = universe
            .group(X_GROUP)
            .ok_or_else(|| Error::InvalidUniverse(format!("no `{X_GROUP}` group")))?;
        let x_vars = xg.vars.clone();
        let mut degrees = Vec::with_capacity(polys.len());
        let mut coeffs = Vec::with_capacity(polys.len());
        for (k, p) in polys.iter().enumerate() {
            if p.universe() != universe {
                return Err(Error::UniverseMismatch);
            }
            if p.is_zero() {
                return Err(Error::ZeroPolynomial("a system form"));
            }
            let parts = p.split_by_vars(&x_vars);
            let mut degs = parts.keys().map(|e| e.iter().map(|&v| v as u32).sum::<u32>());
            let d = degs.next().unwrap();
            if degs.any(|e| e != d) {
                return Err(Error::InvalidDegrees(format!("form {} is not homogeneous in x", k + 1)));
            }
            if d == 0 {
                return Err(Error::InvalidDegrees(format!("form {} has degree 0 in x", k + 1)));
            }
            degrees.push(d);
            coeffs.push(parts.into_iter().collect());
        }
        Ok(PolySystem { universe: universe.clone(), x_vars, degrees, polys, coeffs })
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        &self.universe
    }

    /// Number of `x` variables.
    pub fn n(&self) -> usize {
        self.x_vars.len()
    }

    pub fn x_vars(&self) -> &[usize] {
        &self.x_vars
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn polys(&self) -> &[ZPoly] {
        &self.polys
    }

    /// Coefficient of `x^alpha` in the `i`-th form (0-based), or `None` when
    /// it is zero.
    pub fn coefficient(&self, i: usize, alpha: &[u16]) -> Option<&ZPoly> {
        self.coeffs[i].get(alpha)
    }

    pub fn check_square(&self) -> Result<DegreeVector> {
        let dv = DegreeVector::new(self.n(), &self.degrees)?;
        if !dv.is_square() {
            return Err(Error::InvalidDegrees(format!("{} forms in {} variables", dv.s(), dv.n())));
        }
        Ok(dv)
    }
}

/// The generic system: every coefficient is its own variable.
#[derive(Clone, Debug)]
pub struct GenericSystem {
    dv: DegreeVector,
    system: PolySystem,
}

impl GenericSystem {
    pub fn degree_vector(&self) -> &DegreeVector {
        &self.dv
    }

    pub fn system(&self) -> &PolySystem {
        &self.system
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        self.system.universe()
    }

    pub fn n(&self) -> usize {
        self.dv.n()
    }

    pub fn polys(&self) -> &[ZPoly] {
        self.system.polys()
    }

    /// Name of the coefficient group of the `i`-th form (0-based).
    pub fn group_name(i: usize) -> String {
        format!("c{}", i + 1)
    }

    /// Coefficient variable of `x^alpha` in the `i`-th form (0-based).
    pub fn coefficient_var(&self, i: usize, alpha: &[u16]) -> Option<usize> {
        self.universe().var(&coefficient_name(i + 1, alpha))
    }
}

/// `P_i = sum_{|alpha| = d_i} c_{i,alpha} x^alpha` for `i = 1..n`.
pub fn build_generic_system(dv: &DegreeVector) -> Result<GenericSystem> {
    if !dv.is_square() {
        return Err(Error::InvalidDegrees(format!("need as many forms as variables, got {} and {}", dv.s(), dv.n())));
    }
    let n = dv.n();
    let xs: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
    let mut groups = vec![(X_GROUP.to_string(), xs)];
    let supports: Vec<Vec<Vec<u16>>> = dv.degrees().iter().map(|&d| monomials_of_degree(n, d)).collect();
    for (i, sup) in supports.iter().enumerate() {
        groups.push((GenericSystem::group_name(i), sup.iter().map(|a| coefficient_name(i + 1, a)).collect()));
    }
    let universe = VarUniverse::from_groups(&groups)?;
    let nv = universe.len();
    let polys = supports
        .iter()
        .enumerate()
        .map(|(i, sup)| {
            let terms = sup.iter().map(|alpha| {
                let mut m = Monomial::one(nv);
                for (k, &e) in alpha.iter().enumerate() {
                    m.set_exponent(k, e);
                }
                let c = universe.var(&coefficient_name(i + 1, alpha)).unwrap();
                m.set_exponent(c, 1);
                (m, BigInt::from(1))
            });
            Polynomial::from_terms(&universe, terms)
        })
        .collect();
    let system = PolySystem::new(&universe, polys)?;
    Ok(GenericSystem { dv: dv.clone(), system })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(n: usize, d: &[u32]) -> Vec<usize> {
        let sys = build_generic_system(&DegreeVector::new(n, d).unwrap()).unwrap();
        (0..n).map(|i| sys.universe().group(&GenericSystem::group_name(i)).unwrap().vars.len()).collect()
    }

    #[test]
    fn coefficient_counts() {
        assert_eq!(counts(2, &[2, 2]), vec![3, 3]);
        assert_eq!(counts(3, &[2, 2, 2]), vec![6, 6, 6]);
        assert_eq!(counts(2, &[3, 2]), vec![4, 3]);
    }

    #[test]
    fn forms_and_names() {
        let sys = build_generic_system(&DegreeVector::new(2, &[2, 1]).unwrap()).unwrap();
        let u = sys.universe();
        assert_eq!(sys.polys()[0], Polynomial::parse(u, "c1_2_0*x1^2 + c1_1_1*x1*x2 + c1_0_2*x2^2").unwrap());
        assert_eq!(sys.polys()[1], Polynomial::parse(u, "c2_1_0*x1 + c2_0_1*x2").unwrap());
        let c = sys.system().coefficient(0, &[1, 1]).unwrap();
        assert_eq!(c, &Polynomial::parse(u, "c1_1_1").unwrap());
        assert!(build_generic_system(&DegreeVector::new(3, &[2, 2]).unwrap()).is_err());
    }

    #[test]
    fn rejects_inhomogeneous_forms() {
        let u = VarUniverse::from_groups(&[("x", vec!["x1", "x2"]), ("a", vec!["a"])]).unwrap();
        let p = Polynomial::parse(&u, "x1^2 + a*x2").unwrap();
        assert!(matches!(PolySystem::new(&u, vec![p]), Err(Error::InvalidDegrees(_))));
    }
}
