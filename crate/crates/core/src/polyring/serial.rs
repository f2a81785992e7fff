use std::sync::Arc;

use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::universe::VarUniverse;
use crate::error::{Error, Result};

/// Structured text form of a polynomial: variable order, groups, and terms
/// with decimal coefficients.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub groups: IndexMap<String, Vec<String>>,
    pub terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermDoc {
    pub coeff: String,
    pub exp: Vec<u16>,
}

impl PolyDoc {
    pub fn from_poly(p: &Polynomial<BigInt>) -> Self {
        let u = p.universe();
        PolyDoc {
            vars: u.names().to_vec(),
            groups: u
                .groups()
                .iter()
                .map(|g| (g.name.clone(), g.vars.iter().map(|&v| u.name(v).to_string()).collect()))
                .collect(),
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| TermDoc { coeff: c.to_string(), exp: m.exponents().to_vec() })
                .collect(),
        }
    }

    pub fn universe(&self) -> Result<Arc<VarUniverse>> {
        let groups: Vec<(&str, Vec<&str>)> = self
            .groups
            .iter()
            .map(|(g, vs)| (g.as_str(), vs.iter().map(|s| s.as_str()).collect()))
            .collect();
        let names: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        VarUniverse::new(&names, &groups)
    }

    pub fn to_poly(&self) -> Result<Polynomial<BigInt>> {
        let u = self.universe()?;
        self.to_poly_in(&u)
    }

    /// Reads the terms into an existing universe, which must have the same
    /// variable order.
    pub fn to_poly_in(&self, u: &Arc<VarUniverse>) -> Result<Polynomial<BigInt>> {
        if u.names() != self.vars.as_slice() {
            return Err(Error::UniverseMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exp.len() != u.len() {
                return Err(Error::Serialization(format!(
                    "exponent list of length {} in a universe of {} variables",
                    t.exp.len(),
                    u.len()
                )));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Serialization(format!("bad coefficient `{}`", t.coeff)))?;
            terms.push((Monomial::from_exponents(&t.exp), c));
        }
        Ok(Polynomial::from_terms(u, terms))
    }
}

impl Polynomial<BigInt> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PolyDoc::from_poly(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: PolyDoc = serde_json::from_str(s).map_err(|e| Error::Serialization(e.to_string()))?;
        doc.to_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_is_exact() {
        let u = VarUniverse::from_groups(&[("a", vec!["a0", "a2"]), ("b", vec!["b0", "b2"])]).unwrap();
        let p = Polynomial::parse(&u, "a0*b2 - a2*b0 + 123456789012345678901234567890*a0^3").unwrap();
        let s = p.to_json();
        let q = Polynomial::from_json(&s).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.to_json(), s);
        assert!(s.contains("\"coeff\": \"123456789012345678901234567890\""));
    }

    #[test]
    fn rejects_malformed_documents() {
        let bad = r#"{"vars":["x"],"groups":{"x":["x"]},"terms":[{"coeff":"1","exp":[1,2]}]}"#;
        assert!(matches!(Polynomial::from_json(bad), Err(Error::Serialization(_))));
        let bad_group = r#"{"vars":["x"],"groups":{"x":[]},"terms":[]}"#;
        assert!(matches!(Polynomial::from_json(bad_group), Err(Error::InvalidUniverse(_))));
    }
}
