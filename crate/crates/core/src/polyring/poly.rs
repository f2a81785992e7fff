use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::Monomial;
use super::universe::VarUniverse;
use crate::error::{Error, Result};

/// Coefficient domain of a [`Polynomial`]: the integers or the rationals.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Send
    + Sync
    + fmt::Debug
    + fmt::Display
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn is_negative_coeff(&self) -> bool;
}

impl Coeff for BigInt {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for BigRational {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

/// Sparse multivariate polynomial with terms in descending grevlex order and
/// no stored zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial<C = BigInt> {
    universe: Arc<VarUniverse>,
    terms: Vec<(Monomial, C)>,
}

/// The value substituted for one variable by [`Polynomial::specialize`].
#[derive(Clone, Debug)]
pub enum Value<C = BigInt> {
    Const(C),
    Poly(Polynomial<C>),
}

pub(crate) fn same_universe(a: &Arc<VarUniverse>, b: &Arc<VarUniverse>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<C: Coeff> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl<C: Coeff + Eq> Eq for Polynomial<C> {}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(universe: &Arc<VarUniverse>) -> Self {
        Polynomial { universe: universe.clone(), terms: Vec::new() }
    }

    pub fn one(universe: &Arc<VarUniverse>) -> Self {
        Self::constant(universe, C::one())
    }

    pub fn constant(universe: &Arc<VarUniverse>, c: C) -> Self {
        Self::monomial(universe, Monomial::one(universe.len()), c)
    }

    pub fn monomial(universe: &Arc<VarUniverse>, m: Monomial, c: C) -> Self {
        debug_assert_eq!(m.nvars(), universe.len());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { universe: universe.clone(), terms }
    }

    pub fn var(universe: &Arc<VarUniverse>, var: usize) -> Self {
        Self::monomial(universe, Monomial::var(universe.len(), var, 1), C::one())
    }

    pub fn var_named(universe: &Arc<VarUniverse>, name: &str) -> Result<Self> {
        let v = universe.var(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(universe, v))
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(universe: &Arc<VarUniverse>, terms: I) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), universe.len());
            match acc.get_mut(&m) {
                Some(e) => *e += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(universe, acc)
    }

    fn from_map(universe: &Arc<VarUniverse>, acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { universe: universe.clone(), terms }
    }

    /// Trusts the caller that `terms` is strictly descending with no zeros.
    pub(crate) fn from_sorted_unchecked(universe: &Arc<VarUniverse>, terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { universe: universe.clone(), terms }
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        &self.universe
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var) as u32).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var) as u32).min().unwrap_or(0)
    }

    /// Variables that occur with positive exponent in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.universe.len();
        let mut seen = vec![false; n];
        for (m, _) in &self.terms {
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    seen[v] = true;
                }
            }
        }
        (0..n).filter(|&v| seen[v]).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Sum of the terms of top total degree.
    pub fn top_form(&self) -> Self {
        let Some(d) = self.total_degree() else { return self.clone() };
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Polynomial { universe: self.universe.clone(), terms }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if negate_other {
                        c -= &b[j].1;
                    } else {
                        c += &b[j].1;
                    }
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial { universe: self.universe.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.universe));
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.mul_term(m, c));
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(other.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len() * 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let mut c = ca.clone();
                c *= cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(&self.universe, acc))
    }

    /// Multiplication by a single term; monomial orders are compatible with
    /// multiplication, so the term order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| {
                let mut k = cc.clone();
                k *= c;
                (mm.mul(m), k)
            })
            .collect();
        Polynomial { universe: self.universe.clone(), terms }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::one(self.universe.len()), c)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.universe);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Groups terms by their exponents in `vars`: `self = sum_e x^e * coeff_e`,
    /// where the coefficients do not involve `vars`. Keys are exponent vectors
    /// restricted to `vars`.
    pub fn split_by_vars(&self, vars: &[usize]) -> BTreeMap<Vec<u16>, Self> {
        let mut parts: BTreeMap<Vec<u16>, Vec<(Monomial, C)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u16> = vars.iter().map(|&v| m.exponent(v)).collect();
            let mut rest = m.clone();
            for &v in vars {
                rest.set_exponent(v, 0);
            }
            parts.entry(key).or_default().push((rest, c.clone()));
        }
        // dropping the same variables from every term keeps relative order
        parts
            .into_iter()
            .map(|(k, ts)| (k, Polynomial { universe: self.universe.clone(), terms: ts }))
            .collect()
    }

    /// Simultaneous substitution of the named variables. Unassigned variables
    /// are kept.
    pub fn specialize(&self, assignment: &[(&str, Value<C>)]) -> Result<Self> {
        let mut by_var: Vec<Option<&Value<C>>> = vec![None; self.universe.len()];
        for (name, val) in assignment {
            let v = self.universe.var(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if let Value::Poly(p) = val {
                self.check(p)?;
            }
            by_var[v] = Some(val);
        }
        self.substitute(&by_var)
    }

    /// Substitution indexed by variable; `None` keeps the variable.
    pub fn substitute(&self, by_var: &[Option<&Value<C>>]) -> Result<Self> {
        let n = self.universe.len();
        if by_var.len() != n {
            return Err(Error::Dimension("substitution length differs from universe size".into()));
        }
        let mut powers: HashMap<(usize, u16), Polynomial<C>> = HashMap::new();
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = m.clone();
            let mut coeff = c.clone();
            let mut factor: Option<Polynomial<C>> = None;
            for (v, slot) in by_var.iter().enumerate() {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                let Some(val) = slot else { continue };
                kept.set_exponent(v, 0);
                match val {
                    Value::Const(k) => {
                        let mut p = C::one();
                        for _ in 0..e {
                            p *= k;
                        }
                        coeff *= &p;
                    }
                    Value::Poly(q) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| q.pow(e as u32));
                        factor = Some(match factor {
                            None => pw.clone(),
                            Some(f) => &f * &*pw,
                        });
                    }
                }
            }
            if coeff.is_zero() {
                continue;
            }
            match factor {
                None => {
                    match acc.get_mut(&kept) {
                        Some(e) => *e += &coeff,
                        None => {
                            acc.insert(kept, coeff);
                        }
                    };
                }
                Some(f) => {
                    for (fm, fc) in f.terms {
                        let mm = fm.mul(&kept);
                        let mut k = fc;
                        k *= &coeff;
                        match acc.get_mut(&mm) {
                            Some(e) => *e += &k,
                            None => {
                                acc.insert(mm, k);
                            }
                        }
                    }
                }
            }
        }
        Ok(Self::from_map(&self.universe, acc))
    }

    /// Full evaluation at a point given for every variable.
    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.universe.len());
        let mut cache: HashMap<(usize, u16), C> = HashMap::new();
        let mut sum = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = cache.entry((v, e)).or_insert_with(|| {
                    let mut p = C::one();
                    for _ in 0..e {
                        p *= &point[v];
                    }
                    p
                });
                t *= &*pw;
            }
            sum += &t;
        }
        sum
    }

    /// Per-group maximal degree together with whether every term attains it.
    pub fn multidegree_by_group(&self) -> Result<Vec<GroupDegree>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("multidegree"));
        }
        Ok(self
            .universe
            .groups()
            .iter()
            .map(|g| {
                let degs: Vec<u32> = self.terms.iter().map(|(m, _)| m.degree_in(&g.vars)).collect();
                let max = *degs.iter().max().unwrap();
                GroupDegree { group: g.name.clone(), degree: max, homogeneous: degs.iter().all(|&d| d == max) }
            })
            .collect())
    }

    /// Moves the polynomial into another universe that contains every
    /// variable it uses, matching variables by name.
    pub fn rename_into(&self, target: &Arc<VarUniverse>) -> Result<Self> {
        let map: Vec<Option<usize>> = self.universe.names().iter().map(|n| target.var(n)).collect();
        let nt = target.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut mm = Monomial::one(nt);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let t = map[v].ok_or_else(|| Error::UnknownVariable(self.universe.name(v).to_string()))?;
                mm.set_exponent(t, e);
            }
            terms.push((mm, c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDegree {
    pub group: String,
    pub degree: u32,
    pub homogeneous: bool,
}

impl Polynomial<BigInt> {
    /// Positive integer content, the sign that makes the leading coefficient
    /// of the primitive part positive, and the primitive part itself.
    pub fn content_and_primitive(&self) -> Result<(BigInt, i8, Polynomial<BigInt>)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("content"));
        }
        let content = self.integer_content();
        let sign: i8 = if self.terms[0].1.is_negative() { -1 } else { 1 };
        let divisor = if sign < 0 { -content.clone() } else { content.clone() };
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c / &divisor)).collect();
        Ok((content, sign, Polynomial { universe: self.universe.clone(), terms }))
    }

    /// gcd of the integer coefficients; zero for the zero polynomial.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Flips the overall sign so that the leading coefficient is positive.
    pub fn normalize_sign(&self) -> Self {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Exact division in the integer polynomial ring.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check(divisor)?;
        let (q, r) = self.divide_with_remainder(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotExactDivision);
        }
        Ok(q)
    }

    pub fn divides(&self, dividend: &Self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("divisor"));
        }
        self.check(dividend)?;
        Ok(match dividend.exact_divide(self) {
            Ok(_) => true,
            Err(Error::NotExactDivision) => false,
            Err(e) => return Err(e),
        })
    }

    // Leading term division; stops at the first remainder term the divisor's
    // leading term cannot cancel, which is enough to decide exactness.
    fn divide_with_remainder(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some((lm, lc)) = divisor.terms.first() else {
            return Err(Error::ZeroPolynomial("divisor"));
        };
        if self.is_zero() {
            return Ok((Self::zero(&self.universe), Self::zero(&self.universe)));
        }
        if divisor.terms.len() == 1 {
            let mut q = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let Some(qm) = lm.quotient_of(m) else { return Ok((Self::zero(&self.universe), self.clone())) };
                let (qc, rem) = c.div_rem(lc);
                if !rem.is_zero() {
                    return Ok((Self::zero(&self.universe), self.clone()));
                }
                q.push((qm, qc));
            }
            return Ok((Polynomial { universe: self.universe.clone(), terms: q }, Self::zero(&self.universe)));
        }
        let mut rem: BTreeMap<std::cmp::Reverse<Monomial>, BigInt> =
            self.terms.iter().map(|(m, c)| (std::cmp::Reverse(m.clone()), c.clone())).collect();
        let mut quotient = Vec::new();
        let low = &divisor.terms.last().unwrap().0;
        let self_low = &self.terms.last().unwrap().0;
        while let Some((std::cmp::Reverse(m), c)) = rem.pop_first() {
            let Some(qm) = lm.quotient_of(&m) else {
                rem.insert(std::cmp::Reverse(m), c);
                break;
            };
            // the quotient's smallest term times the divisor's smallest term
            // is the dividend's smallest term, so qm * low >= self_low
            if qm.mul(low) < *self_low {
                rem.insert(std::cmp::Reverse(m), c);
                break;
            }
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                rem.insert(std::cmp::Reverse(m), c);
                break;
            }
            for (dm, dc) in &divisor.terms[1..] {
                let key = std::cmp::Reverse(dm.mul(&qm));
                let delta = dc * &qc;
                match rem.get_mut(&key) {
                    Some(e) => {
                        *e -= &delta;
                        if e.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        let r = Polynomial {
            universe: self.universe.clone(),
            terms: rem.into_iter().map(|(std::cmp::Reverse(m), c)| (m, c)).collect(),
        };
        Ok((Polynomial { universe: self.universe.clone(), terms: quotient }, r))
    }

    pub fn to_rational(&self) -> Polynomial<BigRational> {
        Polynomial {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))).collect(),
        }
    }

    /// Rational substitution; unassigned variables are kept.
    pub fn specialize_rational(&self, assignment: &[(&str, BigRational)]) -> Result<Polynomial<BigRational>> {
        let vals: Vec<(&str, Value<BigRational>)> =
            assignment.iter().map(|(n, v)| (*n, Value::Const(v.clone()))).collect();
        self.to_rational().specialize(&vals)
    }

    /// Evaluation modulo a prime below 2^32 at a full point.
    pub fn evaluate_mod(&self, point: &[u64], p: u64) -> u64 {
        assert_eq!(point.len(), self.universe.len());
        let pb = BigInt::from(p);
        let mut sum: u64 = 0;
        for (m, c) in &self.terms {
            let cm = c.mod_floor(&pb).to_u64().unwrap();
            let mut t = cm;
            for (v, &e) in m.exponents().iter().enumerate() {
                if e != 0 {
                    t = t * crate::irred::fp::pow_mod(point[v], e as u64, p) % p;
                }
            }
            sum = (sum + t) % p;
        }
        sum
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

impl Polynomial<BigRational> {
    /// Clears denominators: returns `(q, d)` with integer `q = d * self`,
    /// `d > 0` minimal.
    pub fn clear_denominators(&self) -> (Polynomial<BigInt>, BigInt) {
        let mut d = BigInt::one();
        for (_, c) in &self.terms {
            d = d.lcm(c.denom());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), (c * BigRational::from_integer(d.clone())).to_integer()))
            .collect();
        (Polynomial { universe: self.universe.clone(), terms }, d)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<C: Coeff> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                self.$try(rhs).expect("polynomials from different universes")
            }
        }
        impl<C: Coeff> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$try(&rhs).expect("polynomials from different universes")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_coeff();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = format_monomial(&self.universe, m);
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

pub fn format_monomial(universe: &VarUniverse, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(universe.name(v).to_string()),
            _ => parts.push(format!("{}^{}", universe.name(v), e)),
        }
    }
    parts.join("*")
}
