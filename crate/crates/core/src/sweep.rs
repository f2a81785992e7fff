//! The verification sweep: every degree vector and in-range `nu` under a
//! size budget, a set of monomial sets `S` per case, and per `S` the
//! subresultant, its degrees, content and an irreducibility verdict.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{forms_dim, hilbert_u64, thresholds, DegreeVector};
use crate::irred::{irreducibility_verdict, Verdict};
use crate::par::Exec;
use crate::report::{Meta, Report};
use crate::subres::{build_generic_system, enumerate_s, subresultant, MonomialSet, Position};

pub const DEFAULT_MAX_N: usize = 3;
pub const DEFAULT_MAX_DEGREE: u32 = 4;
/// Rows of the symbolic Macaulay matrix, `dim R_nu`.
pub const DEFAULT_MAX_ROWS: u64 = 20;
pub const DEFAULT_SAMPLE: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NuMode {
    AllInRange,
    AtBound,
    AboveBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SMode {
    Exhaustive,
    Sample(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub max_degree: u32,
    /// Explicit degree vectors replacing the enumeration.
    pub degree_vectors: Option<Vec<Vec<u32>>>,
    pub nu_mode: NuMode,
    pub s_mode: SMode,
    pub seed: Option<u64>,
    pub max_rows: u64,
    /// Lifts the default budget on `n`, degrees and rows.
    pub allow_large: bool,
}

impl SweepConfig {
    /// The default budget with sampled `S`.
    pub fn standard(seed: u64) -> Self {
        SweepConfig {
            n_min: 2,
            n_max: DEFAULT_MAX_N,
            max_degree: DEFAULT_MAX_DEGREE,
            degree_vectors: None,
            nu_mode: NuMode::AllInRange,
            s_mode: SMode::Sample(DEFAULT_SAMPLE),
            seed: Some(seed),
            max_rows: DEFAULT_MAX_ROWS,
            allow_large: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_max < self.n_min {
            return Err(Error::Config(format!("need 2 <= n_min <= n_max, got {}..{}", self.n_min, self.n_max)));
        }
        if self.max_degree < 1 || self.max_rows < 1 || self.s_mode == SMode::Sample(0) {
            return Err(Error::Config("degree, row and sample limits must be at least 1".into()));
        }
        if self.seed.is_none() {
            return Err(Error::Config("a seed is required: S sampling and the irreducibility test draw random values".into()));
        }
        let over = self.n_max > DEFAULT_MAX_N
            || self.max_degree > DEFAULT_MAX_DEGREE
            || self.max_rows > DEFAULT_MAX_ROWS
            || self.degree_vectors.iter().flatten().flatten().any(|&d| d > DEFAULT_MAX_DEGREE);
        if over && !self.allow_large {
            return Err(Error::Config(format!(
                "request exceeds the default budget (n <= {DEFAULT_MAX_N}, d_i <= {DEFAULT_MAX_DEGREE}, \
                 {DEFAULT_MAX_ROWS} rows); pass the override to run it"
            )));
        }
        if let Some(dvs) = &self.degree_vectors {
            for d in dvs {
                if d.is_empty() || d.contains(&0) {
                    return Err(Error::Config(format!("invalid degree vector {d:?}")));
                }
            }
        }
        Ok(())
    }
}

/// Nonincreasing degree vectors of length `n` with entries in `1..=max`.
pub fn degree_vectors(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in (1..=cap).rev() {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}

/// One `(d, nu, S)` of the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseInput {
    pub degrees: DegreeVector,
    pub nu: u32,
    pub position: Position,
    pub s: MonomialSet,
    pub seed: u64,
}

/// FNV-1a, so per-case seeds depend only on the case.
fn stable_hash(parts: &[&str]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for p in parts {
        for b in p.bytes().chain(std::iter::once(0xff)) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

fn case_seed(seed: u64, degrees: &[u32], nu: u32, s: &str) -> u64 {
    stable_hash(&[&seed.to_string(), &format!("{degrees:?}"), &nu.to_string(), s])
}

/// Cases in deterministic order, and the number of `(d, nu)` pairs left out
/// by the row budget.
pub fn enumerate_cases(cfg: &SweepConfig) -> Result<(Vec<CaseInput>, usize)> {
    cfg.validate()?;
    let seed = cfg.seed.expect("validated");
    let mut vectors: Vec<(usize, Vec<u32>)> = Vec::new();
    match &cfg.degree_vectors {
        Some(dvs) => vectors.extend(dvs.iter().map(|d| (d.len(), d.clone()))),
        None => {
            for n in cfg.n_min..=cfg.n_max {
                vectors.extend(degree_vectors(n, cfg.max_degree).into_iter().map(|d| (n, d)));
            }
        }
    }
    let mut cases = Vec::new();
    let mut skipped = 0;
    for (n, d) in vectors {
        let dv = DegreeVector::new(n, &d)?;
        let th = thresholds(&dv)?;
        for nu in th.nu_min.max(0)..=th.rho {
            let position = if nu == th.irred_bound { Position::AtBound } else { Position::AboveBound };
            let wanted = match cfg.nu_mode {
                NuMode::AllInRange => true,
                NuMode::AtBound => position == Position::AtBound,
                NuMode::AboveBound => position == Position::AboveBound,
            };
            if !wanted {
                continue;
            }
            if forms_dim(n, nu) > cfg.max_rows {
                skipped += 1;
                continue;
            }
            let nu = nu as u32;
            let limit = match cfg.s_mode {
                SMode::Exhaustive => usize::MAX,
                SMode::Sample(k) => k,
            };
            let sets_seed = case_seed(seed, &d, nu, "S");
            for s in enumerate_s(&dv, nu, limit, sets_seed)? {
                let cseed = case_seed(seed, &d, nu, &s.to_string());
                cases.push(CaseInput { degrees: dv.clone(), nu, position, s, seed: cseed });
            }
        }
    }
    Ok((cases, skipped))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub nu: u32,
    pub position: Position,
    pub s: String,
    pub seed: u64,
    /// `irreducible`, `reducible`, `inconclusive`, `constant`, `zero` or `error`.
    pub verdict: String,
    pub multidegree: Vec<u32>,
    /// `prod d / d_i - a(nu)` per form.
    pub formula: Vec<u64>,
    /// `H_{d without d_i}(nu - d_i)` per form.
    pub h_form: Vec<u64>,
    pub content: String,
    pub terms: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub failures: Vec<String>,
}

fn degree_formulas(dv: &DegreeVector, nu: u32) -> (Vec<u64>, Vec<u64>) {
    let a = thresholds(dv).ok().and_then(|t| t.a(nu as i64)).unwrap_or(0);
    let nu = nu as i64;
    let mut direct = Vec::new();
    let mut via_h = Vec::new();
    for (i, &d) in dv.degrees().iter().enumerate() {
        direct.push(dv.product() / d as u64 - a);
        via_h.push(match dv.without(i) {
            Some(rest) => hilbert_u64(&rest, nu - d as i64),
            None => forms_dim(dv.n(), nu - d as i64),
        });
    }
    (direct, via_h)
}

pub fn run_case(case: &CaseInput) -> CaseRecord {
    let dv = &case.degrees;
    let (formula, h_form) = degree_formulas(dv, case.nu);
    let mut rec = CaseRecord {
        n: dv.n(),
        degrees: dv.degrees().to_vec(),
        nu: case.nu,
        position: case.position,
        s: case.s.to_string(),
        seed: case.seed,
        verdict: "error".into(),
        multidegree: Vec::new(),
        formula,
        h_form,
        content: "0".into(),
        terms: 0,
        detail: None,
        failures: Vec::new(),
    };
    let above = case.position == Position::AboveBound;
    let result = build_generic_system(dv).and_then(|sys| subresultant(&sys, &case.s));
    let r = match result {
        Ok(r) => r,
        Err(Error::GenericRankDeficient) => {
            rec.verdict = "zero".into();
            rec.failures.push("subresultant vanishes identically in the degree range".into());
            return rec;
        }
        Err(e) => {
            rec.detail = Some(e.to_string());
            rec.failures.push(format!("computation failed: {e}"));
            return rec;
        }
    };
    rec.multidegree = (0..dv.s()).map(|i| r.degree_in_form(i)).collect();
    rec.content = r.content.to_string();
    rec.terms = r.delta.len();
    let md: Vec<u64> = rec.multidegree.iter().map(|&d| d as u64).collect();
    if md != rec.formula || md != rec.h_form {
        rec.failures.push(format!("multidegree {:?} differs from {:?} / {:?}", md, rec.formula, rec.h_form));
    }
    if above && rec.content != "1" {
        rec.failures.push(format!("content {} above the bound", rec.content));
    }
    if r.delta.is_constant() {
        rec.verdict = "constant".into();
        if above {
            rec.failures.push("constant subresultant above the bound".into());
        }
        return rec;
    }
    match irreducibility_verdict(&r.delta.content_and_primitive().expect("nonzero").2, case.seed) {
        Ok(v) => {
            rec.verdict = v.label().into();
            match &v {
                Verdict::Reducible { witness, .. } => {
                    rec.detail = Some(format!("factor {witness}"));
                    if above {
                        rec.failures.push(format!("reducible above the bound, factor {witness}"));
                    }
                }
                Verdict::Inconclusive { reason } => rec.detail = Some(reason.clone()),
                Verdict::Irreducible { .. } => {}
            }
        }
        Err(e) => {
            rec.verdict = "error".into();
            rec.failures.push(format!("irreducibility test failed: {e}"));
        }
    }
    rec
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub cases: usize,
    pub irreducible: usize,
    pub reducible: usize,
    pub inconclusive: usize,
    pub constant: usize,
    pub zero: usize,
    pub error: usize,
    pub above_bound: usize,
    pub above_bound_inconclusive: usize,
}

impl Counters {
    fn tally(records: &[CaseRecord]) -> Self {
        let mut c = Counters { cases: records.len(), ..Default::default() };
        for r in records {
            match r.verdict.as_str() {
                "irreducible" => c.irreducible += 1,
                "reducible" => c.reducible += 1,
                "inconclusive" => c.inconclusive += 1,
                "constant" => c.constant += 1,
                "zero" => c.zero += 1,
                _ => c.error += 1,
            }
            if r.position == Position::AboveBound {
                c.above_bound += 1;
                if r.verdict == "inconclusive" {
                    c.above_bound_inconclusive += 1;
                }
            }
        }
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyBody {
    pub config: SweepConfig,
    pub skipped_by_budget: usize,
    pub counters: Counters,
    pub passed: bool,
    pub cases: Vec<CaseRecord>,
}

impl VerifyBody {
    pub fn failing(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.failures.is_empty())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&format!(
                "n={} d={:?} nu={} {:?} S={} -> {} deg={:?} content={} terms={}",
                c.n, c.degrees, c.nu, c.position, c.s, c.verdict, c.multidegree, c.content, c.terms
            ));
            if let Some(d) = &c.detail {
                out.push_str(&format!(" ({d})"));
            }
            for f in &c.failures {
                out.push_str(&format!("\n  FAIL {f}"));
            }
            out.push('\n');
        }
        let k = &self.counters;
        out.push_str(&format!(
            "cases {} | irreducible {} reducible {} inconclusive {} constant {} zero {} error {} | skipped by budget {}\n",
            k.cases, k.irreducible, k.reducible, k.inconclusive, k.constant, k.zero, k.error, self.skipped_by_budget
        ));
        out.push_str(if self.passed { "verify: passed\n" } else { "verify: FAILED\n" });
        out
    }
}

pub fn cmd_verify(cfg: &SweepConfig, exec: Exec) -> Result<Report<VerifyBody>> {
    let start = Instant::now();
    let (cases, skipped) = enumerate_cases(cfg)?;
    let timed = exec.map(&cases, |c| {
        let t = Instant::now();
        let r = run_case(c);
        (r, t.elapsed().as_secs_f64() * 1e3)
    });
    let (records, ms): (Vec<CaseRecord>, Vec<f64>) = timed.into_iter().unzip();
    let counters = Counters::tally(&records);
    let passed = records.iter().all(|r| r.failures.is_empty());
    let body = VerifyBody { config: cfg.clone(), skipped_by_budget: skipped, counters, passed, cases: records };
    let jobs = match exec {
        Exec::Serial => 1,
        Exec::Parallel { jobs } => jobs,
    };
    let meta = Meta::new(exec.is_parallel(), jobs, start.elapsed().as_secs_f64() * 1e3, ms);
    Ok(Report::new("verify", body, meta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_vector_enumeration() {
        assert_eq!(degree_vectors(2, 2), vec![vec![2, 2], vec![2, 1], vec![1, 1]]);
        assert_eq!(degree_vectors(3, 4).len(), 20);
    }

    #[test]
    fn config_validation() {
        let mut c = SweepConfig::standard(1);
        assert!(c.validate().is_ok());
        c.max_degree = 5;
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        c.allow_large = true;
        assert!(c.validate().is_ok());
        c.seed = None;
        assert!(c.validate().is_err());
    }

    #[test]
    fn small_sweep_records() {
        let cfg = SweepConfig {
            degree_vectors: Some(vec![vec![2, 2], vec![4, 2]]),
            s_mode: SMode::Exhaustive,
            ..SweepConfig::standard(3)
        };
        let rep = cmd_verify(&cfg, Exec::Serial).unwrap();
        assert!(rep.body.passed, "{}", rep.body.to_text());
        let at_bound_c0: Vec<_> =
            rep.body.cases.iter().filter(|c| c.degrees == [4, 2] && c.nu == 3 && c.s == "{x1*x2^2, x2^3}").collect();
        assert_eq!(at_bound_c0.len(), 1);
        assert_eq!(at_bound_c0[0].verdict, "reducible");
        let twotwo: Vec<_> = rep.body.cases.iter().filter(|c| c.degrees == [2, 2] && c.nu == 2).collect();
        assert_eq!(twotwo.len(), 3);
        assert!(twotwo.iter().all(|c| c.verdict == "irreducible"));
    }
}
