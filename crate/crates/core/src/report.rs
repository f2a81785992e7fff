//! Versioned report documents. A report splits into a `body`, which is a
//! pure function of the inputs and seed, and `meta`, which carries timings
//! and the environment and is excluded from comparisons.

use serde::{Deserialize, Serialize};

use crate::polyring::PolyDoc;
use crate::subres::{Method, Position, SubresultantResult};

pub const SCHEMA: &str = "subres-report/1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Meta {
    pub tool_version: String,
    pub parallel: bool,
    pub jobs: usize,
    pub os: String,
    pub arch: String,
    pub elapsed_ms: f64,
    /// Per-record timings, in body order, when the body has records.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub record_ms: Vec<f64>,
}

impl Meta {
    pub fn new(parallel: bool, jobs: usize, elapsed_ms: f64, record_ms: Vec<f64>) -> Self {
        Meta {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            parallel,
            jobs,
            os: std::env::consts::OS.to_string(),
            arch: std::env::consts::ARCH.to_string(),
            elapsed_ms,
            record_ms,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report<B> {
    pub schema: String,
    pub command: String,
    pub body: B,
    pub meta: Meta,
}

impl<B: Serialize> Report<B> {
    pub fn new(command: &str, body: B, meta: Meta) -> Self {
        Report { schema: SCHEMA.to_string(), command: command.to_string(), body, meta }
    }

    /// Canonical serialization of the body alone.
    pub fn body_json(&self) -> String {
        serde_json::to_string_pretty(&self.body).expect("report bodies serialize")
    }

    pub fn to_structured(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Serialized form of a subresultant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaDoc {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub nu: u32,
    pub s: String,
    pub position: Position,
    pub multidegree: Vec<u32>,
    pub content: String,
    pub method: String,
    pub terms: usize,
    pub text: String,
    pub polynomial: PolyDoc,
}

impl DeltaDoc {
    pub fn from_result(r: &SubresultantResult) -> Self {
        DeltaDoc {
            n: r.degrees.n(),
            degrees: r.degrees.degrees().to_vec(),
            nu: r.nu(),
            s: r.s.to_string(),
            position: r.position,
            multidegree: (0..r.degrees.s()).map(|i| r.degree_in_form(i)).collect(),
            content: r.content.to_string(),
            method: match r.method {
                Method::Determinant => "determinant".into(),
                Method::KoszulQuotient { .. } => "koszul-quotient".into(),
            },
            terms: r.delta.len(),
            text: r.delta.to_string(),
            polynomial: PolyDoc::from_poly(&r.delta),
        }
    }
}
