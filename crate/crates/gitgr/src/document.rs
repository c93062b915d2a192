//! The serialized report. Every type here is plain data with serde derives so
//! that `parse(emit(doc)) == doc`.

use gitgr_core::BigUint;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// Largest integer a double holds exactly.
pub const MAX_SAFE_INTEGER: u64 = 1 << 53;

/// A nonnegative integer: a JSON number up to 2^53, a decimal string above.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Count {
    Int(u64),
    Big(String),
}

impl Count {
    pub fn to_biguint(&self) -> Option<BigUint> {
        match self {
            Count::Int(x) => Some(BigUint::from(*x)),
            Count::Big(s) => s.parse().ok(),
        }
    }
}

impl From<&BigUint> for Count {
    fn from(x: &BigUint) -> Self {
        match u64::try_from(x) {
            Ok(v) if v <= MAX_SAFE_INTEGER => Count::Int(v),
            _ => Count::Big(x.to_string()),
        }
    }
}

impl From<BigUint> for Count {
    fn from(x: BigUint) -> Self {
        Count::from(&x)
    }
}

impl From<usize> for Count {
    fn from(x: usize) -> Self {
        Count::from(BigUint::from(x))
    }
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Int(x) => write!(f, "{x}"),
            Count::Big(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub params: ParamsEcho,
    pub quotient: QuotientSection,
    pub semistability: SemistabilitySection,
    pub hilbert: Vec<HilbertRow>,
    pub decomposition: Option<DecompositionSection>,
    pub generation: Vec<GenerationRow>,
    pub cohomology: Vec<CohomologyEntry>,
    pub diagnostics: Vec<Diagnostic>,
    /// Checks that were not run, with the reason.
    pub skipped: Vec<String>,
}

impl ReportDocument {
    pub fn all_pass(&self) -> bool {
        self.diagnostics.iter().all(|d| d.status == Status::Pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub n: u32,
    pub r: u32,
    pub s: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSection {
    pub p: u32,
    /// `null` when `r + s = n`.
    pub k: Option<u32>,
    pub induction_case: bool,
    pub fiber_shape: [u32; 2],
    pub base: Option<BaseSection>,
    pub dim_x: u32,
    pub orbit_count: Option<u32>,
    pub strata: Option<Vec<StratumSection>>,
    pub picard_rank: Option<u32>,
    pub fano: Option<bool>,
    pub aut0: Option<String>,
    pub wonderful: bool,
    pub ss_eq_stable: bool,
    pub golden: Option<GoldenSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSection {
    pub dim: u32,
    /// `"point"` or `"G(node,rank)"`.
    pub space: String,
    /// `"SL(s)"` or `"SL(n-s)"`, absent for a point.
    pub factor: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSection {
    pub t: u32,
    pub orbit_dim: u32,
    pub closure_dim: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenSection {
    pub identification: String,
    pub bundle: String,
    pub source_multiple: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemistabilitySection {
    pub positive: Count,
    pub zero: Count,
    pub negative: Count,
    /// `|A|`.
    pub a_count: Count,
    pub w_sr_word: Vec<u32>,
    pub w_sr_subset: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRow {
    pub m: u32,
    pub h: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSection {
    pub d_min: u32,
    pub a: u32,
    pub b: u32,
    pub targets: Vec<Count>,
    pub pairs: Vec<PairSection>,
    pub total: Count,
    pub multiplicity_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSection {
    pub left_rank: u32,
    pub left: Vec<u32>,
    pub right_rank: u32,
    pub right: Vec<u32>,
    pub dim: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationRow {
    pub m: u32,
    pub products: Count,
    pub rank: Count,
    pub expected: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyEntry {
    pub a: i64,
    pub b: i64,
    pub entries: Vec<CohomologyRow>,
    /// Set when the bundle is outside what can be computed.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRow {
    pub degree: u32,
    pub dim: Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Diagnostic {
    pub fn check(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Diagnostic {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }
}
