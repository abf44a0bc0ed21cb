//! Serialized report types. Field names are frozen for `schema_version` 1.

use duadiq::cyclic::{CyclicCode, DefiningSet};
use duadiq::distance::DistanceResult;
use duadiq::duadic::{BoundCheck, Construction, DegeneracyCertificate, DuadicQuartet, Splitting};
use duadiq::stabilizer::{Degenerate, DegeneracyVerdict, StabilizerParams};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Wall-clock data; the only part of a report that may differ between runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_us: u64,
    pub workers: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetEcho {
    pub enumeration: u64,
    pub support: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetSummary {
    pub count: usize,
    pub sizes: Vec<usize>,
    pub representatives: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistsReport {
    pub schema_version: u32,
    pub command: String,
    pub n: u32,
    pub q: u64,
    pub exists: bool,
    /// Largest `x` in `[0, n)` with `x^2 = q (mod n)`.
    pub witness: Option<u64>,
    pub square_roots: Vec<u64>,
    pub order: u64,
    pub cosets: CosetSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSetSummary {
    pub members: Vec<u32>,
    pub coset_representatives: Vec<u32>,
}

impl From<&DefiningSet> for DefiningSetSummary {
    fn from(t: &DefiningSet) -> Self {
        DefiningSetSummary {
            members: t.members().to_vec(),
            coset_representatives: t.coset_representatives(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingSummary {
    pub id: String,
    pub multiplier: u64,
    pub s0: DefiningSetSummary,
    pub s1: DefiningSetSummary,
    pub given_by_mu_minus_one: bool,
}

impl SplittingSummary {
    pub fn new(s: &Splitting) -> Self {
        let (t0, t1) = s.defining_sets().expect("splitting sides are coset unions");
        SplittingSummary {
            id: s.id(),
            multiplier: s.multiplier(),
            s0: (&t0).into(),
            s1: (&t1).into(),
            given_by_mu_minus_one: s.is_given_by(s.n() as u64 - 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub name: String,
    pub n: u32,
    pub k: u32,
    pub defining_set: DefiningSetSummary,
    /// Little-endian coefficient indices over the code's field.
    pub generator_polynomial: Vec<u32>,
}

impl CodeSummary {
    pub fn new(name: &str, c: &CyclicCode) -> Self {
        CodeSummary {
            name: name.to_string(),
            n: c.n() as u32,
            k: c.k() as u32,
            defining_set: c.defining_set().into(),
            generator_polynomial: c.genpoly().coeffs().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuartetSummary {
    pub field_order: u64,
    pub field_modulus: Vec<u32>,
    pub codes: Vec<CodeSummary>,
}

impl QuartetSummary {
    pub fn new(q: &DuadicQuartet) -> Self {
        QuartetSummary {
            field_order: q.field().order() as u64,
            field_modulus: q.field().modulus().to_vec(),
            codes: vec![
                CodeSummary::new("D0", q.d0()),
                CodeSummary::new("D1", q.d1()),
                CodeSummary::new("C0", q.c0()),
                CodeSummary::new("C1", q.c1()),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildInput {
    pub n: u32,
    pub q: u64,
    pub construction: Construction,
    pub splitting_id: String,
    pub budget: BudgetEcho,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub schema_version: u32,
    pub command: String,
    pub input: BuildInput,
    pub splitting: SplittingSummary,
    pub quartet: QuartetSummary,
    pub params: StabilizerParams,
    pub certificate: DegeneracyCertificate,
    pub verdict: DegeneracyVerdict,
    pub status: Status,
    pub timing: Timing,
}

/// One survey row, flat so that CSV and JSON carry the same fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub n: u32,
    pub exists: bool,
    pub order: u64,
    pub order_odd: bool,
    pub mu_minus_one_splits: bool,
    pub mu_minus_q_splits: Option<bool>,
    pub splitting_id: Option<String>,
    pub k: Option<u32>,
    pub d_lo: Option<u64>,
    pub d_hi: Option<u64>,
    pub d_exact: Option<bool>,
    pub purity_lo: Option<u64>,
    pub purity_hi: Option<u64>,
    pub purity_exact: Option<bool>,
    pub degenerate: Option<Degenerate>,
    pub square_root: Option<BoundCheck>,
    pub square_root_mu_minus_one: Option<BoundCheck>,
    pub note: Option<String>,
}

impl SurveyRow {
    pub fn is_partial(&self) -> bool {
        self.d_exact == Some(false) || self.purity_exact == Some(false)
    }

    pub fn fill(&mut self, p: &StabilizerParams) {
        let interval = |r: &DistanceResult| (Some(r.lo), Some(r.hi), Some(r.is_exact()));
        self.splitting_id = Some(p.splitting_id.clone());
        self.k = Some(p.k);
        (self.d_lo, self.d_hi, self.d_exact) = interval(&p.d);
        (self.purity_lo, self.purity_hi, self.purity_exact) = interval(&p.purity);
        self.degenerate = Some(p.degenerate);
        self.square_root = Some(p.bounds.square_root);
        self.square_root_mu_minus_one = Some(p.bounds.square_root_mu_minus_one);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub schema_version: u32,
    pub command: String,
    pub q: u64,
    pub max_n: u32,
    pub construction: Construction,
    pub budget: BudgetEcho,
    pub rows: Vec<SurveyRow>,
    pub timing: Timing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteTally {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    /// First few failure descriptions.
    pub failures: Vec<String>,
}

impl SuiteTally {
    pub fn new(name: &str) -> Self {
        SuiteTally {
            name: name.to_string(),
            passed: 0,
            failed: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 20 {
                self.failures.push(what());
            }
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }
}

/// CSV form of a suite tally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

impl From<&SuiteTally> for SuiteRow {
    fn from(t: &SuiteTally) -> Self {
        SuiteRow {
            name: t.name.clone(),
            passed: t.passed,
            failed: t.failed,
            skipped: t.skipped,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub command: String,
    pub q: u64,
    pub max_n: u32,
    pub budget: BudgetEcho,
    pub suites: Vec<SuiteTally>,
    pub total_failed: u64,
    pub total_skipped: u64,
    pub timing: Timing,
}
