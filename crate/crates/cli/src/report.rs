use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::claims::{Claim, Computed};
use crate::config::{Format, RunConfig};
use crate::context::{Context, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Uncertified,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Uncertified => "uncertified",
            Status::Skipped => "skipped",
        }
    }
}

/// One row of the report. Field order is the serialized order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    pub description: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    pub elapsed_ms: u64,
    pub certificate_tier: Option<String>,
}

/// Records in claim order, plus the worst evaluation failure seen.
pub struct RunResult {
    pub records: Vec<ClaimRecord>,
    pub failures: Vec<(String, Failure)>,
}

fn selected(config: &RunConfig, claim: &Claim) -> bool {
    config.selects(claim.area) && claim.qubits.is_none_or(|n| config.qubits.includes(n))
}

fn evaluate(ctx: &Context, claim: &Claim) -> (ClaimRecord, Option<Failure>) {
    let expected = (claim.expected)();
    let mut record = ClaimRecord {
        claim_id: claim.id.to_string(),
        description: claim.description.to_string(),
        expected,
        computed: Value::Null,
        status: Status::Skipped,
        elapsed_ms: 0,
        certificate_tier: None,
    };
    if !selected(&ctx.config, claim) {
        return (record, None);
    }
    let start = Instant::now();
    let outcome = (claim.run)(ctx);
    record.elapsed_ms = start.elapsed().as_millis() as u64;
    match outcome {
        Ok(Computed { value, certified, tier }) => {
            record.status = if !certified {
                Status::Uncertified
            } else if value == record.expected {
                Status::Pass
            } else {
                Status::Fail
            };
            record.computed = value;
            record.certificate_tier = tier.map(str::to_string);
            (record, None)
        }
        Err(f) => {
            record.status = Status::Fail;
            record.computed = Value::String(f.to_string());
            (record, Some(f))
        }
    }
}

/// Evaluate every claim on a pool of `config.threads` workers. The record
/// order follows the claim list regardless of completion order.
pub fn run_claims(config: &RunConfig, claims: &[Claim]) -> Result<RunResult, Failure> {
    let ctx = Context::new(config.clone());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Failure::Internal(format!("thread pool: {e}")))?;
    let rows: Vec<(ClaimRecord, Option<Failure>)> =
        pool.install(|| claims.par_iter().map(|c| evaluate(&ctx, c)).collect());
    let mut records = Vec::with_capacity(rows.len());
    let mut failures = Vec::new();
    for (r, f) in rows {
        if let Some(f) = f {
            failures.push((r.claim_id.clone(), f));
        }
        records.push(r);
    }
    Ok(RunResult { records, failures })
}

pub fn to_json(records: &[ClaimRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Vec<ClaimRecord>, serde_json::Error> {
    serde_json::from_str(text)
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Aligned table, one row per claim.
pub fn to_text(records: &[ClaimRecord]) -> String {
    let head = ["claim_id", "status", "tier", "ms", "expected", "computed"];
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            [
                r.claim_id.clone(),
                r.status.as_str().to_string(),
                r.certificate_tier.clone().unwrap_or_else(|| "-".into()),
                r.elapsed_ms.to_string(),
                compact(&r.expected),
                compact(&r.computed),
            ]
        })
        .collect();
    let mut width = head.map(str::len);
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let mut l = String::new();
        for (i, (cell, w)) in cells.iter().zip(width).enumerate() {
            if i == 3 {
                let _ = write!(l, "{cell:>w$}  ");
            } else if i == 5 {
                l.push_str(cell);
            } else {
                let _ = write!(l, "{cell:<w$}  ");
            }
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(&head);
    for row in &rows {
        line(&row.each_ref().map(String::as_str));
    }
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "\n{} pass, {} fail, {} uncertified, {} skipped",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Uncertified),
        count(Status::Skipped)
    );
    out
}

pub fn render(records: &[ClaimRecord], format: Format) -> String {
    match format {
        Format::Json => to_json(records),
        Format::Text => to_text(records),
    }
}

/// Write `report.json` and `report.txt` under `dir`.
pub fn write_reports(dir: &Path, records: &[ClaimRecord]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("report.json"), to_json(records))?;
    fs::write(dir.join("report.txt"), to_text(records))
}
