use std::fs;
use std::path::Path;

use serde_json::json;

use clifford_atlas::design::SteinerSystem;
use clifford_atlas::geometry::{ring_projective_line_grid, spreads, to_dot, to_json};

use crate::claims;
use crate::config::RunConfig;
use crate::context::{Context, Failure};
use crate::report::{self, ClaimRecord, Status};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const UNCERTIFIED: i32 = 2;
    pub const CONFIG: i32 = 64;
    pub const INTERNAL: i32 = 70;
    pub const IO: i32 = 74;
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn create_out_dir(config: &RunConfig) -> Result<(), Failure> {
    fs::create_dir_all(&config.out_dir).map_err(|e| io_failure(&config.out_dir, e))
}

pub fn failure_code(f: &Failure) -> i32 {
    match f {
        Failure::Internal(_) => exit::INTERNAL,
        Failure::Io(_) => exit::IO,
    }
}

/// Exit code for a finished report: evaluation errors first, then
/// failures, then missing certificates.
pub fn verdict(records: &[ClaimRecord], failures: &[(String, Failure)]) -> i32 {
    if failures.iter().any(|(_, f)| matches!(f, Failure::Io(_))) {
        exit::IO
    } else if !failures.is_empty() {
        exit::INTERNAL
    } else if records.iter().any(|r| r.status == Status::Fail) {
        exit::FAIL
    } else if records.iter().any(|r| r.status == Status::Uncertified) {
        exit::UNCERTIFIED
    } else {
        exit::OK
    }
}

/// Run every selected claim, write both report files and return the exit
/// code together with the rendered report.
pub fn verify_all(config: &RunConfig) -> (i32, String) {
    let claims = claims::all();
    let result = match report::run_claims(config, &claims) {
        Ok(r) => r,
        Err(f) => return (failure_code(&f), f.to_string()),
    };
    let mut code = verdict(&result.records, &result.failures);
    let mut rendered = report::render(&result.records, config.format);
    for (id, f) in &result.failures {
        rendered.push_str(&format!("{id}: {f}\n"));
    }
    if let Err(e) = report::write_reports(&config.out_dir, &result.records) {
        rendered.push_str(&format!("{}: {e}\n", config.out_dir.display()));
        code = exit::IO;
    }
    (code, rendered)
}

/// Commutation graph, line and spread data for the two-qubit geometry.
pub fn geometry(config: &RunConfig) -> Result<String, Failure> {
    let ctx = Context::new(config.clone());
    let g = ctx.w2()?;
    create_out_dir(config)?;
    let dir = &config.out_dir;
    write(&dir.join("w2.dot"), &to_dot(g))?;
    write(&dir.join("w2.json"), &to_json(g))?;
    let all = spreads(g);
    let labelled: Vec<Vec<Vec<String>>> = all
        .iter()
        .map(|s| s.iter().map(|&l| g.lines[l].iter().map(|&p| g.label(p)).collect()).collect())
        .collect();
    let spreads_json = serde_json::to_string_pretty(&json!({ "spreads": all, "labelled": labelled }))
        .map_err(|e| Failure::Internal(e.to_string()))?;
    write(&dir.join("spreads.json"), &(spreads_json + "\n"))?;
    let grid = ring_projective_line_grid(g)?;
    let grid_json = serde_json::to_string_pretty(&json!({
        "ring_points": grid.points,
        "rows": grid.rows,
        "columns": grid.columns,
        "pauli": grid.to_pauli.iter().map(|&p| g.points[p].word(2)).collect::<Vec<_>>(),
        "labels": grid.to_pauli.iter().map(|&p| g.label(p)).collect::<Vec<_>>(),
        "grid_lines": grid.grid_lines,
    }))
    .map_err(|e| Failure::Internal(e.to_string()))?;
    write(&dir.join("grid.json"), &(grid_json + "\n"))?;
    Ok(format!(
        "wrote w2.dot, w2.json, spreads.json, grid.json to {}\n{} points, {} lines, {} spreads\n",
        dir.display(),
        g.points.len(),
        g.lines.len(),
        all.len()
    ))
}

fn round_trip(path: &Path, s: &SteinerSystem) -> Result<(), Failure> {
    write(path, &s.to_text())?;
    let back = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let parsed = SteinerSystem::parse(&back)?;
    if &parsed != s {
        return Err(Failure::Internal(format!("{} does not parse back to the same design", path.display())));
    }
    Ok(())
}

/// The three Witt designs, the Golay codewords and the automorphism orders.
pub fn steiner(config: &RunConfig) -> Result<String, Failure> {
    let ctx = Context::new(config.clone());
    let w = ctx.witt()?;
    create_out_dir(config)?;
    let dir = &config.out_dir;
    round_trip(&dir.join("s5824.txt"), &w.s24)?;
    round_trip(&dir.join("s4723.txt"), &w.s23)?;
    round_trip(&dir.join("s3622.txt"), &w.s22)?;
    write(&dir.join("golay.txt"), &w.code.dump_codewords())?;
    Ok(format!(
        "wrote s5824.txt ({} blocks), s4723.txt ({} blocks), s3622.txt ({} blocks), golay.txt ({} codewords) to {}\n\
         |Aut S(3,6,22)| = {}\n|M22| = {}\nhexad stabilizer = {}\n",
        w.s24.blocks.len(),
        w.s23.blocks.len(),
        w.s22.blocks.len(),
        w.code.codewords().len(),
        dir.display(),
        w.aut.order(),
        w.m22.order(),
        w.hexads[0].1.order()
    ))
}

/// Re-emit the records of an earlier run in the chosen format.
pub fn report(config: &RunConfig) -> Result<String, Failure> {
    let path = config.out_dir.join("report.json");
    let text = fs::read_to_string(&path).map_err(|e| io_failure(&path, e))?;
    let records = report::from_json(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(report::render(&records, config.format))
}
