//! Command-line driver: evaluates every claim of the atlas and writes
//! machine-readable reports.

pub mod claims;
pub mod commands;
pub mod config;
pub mod context;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::exit;
use crate::config::{ConfigError, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "atlas", version, about = "Exact verification of Clifford group, W(2) and Steiner system claims")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Comma-separated areas: pauli, clifford1, clifford2, outer, geometry, designs, bridge, oracles.
    #[arg(long, global = true)]
    pub filter: Option<String>,
    /// Qubit scope: 1, 2 or both.
    #[arg(long, global = true, default_value = "both")]
    pub qubits: String,
    /// Node budget for isomorphism searches.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub budget_iso: u64,
    /// Node budget for automorphism searches.
    #[arg(long, global = true, default_value_t = 20_000_000)]
    pub budget_aut: u64,
    #[arg(long, global = true, env = "ATLAS_THREADS")]
    pub threads: Option<usize>,
    /// Two-qubit Clifford closure cache, created if missing.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[arg(long, global = true, default_value = "atlas-out")]
    pub out_dir: PathBuf,
    /// Output format: json or text.
    #[arg(long, global = true, default_value = "text")]
    pub format: String,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Evaluate every selected claim.
    VerifyAll,
    /// Write the two-qubit geometry as DOT and JSON.
    Geometry,
    /// Write the Witt designs and the Golay code.
    Steiner,
    /// Print the report of an earlier run.
    Report,
}

impl Cli {
    pub fn config(&self) -> Result<RunConfig, ConfigError> {
        let threads = match self.threads {
            Some(n) => n,
            None => std::thread::available_parallelism().map_or(1, usize::from),
        };
        let config = RunConfig {
            qubits: self.qubits.parse()?,
            filters: match &self.filter {
                Some(list) => RunConfig::parse_filters(list)?,
                None => Vec::new(),
            },
            budget_iso: self.budget_iso,
            budget_aut: self.budget_aut,
            threads,
            cache: self.cache.clone(),
            out_dir: self.out_dir.clone(),
            format: self.format.parse()?,
        };
        config.validate()?;
        Ok(config)
    }
}

/// Output of a finished command.
pub struct Finished {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (program name first) and run the selected command.
pub fn run<I, T>(args: I) -> Finished
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::CONFIG } else { exit::OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Finished { code, stdout: String::new(), stderr: text }
            } else {
                Finished { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let config = match cli.config() {
        Ok(c) => c,
        Err(e) => return Finished { code: exit::CONFIG, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let outcome = match cli.command {
        Command::VerifyAll => {
            let (code, text) = commands::verify_all(&config);
            return Finished { code, stdout: text, stderr: String::new() };
        }
        Command::Geometry => commands::geometry(&config),
        Command::Steiner => commands::steiner(&config),
        Command::Report => commands::report(&config),
    };
    match outcome {
        Ok(text) => Finished { code: exit::OK, stdout: text, stderr: String::new() },
        Err(f) => Finished { code: commands::failure_code(&f), stdout: String::new(), stderr: format!("error: {f}\n") },
    }
}
