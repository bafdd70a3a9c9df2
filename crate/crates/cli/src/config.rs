use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

/// Groups of claims that can be selected with `--filter`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Area {
    Pauli,
    Clifford1,
    Clifford2,
    Outer,
    Geometry,
    Designs,
    Bridge,
    Oracles,
}

impl Area {
    pub const ALL: [Area; 8] = [
        Area::Pauli,
        Area::Clifford1,
        Area::Clifford2,
        Area::Outer,
        Area::Geometry,
        Area::Designs,
        Area::Bridge,
        Area::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Area::Pauli => "pauli",
            Area::Clifford1 => "clifford1",
            Area::Clifford2 => "clifford2",
            Area::Outer => "outer",
            Area::Geometry => "geometry",
            Area::Designs => "designs",
            Area::Bridge => "bridge",
            Area::Oracles => "oracles",
        }
    }
}

impl fmt::Display for Area {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Area {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Area, ConfigError> {
        Area::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| ConfigError(format!("unknown filter {s:?}; expected one of {}", area_names())))
    }
}

fn area_names() -> String {
    Area::ALL.iter().map(|a| a.name()).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QubitScope {
    One,
    Two,
    Both,
}

impl QubitScope {
    pub fn includes(self, n: usize) -> bool {
        matches!((self, n), (QubitScope::Both, _) | (QubitScope::One, 1) | (QubitScope::Two, 2))
    }
}

impl FromStr for QubitScope {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<QubitScope, ConfigError> {
        match s {
            "1" => Ok(QubitScope::One),
            "2" => Ok(QubitScope::Two),
            "both" => Ok(QubitScope::Both),
            _ => Err(ConfigError(format!("qubit scope must be 1, 2 or both, got {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Format, ConfigError> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(ConfigError(format!("format must be json or text, got {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub qubits: QubitScope,
    /// Empty means every area.
    pub filters: Vec<Area>,
    /// Node budget for isomorphism searches.
    pub budget_iso: u64,
    /// Node budget for automorphism searches.
    pub budget_aut: u64,
    pub threads: usize,
    pub cache: Option<PathBuf>,
    pub out_dir: PathBuf,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            qubits: QubitScope::Both,
            filters: Vec::new(),
            budget_iso: 2_000_000,
            budget_aut: 20_000_000,
            threads: 1,
            cache: None,
            out_dir: PathBuf::from("atlas-out"),
            format: Format::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.budget_iso == 0 || self.budget_aut == 0 {
            return Err(ConfigError("budgets must be positive".into()));
        }
        if self.threads == 0 {
            return Err(ConfigError("thread count must be positive".into()));
        }
        Ok(())
    }

    pub fn selects(&self, area: Area) -> bool {
        self.filters.is_empty() || self.filters.contains(&area)
    }

    /// Parse a comma-separated filter list.
    pub fn parse_filters(list: &str) -> Result<Vec<Area>, ConfigError> {
        let mut out: Vec<Area> =
            list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect::<Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}
