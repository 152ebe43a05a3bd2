use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::UsageError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Both,
}

impl Format {
    pub fn json(self) -> bool {
        matches!(self, Format::Json | Format::Both)
    }

    pub fn csv(self) -> bool {
        matches!(self, Format::Csv | Format::Both)
    }
}

/// Settings shared by every experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub orders: Vec<usize>,
    pub tolerances: BTreeMap<String, f64>,
    pub grid: usize,
    pub out: PathBuf,
    pub seed: u64,
    pub format: Format,
}

pub const DEFAULT_TOLERANCES: &[(&str, f64)] = &[
    ("closed_form", 1e-8),
    ("decompose", 1e-10),
    ("density", 1e-3),
    ("exact", 1e-9),
    ("fejer_riesz", 1e-9),
    ("green_boundary", 1e-6),
    ("growth", 1.05),
    ("intertwining", 1e-7),
    ("isometry", 1e-6),
    ("modulus", 1e-6),
    ("norm", 1e-4),
    ("pair", 1e-9),
    ("period", 1e-6),
    ("plateau", 1e-3),
    ("prime", 1e-12),
    ("structure", 1e-9),
    ("sup", 1e-8),
    ("symmetry", 1e-8),
];

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            orders: vec![32, 64, 128, 256, 512],
            tolerances: DEFAULT_TOLERANCES.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            grid: 4096,
            out: PathBuf::from("results"),
            seed: 0x5eed,
            format: Format::Both,
        }
    }
}

/// Partial config as read from a TOML file; missing fields keep their defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    orders: Option<Vec<usize>>,
    tolerances: Option<BTreeMap<String, f64>>,
    grid: Option<usize>,
    out: Option<PathBuf>,
    seed: Option<u64>,
    format: Option<Format>,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, UsageError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
        let file: ConfigFile =
            toml::from_str(&text).map_err(|e| UsageError(format!("bad config {}: {e}", path.display())))?;
        let mut cfg = Self::default();
        if let Some(v) = file.orders {
            cfg.orders = v;
        }
        if let Some(v) = file.tolerances {
            cfg.set_tolerances(v)?;
        }
        if let Some(v) = file.grid {
            cfg.grid = v;
        }
        if let Some(v) = file.out {
            cfg.out = v;
        }
        if let Some(v) = file.seed {
            cfg.seed = v;
        }
        if let Some(v) = file.format {
            cfg.format = v;
        }
        Ok(cfg)
    }

    pub fn set_tolerances(&mut self, values: BTreeMap<String, f64>) -> Result<(), UsageError> {
        for (k, v) in values {
            if !self.tolerances.contains_key(&k) {
                return Err(UsageError(format!("unknown tolerance '{k}'")));
            }
            self.tolerances.insert(k, v);
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), UsageError> {
        if self.orders.is_empty() {
            return Err(UsageError("orders must not be empty".into()));
        }
        if self.orders.windows(2).any(|w| w[0] >= w[1]) {
            return Err(UsageError(format!("orders must be strictly ascending: {:?}", self.orders)));
        }
        if let Some((k, v)) = self.tolerances.iter().find(|(_, v)| !(**v > 0.0) || !v.is_finite()) {
            return Err(UsageError(format!("tolerance {k} = {v} must be positive")));
        }
        if self.grid < 16 || !self.grid.is_power_of_two() {
            return Err(UsageError(format!("grid size {} must be a power of two >= 16", self.grid)));
        }
        Ok(())
    }

    pub fn tol(&self, name: &str) -> f64 {
        self.tolerances[name]
    }
}

pub fn parse_tolerance(src: &str) -> Result<(String, f64), String> {
    let (k, v) = src.split_once('=').ok_or_else(|| format!("expected name=value, got '{src}'"))?;
    let v = v.trim().parse::<f64>().map_err(|e| format!("bad tolerance value '{v}': {e}"))?;
    Ok((k.trim().to_string(), v))
}
