//! Artifact writers and the reproducibility manifest.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use credence_core::MarketParams;
use serde::{Deserialize, Serialize};

pub use credence_core::fmt::sig6;

pub const MANIFEST: &str = "manifest.json";

/// Write a CSV with a header row.
pub fn write_csv(dir: &Path, name: &str, header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let path = dir.join(name);
    let mut w = csv::Writer::from_path(&path).with_context(|| format!("creating {}", path.display()))?;
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(name.to_string())
}

pub fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<String> {
    let path = dir.join(name);
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(name.to_string())
}

/// Resolved configuration and the artifacts produced from it. Runs that
/// share parameters and seed accumulate into one manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub params: MarketParams,
    pub commands: BTreeSet<String>,
    /// Per-command options (grid, sims and subcommand flags).
    pub options: serde_json::Map<String, serde_json::Value>,
    pub artifacts: BTreeSet<String>,
}

pub fn update_manifest(
    dir: &Path,
    params: &MarketParams,
    seed: u64,
    command: &str,
    options: serde_json::Value,
    artifacts: &[String],
) -> Result<Manifest> {
    let existing: Option<Manifest> = fs::read_to_string(dir.join(MANIFEST))
        .ok()
        .and_then(|t| serde_json::from_str(&t).ok())
        .filter(|m: &Manifest| m.params == *params && m.seed == seed && m.version == env!("CARGO_PKG_VERSION"));
    let mut m = existing.unwrap_or_else(|| Manifest {
        tool: "credence".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        seed,
        params: params.clone(),
        commands: BTreeSet::new(),
        options: serde_json::Map::new(),
        artifacts: BTreeSet::new(),
    });
    m.commands.insert(command.to_string());
    m.options.insert(command.to_string(), options);
    m.artifacts.extend(artifacts.iter().cloned());
    write_json(dir, MANIFEST, &m)?;
    Ok(m)
}
