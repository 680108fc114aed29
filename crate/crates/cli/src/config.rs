//! Configuration resolution: defaults, then the config file, then `--set`.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use credence_core::abm::SessionConfig;
use credence_core::MarketParams;
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 7;

/// Config file schema.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    /// Parameter overrides keyed as for `--set`.
    #[serde(default)]
    pub params: BTreeMap<String, serde_json::Value>,
    pub seed: Option<u64>,
    /// Sessions for `simulate`; each carries its own parameters.
    #[serde(default)]
    pub sessions: Vec<SessionConfig>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Resolved {
    pub params: MarketParams,
    pub seed: u64,
    #[serde(skip)]
    pub sessions: Vec<SessionConfig>,
}

fn value_text(key: &str, v: &serde_json::Value) -> Result<String> {
    Ok(match v {
        serde_json::Value::Number(n) => n.to_string(),
        serde_json::Value::Bool(b) => b.to_string(),
        serde_json::Value::String(s) => s.clone(),
        _ => bail!("parameter `{key}` must be a number, boolean or string"),
    })
}

pub fn load_file(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

/// Apply file values and then command-line overrides to the defaults.
pub fn resolve(file: Option<&Path>, sets: &[String], seed: Option<u64>) -> Result<Resolved> {
    let cfg = match file {
        Some(p) => load_file(p)?,
        None => ConfigFile::default(),
    };
    let mut params = MarketParams::default();
    for (k, v) in &cfg.params {
        params.set(k, &value_text(k, v)?)?;
    }
    for s in sets {
        let Some((k, v)) = s.split_once('=') else { bail!("override `{s}` is not KEY=VALUE") };
        params.set(k.trim(), v.trim())?;
    }
    params.validate()?;
    for s in &cfg.sessions {
        s.validate()?;
    }
    Ok(Resolved { params, seed: seed.or(cfg.seed).unwrap_or(DEFAULT_SEED), sessions: cfg.sessions })
}
