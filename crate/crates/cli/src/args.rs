//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "credence", version, about = "Credence-goods market analyses and figure data")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// JSON config file with `params`, `seed` and optional `sessions`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory for artifacts.
    #[arg(long, global = true, default_value = "out")]
    pub out: PathBuf,
    /// Base seed for every stochastic computation.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Parameter override, repeatable; unknown keys are rejected.
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    pub set: Vec<String>,
    /// Grid size as NxM (or N for a square grid).
    #[arg(long, value_name = "NxM", global = true, value_parser = parse_grid)]
    pub grid: Option<(usize, usize)>,
    /// Monte Carlo replications.
    #[arg(long, value_name = "N", global = true)]
    pub sims: Option<usize>,
}

pub fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad grid `{s}`, expected NxM"));
    match s.split_once(['x', 'X']) {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => {
            let n = parse(s)?;
            Ok((n, n))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Info {
    Full,
    NoOtherInfo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnalysisArg {
    Nash,
    Mixed,
    Level1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeArg {
    Skill,
    Algorithm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HorizonArg {
    Repeated,
    OneShot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Quoted values and exact results.
    Goldens,
    /// Martingale and order invariance of the posterior.
    Beliefs,
    /// Attraction registry against the switching oracle.
    Tables,
    /// Closed-form thresholds against grid best responses.
    Grid,
    /// Closed-form incomes against the Monte Carlo stage game.
    Stage,
    /// Simulator determinism and accounting.
    Abm,
    /// Figure data regeneration and the belief-path shape.
    Figures,
    All,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the resolved parameters.
    Params,
    /// Price-setting, belief and signaling thresholds.
    Thresholds,
    /// Optimal menu regions over h (fig1_regions.csv, fig1_beliefs.csv).
    Regions,
    /// Mean belief paths and first-passage rounds (fig2_beliefs.csv, fig12_beliefs.csv).
    Beliefs {
        #[arg(long, value_delimiter = ',', default_value = "0.4,0.2")]
        priors: Vec<f64>,
        /// Pr(L) at which a consumer identifies a low-ability expert.
        #[arg(long, default_value_t = 0.9)]
        threshold: f64,
    },
    /// Signaling threshold r-bar over (w, belief) (fig5_rbar.csv).
    Rbar,
    /// Equilibrium regions over (alpha, t) (fig7a_region.csv for the defaults).
    Equilibria {
        /// Consumer stocks (HA, LA_i, LA_j), e.g. 030.
        #[arg(long, default_value = "030")]
        dist: String,
        #[arg(long, value_enum, default_value_t = Info::Full)]
        info: Info,
        #[arg(long, value_enum, default_value_t = AnalysisArg::Nash)]
        analysis: AnalysisArg,
        /// Also report the pure Nash profiles at this alpha (needs --t).
        #[arg(long, requires = "t")]
        alpha: Option<f64>,
        #[arg(long, requires = "alpha")]
        t: Option<f64>,
    },
    /// Level-1 best responses over (alpha, t).
    Level1 {
        #[arg(long, default_value = "300")]
        dist: String,
        #[arg(long, value_enum, default_value_t = Info::Full)]
        info: Info,
    },
    /// One-shot coordination game.
    Oneshot,
    /// Run simulated sessions and write logs and metrics.
    Simulate {
        /// Three expert policy ids, comma separated.
        #[arg(long, default_value = "ha_signaler,la_imitator:5,la_imitator:5")]
        experts: String,
        /// Three consumer policy ids, comma separated.
        #[arg(long, default_value = "bayesian_switcher,bayesian_switcher,bayesian_switcher")]
        consumers: String,
        #[arg(long, default_value_t = 1)]
        sessions: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Skill)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = HorizonArg::Repeated)]
        horizon: HorizonArg,
    },
    /// Run property suites; exit 2 if any fails.
    Validate {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Params => "params",
            Command::Thresholds => "thresholds",
            Command::Regions => "regions",
            Command::Beliefs { .. } => "beliefs",
            Command::Rbar => "rbar",
            Command::Equilibria { .. } => "equilibria",
            Command::Level1 { .. } => "level1",
            Command::Oneshot => "oneshot",
            Command::Simulate { .. } => "simulate",
            Command::Validate { .. } => "validate",
        }
    }
}
