//! Subcommand implementations. Each returns the artifacts it wrote and a
//! human-readable report for standard output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use credence_core::abm::{
    compute_metrics, run_batch, ConsumerPolicy, ExpertPolicy, Horizon, InvestMode, Metrics, SessionConfig,
};
use credence_core::beliefs::{
    first_passage_r, honest_obs_model, simulate_belief_paths, strategy_obs_model, BeliefPathSummary, ObsStrategy,
};
use credence_core::equilibria::{
    conditions, level1_condition, oneshot_mixed_solver, oneshot_pooled_income, pure_nash, region_grid, Analysis,
    AttractionScenario, Distribution, GridSpec, OneShotMatrix, RegionParams, Role,
};
use credence_core::exact::to_f64;
use credence_core::market::{expected_consumer_income, MenuKind, Mode};
use credence_core::thresholds::{
    belief_bounds, centered_grid, closed_grid, emit_rbar_contour, emit_region_scan, oneshot_invest_w_threshold,
    price_thresholds, prop1_region, signaling_thresholds, RegionRow,
};
use credence_core::MarketParams;
use serde::Serialize;
use serde_json::json;

use crate::args::{AnalysisArg, HorizonArg, Info, ModeArg};
use crate::config::Resolved;
use crate::output::{sig6, write_csv, write_json};

pub const DEFAULT_SIMS: usize = 10_000;
pub const DEFAULT_REGION_GRID: (usize, usize) = (200, 11);
pub const DEFAULT_RBAR_GRID: (usize, usize) = (51, 51);
pub const DEFAULT_EQ_GRID: (usize, usize) = (200, 200);
/// Fee penalty in the one-shot investment condition, as quoted.
pub const ONESHOT_PENALTY: f64 = 10.0;

pub const REGION_HEADER: [&str; 6] = ["h", "gamma", "pi_m", "pi_s", "pi_e", "region"];
pub const BELIEF_HEADER: [&str; 5] = ["prior", "round", "mean_prL", "q10", "q90"];
pub const RBAR_HEADER: [&str; 4] = ["w", "gamma", "r_bar", "feasible"];
pub const GRID_HEADER: [&str; 4] = ["alpha", "t", "profile_label", "analysis"];

#[derive(Debug, Default)]
pub struct Outcome {
    pub artifacts: Vec<String>,
    pub report: String,
    /// Options worth recording in the manifest.
    pub options: serde_json::Value,
    /// A validation suite failed.
    pub failed: bool,
}

pub fn params(r: &Resolved, out: &Path) -> Result<Outcome> {
    let artifacts = vec![write_json(out, "params.json", &r.params)?];
    Ok(Outcome { artifacts, report: serde_json::to_string_pretty(&r.params)?, ..Default::default() })
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "undefined".to_string(), sig6)
}

pub fn thresholds(r: &Resolved, out: &Path) -> Result<Outcome> {
    let p = &r.params;
    let modes: Vec<_> = Mode::ALL.iter().map(|&m| price_thresholds(p, m)).collect();
    let bounds = belief_bounds(p);
    let sig = signaling_thresholds(p, p.gamma, 0.0);
    let mut rep = String::new();
    for t in &modes {
        writeln!(rep, "{:?}: h_m = {}, h_s = {}", t.mode, opt(t.h_m), opt(t.h_s))?;
    }
    writeln!(rep, "gamma_m = {}, gamma_s = {}", opt(bounds.gamma_m), opt(bounds.gamma_s))?;
    writeln!(rep, "prop1 region at h = {}: {}", sig6(p.h), prop1_region(p.h, p).label())?;
    writeln!(rep, "belief {}: w_ninv = {}", sig6(p.gamma), sig6(sig.w_ninv))?;
    let doc = json!({ "price_thresholds": modes, "belief_bounds": bounds, "signaling": sig });
    Ok(Outcome { artifacts: vec![write_json(out, "thresholds.json", &doc)?], report: rep, ..Default::default() })
}

fn region_rows(rows: &[RegionRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| vec![sig6(r.h), sig6(r.gamma), sig6(r.pi_m), sig6(r.pi_s), sig6(r.pi_e), r.region.label().into()])
        .collect()
}

/// Menu regions over h: the transparent and obfuscated cases, then a sweep over beliefs.
pub fn regions(r: &Resolved, out: &Path, grid: Option<(usize, usize)>) -> Result<Outcome> {
    let p = &r.params;
    let (n_h, n_g) = grid.unwrap_or(DEFAULT_REGION_GRID);
    let h = centered_grid(n_h);
    let main = emit_region_scan(p, &[1.0, 0.0, p.gamma], &h);
    let sweep = emit_region_scan(p, &closed_grid(n_g), &h);
    let artifacts = vec![
        write_csv(out, "fig1_regions.csv", &REGION_HEADER, &region_rows(&main))?,
        write_csv(out, "fig1_beliefs.csv", &REGION_HEADER, &region_rows(&sweep))?,
    ];
    let t = price_thresholds(p, Mode::Obfuscated);
    let report = format!("obfuscated: h_s = {}, h_m = {}; {} + {} rows\n", opt(t.h_s), opt(t.h_m), main.len(), sweep.len());
    Ok(Outcome { artifacts, report, options: json!({ "grid": [n_h, n_g] }), ..Default::default() })
}

fn belief_rows(s: &BeliefPathSummary) -> Vec<Vec<String>> {
    let mut rows = vec![vec![sig6(s.prior_l), "0".into(), sig6(s.prior_l), sig6(s.prior_l), sig6(s.prior_l)]];
    for (i, (m, q)) in s.mean_path.iter().zip(&s.quantile_bands).enumerate() {
        rows.push(vec![sig6(s.prior_l), (i + 1).to_string(), sig6(*m), sig6(q.0), sig6(q.1)]);
    }
    rows
}

#[derive(Serialize)]
struct Passage {
    prior: f64,
    threshold: f64,
    median: f64,
    censored: usize,
    mean_uncensored: Option<f64>,
}

/// Belief paths under an honest imitator and under an always-HQT low type.
pub fn beliefs(r: &Resolved, out: &Path, sims: Option<usize>, priors: &[f64], threshold: f64) -> Result<Outcome> {
    let p = &r.params;
    let n = sims.unwrap_or(DEFAULT_SIMS);
    if n == 0 || priors.iter().any(|x| !(0.0..=1.0).contains(x)) || !(threshold > 0.0 && threshold <= 1.0) {
        bail!("need --sims >= 1, priors in [0, 1] and threshold in (0, 1]");
    }
    let rounds = p.rounds as usize;
    let (mh, ml) = (honest_obs_model(p.h, p.z), honest_obs_model(p.h, p.q));
    let hqt = strategy_obs_model(ObsStrategy::AlwaysHqt, p.h);
    let mut honest = Vec::new();
    let mut always = Vec::new();
    let mut passages = Vec::new();
    let mut rep = String::new();
    for &prior in priors {
        let s = simulate_belief_paths(prior, &ml, (mh, ml), rounds, n, r.seed);
        writeln!(rep, "prior {}: mean Pr(L) after {} rounds = {}", sig6(prior), rounds, sig6(*s.mean_path.last().unwrap_or(&prior)))?;
        honest.extend(belief_rows(&s));
        always.extend(belief_rows(&simulate_belief_paths(prior, &hqt, (mh, hqt), rounds, n, r.seed)));
        let fp = first_passage_r(prior, &ml, (mh, ml), threshold, p.rounds, n, r.seed);
        writeln!(rep, "  first passage to {}: median {} rounds, {} censored", sig6(threshold), sig6(fp.median), fp.censored)?;
        passages.push(Passage { prior, threshold, median: fp.median, censored: fp.censored, mean_uncensored: fp.mean_uncensored });
    }
    let artifacts = vec![
        write_csv(out, "fig2_beliefs.csv", &BELIEF_HEADER, &honest)?,
        write_csv(out, "fig12_beliefs.csv", &BELIEF_HEADER, &always)?,
        write_json(out, "first_passage.json", &passages)?,
    ];
    Ok(Outcome { artifacts, report: rep, options: json!({ "sims": n, "priors": priors, "threshold": threshold }), ..Default::default() })
}

pub fn rbar(r: &Resolved, out: &Path, grid: Option<(usize, usize)>) -> Result<Outcome> {
    let (nw, ng) = grid.unwrap_or(DEFAULT_RBAR_GRID);
    let cells = emit_rbar_contour(&r.params, &closed_grid(nw), &closed_grid(ng));
    let rows: Vec<Vec<String>> = cells
        .iter()
        .map(|c| vec![sig6(c.w), sig6(c.gamma), c.r_bar.map(sig6).unwrap_or_default(), c.feasible.to_string()])
        .collect();
    let feasible = cells.iter().filter(|c| c.feasible).count();
    let report = format!("{} cells, {} feasible (0 <= r_bar <= R)\n", cells.len(), feasible);
    let artifacts = vec![write_csv(out, "fig5_rbar.csv", &RBAR_HEADER, &rows)?];
    Ok(Outcome { artifacts, report, options: json!({ "grid": [nw, ng] }), ..Default::default() })
}

fn scenario(dist: &str, info: Info) -> Result<AttractionScenario> {
    let d = Distribution::parse(dist)?;
    Ok(match info {
        Info::Full => AttractionScenario::full(d),
        Info::NoOtherInfo => AttractionScenario::no_other_info(d),
    })
}

fn info_label(info: Info) -> &'static str {
    match info {
        Info::Full => "full",
        Info::NoOtherInfo => "no_other_info",
    }
}

fn grid_outcome(
    sc: &AttractionScenario,
    analysis: Analysis,
    grid: (usize, usize),
    out: &Path,
    name: &str,
) -> Result<(String, BTreeMap<String, usize>, Vec<credence_core::equilibria::RegionCell>)> {
    let cells = region_grid(sc, analysis, GridSpec::new(grid.0, grid.1))?;
    let rows: Vec<Vec<String>> =
        cells.iter().map(|c| vec![sig6(c.alpha), sig6(c.t), c.label.clone(), analysis.label().into()]).collect();
    let mut counts = BTreeMap::new();
    for c in &cells {
        *counts.entry(c.label.clone()).or_insert(0) += 1;
    }
    Ok((write_csv(out, name, &GRID_HEADER, &rows)?, counts, cells))
}

pub fn equilibria(
    out: &Path,
    grid: Option<(usize, usize)>,
    dist: &str,
    info: Info,
    analysis: AnalysisArg,
    point: Option<(f64, f64)>,
) -> Result<Outcome> {
    let sc = scenario(dist, info)?;
    let a = match analysis {
        AnalysisArg::Nash => Analysis::Nash,
        AnalysisArg::Mixed => Analysis::Mixed,
        AnalysisArg::Level1 => Analysis::Level1,
    };
    let g = grid.unwrap_or(DEFAULT_EQ_GRID);
    let code = sc.distribution.code();
    let name = if code == "030" && info == Info::Full && a == Analysis::Nash {
        "fig7a_region.csv".to_string()
    } else {
        format!("region_{code}_{}_{}.csv", info_label(info), a.label())
    };
    let (file, counts, cells) = grid_outcome(&sc, a, g, out, &name)?;
    let mut rep = String::new();
    for (label, n) in &counts {
        writeln!(rep, "{label}: {n} cells")?;
    }
    let sep_t = cells.iter().filter(|c| c.label.split('|').any(|p| p == "INN")).map(|c| c.t).fold(f64::INFINITY, f64::min);
    if sep_t.is_finite() {
        writeln!(rep, "only-HA-invests profile first appears at t = {}", sig6(sep_t))?;
    }
    if let Some((alpha, t)) = point {
        let ps = pure_nash(&sc, &RegionParams::new(alpha, t))?;
        let labels: Vec<String> =
            ps.iter().map(|n| format!("{}{}", n.profile.label(), if n.by_indifference { " (indifference)" } else { "" })).collect();
        writeln!(rep, "Nash at alpha = {}, t = {}: {}", sig6(alpha), sig6(t), if labels.is_empty() { "none".into() } else { labels.join(", ") })?;
    }
    let artifacts = vec![file, write_json(out, "conditions.json", &conditions())?];
    let options = json!({ "grid": [g.0, g.1], "dist": code, "info": info, "analysis": analysis });
    Ok(Outcome { artifacts, report: rep, options, ..Default::default() })
}

pub fn level1(out: &Path, grid: Option<(usize, usize)>, dist: &str, info: Info) -> Result<Outcome> {
    let sc = scenario(dist, info)?;
    let g = grid.unwrap_or(DEFAULT_EQ_GRID);
    let code = sc.distribution.code();
    let name = format!("level1_{code}_{}.csv", info_label(info));
    let (file, counts, _) = grid_outcome(&sc, Analysis::Level1, g, out, &name)?;
    let mut rep = String::new();
    for role in Role::ALL {
        let c = level1_condition(&sc, role).map_or("untabulated", |c| c.name);
        writeln!(rep, "{}: threshold {c}", role.label())?;
    }
    for (label, n) in &counts {
        writeln!(rep, "{label} (HA, LA_i, LA_j): {n} cells")?;
    }
    let options = json!({ "grid": [g.0, g.1], "dist": code, "info": info });
    Ok(Outcome { artifacts: vec![file], report: rep, options, ..Default::default() })
}

#[derive(Serialize)]
struct OneShotDoc {
    p: f64,
    p_exact: Option<String>,
    kind: String,
    pooled_income: f64,
    pooled_income_exact: String,
    w_threshold: f64,
    w_threshold_fee12: f64,
}

pub fn oneshot(r: &Resolved, out: &Path) -> Result<Outcome> {
    let p = &r.params;
    let sol = oneshot_mixed_solver(&OneShotMatrix::reference());
    let pooled = oneshot_pooled_income(p)?;
    let w_at = |q: &MarketParams| -> Result<f64> {
        let pi_inv = expected_consumer_income(MenuKind::Pe, Mode::TransparentHigh, true, q)?;
        Ok(oneshot_invest_w_threshold(q, pi_inv, ONESHOT_PENALTY))
    };
    let doc = OneShotDoc {
        p: sol.p,
        p_exact: sol.exact.as_ref().map(|x| x.to_string()),
        kind: format!("{:?}", sol.kind),
        pooled_income: to_f64(&pooled),
        pooled_income_exact: pooled.to_string(),
        w_threshold: w_at(p)?,
        w_threshold_fee12: w_at(&MarketParams { d: 12.0, ..p.clone() })?,
    };
    let mut rep = String::new();
    writeln!(rep, "p = {}", sig6(doc.p))?;
    writeln!(rep, "pooled non-investor income = {}", sig6(doc.pooled_income))?;
    writeln!(rep, "investing beats pooling for w <= {} (fee 12: {})", sig6(doc.w_threshold), sig6(doc.w_threshold_fee12))?;
    Ok(Outcome { artifacts: vec![write_json(out, "oneshot.json", &doc)?], report: rep, ..Default::default() })
}

fn three<T>(ids: &str, parse: impl Fn(&str) -> credence_core::error::Result<T>) -> Result<[T; 3]> {
    let v: Vec<T> = ids.split(',').map(|s| parse(s.trim())).collect::<std::result::Result<_, _>>()?;
    v.try_into().map_err(|_| anyhow::anyhow!("expected exactly three policy ids in `{ids}`"))
}

#[derive(Serialize)]
struct SessionMetrics {
    session: u64,
    phase1: Metrics,
    phase2: Metrics,
    all: Metrics,
}

#[allow(clippy::too_many_arguments)]
pub fn simulate(
    r: &Resolved,
    out: &Path,
    experts: &str,
    consumers: &str,
    sessions: u64,
    mode: ModeArg,
    horizon: HorizonArg,
) -> Result<Outcome> {
    let configs: Vec<SessionConfig> = if r.sessions.is_empty() {
        let e = three(experts, ExpertPolicy::from_id)?;
        let c = three(consumers, ConsumerPolicy::from_id)?;
        (0..sessions)
            .map(|s| SessionConfig {
                params: r.params.clone(),
                mode: match mode {
                    ModeArg::Skill => InvestMode::Skill,
                    ModeArg::Algorithm => InvestMode::Algorithm,
                },
                horizon: match horizon {
                    HorizonArg::Repeated => Horizon::Repeated,
                    HorizonArg::OneShot => Horizon::OneShot,
                },
                session: s,
                ..SessionConfig::new(e, c, r.seed)
            })
            .collect()
    } else {
        r.sessions.clone()
    };
    let logs = run_batch(&configs)?;
    let dir = out.join("runs");
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut artifacts = Vec::new();
    let mut metrics = Vec::new();
    let mut rep = String::new();
    for (c, log) in configs.iter().zip(&logs) {
        let name = format!("runs/session_{:04}.jsonl", c.session);
        fs::write(out.join(&name), log.to_jsonl())?;
        artifacts.push(name);
        let m = SessionMetrics {
            session: c.session,
            phase1: compute_metrics(log, &c.params, Some(1)),
            phase2: compute_metrics(log, &c.params, Some(2)),
            all: compute_metrics(log, &c.params, None),
        };
        writeln!(
            rep,
            "session {}: entry {}, efficiency {}, phase-2 investment (high, low) = ({}, {})",
            c.session,
            sig6(m.all.market_entry_rate),
            sig6(m.all.efficiency),
            sig6(m.phase2.investment_share_high),
            sig6(m.phase2.investment_share_low)
        )?;
        metrics.push(m);
    }
    artifacts.push(write_json(out, "metrics.json", &metrics)?);
    artifacts.push(write_json(out, "sessions.json", &configs)?);
    Ok(Outcome { artifacts, report: rep, options: json!({ "sessions": configs.len() }), ..Default::default() })
}

/// Run the selected suites; `failed` is set when any check fails.
pub fn validate(
    r: &Resolved,
    out: &Path,
    suite: crate::args::Suite,
    sims: Option<usize>,
    grid: Option<(usize, usize)>,
) -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut rep = String::new();
    for s in crate::suites::selected(suite) {
        let report = crate::suites::run(s, r, out, sims, grid)?;
        let n = report.checks.len();
        let failed = report.failures().count();
        let known = report.failures().filter(|c| c.known_issue).count();
        writeln!(
            rep,
            "{} {:?}: {} of {n} checks pass ({:.1} s)",
            if report.pass { "PASS" } else { "FAIL" },
            s,
            n - failed,
            report.seconds
        )?;
        for c in report.failures() {
            writeln!(rep, "  FAIL {}: {}{}", c.name, c.detail, if c.known_issue { " [known erratum]" } else { "" })?;
        }
        if failed > 0 && known == failed {
            writeln!(rep, "  all {failed} failures trace to documented errata")?;
        }
        reports.push(report);
    }
    let failed = reports.iter().any(|x| !x.pass);
    let artifacts = vec![write_json(out, "validate_report.json", &reports)?];
    Ok(Outcome { artifacts, report: rep, options: json!({ "suite": suite, "sims": sims, "grid": grid }), failed })
}

/// Resolve configuration, run one subcommand and update the manifest.
pub fn dispatch(cli: &crate::args::Cli) -> Result<Outcome> {
    use crate::args::Command;
    let c = &cli.common;
    let r = crate::config::resolve(c.config.as_deref(), &c.set, c.seed)?;
    fs::create_dir_all(&c.out).with_context(|| format!("creating {}", c.out.display()))?;
    let out = c.out.as_path();
    let outcome = match &cli.command {
        Command::Params => params(&r, out),
        Command::Thresholds => thresholds(&r, out),
        Command::Regions => regions(&r, out, c.grid),
        Command::Beliefs { priors, threshold } => beliefs(&r, out, c.sims, priors, *threshold),
        Command::Rbar => rbar(&r, out, c.grid),
        Command::Equilibria { dist, info, analysis, alpha, t } => {
            equilibria(out, c.grid, dist, *info, *analysis, alpha.zip(*t))
        }
        Command::Level1 { dist, info } => level1(out, c.grid, dist, *info),
        Command::Oneshot => oneshot(&r, out),
        Command::Simulate { experts, consumers, sessions, mode, horizon } => {
            simulate(&r, out, experts, consumers, *sessions, *mode, *horizon)
        }
        Command::Validate { suite } => validate(&r, out, *suite, c.sims, c.grid),
    }?;
    crate::output::update_manifest(out, &r.params, r.seed, cli.command.name(), outcome.options.clone(), &outcome.artifacts)?;
    Ok(outcome)
}
