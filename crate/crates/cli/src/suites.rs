//! Validation suites shared by `credence validate` and the acceptance test.
//! Each check records whether a failure is explained by a documented
//! erratum in the attraction tables.

use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use credence_core::abm::{builtin_policies, compute_metrics, run_batch, ConsumerPolicy, ExpertPolicy, Horizon, InvestMode, RunLog, SessionConfig};
use credence_core::beliefs::{honest_obs_model, BeliefState, ObsModel};
use credence_core::equilibria::{
    attraction_share, best_response_grid_check, condition, conditions, mc_attraction_oracle, oneshot_mixed_solver,
    oneshot_pooled_income, AttractionScenario, Distribution, FormKind, GridSpec, InfoMode, InvestmentProfile,
    OneShotMatrix, RegionParams, Role,
};
use credence_core::exact::{frac, int};
use credence_core::market::{expected_consumer_income, expected_consumer_income_exact, mc_consumer_income, MenuKind, Mode, Problem, Treatment};
use credence_core::rng::substream;
use credence_core::thresholds::{belief_bounds, bisect, oneshot_invest_w_threshold, price_thresholds, prop1_region, signaling_thresholds};
use credence_core::tolerances::{EXACT, MC_SIGMAS, ROOT_MATCH};
use credence_core::MarketParams;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::args::{Info, Suite};
use crate::commands::{self, BELIEF_HEADER, GRID_HEADER, RBAR_HEADER, REGION_HEADER};
use crate::config::Resolved;
use crate::output::sig6;

/// Monte Carlo replications for the belief, table and figure suites.
pub const SUITE_SIMS: usize = 10_000;
/// Stage-game draws per menu, mode and investment state.
pub const STAGE_DRAWS: usize = 100_000;
/// Random (scenario, role, profile, alpha, t) points checked against the oracle.
pub const TABLE_POINTS: u64 = 50;
pub const GRID: (usize, usize) = (200, 200);
/// Minimum consumer-rounds in the accounting batch.
pub const ABM_ROUNDS: usize = 10_000;
/// Tolerance on values quoted to two decimals.
pub const QUOTE_2DP: f64 = 0.01;
/// Tolerance on values quoted to three significant digits.
pub const QUOTE_3SIG: f64 = 0.005;
/// Tolerance on the quoted separation onset.
pub const ONSET_TOL: f64 = 1e-3;
/// Overtreatment under the Pm/always-HQT script: 1 - h within this band.
pub const OVERTREATMENT_TOL: f64 = 0.02;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// Failure traced to a documented erratum.
    pub known_issue: bool,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), pass, detail: detail.into(), known_issue: false }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    /// Wall-clock time; not serialized so reports stay reproducible.
    #[serde(skip)]
    pub seconds: f64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn timed(suite: Suite, f: impl FnOnce() -> Result<Vec<Check>>) -> Result<SuiteReport> {
    let start = Instant::now();
    let checks = f()?;
    Ok(SuiteReport { suite, pass: checks.iter().all(|c| c.pass), seconds: start.elapsed().as_secs_f64(), checks })
}

fn near(x: f64, want: f64, tol: f64) -> bool {
    (x - want).abs() <= tol
}

/// Quoted values and exact results at the default parameters.
pub fn goldens() -> Result<SuiteReport> {
    timed(Suite::Goldens, || {
        let p = MarketParams::default();
        let inc = |k| expected_consumer_income(k, Mode::Obfuscated, false, &p);
        let (pm, ps, pe) = (inc(MenuKind::Pm)?, inc(MenuKind::Ps)?, inc(MenuKind::Pe)?);
        let hm = price_thresholds(&p, Mode::Obfuscated).h_m.unwrap_or(f64::NAN);
        let gm = belief_bounds(&p).gamma_m.unwrap_or(f64::NAN);
        let ha = expected_consumer_income_exact(MenuKind::Pe, Mode::TransparentHigh, false, &p)?;
        let la = expected_consumer_income_exact(MenuKind::Pe, Mode::TransparentLow, false, &p)?;
        let pooled = oneshot_pooled_income(&p)?;
        let w0 = signaling_thresholds(&p, 0.0, 0.0).w_ninv;
        let p2 = MarketParams::experiment2();
        let pi_inv = expected_consumer_income(MenuKind::Pe, Mode::TransparentHigh, true, &p2)?;
        let w_all = oneshot_invest_w_threshold(&p2, pi_inv, commands::ONESHOT_PENALTY);
        let onset = (-2.0 + 13f64.sqrt()) / 3.0;
        let (ha_c, la_c) = (condition("alpha_ha_0_inv_la3")?, condition("alpha_la_3_ninv")?);
        let root = bisect(|t| ha_c.threshold(t) - la_c.threshold(t), 0.4, 0.9).unwrap_or(f64::NAN);
        let mixed = oneshot_mixed_solver(&OneShotMatrix::reference());
        Ok(vec![
            Check::new(
                "menu_incomes",
                near(pm, 50.0, EXACT) && near(ps, 10.0, EXACT) && near(pe, 45.67, QUOTE_2DP),
                format!("pi_m = {}, pi_s = {}, pi_e = {}", sig6(pm), sig6(ps), sig6(pe)),
            ),
            Check::new(
                "obfuscated_thresholds",
                near(hm, 0.337, QUOTE_3SIG) && near(hm, 0.34, QUOTE_3SIG) && near(gm, 10.0 / 17.0, EXACT) && near(gm, 0.59, QUOTE_3SIG),
                format!("h_m = {}, gamma_m = {}", sig6(hm), sig6(gm)),
            ),
            Check::new("prop1_region", prop1_region(0.4, &p) == MenuKind::Pm, format!("h = 0.4 -> {}", prop1_region(0.4, &p).label())),
            Check::new(
                "transparent_incomes",
                ha == int(57) && la == int(40) && pooled == frac(97, 2),
                format!("HA-Pe = {ha}, LA-Pe = {la}, pooled = {pooled}"),
            ),
            Check::new(
                "investment_w_thresholds",
                near(w0, 17.0 / 27.0, EXACT) && near(w_all, 0.48, QUOTE_2DP),
                format!("w(belief 0) = {}, all-invest w = {}", sig6(w0), sig6(w_all)),
            ),
            Check::new(
                "separation_onset",
                near(root, onset, ROOT_MATCH) && near(root, 0.535, ONSET_TOL),
                format!("t = {} (closed form {})", sig6(root), sig6(onset)),
            ),
            Check::new(
                "oneshot_mixed",
                mixed.exact == Some(frac(1, 2)),
                format!("p = {}", mixed.exact.map_or_else(|| sig6(mixed.p), |x| x.to_string())),
            ),
        ])
    })
}

fn mean_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = xs.iter().sum::<f64>() / n;
    (m, (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0) / n).sqrt())
}

/// The posterior is a martingale under the prior and ignores observation order.
pub fn beliefs(sims: usize, seed: u64) -> Result<SuiteReport> {
    timed(Suite::Beliefs, || {
        let p = MarketParams::default();
        let (mh, ml) = (honest_obs_model(p.h, p.z), honest_obs_model(p.h, p.q));
        let run = |prior: f64, steps: usize, stream: u64| -> Check {
            let mut rng = substream(seed, stream);
            let xs: Vec<f64> = (0..sims)
                .map(|_| {
                    let truth: ObsModel = if rng.random::<f64>() < prior { ml } else { mh };
                    let mut s = BeliefState::new(prior, mh, ml);
                    for _ in 0..steps {
                        s.observe(truth.sample(&mut rng));
                    }
                    s.pr_l
                })
                .collect();
            let (m, se) = mean_se(&xs);
            Check::new(
                format!("martingale prior {prior} after {steps} rounds"),
                (m - prior).abs() <= MC_SIGMAS * se + EXACT,
                format!("mean {} ± {}", sig6(m), sig6(se)),
            )
        };
        let mut checks = vec![run(0.4, 1, 0), run(0.2, 1, 1), run(0.4, 5, 2), run(0.2, 5, 3)];
        let mut rng = substream(seed, 4);
        let mut worst = 0usize;
        for _ in 0..200 {
            let len = rng.random_range(1..40);
            let mut seq: Vec<_> = (0..len).map(|_| ml.sample(&mut rng)).collect();
            let post = |seq: &[_]| {
                let mut s = BeliefState::new(0.4, mh, ml);
                seq.iter().for_each(|&c| s.observe(c));
                s.pr_l
            };
            let a = post(&seq);
            seq.shuffle(&mut rng);
            worst += usize::from(a != post(&seq));
        }
        checks.push(Check::new("order invariance", worst == 0, format!("{worst} of 200 shuffled sequences differ")));
        Ok(checks)
    })
}

fn info_label(sc: &AttractionScenario) -> &'static str {
    match sc.info_mode {
        InfoMode::FullInfo => "full",
        InfoMode::NoOtherInfo => "no_other_info",
    }
}

/// Registry shares against the switching oracle at random points.
pub fn tables(sims: usize, seed: u64) -> Result<SuiteReport> {
    timed(Suite::Tables, || {
        let mut rng = substream(seed, 0);
        let mut checks = Vec::new();
        for i in 0..TABLE_POINTS {
            let dist = Distribution::ALL[rng.random_range(0..Distribution::ALL.len())];
            let sc = if rng.random::<bool>() { AttractionScenario::full(dist) } else { AttractionScenario::no_other_info(dist) };
            let role = Role::ALL[rng.random_range(0..3)];
            let profile = InvestmentProfile::all()[rng.random_range(0..8)];
            let rp = RegionParams::new(rng.random::<f64>(), rng.random_range(0.01..=1.0));
            let want = attraction_share(&sc, role, &profile, &rp)?.share;
            let e = mc_attraction_oracle(&sc, role, &profile, &rp, sims, substream(seed, 1 + i).random())?;
            let pass = e.agrees(want, MC_SIGMAS, EXACT);
            let mut c = Check::new(
                format!("{}/{}/{}/{} at alpha {} t {}", dist.code(), info_label(&sc), role.label(), profile.label(), sig6(rp.alpha), sig6(rp.t)),
                pass,
                format!("table {} vs oracle {} ± {}", sig6(want), sig6(e.mean), sig6(e.stderr)),
            );
            c.known_issue = !pass && credence_core::equilibria::touches_inconsistent(&sc, role, &profile);
            checks.push(c);
        }
        Ok(checks)
    })
}

/// Closed-form thresholds against grid best responses, printed and derived forms.
pub fn grid(n_alpha: usize, n_t: usize) -> Result<SuiteReport> {
    timed(Suite::Grid, || {
        let g = GridSpec::new(n_alpha, n_t);
        let mut checks = Vec::new();
        for c in conditions() {
            for (form, tag) in [(FormKind::Printed, "printed"), (FormKind::Derived, "derived")] {
                let r = best_response_grid_check(c, g, form)?;
                let mut k = Check::new(
                    format!("{} ({tag})", c.name),
                    r.pass(),
                    format!("{} far mismatches of {} cells, worst distance {}", r.far_mismatches, r.cells, sig6(r.worst_distance)),
                );
                k.known_issue = !r.pass() && form == FormKind::Printed && c.erratum.is_some();
                checks.push(k);
            }
        }
        Ok(checks)
    })
}

/// Closed-form consumer incomes against the Monte Carlo stage game.
pub fn stage(draws: usize, seed: u64) -> Result<SuiteReport> {
    timed(Suite::Stage, || {
        let p = MarketParams::default();
        let mut checks = Vec::new();
        let mut stream = 0;
        for kind in [MenuKind::Pm, MenuKind::Pe, MenuKind::Ps] {
            for mode in Mode::ALL {
                for invested in [false, true] {
                    if invested && mode == Mode::Obfuscated {
                        continue;
                    }
                    let want = expected_consumer_income(kind, mode, invested, &p)?;
                    let (m, se) = mc_consumer_income(kind, mode, invested, &p, draws, seed.wrapping_add(stream))?;
                    stream += 1;
                    checks.push(Check::new(
                        format!("{}/{mode:?}/{}", kind.label(), if invested { "invested" } else { "not_invested" }),
                        (m - want).abs() <= MC_SIGMAS * se + EXACT,
                        format!("closed form {} vs {} ± {}", sig6(want), sig6(m), sig6(se)),
                    ));
                }
            }
        }
        Ok(checks)
    })
}

/// Sessions cycling through the built-in policies, investment modes and horizons.
pub fn mixed_configs(n: u64, seed: u64) -> Vec<SessionConfig> {
    let experts = builtin_policies().experts;
    let consumers = builtin_policies().consumers;
    let (ne, nc) = (experts.len(), consumers.len());
    (0..n)
        .map(|s| {
            let i = s as usize;
            let mut c = SessionConfig::new(
                [experts[i % ne].1, experts[(i / ne + 3) % ne].1, experts[(i / 3 + 5) % ne].1],
                [consumers[i % nc].1, consumers[(i / nc) % nc].1, consumers[(i + 2) % nc].1],
                seed,
            );
            c.session = s;
            c.mode = if s % 2 == 0 { InvestMode::Skill } else { InvestMode::Algorithm };
            c.horizon = if s % 5 == 0 { Horizon::OneShot } else { Horizon::Repeated };
            c
        })
        .collect()
}

fn accounting_errors(configs: &[SessionConfig], logs: &[RunLog]) -> (usize, usize) {
    let (mut rounds, mut bad) = (0, 0);
    for (c, log) in configs.iter().zip(logs) {
        let p = &c.params;
        for ev in log.consumers() {
            rounds += 1;
            let ok = match &ev.visit {
                None => ev.consumer_payoff == p.sigma * ev.weight && ev.expert_profit == 0.0,
                Some(v) => {
                    let solved = if v.solved { p.v } else { 0.0 };
                    let cost = if v.treatment == Treatment::Hqt { p.c_hi } else { p.c_lo };
                    let fee = if v.invested { p.d } else { 0.0 };
                    ev.consumer_payoff + ev.expert_profit == ev.weight * (solved - cost - fee)
                        && v.solved == !(ev.problem == Problem::Big && v.treatment == Treatment::Lqt)
                }
            };
            bad += usize::from(!ok);
        }
    }
    (rounds, bad)
}

/// Simulator determinism, the payoff accounting identity and a scripted benchmark.
pub fn abm(seed: u64) -> Result<SuiteReport> {
    timed(Suite::Abm, || {
        let configs = mixed_configs(200, seed);
        let a = run_batch(&configs)?;
        let b = run_batch(&configs)?;
        let differ = a.iter().zip(&b).filter(|(x, y)| x.to_jsonl() != y.to_jsonl()).count();
        let (rounds, bad) = accounting_errors(&configs, &a);
        let pm = SessionConfig::new([ExpertPolicy::PmAlwaysHqt; 3], [ConsumerPolicy::Greedy; 3], seed);
        let pm_configs: Vec<SessionConfig> = (0..140).map(|s| SessionConfig { session: s, ..pm.clone() }).collect();
        let merged = RunLog { session: 0, seed, events: run_batch(&pm_configs)?.into_iter().flat_map(|l| l.events).collect() };
        let m = compute_metrics(&merged, &pm.params, None);
        let want = 1.0 - pm.params.h;
        Ok(vec![
            Check::new("byte-identical reruns", differ == 0, format!("{differ} of {} session logs differ", configs.len())),
            Check::new(
                "accounting identity",
                bad == 0 && rounds >= ABM_ROUNDS,
                format!("{bad} violations over {rounds} consumer-rounds"),
            ),
            Check::new(
                "pm always-HQT overtreatment",
                near(m.overtreatment, want, OVERTREATMENT_TOL) && m.undertreatment == 0.0,
                format!("overtreatment {} over {} consultations", sig6(m.overtreatment), m.consultations),
            ),
        ])
    })
}

fn read_csv(path: &Path) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let mut r = csv::Reader::from_path(path).with_context(|| format!("reading {}", path.display()))?;
    let header = r.headers()?.iter().map(String::from).collect();
    let rows = r.records().map(|x| x.map(|rec| rec.iter().map(String::from).collect())).collect::<Result<_, _>>()?;
    Ok((header, rows))
}

/// Regenerate the figure data with default grids, then check headers and the belief-path shape.
pub fn figures(r: &Resolved, out: &Path, sims: usize) -> Result<SuiteReport> {
    timed(Suite::Figures, || {
        commands::regions(r, out, None)?;
        commands::beliefs(r, out, Some(sims), &[0.4, 0.2], 0.9)?;
        commands::rbar(r, out, None)?;
        commands::equilibria(out, None, "030", Info::Full, crate::args::AnalysisArg::Nash, None)?;
        let mut checks = Vec::new();
        let files: [(&str, &[&str]); 5] = [
            ("fig1_regions.csv", &REGION_HEADER),
            ("fig1_beliefs.csv", &REGION_HEADER),
            ("fig2_beliefs.csv", &BELIEF_HEADER),
            ("fig5_rbar.csv", &RBAR_HEADER),
            ("fig7a_region.csv", &GRID_HEADER),
        ];
        for (name, header) in files {
            let (h, rows) = read_csv(&out.join(name))?;
            checks.push(Check::new(name, h == header && !rows.is_empty(), format!("{} rows", rows.len())));
        }
        let (_, rows) = read_csv(&out.join("fig2_beliefs.csv"))?;
        for prior in ["0.4", "0.2"] {
            let path: Vec<f64> = rows.iter().filter(|x| x[0] == prior).map(|x| x[2].parse().unwrap_or(f64::NAN)).collect();
            let rising = path.len() == r.params.rounds as usize + 1 && path.windows(2).all(|w| w[1] > w[0]);
            checks.push(Check::new(
                format!("mean Pr(L) strictly increasing, prior {prior}"),
                rising,
                format!("{} -> {} over {} rounds", sig6(path[0]), sig6(*path.last().unwrap_or(&f64::NAN)), path.len().saturating_sub(1)),
            ));
        }
        Ok(checks)
    })
}

/// Suites in run order for `suite`.
pub fn selected(suite: Suite) -> Vec<Suite> {
    match suite {
        Suite::All => vec![Suite::Goldens, Suite::Beliefs, Suite::Tables, Suite::Grid, Suite::Stage, Suite::Abm, Suite::Figures],
        s => vec![s],
    }
}

pub fn run(suite: Suite, r: &Resolved, out: &Path, sims: Option<usize>, grid_size: Option<(usize, usize)>) -> Result<SuiteReport> {
    let sims = sims.unwrap_or(SUITE_SIMS);
    let (na, nt) = grid_size.unwrap_or(GRID);
    match suite {
        Suite::Goldens => goldens(),
        Suite::Beliefs => beliefs(sims, r.seed),
        Suite::Tables => tables(sims, r.seed),
        Suite::Grid => grid(na, nt),
        Suite::Stage => stage(STAGE_DRAWS, r.seed),
        Suite::Abm => abm(r.seed),
        Suite::Figures => figures(r, out, sims),
        Suite::All => unreachable!("expanded by selected()"),
    }
}
