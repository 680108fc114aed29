//! Seeded agent-based simulator of the three-expert, three-consumer market.
//!
//! Each round runs invest, price, choose, diagnose, treat and pay in that
//! order. Phase 1 has no investment option; phase 2 is either the repeated
//! horizon or a single round whose payoffs carry weight 4. All randomness is
//! drawn from per-(session, round, actor) substreams.

mod metrics;
mod policy;

pub use metrics::{compute_metrics, Metrics};
pub use policy::{builtin_policies, ConsumerPolicy, ExpertCtx, ExpertPolicy, PolicyCatalog};

use rand::seq::IndexedRandom;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::beliefs::{honest_obs_model, BeliefState};
use crate::error::{ModelError, Result};
use crate::market::{
    draw_diagnosis, draw_problem, expected_consumer_income, pe_income_with_precision, realize_round,
    solves, Ability, ExpertIdentity, MenuKind, Mode, OutcomeClass, PriceVector, Problem, Treatment,
};
use crate::rng::{session_stream, substream};
use crate::tolerances;
use crate::MarketParams;

/// Payoff multiplier of the one-shot phase-2 round.
pub const ONESHOT_WEIGHT: f64 = 4.0;

/// What an investment buys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InvestMode {
    /// Skill training: precision k_inv whenever invested.
    Skill,
    /// Decision aid: precision k_inv only when the expert uses the aid.
    Algorithm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Horizon {
    Repeated,
    OneShot,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    #[serde(default)]
    pub params: MarketParams,
    pub mode: InvestMode,
    pub horizon: Horizon,
    /// Exactly one high-ability expert.
    #[serde(default = "default_abilities")]
    pub abilities: [Ability; 3],
    pub expert_policies: [ExpertPolicy; 3],
    pub consumer_policies: [ConsumerPolicy; 3],
    pub seed: u64,
    #[serde(default)]
    pub session: u64,
}

fn default_abilities() -> [Ability; 3] {
    [Ability::High, Ability::Low, Ability::Low]
}

impl SessionConfig {
    pub fn new(expert_policies: [ExpertPolicy; 3], consumer_policies: [ConsumerPolicy; 3], seed: u64) -> Self {
        Self {
            params: MarketParams::default(),
            mode: InvestMode::Skill,
            horizon: Horizon::Repeated,
            abilities: default_abilities(),
            expert_policies,
            consumer_policies,
            seed,
            session: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if self.abilities.iter().filter(|&&a| a == Ability::High).count() != 1 {
            return Err(ModelError::Config("exactly one expert must have high ability".into()));
        }
        for p in &self.expert_policies {
            match *p {
                ExpertPolicy::OneShotRandomizer { p } if !(0.0..=1.0).contains(&p) => {
                    return Err(ModelError::Config(format!("randomizer probability {p} outside [0, 1]")));
                }
                _ => {}
            }
        }
        for c in &self.consumer_policies {
            if let ConsumerPolicy::BayesianSwitcher { threshold } = *c {
                if !(threshold > 0.0 && threshold <= 1.0) {
                    return Err(ModelError::Config(format!("switch threshold {threshold} outside (0, 1]")));
                }
            }
        }
        Ok(())
    }

    pub fn phase2_rounds(&self) -> u32 {
        match self.horizon {
            Horizon::Repeated => self.params.rounds,
            Horizon::OneShot => 1,
        }
    }

    pub fn total_rounds(&self) -> u32 {
        self.params.phase1_rounds + self.phase2_rounds()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpertEvent {
    pub round: u32,
    pub phase: u8,
    pub expert: u8,
    pub ability: Ability,
    pub invested: bool,
    pub aid_used: bool,
    pub precision: f64,
    pub menu: MenuKind,
    pub p_hi: f64,
    pub p_lo: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Consultation {
    pub expert: u8,
    pub invested: bool,
    pub signal: Problem,
    pub treatment: Treatment,
    pub price: f64,
    pub solved: bool,
    pub outcome_class: OutcomeClass,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsumerEvent {
    pub round: u32,
    pub phase: u8,
    pub consumer: u8,
    pub policy: ConsumerPolicy,
    /// Expected income the consumer assigned to each expert.
    pub expected_incomes: [f64; 3],
    pub problem: Problem,
    /// `None` when the outside option was taken.
    pub visit: Option<Consultation>,
    /// Recorded payoffs, already multiplied by `weight`.
    pub consumer_payoff: f64,
    pub expert_profit: f64,
    pub weight: f64,
    /// Pr(L) per expert after this round's update.
    pub beliefs: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum Event {
    Expert(ExpertEvent),
    Consumer(ConsumerEvent),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunLog {
    pub session: u64,
    pub seed: u64,
    pub events: Vec<Event>,
}

impl RunLog {
    pub fn experts(&self) -> impl Iterator<Item = &ExpertEvent> {
        self.events.iter().filter_map(|e| match e {
            Event::Expert(x) => Some(x),
            _ => None,
        })
    }

    pub fn consumers(&self) -> impl Iterator<Item = &ConsumerEvent> {
        self.events.iter().filter_map(|e| match e {
            Event::Consumer(x) => Some(x),
            _ => None,
        })
    }

    /// One JSON object per round-actor event.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            out.push_str(&serde_json::to_string(e).expect("events serialize"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(session: u64, seed: u64, text: &str) -> Result<Self> {
        let events = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).map_err(|e| ModelError::Config(format!("bad log line: {e}"))))
            .collect::<Result<_>>()?;
        Ok(Self { session, seed, events })
    }
}

/// Consumer's expected income from an expert given Pr(L) and the posted menu.
fn income_estimate(kind: MenuKind, invested: bool, pr_l: f64, params: &MarketParams) -> f64 {
    if kind == MenuKind::Pe && !invested {
        let k = params.q * pr_l + params.z * (1.0 - pr_l);
        return pe_income_with_precision(k, params);
    }
    expected_consumer_income(kind, Mode::TransparentHigh, invested, params).expect("transparent mode")
}

/// Uniform choice among experts within TIE of the best candidate, if it reaches sigma.
fn pick_best(cands: &[usize], inc: &[f64; 3], sigma: f64, rng: &mut ChaCha8Rng) -> Option<usize> {
    let best = cands.iter().map(|&e| inc[e]).fold(f64::NEG_INFINITY, f64::max);
    if cands.is_empty() || best < sigma - tolerances::TIE {
        return None;
    }
    let ties: Vec<usize> = cands.iter().copied().filter(|&e| inc[e] >= best - tolerances::TIE).collect();
    ties.choose(rng).copied()
}

fn choose_expert(
    policy: ConsumerPolicy,
    inc: &[f64; 3],
    beliefs: &[BeliefState; 3],
    invested: &[bool; 3],
    last: Option<usize>,
    sigma: f64,
    rng: &mut ChaCha8Rng,
) -> Option<usize> {
    let all = [0usize, 1, 2];
    let enter = |e: usize| inc[e] >= sigma - tolerances::TIE;
    match policy {
        ConsumerPolicy::OutsideOptionSitter => None,
        ConsumerPolicy::Greedy => pick_best(&all, inc, sigma, rng),
        ConsumerPolicy::SafeSeeker => {
            let inv: Vec<usize> = all.iter().copied().filter(|&e| invested[e]).collect();
            if inv.len() == 1 && enter(inv[0]) {
                Some(inv[0])
            } else {
                pick_best(&all, inc, sigma, rng)
            }
        }
        ConsumerPolicy::BayesianSwitcher { threshold } => {
            let trusted = |e: usize| beliefs[e].pr_l < threshold;
            if let Some(e) = last {
                if trusted(e) && enter(e) {
                    return Some(e);
                }
            }
            let ok: Vec<usize> = all.iter().copied().filter(|&e| trusted(e) && enter(e)).collect();
            if ok.is_empty() {
                pick_best(&all, inc, sigma, rng)
            } else {
                pick_best(&ok, inc, sigma, rng)
            }
        }
    }
}

/// Run one session. Deterministic in the config.
pub fn run_session(config: &SessionConfig) -> Result<RunLog> {
    config.validate()?;
    let params = &config.params;
    let model_h = honest_obs_model(params.h, params.z);
    let model_l = honest_obs_model(params.h, params.q);
    let prior_l = 1.0 - params.gamma;
    let mut beliefs: [[BeliefState; 3]; 3] =
        std::array::from_fn(|_| std::array::from_fn(|_| BeliefState::new(prior_l, model_h, model_l)));
    let mut last: [Option<usize>; 3] = [None; 3];
    let mut events = Vec::new();
    let p1 = params.phase1_rounds;

    for round in 1..=config.total_rounds() {
        let phase2_round = (round > p1).then(|| round - p1 - 1);
        let phase = if phase2_round.is_some() { 2 } else { 1 };
        let weight = if phase == 2 && config.horizon == Horizon::OneShot { ONESHOT_WEIGHT } else { 1.0 };
        let stream = |actor: u64| substream(config.seed, session_stream(config.session, round as u64, actor));

        // Invest and price.
        let mut ids = [ExpertIdentity::new(Ability::Low, params); 3];
        let mut pvs = [PriceVector::new(MenuKind::Pe, false, params); 3];
        let mut precisions = [0.0; 3];
        for e in 0..3 {
            let pol = config.expert_policies[e];
            let mut rng = stream(e as u64);
            let mut id = ExpertIdentity::new(config.abilities[e], params);
            id.invested = pol.invest(&ExpertCtx { phase2_round }, &mut rng);
            let aid_used = id.invested && (config.mode == InvestMode::Skill || pol.use_aid());
            let pv = PriceVector::new(pol.menu(), id.invested, params);
            precisions[e] = id.effective_precision(aid_used, params);
            events.push(Event::Expert(ExpertEvent {
                round,
                phase,
                expert: e as u8,
                ability: id.ability,
                invested: id.invested,
                aid_used,
                precision: precisions[e],
                menu: pv.kind,
                p_hi: pv.p_hi,
                p_lo: pv.p_lo,
            }));
            ids[e] = id;
            pvs[e] = pv;
        }
        let invested = [ids[0].invested, ids[1].invested, ids[2].invested];

        // Choose, diagnose, treat, pay.
        for c in 0..3 {
            let policy = config.consumer_policies[c];
            let mut rng = stream(3 + c as u64);
            let inc: [f64; 3] =
                std::array::from_fn(|e| income_estimate(pvs[e].kind, invested[e], beliefs[c][e].pr_l, params));
            let choice = choose_expert(policy, &inc, &beliefs[c], &invested, last[c], params.sigma, &mut rng);
            let problem = draw_problem(params.h, &mut rng);
            let (visit, consumer_payoff, expert_profit) = match choice {
                None => (None, params.sigma, 0.0),
                Some(e) => {
                    let signal = draw_diagnosis(problem, precisions[e], &mut rng);
                    let treatment = config.expert_policies[e].treat(&pvs[e], signal, params);
                    let out = realize_round(problem, signal, treatment, &pvs[e], invested[e], params);
                    if pvs[e].kind == MenuKind::Pe && !invested[e] {
                        beliefs[c][e].observe(out.outcome_class);
                    }
                    last[c] = Some(e);
                    let v = Consultation {
                        expert: e as u8,
                        invested: invested[e],
                        signal,
                        treatment,
                        price: pvs[e].price(treatment),
                        solved: solves(problem, treatment),
                        outcome_class: out.outcome_class,
                    };
                    (Some(v), out.consumer_payoff, out.expert_profit)
                }
            };
            events.push(Event::Consumer(ConsumerEvent {
                round,
                phase,
                consumer: c as u8,
                policy,
                expected_incomes: inc,
                problem,
                visit,
                consumer_payoff: consumer_payoff * weight,
                expert_profit: expert_profit * weight,
                weight,
                beliefs: std::array::from_fn(|e| beliefs[c][e].pr_l),
            }));
        }
    }
    Ok(RunLog { session: config.session, seed: config.seed, events })
}

/// A list of sessions to run, as read from a batch manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchManifest {
    pub sessions: Vec<SessionConfig>,
}

/// Run independent sessions in parallel; output order follows the input.
pub fn run_batch(configs: &[SessionConfig]) -> Result<Vec<RunLog>> {
    configs.par_iter().map(run_session).collect()
}
