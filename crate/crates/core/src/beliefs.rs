//! Bayesian consumer learning about expert ability from outcome classes.
//!
//! Posteriors depend on the outcome counts only; they are evaluated in log
//! space from the counts, so observation order cannot change the result.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::market::OutcomeClass;
use crate::rng::substream;
use crate::tolerances;

/// Probabilities of the outcome classes (A, B, C).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObsModel {
    pub probs: [f64; 3],
}

impl ObsModel {
    pub fn new(probs: [f64; 3]) -> Self {
        let m = Self { probs };
        debug_assert!(m.is_valid(), "invalid observation model {probs:?}");
        m
    }

    pub fn is_valid(&self) -> bool {
        self.probs.iter().all(|&p| p >= 0.0)
            && (self.probs.iter().sum::<f64>() - 1.0).abs() <= tolerances::PROB_SUM
    }

    pub fn prob(&self, c: OutcomeClass) -> f64 {
        self.probs[class_index(c)]
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> OutcomeClass {
        let u: f64 = rng.random();
        if u < self.probs[0] {
            OutcomeClass::A
        } else if u < self.probs[0] + self.probs[1] {
            OutcomeClass::B
        } else {
            OutcomeClass::C
        }
    }
}

pub fn class_index(c: OutcomeClass) -> usize {
    match c {
        OutcomeClass::A => 0,
        OutcomeClass::B => 1,
        OutcomeClass::C => 2,
    }
}

/// Expert behavior under the equal-markup menu as seen by consumers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ObsStrategy {
    Honest(f64),
    AlwaysHqt,
    AlwaysLqt,
}

/// Honest expert with precision k: undertreat iff big and misdiagnosed.
pub fn honest_obs_model(h: f64, k: f64) -> ObsModel {
    let pa = h * (1.0 - k);
    let pc = (1.0 - h) * k;
    ObsModel::new([pa, 1.0 - pa - pc, pc])
}

pub fn strategy_obs_model(strategy: ObsStrategy, h: f64) -> ObsModel {
    match strategy {
        ObsStrategy::Honest(k) => honest_obs_model(h, k),
        ObsStrategy::AlwaysHqt => ObsModel::new([0.0, 1.0, 0.0]),
        ObsStrategy::AlwaysLqt => ObsModel::new([h, 0.0, 1.0 - h]),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeliefState {
    pub prior_l: f64,
    pub pr_l: f64,
    pub model_h: ObsModel,
    pub model_l: ObsModel,
    /// Counts (n, m, o) of classes A, B, C.
    pub counts: [u64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Posterior {
    pub pr_l: f64,
    /// Both likelihoods vanished; the prior is returned unchanged.
    pub impossible: bool,
}

fn log_lik(model: &ObsModel, counts: &[u64; 3]) -> f64 {
    counts
        .iter()
        .zip(model.probs.iter())
        .map(|(&n, &p)| if n == 0 { 0.0 } else { n as f64 * p.ln() })
        .sum()
}

fn ln_or_neg_inf(x: f64) -> f64 {
    if x > 0.0 {
        x.ln()
    } else {
        f64::NEG_INFINITY
    }
}

impl BeliefState {
    pub fn new(prior_l: f64, model_h: ObsModel, model_l: ObsModel) -> Self {
        Self { prior_l, pr_l: prior_l, model_h, model_l, counts: [0; 3] }
    }

    pub fn observe(&mut self, c: OutcomeClass) {
        self.counts[class_index(c)] += 1;
        self.pr_l = posterior(self).pr_l;
    }

    /// Log posterior odds of L against H; infinite at degenerate beliefs.
    pub fn log_odds(&self) -> f64 {
        let a = ln_or_neg_inf(self.prior_l) + log_lik(&self.model_l, &self.counts);
        let b = ln_or_neg_inf(1.0 - self.prior_l) + log_lik(&self.model_h, &self.counts);
        match (a == f64::NEG_INFINITY, b == f64::NEG_INFINITY) {
            (true, true) => logit(self.prior_l),
            (false, true) => f64::INFINITY,
            (true, false) => f64::NEG_INFINITY,
            (false, false) => a - b,
        }
    }
}

fn logit(p: f64) -> f64 {
    ln_or_neg_inf(p) - ln_or_neg_inf(1.0 - p)
}

/// Multinomial Bayes posterior Pr(L | n, m, o), evaluated in log space.
pub fn posterior(state: &BeliefState) -> Posterior {
    let a = ln_or_neg_inf(state.prior_l) + log_lik(&state.model_l, &state.counts);
    let b = ln_or_neg_inf(1.0 - state.prior_l) + log_lik(&state.model_h, &state.counts);
    let pr_l = match (a == f64::NEG_INFINITY, b == f64::NEG_INFINITY) {
        (true, true) => return Posterior { pr_l: state.prior_l, impossible: true },
        (false, true) => 1.0,
        (true, false) => 0.0,
        (false, false) => 1.0 / (1.0 + (b - a).exp()),
    };
    Posterior { pr_l, impossible: false }
}

/// Direct-space posterior; only for moderate counts.
pub fn posterior_direct(state: &BeliefState) -> f64 {
    let lik = |m: &ObsModel| -> f64 {
        state.counts.iter().zip(m.probs.iter()).map(|(&n, &p)| p.powi(n as i32)).product()
    };
    let l = state.prior_l * lik(&state.model_l);
    let h = (1.0 - state.prior_l) * lik(&state.model_h);
    if l + h == 0.0 {
        state.prior_l
    } else {
        l / (l + h)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeliefPathSummary {
    pub prior_l: f64,
    /// Mean Pr(L) after rounds 1..=rounds.
    pub mean_path: Vec<f64>,
    /// Per-round (q10, q90).
    pub quantile_bands: Vec<(f64, f64)>,
    pub n_sims: usize,
    pub seed: u64,
}

fn one_path(prior: f64, truth: &ObsModel, mh: &ObsModel, ml: &ObsModel, rounds: usize, seed: u64, i: u64) -> Vec<f64> {
    let mut rng = substream(seed, i);
    let mut st = BeliefState::new(prior, *mh, *ml);
    (0..rounds)
        .map(|_| {
            st.observe(truth.sample(&mut rng));
            st.pr_l
        })
        .collect()
}

/// Linear-interpolation quantile of sorted data.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let pos = p * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

pub fn simulate_belief_paths(
    prior_l: f64,
    truth: &ObsModel,
    consumer_models: (ObsModel, ObsModel),
    rounds: usize,
    n_sims: usize,
    seed: u64,
) -> BeliefPathSummary {
    let (mh, ml) = consumer_models;
    let paths: Vec<Vec<f64>> = (0..n_sims as u64)
        .into_par_iter()
        .map(|i| one_path(prior_l, truth, &mh, &ml, rounds, seed, i))
        .collect();
    let mut mean_path = Vec::with_capacity(rounds);
    let mut quantile_bands = Vec::with_capacity(rounds);
    for r in 0..rounds {
        let mut col: Vec<f64> = paths.iter().map(|p| p[r]).collect();
        mean_path.push(col.iter().sum::<f64>() / n_sims as f64);
        col.sort_by(f64::total_cmp);
        quantile_bands.push((quantile_sorted(&col, 0.1), quantile_sorted(&col, 0.9)));
    }
    BeliefPathSummary { prior_l, mean_path, quantile_bands, n_sims, seed }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FirstPassage {
    /// Per simulation: first round with Pr(L) >= threshold, or max_rounds + 1 if censored.
    pub rounds: Vec<u32>,
    pub censored: usize,
    pub max_rounds: u32,
    pub median: f64,
    pub mean_uncensored: Option<f64>,
}

impl FirstPassage {
    pub fn sentinel(&self) -> u32 {
        self.max_rounds + 1
    }
}

/// Rounds until a Bayesian consumer's Pr(L) first reaches `threshold`.
pub fn first_passage_r(
    prior_l: f64,
    truth: &ObsModel,
    consumer_models: (ObsModel, ObsModel),
    threshold: f64,
    max_rounds: u32,
    n_sims: usize,
    seed: u64,
) -> FirstPassage {
    let (mh, ml) = consumer_models;
    let target = logit(threshold);
    let rounds: Vec<u32> = (0..n_sims as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(seed, i);
            let mut st = BeliefState::new(prior_l, mh, ml);
            for r in 1..=max_rounds {
                st.observe(truth.sample(&mut rng));
                if st.log_odds() >= target {
                    return r;
                }
            }
            max_rounds + 1
        })
        .collect();
    let censored = rounds.iter().filter(|&&r| r > max_rounds).count();
    let mut sorted: Vec<f64> = rounds.iter().map(|&r| r as f64).collect();
    sorted.sort_by(f64::total_cmp);
    let unc: Vec<f64> = rounds.iter().filter(|&&r| r <= max_rounds).map(|&r| r as f64).collect();
    FirstPassage {
        censored,
        max_rounds,
        median: quantile_sorted(&sorted, 0.5),
        mean_uncensored: (!unc.is_empty()).then(|| unc.iter().sum::<f64>() / unc.len() as f64),
        rounds,
    }
}
