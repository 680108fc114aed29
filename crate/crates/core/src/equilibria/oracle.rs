//! Monte Carlo switching oracle for the attraction registry.
//!
//! Three consumers, one per phase-1 slot, move through phase 2 in continuous
//! time on [0, 1]. An alpha-type consumer locks onto a unique investor. With two
//! investors every consumer first tries the lone non-investor. Otherwise a
//! consumer starts at their phase-1 expert (an investor's own non-alpha
//! consumers first probe a non-investor). HA and investors retain a consumer for
//! the rest of the horizon; a non-investing LA keeps them for `t` before
//! detection, after which they move uniformly to an unvisited non-investor,
//! else to an investor, else to any unvisited expert, else to HA.

use rand::seq::IndexedRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::registry::relabel;
use super::{AttractionScenario, InvestmentProfile, RegionParams, Role};
use crate::error::{ModelError, Result};
use crate::rng::substream;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub n: usize,
}

impl OracleEstimate {
    /// Whether `value` lies within `sigmas` standard errors (plus `abs_tol`).
    pub fn agrees(&self, value: f64, sigmas: f64, abs_tol: f64) -> bool {
        (self.mean - value).abs() <= sigmas * self.stderr + abs_tol
    }
}

/// Time share one consumer spends at each expert.
fn consumer_path<R: Rng + ?Sized>(
    start: usize,
    inv: [bool; 3],
    alpha_type: bool,
    t: f64,
    rng: &mut R,
) -> [f64; 3] {
    let mut acc = [0.0; 3];
    let investors: Vec<usize> = (0..3).filter(|&e| inv[e]).collect();
    let non: Vec<usize> = (0..3).filter(|&e| !inv[e]).collect();
    let (first, mut visited) = match investors.len() {
        3 => {
            acc[start] = 1.0;
            return acc;
        }
        1 if alpha_type => {
            acc[investors[0]] = 1.0;
            return acc;
        }
        2 => (non[0], [start == 0 || non[0] == 0, start == 1 || non[0] == 1, start == 2 || non[0] == 2]),
        1 if inv[start] => {
            let e = *non.choose(rng).expect("two non-investors");
            let mut v = [false; 3];
            v[start] = true;
            v[e] = true;
            (e, v)
        }
        _ => {
            let mut v = [false; 3];
            v[start] = true;
            (start, v)
        }
    };
    let mut cur = first;
    let mut time = 0.0;
    loop {
        let rem = 1.0 - time;
        if rem <= 0.0 {
            return acc;
        }
        if cur == Role::Ha.index() || inv[cur] {
            acc[cur] += rem;
            return acc;
        }
        let dwell = t.min(rem);
        acc[cur] += dwell;
        time += dwell;
        if time >= 1.0 {
            return acc;
        }
        let unvisited_non: Vec<usize> = (0..3).filter(|&e| !visited[e] && !inv[e]).collect();
        let cand: Vec<usize> = if !unvisited_non.is_empty() {
            unvisited_non
        } else if !investors.is_empty() {
            investors.clone()
        } else {
            let u: Vec<usize> = (0..3).filter(|&e| !visited[e]).collect();
            if u.is_empty() {
                vec![Role::Ha.index()]
            } else {
                u
            }
        };
        cur = *cand.choose(rng).expect("nonempty candidates");
        visited[cur] = true;
    }
}

fn one_replication<R: Rng + ?Sized>(
    scenario: &AttractionScenario,
    role: Role,
    inv: [bool; 3],
    alpha: f64,
    ts: &[f64; 3],
    rng: &mut R,
) -> f64 {
    let d = scenario.distribution;
    let mut starts = Vec::with_capacity(3);
    for r in Role::ALL {
        starts.extend(std::iter::repeat_n(r.index(), d.count(r) as usize));
    }
    let mut tot = 0.0;
    for (c, &s) in starts.iter().enumerate() {
        let alpha_type = rng.random::<f64>() < alpha;
        tot += consumer_path(s, inv, alpha_type, ts[c], rng)[role.index()];
    }
    tot / 3.0
}

fn estimate(
    scenario: &AttractionScenario,
    role: Role,
    inv: [bool; 3],
    alpha: f64,
    ts: &[f64; 3],
    n_sims: usize,
    seed: u64,
) -> (f64, f64) {
    let xs: Vec<f64> = (0..n_sims as u64)
        .into_par_iter()
        .map(|i| one_replication(scenario, role, inv, alpha, ts, &mut substream(seed, i)))
        .collect();
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var / n)
}

/// Oracle with one detection time per consumer, in phase-1 slot order (HA, LA_i, LA_j).
/// Under NoOtherInfo each indistinguishable state is simulated and averaged.
pub fn mc_attraction_oracle_hetero(
    scenario: &AttractionScenario,
    role: Role,
    profile: &InvestmentProfile,
    alpha: f64,
    ts: [f64; 3],
    n_sims: usize,
    seed: u64,
) -> Result<OracleEstimate> {
    scenario.distribution.validate()?;
    for &t in &ts {
        RegionParams::new(alpha, t).validate()?;
    }
    if n_sims < 2 {
        return Err(ModelError::InvalidParams("oracle needs at least two replications".into()));
    }
    let states = scenario.hidden_states(role);
    let k = states.len() as f64;
    let (mut mean, mut var) = (0.0, 0.0);
    for (s, (dist, r)) in states.iter().enumerate() {
        let p = relabel(role, *r, profile);
        let sc = AttractionScenario::full(*dist);
        let (m, v) = estimate(&sc, *r, [p.ha, p.la_i, p.la_j], alpha, &ts, n_sims, seed ^ ((s as u64) << 40));
        mean += m / k;
        var += v / (k * k);
    }
    Ok(OracleEstimate { mean, stderr: var.sqrt(), n: n_sims })
}

/// Estimated expected share of consumer-rounds for `role` under the switching process.
pub fn mc_attraction_oracle(
    scenario: &AttractionScenario,
    role: Role,
    profile: &InvestmentProfile,
    rp: &RegionParams,
    n_sims: usize,
    seed: u64,
) -> Result<OracleEstimate> {
    mc_attraction_oracle_hetero(scenario, role, profile, rp.alpha, [rp.t; 3], n_sims, seed)
}
