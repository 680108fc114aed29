//! Market metrics over a run log.
//!
//! Rates are per consultation; efficiency and surpluses are per
//! consumer-round, with payoffs as recorded (including the one-shot weight).

use serde::{Deserialize, Serialize};

use super::RunLog;
use crate::market::{Ability, Problem, Treatment};
use crate::MarketParams;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub consumer_rounds: usize,
    pub consultations: usize,
    pub market_entry_rate: f64,
    /// (actual - outside option) / (first best - outside option), investment costs deducted.
    pub efficiency: f64,
    /// Same ratio with investment costs added back.
    pub relative_efficiency: f64,
    /// Big problem treated with LQT.
    pub undertreatment: f64,
    /// Small problem treated with HQT.
    pub overtreatment: f64,
    pub efficient_treatment: f64,
    /// Correct signal and the efficient treatment.
    pub efficient_provision: f64,
    /// Mean expert profit per consumer-round.
    pub expert_surplus: f64,
    /// Mean consumer payoff per consumer-round (outside option included).
    pub consumer_surplus: f64,
    /// Expert-round shares of Pm, Pe, Ps.
    pub price_vector_shares: [f64; 3],
    /// Phase-2 investment rate of high- and low-ability experts.
    pub investment_share_high: f64,
    pub investment_share_low: f64,
}

fn efficient(problem: Problem, t: Treatment) -> bool {
    matches!((problem, t), (Problem::Big, Treatment::Hqt) | (Problem::Small, Treatment::Lqt))
}

fn ratio(n: usize, d: usize) -> f64 {
    if d == 0 {
        0.0
    } else {
        n as f64 / d as f64
    }
}

/// Metrics restricted to `phase` (1 or 2), or the whole log with `None`.
pub fn compute_metrics(log: &RunLog, params: &MarketParams, phase: Option<u8>) -> Metrics {
    let keep = |p: u8| phase.is_none_or(|x| x == p);
    let mut n = 0usize;
    let mut entered = 0usize;
    let (mut under, mut over, mut eff, mut prov) = (0usize, 0usize, 0usize, 0usize);
    let (mut actual, mut fees, mut best, mut outside) = (0.0, 0.0, 0.0, 0.0);
    let (mut es, mut cs) = (0.0, 0.0);
    for c in log.consumers().filter(|c| keep(c.phase)) {
        n += 1;
        let w = c.weight;
        let first_best = match c.problem {
            Problem::Big => params.v - params.c_hi,
            Problem::Small => params.v - params.c_lo,
        };
        best += w * first_best.max(params.sigma);
        outside += w * params.sigma;
        actual += c.consumer_payoff + c.expert_profit;
        es += c.expert_profit;
        cs += c.consumer_payoff;
        if let Some(v) = &c.visit {
            entered += 1;
            if v.invested {
                fees += w * params.d;
            }
            under += usize::from(c.problem == Problem::Big && v.treatment == Treatment::Lqt);
            over += usize::from(c.problem == Problem::Small && v.treatment == Treatment::Hqt);
            let e = efficient(c.problem, v.treatment);
            eff += usize::from(e);
            prov += usize::from(e && v.signal == c.problem);
        }
    }
    let denom = best - outside;
    let effic = |x: f64| if denom.abs() > 0.0 { (x - outside) / denom } else { 0.0 };

    let mut menus = [0usize; 3];
    let mut ne = 0usize;
    let (mut inv_h, mut n_h, mut inv_l, mut n_l) = (0usize, 0usize, 0usize, 0usize);
    for e in log.experts().filter(|e| keep(e.phase)) {
        ne += 1;
        menus[e.menu.index()] += 1;
        if e.phase == 2 {
            match e.ability {
                Ability::High => {
                    n_h += 1;
                    inv_h += usize::from(e.invested);
                }
                Ability::Low => {
                    n_l += 1;
                    inv_l += usize::from(e.invested);
                }
            }
        }
    }
    let nf = n.max(1) as f64;
    Metrics {
        consumer_rounds: n,
        consultations: entered,
        market_entry_rate: ratio(entered, n),
        efficiency: effic(actual),
        relative_efficiency: effic(actual + fees),
        undertreatment: ratio(under, entered),
        overtreatment: ratio(over, entered),
        efficient_treatment: ratio(eff, entered),
        efficient_provision: ratio(prov, entered),
        expert_surplus: es / nf,
        consumer_surplus: cs / nf,
        price_vector_shares: std::array::from_fn(|i| ratio(menus[i], ne)),
        investment_share_high: ratio(inv_h, n_h),
        investment_share_low: ratio(inv_l, n_l),
    }
}
