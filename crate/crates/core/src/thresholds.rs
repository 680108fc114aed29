//! Price-setting thresholds, pooling-belief bounds, signaling thresholds and
//! the consumer-retention bound r-bar, with curve/contour emitters.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::market::{expected_consumer_income, MarketParams, MenuKind, Mode};
use crate::tolerances;

fn ratio(num: f64, den: f64) -> Option<f64> {
    if den == 0.0 {
        None
    } else {
        Some(num / den)
    }
}

/// Which gap enters the transparent h^s numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeltaSource {
    PriceGap,
    CostGap,
}

/// `None` marks an undefined value (vanishing denominator).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdSet {
    pub h_m: Option<f64>,
    pub h_s: Option<f64>,
    pub mode: Mode,
    pub h_s_numerator: DeltaSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeliefBounds {
    pub gamma_m: Option<f64>,
    pub gamma_s: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignalingThresholds {
    /// Quoted form: Dpi(1-g)/(Dpi+d + Dpi g).
    pub w_ninv: f64,
    /// Direct solution of pi_ninv >= pi_inv: Dpi(1-g)/(Dpi+d - Dpi g).
    pub w_ninv_first_principles: Option<f64>,
    /// Belief bound at the supplied w: (Dpi - (Dpi+d)w)/(Dpi(1+w)).
    pub gamma_ninv: f64,
    /// Rounds a consumer must need to unmask an imitator before staying with the investor.
    pub r_bar: Option<f64>,
}

/// Transparent-type incomes that parameterize the signaling analysis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignalingIncomes {
    pub pi_high: f64,
    pub pi_low: f64,
    pub d: f64,
}

impl SignalingIncomes {
    pub fn from_params(params: &MarketParams) -> Self {
        let pe = |m| expected_consumer_income(MenuKind::Pe, m, false, params).expect("non-invested Pe");
        Self { pi_high: pe(Mode::TransparentHigh), pi_low: pe(Mode::TransparentLow), d: params.d }
    }

    pub fn gap(&self) -> f64 {
        self.pi_high - self.pi_low
    }
}

/// h^m and h^s for the precision selected by `mode`.
pub fn price_thresholds(params: &MarketParams, mode: Mode) -> ThresholdSet {
    let k = params.precision(mode);
    let v = params.v;
    let dp = params.delta_p();
    let use_c = params.use_delta_c && mode != Mode::Obfuscated;
    let delta = if use_c { params.delta_c() } else { dp };
    ThresholdSet {
        h_m: ratio(k * dp, (1.0 - k) * v - (1.0 - 2.0 * k) * dp),
        h_s: ratio((1.0 - k) * delta, k * v + (1.0 - 2.0 * k) * dp),
        mode,
        h_s_numerator: if use_c { DeltaSource::CostGap } else { DeltaSource::PriceGap },
    }
}

/// Belief bounds gamma-tilde^m and gamma-tilde^s at the current h.
pub fn belief_bounds(params: &MarketParams) -> BeliefBounds {
    let (v, h, q, z, dp) = (params.v, params.h, params.q, params.z, params.delta_p());
    let den = (z - q) * (v * h - 2.0 * h * dp + dp);
    BeliefBounds {
        gamma_m: ratio(v * h * (1.0 - q) - (h - 2.0 * h * q + q) * dp, den),
        gamma_s: ratio(-v * h * q - (h - 2.0 * h * q + q - 1.0) * dp, den),
    }
}

/// Incomes on the equal-margin menu family used by the price-setting analysis:
/// Pm sells HQT at p_hi, Ps sells LQT at p_hi - Delta p, Pe is the honest menu.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MenuIncomes {
    pub pi_m: f64,
    pub pi_s: f64,
    pub pi_e: f64,
}

pub fn menu_incomes(h: f64, belief: f64, params: &MarketParams) -> MenuIncomes {
    let p = MarketParams { h, ..params.clone() };
    let dp = p.delta_p();
    MenuIncomes {
        pi_m: p.v - p.p_hi,
        pi_s: (1.0 - h) * p.v - (p.p_hi - dp),
        pi_e: crate::market::pe_income_with_precision(p.k_mix(belief), &p),
    }
}

/// Optimal menu; ties resolve to Pe (closed middle interval), then Pm.
pub fn argmax_menu(m: &MenuIncomes) -> MenuKind {
    let eps = tolerances::EXACT;
    if m.pi_e + eps >= m.pi_m && m.pi_e + eps >= m.pi_s {
        MenuKind::Pe
    } else if m.pi_m >= m.pi_s {
        MenuKind::Pm
    } else {
        MenuKind::Ps
    }
}

/// Price region under full obfuscation: Ps below h^s_o, Pm above h^m_o, Pe between (inclusive).
pub fn prop1_region(h: f64, params: &MarketParams) -> MenuKind {
    let p = MarketParams { h, ..params.clone() };
    let ts = price_thresholds(&p, Mode::Obfuscated);
    if let Some(hs) = ts.h_s {
        if h < hs {
            return MenuKind::Ps;
        }
    }
    if let Some(hm) = ts.h_m {
        if h > hm {
            return MenuKind::Pm;
        }
    }
    MenuKind::Pe
}

/// Consumer incomes from approaching an investor and a non-investor.
pub fn invest_income_curves(w: f64, gamma_tilde: f64, params: &MarketParams) -> (f64, f64) {
    curves_from(&SignalingIncomes::from_params(params), w, gamma_tilde)
}

pub fn curves_from(inc: &SignalingIncomes, w: f64, g: f64) -> (f64, f64) {
    let ninv = inc.pi_low + inc.gap() * g;
    let inv = (1.0 - w) * inc.pi_high + w * (inc.pi_low - inc.d + inc.gap() * g);
    (inv, ninv)
}

pub fn signaling_thresholds(params: &MarketParams, gamma_tilde: f64, w: f64) -> SignalingThresholds {
    signaling_from(&SignalingIncomes::from_params(params), gamma_tilde, w, params.rounds as f64)
}

pub fn signaling_from(inc: &SignalingIncomes, g: f64, w: f64, rounds: f64) -> SignalingThresholds {
    let dpi = inc.gap();
    let big = dpi + inc.d;
    SignalingThresholds {
        w_ninv: dpi * (1.0 - g) / (big + dpi * g),
        w_ninv_first_principles: ratio(dpi * (1.0 - g), big - dpi * g),
        gamma_ninv: (dpi - big * w) / (dpi * (1.0 + w)),
        r_bar: r_bar(inc, w, g, rounds),
    }
}

/// r-bar = 2R [w(Dpi g - (Dpi+d)) + Dpi g] / (-Dpi (1-g)); undefined at g = 1.
pub fn r_bar(inc: &SignalingIncomes, w: f64, g: f64, rounds: f64) -> Option<f64> {
    let dpi = inc.gap();
    let num = 2.0 * rounds * (w * (dpi * g - (dpi + inc.d)) + dpi * g);
    ratio(num, -dpi * (1.0 - g))
}

/// Belief about a second non-investor needed to prefer it over the investor.
pub fn second_expert_belief_bound(inc: &SignalingIncomes, w: f64) -> f64 {
    1.0 - (inc.gap() + inc.d) / inc.gap() * w
}

/// Largest aid-failure probability w at which investing still beats pooling
/// without signaling: gamma pi_H + (1-gamma) pi_L = (1-w) pi_inv + w (pi_o - penalty).
pub fn oneshot_invest_w_threshold(params: &MarketParams, pi_inv: f64, penalty: f64) -> f64 {
    let inc = SignalingIncomes::from_params(params);
    let pi_o = params.gamma * inc.pi_high + (1.0 - params.gamma) * inc.pi_low;
    (pi_inv - pi_o) / (pi_inv - pi_o + penalty)
}

/// Root of f on [lo, hi] by bisection; requires a sign change.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Option<f64> {
    let (mut flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    while hi - lo > tolerances::BISECTION {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionRow {
    pub h: f64,
    pub gamma: f64,
    pub pi_m: f64,
    pub pi_s: f64,
    pub pi_e: f64,
    pub region: MenuKind,
}

/// Menu incomes and optimal menu per (belief, h); rows ordered belief-major.
pub fn emit_region_scan(params: &MarketParams, gamma_list: &[f64], h_grid: &[f64]) -> Vec<RegionRow> {
    let cells: Vec<(f64, f64)> =
        gamma_list.iter().flat_map(|&g| h_grid.iter().map(move |&h| (g, h))).collect();
    cells
        .par_iter()
        .map(|&(g, h)| {
            let m = menu_incomes(h, g, params);
            RegionRow { h, gamma: g, pi_m: m.pi_m, pi_s: m.pi_s, pi_e: m.pi_e, region: argmax_menu(&m) }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RbarCell {
    pub w: f64,
    pub gamma: f64,
    pub r_bar: Option<f64>,
    /// True when 0 <= r_bar <= R, i.e. the retention condition can bind.
    pub feasible: bool,
    /// Negative r_bar clamped to 0 in plots.
    pub clamped: bool,
}

pub fn emit_rbar_contour(params: &MarketParams, w_grid: &[f64], gamma_grid: &[f64]) -> Vec<RbarCell> {
    let inc = SignalingIncomes::from_params(params);
    let rounds = params.rounds as f64;
    let cells: Vec<(f64, f64)> =
        w_grid.iter().flat_map(|&w| gamma_grid.iter().map(move |&g| (w, g))).collect();
    cells
        .par_iter()
        .map(|&(w, g)| {
            let rb = r_bar(&inc, w, g, rounds);
            RbarCell {
                w,
                gamma: g,
                r_bar: rb,
                feasible: rb.is_some_and(|r| (0.0..=rounds).contains(&r)),
                clamped: rb.is_some_and(|r| r < 0.0),
            }
        })
        .collect()
}

/// Evenly spaced points strictly inside (0, 1) at cell centers.
pub fn centered_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect()
}

/// Evenly spaced points on [0, 1] including both ends.
pub fn closed_grid(n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![0.0],
        _ => (0..n).map(|i| i as f64 / (n - 1) as f64).collect(),
    }
}
