//! Market primitives: parameters, price menus, diagnosis, treatment and
//! per-round payoffs, plus closed-form expected consumer incomes.

use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{ModelError, Result};
use crate::exact::{self, rat};

/// All model constants. JSON field names follow the model notation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarketParams {
    /// Probability of the big problem.
    pub h: f64,
    /// Consumer value of a solved problem.
    pub v: f64,
    /// Outside option.
    pub sigma: f64,
    pub c_hi: f64,
    pub c_lo: f64,
    /// HQT price common to all menus.
    pub p_hi: f64,
    /// LQT prices for the Pm, Pe and Ps menus.
    pub p_lo_menu: [f64; 3],
    /// High-ability diagnostic precision.
    pub z: f64,
    /// Low-ability diagnostic precision.
    pub q: f64,
    /// Prior share of high-ability experts.
    pub gamma: f64,
    /// Investment fee, passed through to both prices.
    pub d: f64,
    /// Post-investment precision.
    pub k_inv: f64,
    /// Phase-2 rounds.
    #[serde(rename = "R")]
    pub rounds: u32,
    pub phase1_rounds: u32,
    /// Use the cost gap instead of the price gap in the transparent h^s numerator.
    #[serde(default)]
    pub use_delta_c: bool,
}

impl Default for MarketParams {
    fn default() -> Self {
        Self {
            h: 0.4,
            v: 150.0,
            sigma: 15.0,
            c_hi: 60.0,
            c_lo: 20.0,
            p_hi: 100.0,
            p_lo_menu: [40.0, 60.0, 80.0],
            z: 0.75,
            q: 0.5,
            gamma: 1.0 / 3.0,
            d: 10.0,
            k_inv: 0.9,
            rounds: 15,
            phase1_rounds: 10,
            use_delta_c: false,
        }
    }
}

impl MarketParams {
    /// Second-experiment configuration: investment fee 12.
    pub fn experiment2() -> Self {
        Self { d: 12.0, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(ModelError::InvalidParams(m.to_string()));
        let all = [
            self.h, self.v, self.sigma, self.c_hi, self.c_lo, self.p_hi, self.z, self.q,
            self.gamma, self.d, self.k_inv,
        ];
        if all.iter().chain(self.p_lo_menu.iter()).any(|x| !x.is_finite()) {
            return bad("all parameters must be finite");
        }
        if !(self.h > 0.0 && self.h < 1.0) {
            return bad("h must lie in (0, 1)");
        }
        if !(self.v > self.c_hi && self.c_hi > self.c_lo && self.c_lo >= 0.0) {
            return bad("need v > c_hi > c_lo >= 0");
        }
        if self.p_lo_menu.iter().any(|&p| p > self.p_hi) {
            return bad("p_hi must be at least every LQT price");
        }
        if !(0.0 < self.q && self.q <= self.z && self.z <= 1.0) {
            return bad("need 0 < q <= z <= 1");
        }
        if !(0.0..=1.0).contains(&self.gamma) || !(0.0..=1.0).contains(&self.k_inv) {
            return bad("gamma and k_inv must lie in [0, 1]");
        }
        if self.d < 0.0 {
            return bad("d must be nonnegative");
        }
        if self.rounds == 0 {
            return bad("R must be positive");
        }
        Ok(())
    }

    pub fn p_lo(&self, kind: MenuKind) -> f64 {
        self.p_lo_menu[kind.index()]
    }

    /// Price gap of the equal-markup menu.
    pub fn delta_p(&self) -> f64 {
        self.p_hi - self.p_lo(MenuKind::Pe)
    }

    pub fn delta_c(&self) -> f64 {
        self.c_hi - self.c_lo
    }

    /// Consumer-side precision mixture under obfuscation with belief `gamma`.
    pub fn k_mix(&self, gamma: f64) -> f64 {
        self.q * (1.0 - gamma) + gamma * self.z
    }

    pub fn precision(&self, mode: Mode) -> f64 {
        match mode {
            Mode::TransparentHigh => self.z,
            Mode::TransparentLow => self.q,
            Mode::Obfuscated => self.k_mix(self.gamma),
        }
    }

    /// Apply a `key=value` override; unknown keys are rejected.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = || ModelError::BadValue { key: key.to_string(), value: value.to_string() };
        let f = || value.parse::<f64>().map_err(|_| bad());
        let u = || value.parse::<u32>().map_err(|_| bad());
        match key {
            "h" => self.h = f()?,
            "v" => self.v = f()?,
            "sigma" => self.sigma = f()?,
            "c_hi" => self.c_hi = f()?,
            "c_lo" => self.c_lo = f()?,
            "p_hi" => self.p_hi = f()?,
            "p_lo_m" => self.p_lo_menu[0] = f()?,
            "p_lo_e" => self.p_lo_menu[1] = f()?,
            "p_lo_s" => self.p_lo_menu[2] = f()?,
            "z" => self.z = f()?,
            "q" => self.q = f()?,
            "gamma" => self.gamma = f()?,
            "d" => self.d = f()?,
            "k_inv" => self.k_inv = f()?,
            "R" => self.rounds = u()?,
            "phase1_rounds" => self.phase1_rounds = u()?,
            "use_delta_c" => self.use_delta_c = value.parse().map_err(|_| bad())?,
            _ => return Err(ModelError::UnknownKey(key.to_string())),
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MenuKind {
    Pm,
    Pe,
    Ps,
}

impl MenuKind {
    pub const ALL: [MenuKind; 3] = [MenuKind::Pm, MenuKind::Pe, MenuKind::Ps];

    pub fn index(self) -> usize {
        match self {
            MenuKind::Pm => 0,
            MenuKind::Pe => 1,
            MenuKind::Ps => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MenuKind::Pm => "Pm",
            MenuKind::Pe => "Pe",
            MenuKind::Ps => "Ps",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MarkupClass {
    HqtFavored,
    LqtFavored,
    Equal,
}

/// Which precision the consumer conditions on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    TransparentHigh,
    TransparentLow,
    Obfuscated,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::TransparentHigh, Mode::TransparentLow, Mode::Obfuscated];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ability {
    High,
    Low,
}

/// Consumer problem; also used for diagnostic signals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Problem {
    Big,
    Small,
}

impl Problem {
    pub fn other(self) -> Self {
        match self {
            Problem::Big => Problem::Small,
            Problem::Small => Problem::Big,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Treatment {
    Hqt,
    Lqt,
}

/// Consumer-observable outcome: A undertreated, B HQT, C small problem solved by LQT.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OutcomeClass {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PriceVector {
    pub kind: MenuKind,
    pub p_hi: f64,
    pub p_lo: f64,
    /// Amount added to both prices when the expert invests.
    pub invested_markup: f64,
}

impl PriceVector {
    pub fn new(kind: MenuKind, invested: bool, params: &MarketParams) -> Self {
        let markup = if invested { params.d } else { 0.0 };
        Self {
            kind,
            p_hi: params.p_hi + markup,
            p_lo: params.p_lo(kind) + markup,
            invested_markup: markup,
        }
    }

    pub fn price(&self, t: Treatment) -> f64 {
        match t {
            Treatment::Hqt => self.p_hi,
            Treatment::Lqt => self.p_lo,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpertIdentity {
    pub ability: Ability,
    pub precision: f64,
    pub invested: bool,
}

impl ExpertIdentity {
    pub fn new(ability: Ability, params: &MarketParams) -> Self {
        let precision = match ability {
            Ability::High => params.z,
            Ability::Low => params.q,
        };
        Self { ability, precision, invested: false }
    }

    /// Precision in effect this round; `aid_used` applies the post-investment precision.
    pub fn effective_precision(&self, aid_used: bool, params: &MarketParams) -> f64 {
        if self.invested && aid_used {
            params.k_inv
        } else {
            self.precision
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RoundOutcome {
    pub problem: Problem,
    pub signal: Problem,
    pub treatment: Treatment,
    pub consumer_payoff: f64,
    pub expert_profit: f64,
    pub outcome_class: OutcomeClass,
}

pub fn markup_class(pv: &PriceVector, params: &MarketParams) -> MarkupClass {
    let hi = pv.p_hi - params.c_hi;
    let lo = pv.p_lo - params.c_lo;
    if hi > lo {
        MarkupClass::HqtFavored
    } else if hi < lo {
        MarkupClass::LqtFavored
    } else {
        MarkupClass::Equal
    }
}

/// Exact expected consumer income of visiting an expert with the given menu.
pub fn expected_consumer_income_exact(
    kind: MenuKind,
    mode: Mode,
    invested: bool,
    params: &MarketParams,
) -> Result<BigRational> {
    if invested && mode == Mode::Obfuscated {
        return Err(ModelError::ObfuscatedInvestment);
    }
    let markup = if invested { rat(params.d) } else { exact::zero() };
    let h = rat(params.h);
    let v = rat(params.v);
    let p_hi = rat(params.p_hi) + &markup;
    let p_lo = rat(params.p_lo(kind)) + &markup;
    let one = exact::one();
    Ok(match kind {
        MenuKind::Pm => v - p_hi,
        MenuKind::Ps => (&one - &h) * v - p_lo,
        MenuKind::Pe => {
            let k = if invested {
                rat(params.k_inv)
            } else {
                match mode {
                    Mode::TransparentHigh => rat(params.z),
                    Mode::TransparentLow => rat(params.q),
                    Mode::Obfuscated => {
                        let g = rat(params.gamma);
                        rat(params.q) * (&one - &g) + g * rat(params.z)
                    }
                }
            };
            let dp = &p_hi - &p_lo;
            let two = exact::int(2);
            (&one - &h + &h * &k) * v - p_hi + (&h + &k - two * &h * &k) * dp
        }
    })
}

/// Expected consumer income under self-interested treatment.
pub fn expected_consumer_income(
    kind: MenuKind,
    mode: Mode,
    invested: bool,
    params: &MarketParams,
) -> Result<f64> {
    expected_consumer_income_exact(kind, mode, invested, params).map(|r| exact::to_f64(&r))
}

/// Pe income for an arbitrary consumer-side precision `k`, no investment.
pub fn pe_income_with_precision(k: f64, params: &MarketParams) -> f64 {
    let h = params.h;
    let dp = params.delta_p();
    (1.0 - h + h * k) * params.v - params.p_hi + (h + k - 2.0 * h * k) * dp
}

/// Self-interested expert: follow the larger markup, honest when equal.
pub fn self_interested_treatment(pv: &PriceVector, signal: Problem, params: &MarketParams) -> Treatment {
    match markup_class(pv, params) {
        MarkupClass::HqtFavored => Treatment::Hqt,
        MarkupClass::LqtFavored => Treatment::Lqt,
        MarkupClass::Equal => honest_treatment(signal),
    }
}

pub fn honest_treatment(signal: Problem) -> Treatment {
    match signal {
        Problem::Big => Treatment::Hqt,
        Problem::Small => Treatment::Lqt,
    }
}

pub fn draw_diagnosis<R: Rng + ?Sized>(problem: Problem, precision: f64, rng: &mut R) -> Problem {
    if rng.random::<f64>() < precision {
        problem
    } else {
        problem.other()
    }
}

pub fn draw_problem<R: Rng + ?Sized>(h: f64, rng: &mut R) -> Problem {
    if rng.random::<f64>() < h {
        Problem::Big
    } else {
        Problem::Small
    }
}

pub fn solves(problem: Problem, treatment: Treatment) -> bool {
    treatment == Treatment::Hqt || problem == Problem::Small
}

pub fn outcome_class(problem: Problem, treatment: Treatment) -> OutcomeClass {
    match (problem, treatment) {
        (_, Treatment::Hqt) => OutcomeClass::B,
        (Problem::Big, Treatment::Lqt) => OutcomeClass::A,
        (Problem::Small, Treatment::Lqt) => OutcomeClass::C,
    }
}

/// Payoffs of one consultation under verifiability.
pub fn realize_round(
    problem: Problem,
    signal: Problem,
    treatment: Treatment,
    pv: &PriceVector,
    invested: bool,
    params: &MarketParams,
) -> RoundOutcome {
    let price = pv.price(treatment);
    let cost = match treatment {
        Treatment::Hqt => params.c_hi,
        Treatment::Lqt => params.c_lo,
    };
    let fee = if invested { params.d } else { 0.0 };
    let value = if solves(problem, treatment) { params.v } else { 0.0 };
    RoundOutcome {
        problem,
        signal,
        treatment,
        consumer_payoff: value - price,
        expert_profit: price - cost - fee,
        outcome_class: outcome_class(problem, treatment),
    }
}

/// Monte Carlo stage game: precision drawn from the consumer's information
/// set, then diagnosis and self-interested treatment. Returns (mean, stderr).
pub fn mc_consumer_income(
    kind: MenuKind,
    mode: Mode,
    invested: bool,
    params: &MarketParams,
    n: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if invested && mode == Mode::Obfuscated {
        return Err(ModelError::ObfuscatedInvestment);
    }
    if n < 2 {
        return Err(ModelError::InvalidParams("need at least two draws".into()));
    }
    let mut rng = crate::rng::substream(seed, 0);
    let pv = PriceVector::new(kind, invested, params);
    let (mut sum, mut sq) = (0.0, 0.0);
    for _ in 0..n {
        let k = if invested {
            params.k_inv
        } else {
            match mode {
                Mode::TransparentHigh => params.z,
                Mode::TransparentLow => params.q,
                Mode::Obfuscated if rng.random::<f64>() < params.gamma => params.z,
                Mode::Obfuscated => params.q,
            }
        };
        let problem = draw_problem(params.h, &mut rng);
        let signal = draw_diagnosis(problem, k, &mut rng);
        let t = self_interested_treatment(&pv, signal, params);
        let x = realize_round(problem, signal, t, &pv, invested, params).consumer_payoff;
        sum += x;
        sq += x * x;
    }
    let nf = n as f64;
    let mean = sum / nf;
    let var = (sq - nf * mean * mean) / (nf - 1.0);
    Ok((mean, (var.max(0.0) / nf).sqrt()))
}
