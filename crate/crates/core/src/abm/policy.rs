//! Scripted expert and consumer policies.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{ModelError, Result};
use crate::market::{honest_treatment, self_interested_treatment, MenuKind, PriceVector, Problem, Treatment};
use crate::MarketParams;

/// Expert behavior: investment, menu, treatment and decision-aid use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExpertPolicy {
    /// Pe menu, honest, never invests.
    HonestEqualMarkup,
    /// Fixed menu, follows the larger markup, never invests.
    SelfInterested { menu: MenuKind },
    /// Pm menu, always HQT.
    PmAlwaysHqt,
    /// Ps menu, always LQT.
    PsUndertreater,
    /// High-ability signaling: never invests, Pe, honest.
    HaSignaler,
    /// Imitates the signaler for `r_switch` phase-2 rounds, then invests.
    LaImitator { r_switch: u32 },
    /// Invests with probability `p` in each phase-2 round; Pe, honest.
    #[serde(rename = "oneshot_randomizer")]
    OneShotRandomizer { p: f64 },
    /// Invests in every phase-2 round; Pe, honest.
    AlwaysInvest {
        #[serde(default = "default_true")]
        use_aid: bool,
    },
    /// Pe, honest, never invests.
    NeverInvest,
}

fn default_true() -> bool {
    true
}

/// What an expert knows when deciding.
#[derive(Debug, Clone, Copy)]
pub struct ExpertCtx {
    /// Zero-based phase-2 round, `None` in phase 1.
    pub phase2_round: Option<u32>,
}

impl ExpertPolicy {
    pub fn invest<R: Rng + ?Sized>(&self, ctx: &ExpertCtx, rng: &mut R) -> bool {
        let Some(r) = ctx.phase2_round else { return false };
        match *self {
            ExpertPolicy::LaImitator { r_switch } => r >= r_switch,
            ExpertPolicy::OneShotRandomizer { p } => rng.random::<f64>() < p,
            ExpertPolicy::AlwaysInvest { .. } => true,
            _ => false,
        }
    }

    pub fn menu(&self) -> MenuKind {
        match *self {
            ExpertPolicy::SelfInterested { menu } => menu,
            ExpertPolicy::PmAlwaysHqt => MenuKind::Pm,
            ExpertPolicy::PsUndertreater => MenuKind::Ps,
            _ => MenuKind::Pe,
        }
    }

    pub fn treat(&self, pv: &PriceVector, signal: Problem, params: &MarketParams) -> Treatment {
        match *self {
            ExpertPolicy::SelfInterested { .. } => self_interested_treatment(pv, signal, params),
            ExpertPolicy::PmAlwaysHqt => Treatment::Hqt,
            ExpertPolicy::PsUndertreater => Treatment::Lqt,
            _ => honest_treatment(signal),
        }
    }

    /// Whether an investing expert consults the aid (Algorithm mode).
    pub fn use_aid(&self) -> bool {
        match *self {
            ExpertPolicy::AlwaysInvest { use_aid } => use_aid,
            _ => true,
        }
    }

    /// Parse `name` or `name:param`, e.g. `la_imitator:5`, `self_interested:pm`.
    pub fn from_id(id: &str) -> Result<Self> {
        let (name, arg) = split_id(id);
        let need = || arg.ok_or_else(|| ModelError::Config(format!("policy `{name}` needs a parameter")));
        Ok(match name {
            "honest_equal_markup" => Self::HonestEqualMarkup,
            "self_interested" => Self::SelfInterested { menu: parse_menu(need()?)? },
            "pm_always_hqt" => Self::PmAlwaysHqt,
            "ps_undertreater" => Self::PsUndertreater,
            "ha_signaler" => Self::HaSignaler,
            "la_imitator" => Self::LaImitator { r_switch: parse_num(name, need()?)? },
            "oneshot_randomizer" => Self::OneShotRandomizer { p: parse_prob(name, need()?)? },
            "always_invest" => Self::AlwaysInvest { use_aid: arg.map_or(Ok(true), |a| parse_num(name, a))? },
            "never_invest" => Self::NeverInvest,
            _ => return Err(ModelError::Config(format!("unknown expert policy `{id}`"))),
        })
    }
}

/// Consumer behavior. Every consumer keeps a belief per expert.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConsumerPolicy {
    /// Stays with the current expert until Pr(L) reaches `threshold`, then switches.
    BayesianSwitcher { threshold: f64 },
    /// Alpha type: visits a unique investor, otherwise greedy.
    SafeSeeker,
    /// Myopic argmax of expected income.
    Greedy,
    /// Always takes the outside option.
    OutsideOptionSitter,
}

impl ConsumerPolicy {
    pub fn from_id(id: &str) -> Result<Self> {
        let (name, arg) = split_id(id);
        Ok(match name {
            "bayesian_switcher" => {
                Self::BayesianSwitcher { threshold: arg.map_or(Ok(0.9), |a| parse_prob(name, a))? }
            }
            "safe_seeker" => Self::SafeSeeker,
            "greedy" => Self::Greedy,
            "outside_option_sitter" => Self::OutsideOptionSitter,
            _ => return Err(ModelError::Config(format!("unknown consumer policy `{id}`"))),
        })
    }
}

fn split_id(id: &str) -> (&str, Option<&str>) {
    match id.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (id, None),
    }
}

fn parse_menu(s: &str) -> Result<MenuKind> {
    match s.to_ascii_lowercase().as_str() {
        "pm" => Ok(MenuKind::Pm),
        "pe" => Ok(MenuKind::Pe),
        "ps" => Ok(MenuKind::Ps),
        _ => Err(ModelError::Config(format!("unknown menu `{s}`"))),
    }
}

fn parse_num<T: std::str::FromStr>(name: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| ModelError::Config(format!("bad parameter `{s}` for policy `{name}`")))
}

fn parse_prob(name: &str, s: &str) -> Result<f64> {
    let p: f64 = parse_num(name, s)?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(ModelError::Config(format!("parameter {p} for policy `{name}` outside [0, 1]")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PolicyCatalog {
    pub experts: Vec<(&'static str, ExpertPolicy)>,
    pub consumers: Vec<(&'static str, ConsumerPolicy)>,
}

/// Built-in policies with their default parameters.
pub fn builtin_policies() -> PolicyCatalog {
    PolicyCatalog {
        experts: vec![
            ("honest_equal_markup", ExpertPolicy::HonestEqualMarkup),
            ("self_interested", ExpertPolicy::SelfInterested { menu: MenuKind::Pm }),
            ("pm_always_hqt", ExpertPolicy::PmAlwaysHqt),
            ("ps_undertreater", ExpertPolicy::PsUndertreater),
            ("ha_signaler", ExpertPolicy::HaSignaler),
            ("la_imitator", ExpertPolicy::LaImitator { r_switch: 5 }),
            ("oneshot_randomizer", ExpertPolicy::OneShotRandomizer { p: 0.5 }),
            ("always_invest", ExpertPolicy::AlwaysInvest { use_aid: true }),
            ("never_invest", ExpertPolicy::NeverInvest),
        ],
        consumers: vec![
            ("bayesian_switcher", ConsumerPolicy::BayesianSwitcher { threshold: 0.9 }),
            ("safe_seeker", ConsumerPolicy::SafeSeeker),
            ("greedy", ConsumerPolicy::Greedy),
            ("outside_option_sitter", ConsumerPolicy::OutsideOptionSitter),
        ],
    }
}
