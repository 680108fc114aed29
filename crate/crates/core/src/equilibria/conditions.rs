//! Closed-form alpha thresholds from the condition tables.
//!
//! Each condition states when a role weakly prefers `choice`: for `Ge` the
//! preference holds iff `alpha >= threshold(t)`, for `Le` iff
//! `alpha <= threshold(t)`. The printed form is kept as the registry form; the
//! form implied by the attraction tables is stored alongside and any
//! disagreement is tagged with an [`Erratum`].

use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use super::{Distribution, InvestmentProfile, Role};
use crate::error::{ModelError, Result};

/// Ratio of integer-coefficient polynomials in t (coefficients in increasing degree).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatFn {
    pub num: Vec<i64>,
    pub den: Vec<i64>,
}

impl RatFn {
    pub fn eval(&self, t: f64) -> f64 {
        let p = |c: &[i64]| c.iter().rev().fold(0.0, |acc, &k| acc * t + k as f64);
        p(&self.num) / p(&self.den)
    }
}

pub(super) fn rf(num: &[i64], den: &[i64]) -> RatFn {
    RatFn { num: num.to_vec(), den: den.to_vec() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Choice {
    Invest,
    NotInvest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Ge,
    Le,
}

/// Why a printed form differs from the table-implied threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Erratum {
    /// Printed form does not follow from the payoff cells.
    Transcription,
    /// Printed mean over hidden states uses another role's threshold.
    CopiedThreshold,
    /// Printed form averages thresholds; a uniform-belief best response averages payoffs.
    AveragingModel,
}

/// A full-information state entering a condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateRef {
    /// Unilateral deviation of `role` with the other experts fixed by `others`.
    Deviation { distribution: Distribution, role: Role, others: InvestmentProfile },
    /// Level-1 comparison: the two other experts randomize uniformly.
    Level1 { distribution: Distribution, role: Role },
}

impl StateRef {
    pub fn role(&self) -> Role {
        match self {
            StateRef::Deviation { role, .. } | StateRef::Level1 { role, .. } => *role,
        }
    }

    pub fn label(&self) -> String {
        match self {
            StateRef::Deviation { distribution, role, others } => {
                format!("{}:{}:{}", distribution.code(), role.label(), others.label())
            }
            StateRef::Level1 { distribution, role } => format!("{}:{}:level1", distribution.code(), role.label()),
        }
    }
}

impl Serialize for StateRef {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

pub(super) fn dev(code: &str, role: Role, others: &str) -> StateRef {
    StateRef::Deviation {
        distribution: Distribution::parse(code).expect("registry distribution"),
        role,
        others: InvestmentProfile::parse(others).expect("registry profile"),
    }
}

pub(super) fn lvl(code: &str, role: Role) -> StateRef {
    StateRef::Level1 { distribution: Distribution::parse(code).expect("registry distribution"), role }
}

/// Which condition table a threshold comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    /// Pure separation with consumer stocks held by one or two experts.
    Nash,
    /// Pure separation conditions across mixed consumer stocks.
    NashCross,
    /// One-LA-invests mixed configurations.
    Mixed,
    /// Level-1 thresholds under full information.
    Level1,
    /// Level-1 thresholds without information on other consumers.
    Level1NoOtherInfo,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionSpec {
    pub name: &'static str,
    /// Condition tables listing this condition.
    pub groups: Vec<Group>,
    pub choice: Choice,
    pub direction: Direction,
    /// States averaged with equal weights; a single state under full information.
    pub states: Vec<StateRef>,
    /// Threshold for t < 0.5.
    pub branch_lo: RatFn,
    /// Threshold for t >= 0.5.
    pub branch_hi: RatFn,
    /// False when the table gives only the t >= 0.5 branch; `branch_lo` then comes from the cells.
    pub lo_printed: bool,
    pub derived_lo: RatFn,
    pub derived_hi: RatFn,
    pub erratum: Option<Erratum>,
}

impl ConditionSpec {
    pub fn threshold(&self, t: f64) -> f64 {
        if t < 0.5 {
            self.branch_lo.eval(t)
        } else {
            self.branch_hi.eval(t)
        }
    }

    pub fn derived_threshold(&self, t: f64) -> f64 {
        if t < 0.5 {
            self.derived_lo.eval(t)
        } else {
            self.derived_hi.eval(t)
        }
    }

    /// Whether `alpha` satisfies the printed inequality at `t`.
    pub fn holds(&self, alpha: f64, t: f64) -> bool {
        let th = self.threshold(t);
        match self.direction {
            Direction::Ge => alpha >= th,
            Direction::Le => alpha <= th,
        }
    }
}

pub fn conditions() -> &'static [ConditionSpec] {
    static REG: OnceLock<Vec<ConditionSpec>> = OnceLock::new();
    REG.get_or_init(super::conditions_data::registry)
}

pub fn condition(name: &str) -> Result<&'static ConditionSpec> {
    conditions().iter().find(|c| c.name == name).ok_or_else(|| ModelError::UnknownCondition(name.to_string()))
}
