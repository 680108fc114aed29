//! Consumer-attraction payoff registry and the equilibrium analyses built on it.
//!
//! A cell gives the expected share of phase-2 consumer-rounds an expert
//! attracts, as a function of the share `alpha` of consumers who lock onto a
//! unique investing expert and of `t = r_i / R`, the fraction of the horizon a
//! Bayesian consumer needs to unmask an imitating low-ability expert.

mod analysis;
mod conditions;
mod conditions_data;
mod oneshot;
mod oracle;
mod registry;

pub use analysis::{
    best_response_grid_check, closed_form_check, condition_preference, level1_choice,
    level1_condition, level1_diff, pure_nash, region_grid, Analysis, FormKind, GridCheck, GridSpec,
    Level1Choice, NashProfile, RegionCell,
};
pub use conditions::{conditions, condition, Choice, ConditionSpec, Direction, Erratum, Group, RatFn, StateRef};
pub use oneshot::{
    oneshot_mixed_solver, oneshot_payoff_diff, oneshot_pooled_income, MixedSolution, OneShotMatrix,
    SolutionKind,
};
pub use oracle::{mc_attraction_oracle, mc_attraction_oracle_hetero, OracleEstimate};
pub use registry::{
    attraction_share, cell_value, inconsistent_cells, table_ids, touches_inconsistent, CellValue, TableId,
};

use serde::{Deserialize, Serialize};

use crate::error::{ModelError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    Ha,
    LaI,
    LaJ,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::Ha, Role::LaI, Role::LaJ];

    pub fn index(self) -> usize {
        match self {
            Role::Ha => 0,
            Role::LaI => 1,
            Role::LaJ => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Role::Ha => "HA",
            Role::LaI => "LA_i",
            Role::LaJ => "LA_j",
        }
    }
}

/// Phase-1 consumer counts; LA_i holds weakly more consumers than LA_j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Distribution {
    pub ha: u8,
    pub la_i: u8,
    pub la_j: u8,
}

impl Distribution {
    pub const fn new(ha: u8, la_i: u8, la_j: u8) -> Self {
        Self { ha, la_i, la_j }
    }

    /// All distributions covered by the payoff tables.
    pub const ALL: [Distribution; 6] = [
        Distribution::new(3, 0, 0),
        Distribution::new(2, 1, 0),
        Distribution::new(1, 2, 0),
        Distribution::new(1, 1, 1),
        Distribution::new(0, 3, 0),
        Distribution::new(0, 2, 1),
    ];

    /// Parse a three-digit code such as `"030"` (HA, LA_i, LA_j).
    pub fn parse(code: &str) -> Result<Self> {
        let d: Vec<u8> = code
            .chars()
            .map(|c| c.to_digit(10).map(|x| x as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| ModelError::InvalidRegion(format!("bad distribution code `{code}`")))?;
        if d.len() != 3 {
            return Err(ModelError::InvalidRegion(format!("bad distribution code `{code}`")));
        }
        let dist = Self::new(d[0], d[1], d[2]);
        dist.validate()?;
        Ok(dist)
    }

    pub fn validate(&self) -> Result<()> {
        if self.ha as u32 + self.la_i as u32 + self.la_j as u32 != 3 {
            return Err(ModelError::InvalidRegion(format!("counts of {} must sum to 3", self.code())));
        }
        Ok(())
    }

    pub fn code(&self) -> String {
        format!("{}{}{}", self.ha, self.la_i, self.la_j)
    }

    pub fn count(&self, role: Role) -> u8 {
        match role {
            Role::Ha => self.ha,
            Role::LaI => self.la_i,
            Role::LaJ => self.la_j,
        }
    }

    /// Both LAs hold the same number of consumers.
    pub fn symmetric_las(&self) -> bool {
        self.la_i == self.la_j
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InfoMode {
    FullInfo,
    NoOtherInfo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AttractionScenario {
    pub distribution: Distribution,
    pub info_mode: InfoMode,
}

impl AttractionScenario {
    pub fn full(distribution: Distribution) -> Self {
        Self { distribution, info_mode: InfoMode::FullInfo }
    }

    pub fn no_other_info(distribution: Distribution) -> Self {
        Self { distribution, info_mode: InfoMode::NoOtherInfo }
    }

    /// Full-information states the role cannot tell apart, as (distribution, role) pairs.
    pub fn hidden_states(&self, role: Role) -> Vec<(Distribution, Role)> {
        match self.info_mode {
            InfoMode::FullInfo => vec![(self.distribution, role)],
            InfoMode::NoOtherInfo => consistent_states(role, self.distribution.count(role)),
        }
    }
}

/// States where an expert of the same ability holds `own` consumers.
/// Symmetric LA pairs contribute one state.
pub fn consistent_states(role: Role, own: u8) -> Vec<(Distribution, Role)> {
    let mut out = Vec::new();
    for d in Distribution::ALL {
        match role {
            Role::Ha => {
                if d.ha == own {
                    out.push((d, Role::Ha));
                }
            }
            Role::LaI | Role::LaJ => {
                if d.la_i == own {
                    out.push((d, Role::LaI));
                }
                if d.la_j == own && !d.symmetric_las() {
                    out.push((d, Role::LaJ));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvestmentProfile {
    pub ha: bool,
    pub la_i: bool,
    pub la_j: bool,
}

impl InvestmentProfile {
    pub const fn new(ha: bool, la_i: bool, la_j: bool) -> Self {
        Self { ha, la_i, la_j }
    }

    pub fn all() -> [InvestmentProfile; 8] {
        let mut out = [Self::new(false, false, false); 8];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = Self::new(i & 4 == 0, i & 2 == 0, i & 1 == 0);
        }
        out
    }

    /// Parse `"INN"`-style strings in (HA, LA_i, LA_j) order.
    pub fn parse(s: &str) -> Result<Self> {
        let flags: Vec<bool> = s
            .chars()
            .map(|c| match c {
                'I' => Some(true),
                'N' => Some(false),
                _ => None,
            })
            .collect::<Option<_>>()
            .ok_or_else(|| ModelError::InvalidRegion(format!("bad profile `{s}`")))?;
        if flags.len() != 3 {
            return Err(ModelError::InvalidRegion(format!("bad profile `{s}`")));
        }
        Ok(Self::new(flags[0], flags[1], flags[2]))
    }

    pub fn label(&self) -> String {
        [self.ha, self.la_i, self.la_j].iter().map(|&b| if b { 'I' } else { 'N' }).collect()
    }

    pub fn get(&self, role: Role) -> bool {
        match role {
            Role::Ha => self.ha,
            Role::LaI => self.la_i,
            Role::LaJ => self.la_j,
        }
    }

    pub fn with(&self, role: Role, invest: bool) -> Self {
        let mut p = *self;
        match role {
            Role::Ha => p.ha = invest,
            Role::LaI => p.la_i = invest,
            Role::LaJ => p.la_j = invest,
        }
        p
    }

    pub fn investors(&self) -> usize {
        [self.ha, self.la_i, self.la_j].iter().filter(|&&b| b).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionParams {
    pub alpha: f64,
    pub t: f64,
    pub rounds: u32,
}

impl RegionParams {
    pub fn new(alpha: f64, t: f64) -> Self {
        Self { alpha, t, rounds: 15 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(ModelError::InvalidRegion(format!("alpha {} outside [0, 1]", self.alpha)));
        }
        if !(self.t > 0.0 && self.t <= 1.0) {
            return Err(ModelError::InvalidRegion(format!("t {} outside (0, 1]", self.t)));
        }
        Ok(())
    }

    /// Detection time r_i in rounds.
    pub fn r(&self) -> f64 {
        self.t * self.rounds as f64
    }
}
