//! Best responses over the attraction registry: pure-Nash profiles, the
//! "one LA invests" profiles, level-1 choices, and the grid check of the
//! closed-form thresholds.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::conditions::{Choice, ConditionSpec, Direction, StateRef};
use super::registry::{attraction_share, cell_value};
use super::{conditions, AttractionScenario, InvestmentProfile, RegionParams, Role};
use crate::error::Result;
use crate::tolerances;

/// Invest-minus-not-invest attraction in one full-information state.
fn state_diff(state: &StateRef, alpha: f64, t: f64) -> Result<f64> {
    match *state {
        StateRef::Deviation { distribution, role, others } => {
            let inv = cell_value(distribution, role, &others.with(role, true), alpha, t)?.share;
            let ninv = cell_value(distribution, role, &others.with(role, false), alpha, t)?.share;
            Ok(inv - ninv)
        }
        StateRef::Level1 { distribution, role } => {
            let mut tot = 0.0;
            for p in others_profiles(role) {
                tot += cell_value(distribution, role, &p.with(role, true), alpha, t)?.share
                    - cell_value(distribution, role, &p.with(role, false), alpha, t)?.share;
            }
            Ok(tot / 4.0)
        }
    }
}

/// The four choice combinations of the two other experts; the role's own flag is unset.
fn others_profiles(role: Role) -> Vec<InvestmentProfile> {
    let mut out: Vec<InvestmentProfile> = Vec::with_capacity(4);
    for p in InvestmentProfile::all() {
        let q = p.with(role, false);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Mean invest-minus-not-invest payoff over the condition's states.
pub fn condition_preference(spec: &ConditionSpec, alpha: f64, t: f64) -> Result<f64> {
    let mut tot = 0.0;
    for s in &spec.states {
        tot += state_diff(s, alpha, t)?;
    }
    Ok(tot / spec.states.len() as f64)
}

/// Whether the printed inequality holds at `rp`.
pub fn closed_form_check(name: &str, rp: &RegionParams) -> Result<bool> {
    rp.validate()?;
    Ok(conditions::condition(name)?.holds(rp.alpha, rp.t))
}

/// Which closed form a grid check compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormKind {
    Printed,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridCheck {
    pub name: &'static str,
    pub form: FormKind,
    pub cells: usize,
    /// Cells where the best response and the closed form disagree.
    pub mismatches: usize,
    /// Disagreements farther than one alpha cell from the closed-form boundary.
    pub far_mismatches: usize,
    /// Largest |alpha - threshold(t)| among disagreeing cells.
    pub worst_distance: f64,
    /// A disagreeing (alpha, t) at the worst distance.
    pub worst_point: Option<(f64, f64)>,
}

impl GridCheck {
    pub fn pass(&self) -> bool {
        self.far_mismatches == 0
    }
}

/// Compare the grid best response with a closed form on a cell-centered grid.
pub fn best_response_grid_check(
    spec: &'static ConditionSpec,
    grid: GridSpec,
    form: FormKind,
) -> Result<GridCheck> {
    let cell_w = 1.0 / grid.n_alpha.max(1) as f64;
    let pts = grid.points();
    let res: Vec<Option<(f64, f64, f64)>> = pts
        .par_iter()
        .map(|&(alpha, t)| -> Result<Option<(f64, f64, f64)>> {
            let diff = condition_preference(spec, alpha, t)?;
            let br = match spec.choice {
                Choice::Invest => diff >= -tolerances::TIE,
                Choice::NotInvest => diff <= tolerances::TIE,
            };
            let th = match form {
                FormKind::Printed => spec.threshold(t),
                FormKind::Derived => spec.derived_threshold(t),
            };
            let cf = match spec.direction {
                Direction::Ge => alpha >= th,
                Direction::Le => alpha <= th,
            };
            Ok((br != cf).then_some((alpha, t, (alpha - th).abs())))
        })
        .collect::<Result<_>>()?;
    let bad: Vec<(f64, f64, f64)> = res.into_iter().flatten().collect();
    let far = bad.iter().filter(|b| b.2 > cell_w + tolerances::EXACT).count();
    let worst = bad.iter().copied().max_by(|a, b| a.2.total_cmp(&b.2));
    Ok(GridCheck {
        name: spec.name,
        form,
        cells: pts.len(),
        mismatches: bad.len(),
        far_mismatches: far,
        worst_distance: worst.map_or(0.0, |w| w.2),
        worst_point: worst.map(|w| (w.0, w.1)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NashProfile {
    pub profile: InvestmentProfile,
    /// Some role is exactly indifferent to deviating.
    pub by_indifference: bool,
}

/// Pure profiles where no role gains by a unilateral switch; ties count.
pub fn pure_nash(scenario: &AttractionScenario, rp: &RegionParams) -> Result<Vec<NashProfile>> {
    rp.validate()?;
    let mut out = Vec::new();
    for p in InvestmentProfile::all() {
        let mut stable = true;
        let mut tie = false;
        for role in Role::ALL {
            let here = attraction_share(scenario, role, &p, rp)?.share;
            let there = attraction_share(scenario, role, &p.with(role, !p.get(role)), rp)?.share;
            let gain = there - here;
            if gain > tolerances::TIE {
                stable = false;
                break;
            }
            tie |= gain.abs() <= tolerances::TIE;
        }
        if stable {
            out.push(NashProfile { profile: p, by_indifference: tie });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Level1Choice {
    Invest,
    NotInvest,
    Indifferent,
}

/// Expected invest-minus-not-invest attraction when the other two experts randomize 50/50.
pub fn level1_diff(scenario: &AttractionScenario, role: Role, rp: &RegionParams) -> Result<f64> {
    rp.validate()?;
    let mut tot = 0.0;
    for p in others_profiles(role) {
        tot += attraction_share(scenario, role, &p.with(role, true), rp)?.share
            - attraction_share(scenario, role, &p.with(role, false), rp)?.share;
    }
    Ok(tot / 4.0)
}

pub fn level1_choice(scenario: &AttractionScenario, role: Role, rp: &RegionParams) -> Result<Level1Choice> {
    let d = level1_diff(scenario, role, rp)?;
    Ok(if d > tolerances::TIE {
        Level1Choice::Invest
    } else if d < -tolerances::TIE {
        Level1Choice::NotInvest
    } else {
        Level1Choice::Indifferent
    })
}

/// The level-1 threshold condition covering this role's information set, if tabulated.
pub fn level1_condition(scenario: &AttractionScenario, role: Role) -> Option<&'static ConditionSpec> {
    let mut want: Vec<String> = scenario
        .hidden_states(role)
        .into_iter()
        .map(|(d, r)| {
            let r = if d.symmetric_las() && r == Role::LaJ { Role::LaI } else { r };
            StateRef::Level1 { distribution: d, role: r }.label()
        })
        .collect();
    want.sort();
    conditions::conditions().iter().find(|c| {
        let mut have: Vec<String> = c.states.iter().map(|s| s.label()).collect();
        have.sort();
        have == want
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Analysis {
    Nash,
    Mixed,
    Level1,
}

impl Analysis {
    pub fn label(self) -> &'static str {
        match self {
            Analysis::Nash => "nash",
            Analysis::Mixed => "mixed",
            Analysis::Level1 => "level1",
        }
    }
}

/// Cell-centered (alpha, t) grid: alpha = (i + 0.5)/n_alpha, t = (j + 0.5)/n_t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub n_alpha: usize,
    pub n_t: usize,
}

impl GridSpec {
    pub fn new(n_alpha: usize, n_t: usize) -> Self {
        Self { n_alpha, n_t }
    }

    /// Points in alpha-major order.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.n_alpha * self.n_t);
        for i in 0..self.n_alpha {
            for j in 0..self.n_t {
                out.push(((i as f64 + 0.5) / self.n_alpha as f64, (j as f64 + 0.5) / self.n_t as f64));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionCell {
    pub alpha: f64,
    pub t: f64,
    /// Nash and Mixed: profiles joined by `|`, or `none`. Level1: one of I, N, ? per role.
    pub label: String,
    pub analysis: Analysis,
    pub indifference: bool,
}

fn join_profiles(ps: &[NashProfile]) -> String {
    if ps.is_empty() {
        "none".to_string()
    } else {
        ps.iter().map(|p| p.profile.label()).collect::<Vec<_>>().join("|")
    }
}

fn classify(scenario: &AttractionScenario, analysis: Analysis, rp: &RegionParams) -> Result<(String, bool)> {
    match analysis {
        Analysis::Nash | Analysis::Mixed => {
            let mut ps = pure_nash(scenario, rp)?;
            if analysis == Analysis::Mixed {
                ps.retain(|p| !p.profile.ha && p.profile.la_i != p.profile.la_j);
            }
            Ok((join_profiles(&ps), ps.iter().any(|p| p.by_indifference)))
        }
        Analysis::Level1 => {
            let mut label = String::with_capacity(3);
            let mut tie = false;
            for role in Role::ALL {
                label.push(match level1_choice(scenario, role, rp)? {
                    Level1Choice::Invest => 'I',
                    Level1Choice::NotInvest => 'N',
                    Level1Choice::Indifferent => {
                        tie = true;
                        '?'
                    }
                });
            }
            Ok((label, tie))
        }
    }
}

/// Classify every grid cell; evaluated in parallel, returned in alpha-major order.
pub fn region_grid(scenario: &AttractionScenario, analysis: Analysis, grid: GridSpec) -> Result<Vec<RegionCell>> {
    scenario.distribution.validate()?;
    grid.points()
        .par_iter()
        .map(|&(alpha, t)| {
            let (label, indifference) = classify(scenario, analysis, &RegionParams::new(alpha, t))?;
            Ok(RegionCell { alpha, t, label, analysis, indifference })
        })
        .collect()
}
