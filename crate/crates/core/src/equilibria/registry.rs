//! The consumer-attraction payoff tables as data.
//!
//! Every cell is linear in `alpha` over the atoms `1`, `A = (R-r)/R`,
//! `B = (R-2r)/R` and `T = r/R`. Branch rule at `t = 0.5`: `B` is clamped to
//! `max(0, 1-2t)` (flagged when the raw value is negative) and, for a
//! non-investing low-ability expert, `A` becomes `min(t, 1-t)`.
//!
//! Keys: high-ability tables are indexed by (own, LA_i, LA_j) choices;
//! low-ability tables by (own, other LA, HA).

use std::collections::BTreeMap;
use std::ops::Add;
use std::sync::OnceLock;

use super::{AttractionScenario, Distribution, InvestmentProfile, RegionParams, Role};
use crate::error::{ModelError, Result};

const ONE: usize = 0;
const AT: usize = 1;
const BT: usize = 2;
const TT: usize = 3;

/// Linear form `sum_atom (c0 + c1 alpha) * atom`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Cell {
    c: [[f64; 2]; 4],
}

impl Cell {
    const ZERO: Cell = Cell { c: [[0.0; 2]; 4] };

    fn atom(i: usize, x: f64) -> Cell {
        let mut c = Self::ZERO;
        c.c[i][0] = x;
        c
    }

    /// Multiply an alpha-free cell by (1 - alpha).
    fn na(self) -> Cell {
        let mut out = self;
        for row in out.c.iter_mut() {
            debug_assert_eq!(row[1], 0.0);
            row[1] = -row[0];
        }
        out
    }

    fn uses_b(&self) -> bool {
        self.c[BT] != [0.0, 0.0]
    }

    fn eval(&self, alpha: f64, atoms: [f64; 4]) -> f64 {
        self.c.iter().zip(atoms.iter()).map(|(k, x)| (k[0] + k[1] * alpha) * x).sum()
    }
}

impl Add for Cell {
    type Output = Cell;
    fn add(self, o: Cell) -> Cell {
        let mut out = self;
        for i in 0..4 {
            out.c[i][0] += o.c[i][0];
            out.c[i][1] += o.c[i][1];
        }
        out
    }
}

fn k(x: f64) -> Cell {
    Cell::atom(ONE, x)
}
fn ka(x: f64) -> Cell {
    Cell::atom(AT, x)
}
fn kb(x: f64) -> Cell {
    Cell::atom(BT, x)
}
fn kt(x: f64) -> Cell {
    Cell::atom(TT, x)
}
fn al() -> Cell {
    let mut c = Cell::ZERO;
    c.c[ONE][1] = 1.0;
    c
}

const H: f64 = 0.5;
const T1: f64 = 1.0 / 3.0;
const T2: f64 = 2.0 / 3.0;
const S1: f64 = 1.0 / 6.0;
const S5: f64 = 5.0 / 6.0;

/// Which payoff table a (distribution, role) pair comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableId {
    pub distribution: Distribution,
    pub role: Role,
    pub caption: &'static str,
}

pub(crate) struct Table {
    pub caption: &'static str,
    /// Own = NotInvest, then own = Invest; each in (I,I), (I,N), (N,I), (N,N) order.
    pub not_invest: [Cell; 4],
    pub invest: [Cell; 4],
}

fn table(caption: &'static str, not_invest: [Cell; 4], invest: [Cell; 4]) -> Table {
    Table { caption, not_invest, invest }
}

fn build() -> BTreeMap<(Distribution, Role), Table> {
    let mut m = BTreeMap::new();
    let d = Distribution::new;

    let ha300 = || {
        table(
            "x_ha=3: high-ability expert",
            [k(1.0), k(1.0).na(), k(1.0).na(), k(1.0)],
            [k(1.0), ka(H), ka(H), al() + kb(1.0).na()],
        )
    };
    let la300 = || {
        table(
            "x_ha=3: low-ability expert",
            [kt(1.0), k(0.0), (kt(H) + ka(H)).na(), k(0.0)],
            [k(0.0), k(0.0), ka(H), al()],
        )
    };
    m.insert((d(3, 0, 0), Role::Ha), ha300());
    m.insert((d(3, 0, 0), Role::LaI), la300());
    m.insert((d(3, 0, 0), Role::LaJ), la300());

    m.insert(
        (d(0, 3, 0), Role::Ha),
        table(
            "x_la=3: high-ability expert",
            [k(1.0), (k(H) + ka(H)).na(), ka(1.0).na(), ka(H) + kb(H)],
            [k(0.0), ka(H), ka(H), al() + kb(1.0).na()],
        ),
    );
    m.insert(
        (d(0, 3, 0), Role::LaI),
        table(
            "x_la=3: low-ability expert with three consumers",
            [kt(1.0), kt(1.0).na(), kt(1.0).na(), kt(1.0)],
            [k(1.0), k(0.0), al() + ka(H).na(), al()],
        ),
    );
    m.insert(
        (d(0, 3, 0), Role::LaJ),
        table(
            "x_la=3: low-ability expert without consumers",
            [kt(1.0), kt(H).na(), ka(1.0).na(), ka(H)],
            [k(0.0), k(0.0), ka(H), al()],
        ),
    );

    m.insert(
        (d(2, 1, 0), Role::Ha),
        table(
            "x_ha=2: high-ability expert",
            [k(1.0), (k(T2) + ka(T1)).na(), (k(T2) + ka(T1)).na(), k(T2) + ka(T1)],
            [k(T2), ka(H), ka(H), al() + kb(1.0).na()],
        ),
    );
    m.insert(
        (d(2, 1, 0), Role::LaI),
        table(
            "x_ha=2: low-ability expert with one consumer",
            [kt(1.0), kt(T1).na(), (kt(T2) + ka(T1)).na(), kt(T1)],
            [k(T1), k(0.0), ka(H), al()],
        ),
    );
    m.insert(
        (d(2, 1, 0), Role::LaJ),
        table(
            "x_ha=2: low-ability expert without consumers",
            [kt(1.0), kt(S1).na(), (kt(T1) + ka(T2)).na(), ka(S1)],
            [k(0.0), k(0.0), ka(H), al()],
        ),
    );

    m.insert(
        (d(1, 2, 0), Role::Ha),
        table(
            "x_ha=1, x_la=2: high-ability expert",
            [k(1.0), (k(T2) + ka(T1)).na(), (k(T1) + ka(T2)).na(), k(T1) + ka(T1) + kb(T1)],
            [k(T1), ka(H), ka(H), al()],
        ),
    );
    m.insert(
        (d(1, 2, 0), Role::LaI),
        table(
            "x_ha=1, x_la=2: low-ability expert with two consumers",
            [kt(1.0), kt(T2).na(), (kt(S5) + ka(S1)).na(), kt(T2)],
            [k(T2), k(0.0), ka(H), al()],
        ),
    );
    m.insert(
        (d(1, 2, 0), Role::LaJ),
        table(
            "x_ha=1, x_la=2: low-ability expert without consumers",
            [kt(1.0), kt(T1).na(), (kt(S1) + ka(S5)).na(), kt(T1)],
            [k(0.0), k(0.0), ka(H), al()],
        ),
    );

    m.insert(
        (d(0, 2, 1), Role::Ha),
        table(
            "x_ha=0, x_la=(2,1): high-ability expert",
            [k(1.0), (k(T1) + ka(T2)).na(), (k(S1) + ka(S5)).na(), ka(H) + kb(H)],
            [k(0.0), ka(H), ka(H), al() + kb(1.0).na()],
        ),
    );
    m.insert(
        (d(0, 2, 1), Role::LaI),
        table(
            "x_ha=0, x_la=(2,1): low-ability expert with two consumers",
            [kt(1.0), kt(S5).na(), (kt(T2) + ka(T1)).na(), kt(T2) + ka(S1)],
            [k(T2), k(0.0), ka(H), al()],
        ),
    );
    m.insert(
        (d(0, 2, 1), Role::LaJ),
        table(
            "x_ha=0, x_la=(2,1): low-ability expert with one consumer",
            [kt(1.0), (kt(T1) + ka(T1)).na(), (kt(T1) + ka(T2)).na(), kt(T1) + ka(T1)],
            [k(T1), k(0.0), ka(H), al()],
        ),
    );

    m.insert(
        (d(1, 1, 1), Role::Ha),
        table(
            "equal distribution: high-ability expert",
            [k(1.0), (k(T1) + ka(T2)).na(), (k(T1) + ka(T2)).na(), k(T1) + ka(T1) + kb(T1)],
            [k(T1), ka(H), ka(H), al()],
        ),
    );
    let la111 = || {
        table(
            "equal distribution: low-ability expert",
            [kt(1.0), kt(H).na(), (kt(H) + ka(H)).na(), kt(T1) + ka(S1)],
            [k(T1), k(0.0), ka(H), al()],
        )
    };
    m.insert((d(1, 1, 1), Role::LaI), la111());
    m.insert((d(1, 1, 1), Role::LaJ), la111());
    m
}

pub(crate) fn tables() -> &'static BTreeMap<(Distribution, Role), Table> {
    static REG: OnceLock<BTreeMap<(Distribution, Role), Table>> = OnceLock::new();
    REG.get_or_init(build)
}

/// Table key for a role: HA uses (own, LA_i, LA_j), an LA uses (own, other LA, HA).
fn key(role: Role, p: &InvestmentProfile) -> (bool, bool, bool) {
    match role {
        Role::Ha => (p.ha, p.la_i, p.la_j),
        Role::LaI => (p.la_i, p.la_j, p.ha),
        Role::LaJ => (p.la_j, p.la_i, p.ha),
    }
}

fn column(x: bool, y: bool) -> usize {
    match (x, y) {
        (true, true) => 0,
        (true, false) => 1,
        (false, true) => 2,
        (false, false) => 3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellValue {
    pub share: f64,
    /// The raw (R - 2r)/R term was negative and clamped to 0.
    pub clamped: bool,
}

pub(crate) fn lookup(dist: Distribution, role: Role, p: &InvestmentProfile) -> Result<(&'static Table, Cell)> {
    let tab = tables().get(&(dist, role)).ok_or_else(|| {
        ModelError::UnmodeledCell(format!("no table for distribution {} and role {}", dist.code(), role.label()))
    })?;
    let (own, x, y) = key(role, p);
    let cells = if own { &tab.invest } else { &tab.not_invest };
    Ok((tab, cells[column(x, y)]))
}

/// Full-information cell value with the branch rule applied.
pub fn cell_value(dist: Distribution, role: Role, p: &InvestmentProfile, alpha: f64, t: f64) -> Result<CellValue> {
    let (_, cell) = lookup(dist, role, p)?;
    let own = p.get(role);
    let b_raw = 1.0 - 2.0 * t;
    let a = if role != Role::Ha && !own { t.min(1.0 - t) } else { 1.0 - t };
    let atoms = [1.0, a, b_raw.max(0.0), t];
    Ok(CellValue { share: cell.eval(alpha, atoms), clamped: b_raw < 0.0 && cell.uses_b() })
}

/// Expected consumer-round share for `role`; NoOtherInfo averages over
/// indistinguishable states with uniform weights.
pub fn attraction_share(
    scenario: &AttractionScenario,
    role: Role,
    profile: &InvestmentProfile,
    rp: &RegionParams,
) -> Result<CellValue> {
    rp.validate()?;
    scenario.distribution.validate()?;
    let states = scenario.hidden_states(role);
    let mut share = 0.0;
    let mut clamped = false;
    for (dist, r) in &states {
        let p = relabel(role, *r, profile);
        let v = cell_value(*dist, *r, &p, rp.alpha, rp.t)?;
        share += v.share;
        clamped |= v.clamped;
    }
    Ok(CellValue { share: share / states.len() as f64, clamped })
}

/// Carry a profile to a state where the evaluated LA sits in the other slot.
pub(crate) fn relabel(from: Role, to: Role, p: &InvestmentProfile) -> InvestmentProfile {
    if from == to || from == Role::Ha || to == Role::Ha {
        *p
    } else {
        InvestmentProfile::new(p.ha, p.la_j, p.la_i)
    }
}

pub fn table_ids() -> Vec<TableId> {
    tables().iter().map(|((d, r), t)| TableId { distribution: *d, role: *r, caption: t.caption }).collect()
}

/// Full-information cells whose printed expression disagrees with the
/// switching process, as (distribution, role, profile).
pub fn inconsistent_cells() -> Vec<(Distribution, Role, InvestmentProfile)> {
    const CELLS: [(u8, u8, u8, Role, &str); 9] = [
        (0, 3, 0, Role::LaI, "IIN"),
        (2, 1, 0, Role::Ha, "NIN"),
        (2, 1, 0, Role::Ha, "NNN"),
        (1, 2, 0, Role::Ha, "INN"),
        (1, 2, 0, Role::LaJ, "NNN"),
        (0, 2, 1, Role::LaJ, "NIN"),
        (1, 1, 1, Role::Ha, "INN"),
        (1, 1, 1, Role::Ha, "NIN"),
        (1, 1, 1, Role::Ha, "NNI"),
    ];
    CELLS
        .iter()
        .map(|&(h, i, j, r, p)| (Distribution::new(h, i, j), r, InvestmentProfile::parse(p).expect("profile literal")))
        .collect()
}

/// Whether any full-information state behind a query is an inconsistent cell.
pub fn touches_inconsistent(scenario: &AttractionScenario, role: Role, profile: &InvestmentProfile) -> bool {
    let bad = inconsistent_cells();
    scenario.hidden_states(role).into_iter().any(|(d, r)| {
        let p = relabel(role, r, profile);
        bad.iter().any(|(bd, br, bp)| *bd == d && *br == r && *bp == p)
    })
}
