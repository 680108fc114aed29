//! Attraction registry, condition thresholds, Nash and level-1 analysis, the
//! one-shot game and the Monte Carlo switching oracle.

use std::collections::BTreeSet;

use approx::assert_abs_diff_eq;
use credence_core::equilibria::*;
use credence_core::exact::{frac, int};
use credence_core::thresholds::bisect;
use credence_core::tolerances::{EXACT, MC_SIGMAS, ROOT_MATCH};
use credence_core::{MarketParams, ModelError};
use num_rational::BigRational;
use rand::Rng;

const ORACLE_SIMS: usize = 10_000;
/// Cell-by-cell sweep over many deterministic estimates: Bonferroni-style width.
const SWEEP_SIGMAS: f64 = 5.0;

/// Cells whose printed expressions contradict the switching narrative:
/// (distribution, role, profile as HA/LA_i/LA_j).
const INCONSISTENT: [(&str, Role, &str); 9] = [
    ("030", Role::LaI, "IIN"),
    ("210", Role::Ha, "NIN"),
    ("210", Role::Ha, "NNN"),
    ("120", Role::Ha, "INN"),
    ("120", Role::LaJ, "NNN"),
    ("021", Role::LaJ, "NIN"),
    ("111", Role::Ha, "INN"),
    ("111", Role::Ha, "NIN"),
    ("111", Role::Ha, "NNI"),
];

/// Printed closed forms that miss the grid best response by more than one cell.
const PRINTED_GRID_FAILURES: [&str; 18] = [
    "alpha_la_02_ninv",
    "alpha_ha_0_inv_la21",
    "alpha_la0_ha0la3_inv",
    "alpha_la1_ha1la1_inv",
    "alpha_ha0_ninv_mixed",
    "alpha_la2_inv_mixed",
    "alpha_la1_inv_mixed",
    "alpha_la0_inv_mixed",
    "alpha_ha1_inv_mixed",
    "alpha_la1_ha1_inv",
    "alpha_la0_la3_inv",
    "alpha_ha0_la2la1_ninv",
    "alpha_la1_ha0la2_inv",
    "alpha_la2_ha0la1_inv",
    "alpha_la0_inv_noinf",
    "alpha_la1_inv_noinf",
    "alpha_la2_inv_noinf",
    "alpha_ha0_ninv_noinf",
];

fn d(code: &str) -> Distribution {
    Distribution::parse(code).unwrap()
}
fn prof(s: &str) -> InvestmentProfile {
    InvestmentProfile::parse(s).unwrap()
}
fn rp(alpha: f64, t: f64) -> RegionParams {
    RegionParams::new(alpha, t)
}
fn share(code: &str, role: Role, p: &str, alpha: f64, t: f64) -> f64 {
    attraction_share(&AttractionScenario::full(d(code)), role, &prof(p), &rp(alpha, t)).unwrap().share
}

fn is_inconsistent(dist: Distribution, role: Role, p: &InvestmentProfile) -> bool {
    INCONSISTENT.iter().any(|(c, r, q)| d(c) == dist && *r == role && prof(q) == *p)
}

#[test]
fn inconsistent_cell_list_is_exported() {
    let core: BTreeSet<String> =
        inconsistent_cells().iter().map(|(d, r, p)| format!("{}:{}:{}", d.code(), r.label(), p.label())).collect();
    let here: BTreeSet<String> = INCONSISTENT.iter().map(|(c, r, p)| format!("{c}:{}:{p}", r.label())).collect();
    assert_eq!(core, here);
    let sc = AttractionScenario::no_other_info(d("210"));
    assert!(touches_inconsistent(&sc, Role::Ha, &prof("NNN")));
    assert!(!touches_inconsistent(&AttractionScenario::full(d("300")), Role::Ha, &prof("NNN")));
}

#[test]
fn quoted_cells() {
    assert_abs_diff_eq!(share("300", Role::Ha, "NIN", 0.3, 0.4), 0.7, epsilon = EXACT);
    assert_abs_diff_eq!(share("300", Role::Ha, "INN", 0.4, 0.2), 0.76, epsilon = EXACT);
    assert_abs_diff_eq!(share("300", Role::LaJ, "IIN", 0.5, 0.4), 0.4, epsilon = EXACT);
}

#[test]
fn registry_covers_every_tabulated_cell() {
    let ids = table_ids();
    assert_eq!(ids.len(), Distribution::ALL.len() * Role::ALL.len());
    let keys: BTreeSet<(String, usize)> = ids.iter().map(|i| (i.distribution.code(), i.role.index())).collect();
    assert_eq!(keys.len(), ids.len());
    for dist in Distribution::ALL {
        for sc in [AttractionScenario::full(dist), AttractionScenario::no_other_info(dist)] {
            for role in Role::ALL {
                for p in InvestmentProfile::all() {
                    for (a, t) in [(0.0, 0.1), (0.3, 0.4), (0.8, 0.7), (1.0, 1.0)] {
                        let v = attraction_share(&sc, role, &p, &rp(a, t)).unwrap();
                        assert!((0.0..=1.0 + EXACT).contains(&v.share), "{} {:?} {}", dist.code(), role, p.label());
                    }
                }
            }
        }
    }
}

#[test]
fn untabulated_distribution_is_an_error() {
    let sc = AttractionScenario::full(d("012"));
    let e = attraction_share(&sc, Role::Ha, &prof("NNN"), &rp(0.5, 0.5)).unwrap_err();
    assert!(matches!(e, ModelError::UnmodeledCell(_)));
    assert!(Distribution::parse("211").is_err());
}

#[test]
fn invalid_region_params_are_rejected() {
    let sc = AttractionScenario::full(d("300"));
    for (a, t) in [(-0.1, 0.5), (1.1, 0.5), (0.5, 0.0), (0.5, 1.5)] {
        assert!(attraction_share(&sc, Role::Ha, &prof("NNN"), &rp(a, t)).is_err());
    }
}

#[test]
fn symmetric_las_have_identical_cells() {
    for code in ["300", "111"] {
        for p in InvestmentProfile::all() {
            let swapped = InvestmentProfile::new(p.ha, p.la_j, p.la_i);
            for (a, t) in [(0.2, 0.3), (0.6, 0.8)] {
                assert_abs_diff_eq!(
                    share(code, Role::LaI, &p.label(), a, t),
                    share(code, Role::LaJ, &swapped.label(), a, t),
                    epsilon = EXACT
                );
            }
        }
    }
}

/// All-invest and all-not-invest shares sum to at most one consumer-round,
/// except where a summand is one of the inconsistent cells.
#[test]
fn symmetric_profiles_do_not_overcount() {
    let mut over = BTreeSet::new();
    for dist in Distribution::ALL {
        for p in [prof("III"), prof("NNN")] {
            for i in 1..20 {
                for j in 1..=20 {
                    let (a, t) = (i as f64 / 20.0, j as f64 / 20.0);
                    let sum: f64 = Role::ALL.iter().map(|&r| cell_value(dist, r, &p, a, t).unwrap().share).sum();
                    if sum > 1.0 + EXACT {
                        over.insert((dist.code(), p.label()));
                        assert!(Role::ALL.iter().any(|&r| is_inconsistent(dist, r, &p)));
                    }
                }
            }
        }
    }
    let want: BTreeSet<_> = [("120".to_string(), "NNN".to_string()), ("210".to_string(), "NNN".to_string())].into();
    assert_eq!(over, want);
}

#[test]
fn branch_rule_clamps_negative_terms() {
    let v = cell_value(d("300"), Role::Ha, &prof("INN"), 0.4, 0.7).unwrap();
    assert!(v.clamped);
    assert_abs_diff_eq!(v.share, 0.4, epsilon = EXACT);
    assert!(!cell_value(d("300"), Role::Ha, &prof("INN"), 0.4, 0.3).unwrap().clamped);
}

#[test]
fn closed_form_examples() {
    let c = condition("alpha_la_3_ninv").unwrap();
    assert_abs_diff_eq!(c.threshold(0.6), 0.8 / 2.8, epsilon = EXACT);
    assert!((c.threshold(0.6) - 0.2857).abs() <= 5e-5);
    assert_eq!(c.direction, Direction::Le);
    assert!(closed_form_check("alpha_la_3_ninv", &rp(0.2, 0.6)).unwrap());
    assert!(!closed_form_check("alpha_la_3_ninv", &rp(0.4, 0.6)).unwrap());
    let c = condition("alpha_ha0_la3la0_ninv").unwrap();
    assert_abs_diff_eq!(c.threshold(0.5), 2.0 / 3.0, epsilon = EXACT);
    assert!(matches!(closed_form_check("alpha_nope", &rp(0.5, 0.5)), Err(ModelError::UnknownCondition(_))));
}

#[test]
fn separation_onset() {
    let f = |t: f64| (0.5 - 0.5 * t) - (3.0 * t - 1.0) / (1.0 + 3.0 * t);
    let root = bisect(f, 0.4, 0.9).unwrap();
    assert_abs_diff_eq!(root, (-2.0 + 13f64.sqrt()) / 3.0, epsilon = ROOT_MATCH);
    assert!((root - 0.535).abs() <= 0.001);
    let ha = condition("alpha_ha_0_inv_la3").unwrap();
    let la = condition("alpha_la_3_ninv").unwrap();
    assert_abs_diff_eq!(ha.threshold(root), la.threshold(root), epsilon = ROOT_MATCH);
}

#[test]
fn thresholds_are_finite_on_the_unit_interval() {
    for c in conditions() {
        for j in 1..=1000 {
            let t = j as f64 / 1000.0;
            assert!(c.threshold(t).is_finite() && c.derived_threshold(t).is_finite(), "{} at {t}", c.name);
        }
    }
}

#[test]
fn condition_names_are_unique() {
    let names: BTreeSet<_> = conditions().iter().map(|c| c.name).collect();
    assert_eq!(names.len(), conditions().len());
    assert_eq!(names.len(), 57);
}

/// Derived forms match the grid best response everywhere; printed forms fail
/// exactly on the documented errata.
#[test]
fn hyperbola_grid_consistency() {
    let grid = GridSpec::new(200, 200);
    let mut failing = BTreeSet::new();
    for c in conditions() {
        let derived = best_response_grid_check(c, grid, FormKind::Derived).unwrap();
        assert!(derived.pass(), "{}: {:?}", c.name, derived);
        let printed = best_response_grid_check(c, grid, FormKind::Printed).unwrap();
        if !printed.pass() {
            assert!(c.erratum.is_some(), "{} fails without an erratum tag", c.name);
            failing.insert(c.name);
        }
    }
    let want: BTreeSet<&str> = PRINTED_GRID_FAILURES.into_iter().collect();
    assert_eq!(failing, want);
}

#[test]
fn nash_examples() {
    let la3 = AttractionScenario::full(d("030"));
    let inn = prof("INN");
    assert!(pure_nash(&la3, &rp(0.3, 0.8)).unwrap().iter().any(|n| n.profile == inn));
    let ha2 = AttractionScenario::full(d("210"));
    for i in 0..=20 {
        for t in [0.05, 0.2, 0.35, 0.49] {
            let ps = pure_nash(&ha2, &rp(i as f64 / 20.0, t)).unwrap();
            assert!(ps.iter().all(|n| n.profile != inn), "alpha {} t {t}", i as f64 / 20.0);
        }
    }
    for dist in Distribution::ALL {
        for sc in [AttractionScenario::full(dist), AttractionScenario::no_other_info(dist)] {
            let ps = pure_nash(&sc, &rp(0.0, 1.0)).unwrap();
            assert!(ps.iter().any(|n| n.profile == prof("NNN")), "{}", dist.code());
        }
    }
}

#[test]
fn ha_three_separation_is_by_indifference() {
    let sc = AttractionScenario::full(d("300"));
    let ps = pure_nash(&sc, &rp(0.5, 0.3)).unwrap();
    let labels: Vec<String> = ps.iter().map(|n| n.profile.label()).collect();
    assert_eq!(labels, ["NII", "NIN", "NNI"]);
    assert!(ps.iter().all(|n| n.by_indifference));
}

#[test]
fn level1_examples() {
    let sc = AttractionScenario::full(d("300"));
    assert_eq!(level1_choice(&sc, Role::Ha, &rp(0.8, 0.6)).unwrap(), Level1Choice::NotInvest);
    assert_eq!(level1_choice(&sc, Role::LaI, &rp(0.7, 0.6)).unwrap(), Level1Choice::Invest);
    let on = 2.6 / 3.0;
    assert_eq!(level1_choice(&sc, Role::Ha, &rp(on, 0.6)).unwrap(), Level1Choice::Indifferent);
    let c = level1_condition(&sc, Role::Ha).unwrap();
    assert_eq!(c.name, "alpha_ha3_ninv");
    assert_abs_diff_eq!(c.threshold(0.6), on, epsilon = EXACT);
    assert_eq!(level1_condition(&sc, Role::LaI).unwrap().name, "alpha_la0_inv_ha3");
}

#[test]
fn level1_conditions_agree_with_level1_choice() {
    for dist in Distribution::ALL {
        for sc in [AttractionScenario::full(dist), AttractionScenario::no_other_info(dist)] {
            for role in Role::ALL {
                let Some(c) = level1_condition(&sc, role) else { continue };
                if c.erratum.is_some() {
                    continue;
                }
                for (a, t) in [(0.1, 0.2), (0.45, 0.3), (0.7, 0.6), (0.95, 0.9)] {
                    let gap = a - c.threshold(t);
                    if gap.abs() < 1e-3 {
                        continue;
                    }
                    let want = if c.holds(a, t) == (c.choice == Choice::Invest) {
                        Level1Choice::Invest
                    } else {
                        Level1Choice::NotInvest
                    };
                    assert_eq!(level1_choice(&sc, role, &rp(a, t)).unwrap(), want, "{} at ({a}, {t})", c.name);
                }
            }
        }
    }
}

#[test]
fn level1_ha2_not_invest_region() {
    let sc = AttractionScenario::full(d("210"));
    let n = 100;
    let cells = region_grid(&sc, Analysis::Level1, GridSpec::new(n, n)).unwrap();
    for c in cells.iter().filter(|c| c.t >= 0.5) {
        let bound = 7.0 / (9.0 - 2.0 * c.t);
        let ha = c.label.chars().next().unwrap();
        if c.alpha < bound - 1.0 / n as f64 {
            assert_eq!(ha, 'N', "({}, {})", c.alpha, c.t);
        } else if c.alpha > bound + 1.0 / n as f64 {
            assert_eq!(ha, 'I', "({}, {})", c.alpha, c.t);
        }
    }
}

#[test]
fn empty_grid_is_empty() {
    let sc = AttractionScenario::full(d("300"));
    for a in [Analysis::Nash, Analysis::Mixed, Analysis::Level1] {
        assert!(region_grid(&sc, a, GridSpec::new(0, 0)).unwrap().is_empty());
    }
}

#[test]
fn region_grid_is_alpha_major_and_deterministic() {
    let sc = AttractionScenario::full(d("111"));
    let a = region_grid(&sc, Analysis::Nash, GridSpec::new(7, 5)).unwrap();
    let b = region_grid(&sc, Analysis::Nash, GridSpec::new(7, 5)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), 35);
    assert_eq!((a[1].alpha, a[1].t), (0.5 / 7.0, 1.5 / 5.0));
}

/// The only-HA-invests region for x_la = 3 starts at t = (-2 + sqrt 13)/3.
#[test]
fn la3_separation_onset_on_grid() {
    let sc = AttractionScenario::full(d("030"));
    let n = 200;
    let cells = region_grid(&sc, Analysis::Nash, GridSpec::new(n, n)).unwrap();
    let sep: Vec<&RegionCell> = cells.iter().filter(|c| c.label.split('|').any(|p| p == "INN")).collect();
    assert!(!sep.is_empty());
    let onset = (-2.0 + 13f64.sqrt()) / 3.0;
    let min_t = sep.iter().map(|c| c.t).fold(f64::INFINITY, f64::min);
    assert!(min_t >= onset - 1.0 / n as f64 && min_t <= onset + 1.0 / n as f64, "{min_t}");
}

#[test]
fn mixed_region_lists_one_la_investing() {
    let sc = AttractionScenario::full(d("030"));
    for c in region_grid(&sc, Analysis::Mixed, GridSpec::new(20, 20)).unwrap() {
        if c.label != "none" {
            for p in c.label.split('|') {
                let p = prof(p);
                assert!(!p.ha && p.la_i != p.la_j);
            }
        }
    }
}

#[test]
fn oneshot_payoff_diff_examples() {
    assert_abs_diff_eq!(oneshot_payoff_diff(0.3, 0.4), 0.3, epsilon = EXACT);
    assert_abs_diff_eq!(oneshot_payoff_diff(0.6, 0.6), -0.2, epsilon = EXACT);
    assert_eq!(oneshot_payoff_diff(0.5, 0.5), 0.0);
    let m = OneShotMatrix::reference();
    for (a, b) in [(frac(3, 10), frac(2, 5)), (frac(3, 5), frac(3, 5)), (frac(1, 7), frac(5, 6))] {
        let scaled = frac(2, 3) * (int(1) - &a - &b);
        assert_eq!(m.gap(&a, &b), scaled);
    }
}

#[test]
fn oneshot_solver_is_exact() {
    let s = oneshot_mixed_solver(&OneShotMatrix::reference());
    assert_eq!(s.kind, SolutionKind::Mixed);
    assert_eq!(s.exact, Some(frac(1, 2)));
    assert_eq!(s.p, 0.5);
}

#[test]
fn oneshot_dominance_corners() {
    let z = || [[int(0), int(0)], [int(0), int(0)]];
    let o = || [[int(1), int(1)], [int(1), int(1)]];
    let s = oneshot_mixed_solver(&OneShotMatrix { invest: z(), not_invest: o() });
    assert_eq!((s.kind, s.p), (SolutionKind::PureNotInvest, 0.0));
    let s = oneshot_mixed_solver(&OneShotMatrix { invest: o(), not_invest: z() });
    assert_eq!((s.kind, s.p), (SolutionKind::PureInvest, 1.0));
    // Irrational interior root falls back to floating point.
    let m = OneShotMatrix { invest: [[int(1), int(0)], [int(0), int(0)]], not_invest: [[int(0), int(0)], [int(0), frac(1, 2)]] };
    let s = oneshot_mixed_solver(&m);
    assert_eq!(s.kind, SolutionKind::Mixed);
    assert!(s.exact.is_none());
    let p: BigRational = BigRational::from_float(s.p).unwrap();
    assert!(credence_core::exact::to_f64(&m.gap(&p, &p)).abs() <= 1e-12);
}

#[test]
fn oneshot_pooled_income_is_exact() {
    assert_eq!(oneshot_pooled_income(&MarketParams::default()).unwrap(), frac(97, 2));
}

#[test]
fn oracle_reproduces_quoted_cells() {
    let sc = AttractionScenario::full(d("300"));
    let e = mc_attraction_oracle(&sc, Role::Ha, &prof("NIN"), &rp(0.3, 0.4), ORACLE_SIMS, 1).unwrap();
    assert!(e.agrees(0.7, 2.0, EXACT), "{e:?}");
    let e = mc_attraction_oracle(&sc, Role::LaJ, &prof("IIN"), &rp(0.5, 0.4), ORACLE_SIMS, 2).unwrap();
    assert!(e.agrees(0.4, 2.0, EXACT), "{e:?}");
}

#[test]
fn oracle_imitator_never_detected_at_t_one() {
    let sc = AttractionScenario::full(d("030"));
    let e = mc_attraction_oracle(&sc, Role::LaI, &prof("NNN"), &rp(0.4, 1.0), 500, 3).unwrap();
    assert_eq!((e.mean, e.stderr), (1.0, 0.0));
}

#[test]
fn oracle_is_seed_deterministic_and_validates() {
    let sc = AttractionScenario::no_other_info(d("120"));
    let run = |seed| mc_attraction_oracle(&sc, Role::LaI, &prof("NIN"), &rp(0.4, 0.3), 2000, seed).unwrap();
    assert_eq!(run(5), run(5));
    assert!(mc_attraction_oracle(&sc, Role::Ha, &prof("NNN"), &rp(0.4, 0.3), 1, 0).is_err());
    assert!(mc_attraction_oracle(&sc, Role::Ha, &prof("NNN"), &rp(0.4, 0.0), 100, 0).is_err());
}

/// Every full-information cell outside the inconsistent set matches the
/// oracle at two interior points on each side of t = 0.5.
#[test]
fn oracle_matches_consistent_cells() {
    let mut checked = 0;
    for (k, dist) in Distribution::ALL.into_iter().enumerate() {
        let sc = AttractionScenario::full(dist);
        for role in Role::ALL {
            for (m, p) in InvestmentProfile::all().into_iter().enumerate() {
                if is_inconsistent(dist, role, &p) {
                    continue;
                }
                for (n, (a, t)) in [(0.35, 0.3), (0.6, 0.7)].into_iter().enumerate() {
                    let want = share(&dist.code(), role, &p.label(), a, t);
                    let seed = (k * 100 + role.index() * 20 + m * 2 + n) as u64;
                    let e = mc_attraction_oracle(&sc, role, &p, &rp(a, t), 4000, seed).unwrap();
                    assert!(e.agrees(want, SWEEP_SIGMAS, EXACT), "{} {:?} {}: {want} vs {e:?}", dist.code(), role, p.label());
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 2 * (144 - INCONSISTENT.len()));
}

/// Fifty random points: every disagreement traces back to an inconsistent cell.
#[test]
fn oracle_disagreements_are_confined_to_inconsistent_cells() {
    let mut rng = credence_core::rng::substream(2024, 0);
    for i in 0..50u64 {
        let dist = Distribution::ALL[rng.random_range(0..6)];
        let sc = if rng.random::<bool>() { AttractionScenario::full(dist) } else { AttractionScenario::no_other_info(dist) };
        let role = Role::ALL[rng.random_range(0..3)];
        let p = InvestmentProfile::all()[rng.random_range(0..8)];
        let r = rp(rng.random::<f64>(), rng.random_range(0.01..=1.0));
        let want = attraction_share(&sc, role, &p, &r).unwrap().share;
        let e = mc_attraction_oracle(&sc, role, &p, &r, ORACLE_SIMS, 100 + i).unwrap();
        if !e.agrees(want, MC_SIGMAS, EXACT) {
            assert!(touches_inconsistent(&sc, role, &p), "{} {:?} {} {:?}: {want} vs {e:?}", dist.code(), role, p.label(), r);
        }
    }
}

#[test]
fn conditions_serialize_with_state_labels() {
    let c = condition("alpha_ha3_ninv").unwrap();
    let js = serde_json::to_value(c).unwrap();
    assert_eq!(js["name"], "alpha_ha3_ninv");
    assert_eq!(js["states"][0], "300:HA:level1");
}
