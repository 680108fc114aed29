//! Agent-based simulator: determinism, accounting, protocol rules, metrics
//! and scripted-policy outcomes.

use approx::assert_abs_diff_eq;
use credence_core::abm::*;
use credence_core::beliefs::{first_passage_r, honest_obs_model};
use credence_core::market::{Ability, MenuKind, Problem, Treatment};
use credence_core::tolerances::{EXACT, TIE};
use credence_core::MarketParams;
use proptest::prelude::*;

const GREEDY: ConsumerPolicy = ConsumerPolicy::Greedy;
const SWITCHER: ConsumerPolicy = ConsumerPolicy::BayesianSwitcher { threshold: 0.9 };

fn cfg(experts: [ExpertPolicy; 3], consumers: [ConsumerPolicy; 3], seed: u64) -> SessionConfig {
    SessionConfig::new(experts, consumers, seed)
}

fn batch(base: &SessionConfig, n: u64) -> Vec<RunLog> {
    let configs: Vec<SessionConfig> = (0..n).map(|s| SessionConfig { session: s, ..base.clone() }).collect();
    run_batch(&configs).unwrap()
}

/// Every recorded expert menu, keyed by (round, expert).
fn menus(log: &RunLog) -> std::collections::HashMap<(u32, u8), &ExpertEvent> {
    log.experts().map(|e| ((e.round, e.expert), e)).collect()
}

fn mixed_configs(n: u64) -> Vec<SessionConfig> {
    let experts = builtin_policies().experts;
    let consumers = builtin_policies().consumers;
    (0..n)
        .map(|s| {
            let i = s as usize;
            let mut c = cfg(
                [experts[i % 9].1, experts[(i / 9 + 3) % 9].1, experts[(i / 3 + 5) % 9].1],
                [consumers[i % 4].1, consumers[(i / 4) % 4].1, consumers[(i + 2) % 4].1],
                77,
            );
            c.session = s;
            c.mode = if s % 2 == 0 { InvestMode::Skill } else { InvestMode::Algorithm };
            c.horizon = if s % 5 == 0 { Horizon::OneShot } else { Horizon::Repeated };
            c
        })
        .collect()
}

#[test]
fn runs_are_byte_identical_per_seed() {
    let c = cfg([ExpertPolicy::HaSignaler, ExpertPolicy::LaImitator { r_switch: 4 }, ExpertPolicy::OneShotRandomizer { p: 0.5 }], [SWITCHER, ConsumerPolicy::SafeSeeker, GREEDY], 42);
    let a = run_session(&c).unwrap().to_jsonl();
    let b = run_session(&c).unwrap().to_jsonl();
    assert_eq!(a, b);
    let other = run_session(&SessionConfig { seed: 43, ..c.clone() }).unwrap().to_jsonl();
    assert_ne!(a, other);
    let back = RunLog::from_jsonl(0, 42, &a).unwrap();
    assert_eq!(back.to_jsonl(), a);
    assert_eq!(back, run_session(&c).unwrap());
}

#[test]
fn batch_order_follows_input() {
    let configs = mixed_configs(12);
    let logs = run_batch(&configs).unwrap();
    for (c, l) in configs.iter().zip(&logs) {
        assert_eq!(*l, run_session(c).unwrap());
    }
}

#[test]
fn accounting_identity_over_a_large_batch() {
    let configs = mixed_configs(200);
    let logs = run_batch(&configs).unwrap();
    let mut rounds = 0;
    for (c, log) in configs.iter().zip(&logs) {
        let p = &c.params;
        for ev in log.consumers() {
            rounds += 1;
            let Some(v) = &ev.visit else {
                assert_eq!((ev.consumer_payoff, ev.expert_profit), (p.sigma * ev.weight, 0.0));
                continue;
            };
            let solved = if v.solved { p.v } else { 0.0 };
            let cost = if v.treatment == Treatment::Hqt { p.c_hi } else { p.c_lo };
            let fee = if v.invested { p.d } else { 0.0 };
            assert_eq!(ev.consumer_payoff + ev.expert_profit, ev.weight * (solved - cost - fee));
            assert_eq!(v.solved, !(ev.problem == Problem::Big && v.treatment == Treatment::Lqt));
        }
    }
    assert!(rounds >= 10_000, "{rounds}");
}

/// Verifiability: the charged price is the posted price of the implemented treatment.
#[test]
fn charged_price_matches_treatment() {
    for (c, log) in mixed_configs(60).iter().zip(run_batch(&mixed_configs(60)).unwrap()) {
        let m = menus(&log);
        for ev in log.consumers() {
            if let Some(v) = &ev.visit {
                let e = m[&(ev.round, v.expert)];
                let want = if v.treatment == Treatment::Hqt { e.p_hi } else { e.p_lo };
                assert_eq!(v.price, want, "session {}", c.session);
                assert_eq!(v.invested, e.invested);
            }
        }
    }
}

/// A consumer who is not a sitter enters iff the best expected income reaches sigma.
#[test]
fn entry_rule() {
    let configs = mixed_configs(80);
    for (c, log) in configs.iter().zip(run_batch(&configs).unwrap()) {
        for ev in log.consumers() {
            let best = ev.expected_incomes.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if ev.policy == ConsumerPolicy::OutsideOptionSitter {
                assert!(ev.visit.is_none());
            } else {
                assert_eq!(ev.visit.is_some(), best >= c.params.sigma - TIE, "{ev:?}");
            }
        }
    }
}

#[test]
fn phases_rounds_and_oneshot_weight() {
    let mut c = cfg([ExpertPolicy::NeverInvest; 3], [GREEDY; 3], 1);
    let log = run_session(&c).unwrap();
    assert_eq!(log.consumers().count(), 3 * 25);
    assert_eq!(log.consumers().filter(|e| e.phase == 1).count(), 30);
    assert!(log.consumers().all(|e| e.weight == 1.0));
    c.horizon = Horizon::OneShot;
    let log = run_session(&c).unwrap();
    assert_eq!(c.total_rounds(), 11);
    for e in log.consumers() {
        assert_eq!(e.weight, if e.round == 11 { ONESHOT_WEIGHT } else { 1.0 });
    }
    assert!(log.experts().filter(|e| e.phase == 1).all(|e| !e.invested));
}

#[test]
fn aid_use_depends_on_mode() {
    let experts = [ExpertPolicy::AlwaysInvest { use_aid: false }, ExpertPolicy::AlwaysInvest { use_aid: true }, ExpertPolicy::NeverInvest];
    let mut c = cfg(experts, [GREEDY; 3], 3);
    let p = c.params.clone();
    for mode in [InvestMode::Skill, InvestMode::Algorithm] {
        c.mode = mode;
        let log = run_session(&c).unwrap();
        for e in log.experts().filter(|e| e.phase == 2) {
            match e.expert {
                0 => {
                    assert_eq!(e.aid_used, mode == InvestMode::Skill);
                    assert_eq!(e.precision, if mode == InvestMode::Skill { p.k_inv } else { p.z });
                }
                1 => assert_eq!((e.aid_used, e.precision), (true, p.k_inv)),
                _ => assert_eq!((e.invested, e.precision), (false, p.q)),
            }
        }
    }
}

#[test]
fn invalid_configs_are_rejected() {
    let mut c = cfg([ExpertPolicy::NeverInvest; 3], [GREEDY; 3], 1);
    c.abilities = [Ability::High, Ability::High, Ability::Low];
    assert!(run_session(&c).is_err());
    c.abilities = [Ability::Low; 3];
    assert!(run_session(&c).is_err());
    let c = cfg([ExpertPolicy::OneShotRandomizer { p: 1.5 }, ExpertPolicy::NeverInvest, ExpertPolicy::NeverInvest], [GREEDY; 3], 1);
    assert!(run_session(&c).is_err());
    let c = cfg([ExpertPolicy::NeverInvest; 3], [ConsumerPolicy::BayesianSwitcher { threshold: 0.0 }, GREEDY, GREEDY], 1);
    assert!(run_session(&c).is_err());
    let js = r#"{"mode":"Skill","horizon":"Repeated","expert_policies":[],"consumer_policies":[],"seed":1,"bogus":2}"#;
    assert!(serde_json::from_str::<SessionConfig>(js).is_err());
}

#[test]
fn session_config_json_round_trip() {
    let c = cfg([ExpertPolicy::HaSignaler, ExpertPolicy::LaImitator { r_switch: 3 }, ExpertPolicy::SelfInterested { menu: MenuKind::Ps }], [SWITCHER, GREEDY, ConsumerPolicy::SafeSeeker], 9);
    let js = serde_json::to_string(&c).unwrap();
    assert_eq!(serde_json::from_str::<SessionConfig>(&js).unwrap(), c);
    let m: BatchManifest = serde_json::from_str(&format!(r#"{{"sessions":[{js}]}}"#)).unwrap();
    assert_eq!(m.sessions[0], c);
}

#[test]
fn policy_ids() {
    assert_eq!(ExpertPolicy::from_id("la_imitator:7").unwrap(), ExpertPolicy::LaImitator { r_switch: 7 });
    assert_eq!(ExpertPolicy::from_id("self_interested:PS").unwrap(), ExpertPolicy::SelfInterested { menu: MenuKind::Ps });
    assert_eq!(ExpertPolicy::from_id("always_invest:false").unwrap(), ExpertPolicy::AlwaysInvest { use_aid: false });
    assert_eq!(ExpertPolicy::from_id("always_invest").unwrap(), ExpertPolicy::AlwaysInvest { use_aid: true });
    for bad in ["la_imitator", "la_imitator:x", "oneshot_randomizer:1.5", "self_interested:pq", "wizard"] {
        assert!(ExpertPolicy::from_id(bad).is_err(), "{bad}");
    }
    assert_eq!(ConsumerPolicy::from_id("bayesian_switcher").unwrap(), SWITCHER);
    assert_eq!(ConsumerPolicy::from_id("bayesian_switcher:0.7").unwrap(), ConsumerPolicy::BayesianSwitcher { threshold: 0.7 });
    assert!(ConsumerPolicy::from_id("lurker").is_err());
    let cat = builtin_policies();
    assert_eq!((cat.experts.len(), cat.consumers.len()), (9, 4));
    for (id, p) in &cat.experts {
        assert_eq!(std::mem::discriminant(&ExpertPolicy::from_id(&format!("{id}{}", match p {
            ExpertPolicy::SelfInterested { .. } => ":pm",
            ExpertPolicy::LaImitator { .. } => ":5",
            ExpertPolicy::OneShotRandomizer { .. } => ":0.5",
            _ => "",
        })).unwrap()), std::mem::discriminant(p));
    }
}

/// Config files and command-line ids name policies the same way.
#[test]
fn serialized_tags_match_policy_ids() {
    let cat = builtin_policies();
    for (id, p) in &cat.experts {
        assert_eq!(serde_json::to_value(p).unwrap()["kind"], *id);
    }
    for (id, p) in &cat.consumers {
        assert_eq!(serde_json::to_value(p).unwrap()["kind"], *id);
    }
}

#[test]
fn pm_always_hqt_overtreats_small_problems() {
    let c = cfg([ExpertPolicy::PmAlwaysHqt; 3], [GREEDY; 3], 5);
    let logs = batch(&c, 140);
    let merged = RunLog { session: 0, seed: 5, events: logs.into_iter().flat_map(|l| l.events).collect() };
    let m = compute_metrics(&merged, &c.params, None);
    assert!(m.consultations >= 10_000);
    assert_eq!(m.market_entry_rate, 1.0);
    assert_eq!(m.undertreatment, 0.0);
    assert!((m.overtreatment - 0.6).abs() <= 0.02, "{}", m.overtreatment);
    assert!((m.efficient_treatment - 0.4).abs() <= 0.02, "{}", m.efficient_treatment);
    assert_abs_diff_eq!(m.overtreatment + m.efficient_treatment, 1.0, epsilon = EXACT);
    assert_eq!(m.price_vector_shares, [1.0, 0.0, 0.0]);
}

#[test]
fn perfect_diagnosis_is_fully_efficient() {
    let mut c = cfg([ExpertPolicy::NeverInvest; 3], [GREEDY; 3], 8);
    c.params.z = 1.0;
    c.params.q = 1.0;
    let log = run_session(&c).unwrap();
    let m = compute_metrics(&log, &c.params, None);
    assert_eq!(m.market_entry_rate, 1.0);
    assert_abs_diff_eq!(m.efficiency, 1.0, epsilon = EXACT);
    assert_abs_diff_eq!(m.efficient_provision, 1.0, epsilon = EXACT);
    assert_eq!(m.undertreatment + m.overtreatment, 0.0);
}

#[test]
fn outside_option_only_market() {
    let c = cfg([ExpertPolicy::HonestEqualMarkup; 3], [ConsumerPolicy::OutsideOptionSitter; 3], 2);
    let log = run_session(&c).unwrap();
    let m = compute_metrics(&log, &c.params, None);
    assert_eq!((m.market_entry_rate, m.efficiency, m.consultations), (0.0, 0.0, 0));
    assert_eq!(m.consumer_surplus, c.params.sigma);
    assert_eq!(m.expert_surplus, 0.0);
}

#[test]
fn metrics_are_pure_in_the_log() {
    let c = &mixed_configs(3)[2];
    let log = run_session(c).unwrap();
    let a = compute_metrics(&log, &c.params, Some(2));
    let back = RunLog::from_jsonl(log.session, log.seed, &log.to_jsonl()).unwrap();
    assert_eq!(a, compute_metrics(&back, &c.params, Some(2)));
    assert_eq!(a, compute_metrics(&log, &c.params, Some(2)));
}

#[test]
fn investment_fees_separate_the_efficiency_measures() {
    let c = cfg([ExpertPolicy::AlwaysInvest { use_aid: true }; 3], [GREEDY; 3], 4);
    let log = run_session(&c).unwrap();
    let m = compute_metrics(&log, &c.params, Some(2));
    assert!(m.relative_efficiency > m.efficiency);
    assert_eq!((m.investment_share_high, m.investment_share_low), (1.0, 1.0));
    let m1 = compute_metrics(&log, &c.params, Some(1));
    assert_eq!(m1.relative_efficiency, m1.efficiency);
}

#[test]
fn oneshot_randomizer_invests_half_the_time() {
    let r = ExpertPolicy::OneShotRandomizer { p: 0.5 };
    let mut c = cfg([r; 3], [GREEDY; 3], 11);
    c.horizon = Horizon::OneShot;
    let logs = batch(&c, 10_000);
    let (mut inv, mut n) = (0usize, 0usize);
    for l in &logs {
        for e in l.experts().filter(|e| e.phase == 2) {
            n += 1;
            inv += usize::from(e.invested);
        }
    }
    assert_eq!(n, 30_000);
    let f = inv as f64 / n as f64;
    assert!((f - 0.5).abs() <= 0.01, "{f}");
}

#[test]
fn signaling_ha_attracts_more_than_a_third() {
    let la = ExpertPolicy::LaImitator { r_switch: 1_000 };
    let c = cfg([ExpertPolicy::HaSignaler, la, la], [SWITCHER; 3], 13);
    let logs = batch(&c, 400);
    let (mut ha, mut n) = (0usize, 0usize);
    for l in &logs {
        for ev in l.consumers().filter(|e| e.phase == 2) {
            n += 1;
            ha += usize::from(ev.visit.as_ref().is_some_and(|v| v.expert == 0));
        }
    }
    let share = ha as f64 / n as f64;
    assert!(share > 1.0 / 3.0, "{share}");
}

#[test]
fn honest_ha_income_is_transparent_value() {
    let c = cfg([ExpertPolicy::NeverInvest, ExpertPolicy::PsUndertreater, ExpertPolicy::PsUndertreater], [GREEDY; 3], 17);
    let logs = batch(&c, 140);
    let pays: Vec<f64> = logs
        .iter()
        .flat_map(|l| l.consumers().filter(|e| e.visit.as_ref().is_some_and(|v| v.expert == 0)).map(|e| e.consumer_payoff).collect::<Vec<_>>())
        .collect();
    assert!(pays.len() >= 10_000);
    let mean = pays.iter().sum::<f64>() / pays.len() as f64;
    assert!((mean - 57.0).abs() <= 1.0, "{mean}");
}

/// Observations a switcher needs before leaving an imitating LA follow the
/// first-passage distribution of the belief model.
#[test]
fn imitator_detection_matches_first_passage() {
    let la = ExpertPolicy::LaImitator { r_switch: 1_000 };
    let c = cfg([ExpertPolicy::PsUndertreater, la, la], [SWITCHER; 3], 19);
    let p = &c.params;
    let max = c.total_rounds();
    let mut detect: Vec<f64> = Vec::new();
    for l in batch(&c, 400) {
        for consumer in 0..3u8 {
            let evs: Vec<&ConsumerEvent> = l.consumers().filter(|e| e.consumer == consumer).collect();
            let Some(first) = evs[0].visit.as_ref().map(|v| v.expert as usize) else { continue };
            if first == 0 {
                continue;
            }
            let hit = evs.iter().position(|e| e.beliefs[first] >= 0.9).map_or(max + 1, |i| i as u32 + 1);
            detect.push(hit as f64);
        }
    }
    assert!(detect.len() >= 1000);
    detect.sort_by(f64::total_cmp);
    let abm_median = detect[detect.len() / 2];
    let (mh, ml) = (honest_obs_model(p.h, p.z), honest_obs_model(p.h, p.q));
    let fp = first_passage_r(1.0 - p.gamma, &ml, (mh, ml), 0.9, max, 10_000, 23);
    assert!((abm_median - fp.median).abs() <= 1.0, "abm {abm_median} vs first passage {}", fp.median);
}

#[test]
fn rates_on_empty_phase_are_zero() {
    let log = RunLog { session: 0, seed: 1, events: vec![] };
    let m = compute_metrics(&log, &MarketParams::default(), None);
    assert_eq!((m.consumer_rounds, m.market_entry_rate, m.efficiency), (0, 0.0, 0.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn metric_rates_lie_in_unit_interval(seed: u64, idx in 0u64..40) {
        let mut c = mixed_configs(40)[idx as usize].clone();
        c.seed = seed;
        let log = run_session(&c).unwrap();
        for phase in [None, Some(1), Some(2)] {
            let m = compute_metrics(&log, &c.params, phase);
            let rates = [m.market_entry_rate, m.undertreatment, m.overtreatment, m.efficient_treatment,
                m.efficient_provision, m.investment_share_high, m.investment_share_low];
            prop_assert!(rates.iter().chain(m.price_vector_shares.iter()).all(|r| (0.0..=1.0).contains(r)));
            prop_assert!(m.efficiency <= 1.0 + EXACT);
        }
    }
}
