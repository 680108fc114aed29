//! Stage-game primitives: quoted incomes, markup classes, payoffs, and a
//! Monte Carlo oracle for every closed-form consumer income.

use approx::assert_abs_diff_eq;
use credence_core::exact::{frac, int};
use credence_core::market::*;
use credence_core::rng::substream;
use credence_core::tolerances::{EXACT, MC_SIGMAS};
use credence_core::{MarketParams, ModelError};
use proptest::prelude::*;
use rand::Rng;

fn p() -> MarketParams {
    MarketParams::default()
}

#[test]
fn quoted_menu_incomes() {
    let p = p();
    assert_abs_diff_eq!(expected_consumer_income(MenuKind::Pm, Mode::Obfuscated, false, &p).unwrap(), 50.0, epsilon = EXACT);
    assert_abs_diff_eq!(expected_consumer_income(MenuKind::Ps, Mode::Obfuscated, false, &p).unwrap(), 10.0, epsilon = EXACT);
    let obf = expected_consumer_income(MenuKind::Pe, Mode::Obfuscated, false, &p).unwrap();
    assert!((obf - 45.67).abs() <= 0.01, "{obf}");
    assert_abs_diff_eq!(obf, 137.0 / 3.0, epsilon = EXACT);
}

#[test]
fn transparent_incomes_are_exact() {
    let p = p();
    assert_eq!(expected_consumer_income_exact(MenuKind::Pe, Mode::TransparentHigh, false, &p).unwrap(), int(57));
    assert_eq!(expected_consumer_income_exact(MenuKind::Pe, Mode::TransparentLow, false, &p).unwrap(), int(40));
    assert_eq!(expected_consumer_income_exact(MenuKind::Pe, Mode::TransparentHigh, true, &p).unwrap(), frac(286, 5));
}

#[test]
fn obfuscated_investment_is_rejected() {
    assert_eq!(
        expected_consumer_income(MenuKind::Pe, Mode::Obfuscated, true, &p()),
        Err(ModelError::ObfuscatedInvestment)
    );
}

#[test]
fn markup_classes() {
    let p = p();
    let class = |k| markup_class(&PriceVector::new(k, false, &p), &p);
    assert_eq!(class(MenuKind::Pm), MarkupClass::HqtFavored);
    assert_eq!(class(MenuKind::Pe), MarkupClass::Equal);
    assert_eq!(class(MenuKind::Ps), MarkupClass::LqtFavored);
}

#[test]
fn self_interested_treatment_examples() {
    let p = p();
    let pv = |k| PriceVector::new(k, false, &p);
    assert_eq!(self_interested_treatment(&pv(MenuKind::Pm), Problem::Small, &p), Treatment::Hqt);
    assert_eq!(self_interested_treatment(&pv(MenuKind::Ps), Problem::Big, &p), Treatment::Lqt);
    assert_eq!(self_interested_treatment(&pv(MenuKind::Pe), Problem::Big, &p), Treatment::Hqt);
    assert_eq!(self_interested_treatment(&pv(MenuKind::Pe), Problem::Small, &p), Treatment::Lqt);
}

#[test]
fn realize_round_examples() {
    let p = p();
    let pv = |k| PriceVector::new(k, false, &p);
    let r = realize_round(Problem::Big, Problem::Small, Treatment::Lqt, &pv(MenuKind::Ps), false, &p);
    assert_eq!((r.consumer_payoff, r.expert_profit, r.outcome_class), (-80.0, 60.0, OutcomeClass::A));
    let r = realize_round(Problem::Small, Problem::Small, Treatment::Lqt, &pv(MenuKind::Pe), false, &p);
    assert_eq!((r.consumer_payoff, r.expert_profit, r.outcome_class), (90.0, 40.0, OutcomeClass::C));
    let r = realize_round(Problem::Small, Problem::Small, Treatment::Hqt, &pv(MenuKind::Pm), false, &p);
    assert_eq!((r.consumer_payoff, r.expert_profit, r.outcome_class), (50.0, 40.0, OutcomeClass::B));
}

#[test]
fn diagnosis_accuracy() {
    for (k, seed) in [(0.5, 1), (0.9, 2)] {
        let mut rng = substream(seed, 0);
        let n = 100_000;
        let hits = (0..n).filter(|_| draw_diagnosis(Problem::Big, k, &mut rng) == Problem::Big).count();
        assert!((hits as f64 / n as f64 - k).abs() <= 0.01);
    }
    let mut rng = substream(3, 0);
    assert!((0..1000).all(|_| draw_diagnosis(Problem::Small, 1.0, &mut rng) == Problem::Small));
}

/// Monte Carlo stage game: the expert's precision is drawn from the consumer's
/// information set, diagnosis and self-interested treatment follow.
fn mc_income(kind: MenuKind, mode: Mode, invested: bool, p: &MarketParams, n: usize, seed: u64) -> (f64, f64) {
    let mut rng = substream(seed, 0);
    let pv = PriceVector::new(kind, invested, p);
    let mut xs = Vec::with_capacity(n);
    for _ in 0..n {
        let k = if invested {
            p.k_inv
        } else {
            match mode {
                Mode::TransparentHigh => p.z,
                Mode::TransparentLow => p.q,
                Mode::Obfuscated => {
                    if rng.random::<f64>() < p.gamma {
                        p.z
                    } else {
                        p.q
                    }
                }
            }
        };
        let problem = draw_problem(p.h, &mut rng);
        let signal = draw_diagnosis(problem, k, &mut rng);
        let t = self_interested_treatment(&pv, signal, p);
        xs.push(realize_round(problem, signal, t, &pv, invested, p).consumer_payoff);
    }
    let m = xs.iter().sum::<f64>() / n as f64;
    let var = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n as f64 - 1.0);
    (m, (var / n as f64).sqrt())
}

#[test]
fn closed_form_incomes_match_monte_carlo() {
    let p = p();
    let mut seed = 10;
    for kind in MenuKind::ALL {
        for mode in Mode::ALL {
            for invested in [false, true] {
                if invested && mode == Mode::Obfuscated {
                    continue;
                }
                seed += 1;
                let exact = expected_consumer_income(kind, mode, invested, &p).unwrap();
                let (m, se) = mc_income(kind, mode, invested, &p, 100_000, seed);
                assert!(
                    (m - exact).abs() <= MC_SIGMAS * se + EXACT,
                    "{kind:?} {mode:?} invested={invested}: mc {m} ± {se} vs {exact}"
                );
            }
        }
    }
}

#[test]
fn equal_markup_profit_is_treatment_independent() {
    let p = p();
    for invested in [false, true] {
        let pv = PriceVector::new(MenuKind::Pe, invested, &p);
        let a = realize_round(Problem::Big, Problem::Big, Treatment::Hqt, &pv, invested, &p).expert_profit;
        let b = realize_round(Problem::Small, Problem::Small, Treatment::Lqt, &pv, invested, &p).expert_profit;
        assert_eq!(a, b);
    }
}

fn problem() -> impl Strategy<Value = Problem> {
    prop_oneof![Just(Problem::Big), Just(Problem::Small)]
}
fn treatment() -> impl Strategy<Value = Treatment> {
    prop_oneof![Just(Treatment::Hqt), Just(Treatment::Lqt)]
}
fn menu() -> impl Strategy<Value = MenuKind> {
    prop_oneof![Just(MenuKind::Pm), Just(MenuKind::Pe), Just(MenuKind::Ps)]
}

proptest! {
    #[test]
    fn pass_through_raises_price_by_d(kind in menu(), t in treatment(), pr in problem(), d in 0.0f64..30.0) {
        let p = MarketParams { d, ..MarketParams::default() };
        let base = PriceVector::new(kind, false, &p);
        let inv = PriceVector::new(kind, true, &p);
        prop_assert!((inv.price(t) - base.price(t) - d).abs() <= EXACT);
        let a = realize_round(pr, pr, t, &base, false, &p);
        let b = realize_round(pr, pr, t, &inv, true, &p);
        prop_assert!((a.expert_profit - b.expert_profit).abs() <= EXACT);
        prop_assert!((a.consumer_payoff - b.consumer_payoff - d).abs() <= EXACT);
    }

    #[test]
    fn round_accounting_identity(kind in menu(), t in treatment(), pr in problem(), invested: bool) {
        let p = MarketParams::default();
        let pv = PriceVector::new(kind, invested, &p);
        let r = realize_round(pr, pr, t, &pv, invested, &p);
        let solved = if solves(pr, t) { p.v } else { 0.0 };
        let cost = if t == Treatment::Hqt { p.c_hi } else { p.c_lo };
        let fee = if invested { p.d } else { 0.0 };
        prop_assert_eq!(r.consumer_payoff + r.expert_profit, solved - cost - fee);
        prop_assert_eq!(r.outcome_class == OutcomeClass::A, pr == Problem::Big && t == Treatment::Lqt);
        prop_assert_eq!(r.outcome_class == OutcomeClass::B, t == Treatment::Hqt);
    }

    #[test]
    fn pe_income_is_linear_in_precision(k1 in 0.5f64..1.0, k2 in 0.5f64..1.0, lam in 0.0f64..1.0) {
        let p = MarketParams::default();
        let mix = pe_income_with_precision(lam * k1 + (1.0 - lam) * k2, &p);
        let lin = lam * pe_income_with_precision(k1, &p) + (1.0 - lam) * pe_income_with_precision(k2, &p);
        prop_assert!((mix - lin).abs() <= 1e-9);
    }
}

#[test]
fn library_stage_game_oracle_agrees_with_local_one() {
    let p = p();
    let (a, sa) = mc_consumer_income(MenuKind::Pe, Mode::Obfuscated, false, &p, 50_000, 3).unwrap();
    let (b, sb) = mc_income(MenuKind::Pe, Mode::Obfuscated, false, &p, 50_000, 3);
    assert_eq!(a, b);
    assert!((sa - sb).abs() <= 1e-9);
    assert!(mc_consumer_income(MenuKind::Pe, Mode::Obfuscated, true, &p, 10, 1).is_err());
}
