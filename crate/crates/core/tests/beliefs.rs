//! Bayesian learning: observation models, posteriors, belief paths and
//! first-passage times.

use approx::assert_abs_diff_eq;
use credence_core::beliefs::*;
use credence_core::market::OutcomeClass;
use credence_core::rng::substream;
use credence_core::tolerances::{EXACT, LOG_DIRECT, MC_SIGMAS};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn defaults() -> (ObsModel, ObsModel) {
    (honest_obs_model(0.4, 0.75), honest_obs_model(0.4, 0.5))
}

fn assert_probs(m: ObsModel, want: [f64; 3]) {
    for (a, b) in m.probs.iter().zip(want) {
        assert_abs_diff_eq!(*a, b, epsilon = EXACT);
    }
}

#[test]
fn observation_models() {
    assert_probs(honest_obs_model(0.4, 0.75), [0.10, 0.45, 0.45]);
    assert_probs(honest_obs_model(0.4, 0.5), [0.20, 0.50, 0.30]);
    // Perfect diagnosis: HQT iff big (0.4), LQT on every small problem (0.6).
    assert_probs(honest_obs_model(0.4, 1.0), [0.0, 0.4, 0.6]);
    assert_probs(strategy_obs_model(ObsStrategy::AlwaysHqt, 0.4), [0.0, 1.0, 0.0]);
    assert_probs(strategy_obs_model(ObsStrategy::AlwaysLqt, 0.4), [0.4, 0.0, 0.6]);
    assert_probs(strategy_obs_model(ObsStrategy::Honest(0.9), 0.4), [0.04, 0.42, 0.54]);
}

#[test]
fn posterior_examples() {
    let (mh, ml) = defaults();
    let mut s = BeliefState::new(0.4, mh, ml);
    assert_abs_diff_eq!(posterior(&s).pr_l, 0.4, epsilon = EXACT);
    s.observe(OutcomeClass::A);
    assert_abs_diff_eq!(s.pr_l, 4.0 / 7.0, epsilon = EXACT);
    let mut d = BeliefState::new(1.0, mh, ml);
    d.observe(OutcomeClass::B);
    d.observe(OutcomeClass::C);
    assert_eq!(d.pr_l, 1.0);
}

#[test]
fn impossible_data_keeps_prior() {
    let hqt = strategy_obs_model(ObsStrategy::AlwaysHqt, 0.4);
    let mut s = BeliefState::new(0.3, hqt, hqt);
    s.counts = [1, 0, 0];
    let p = posterior(&s);
    assert!(p.impossible);
    assert_eq!(p.pr_l, 0.3);
}

#[test]
fn always_hqt_hypothesis_reveals_quickly() {
    let (mh, _) = defaults();
    let hqt = strategy_obs_model(ObsStrategy::AlwaysHqt, 0.4);
    let mut s = BeliefState::new(0.4, mh, hqt);
    let mut odds = 0.4 / 0.6;
    for _ in 0..5 {
        s.observe(OutcomeClass::B);
        odds /= 0.45;
        assert_abs_diff_eq!(s.pr_l, odds / (1.0 + odds), epsilon = 1e-12);
    }
    s.observe(OutcomeClass::C);
    assert_eq!(s.pr_l, 0.0);
}

/// One-step-ahead posterior under the prior-predictive mixture averages to the prior.
#[test]
fn martingale_one_step() {
    let (mh, ml) = defaults();
    let n = 10_000;
    for (prior, seed) in [(0.4, 1u64), (0.2, 2)] {
        let mut rng = substream(seed, 0);
        let xs: Vec<f64> = (0..n)
            .map(|_| {
                let truth = if rng.random::<f64>() < prior { ml } else { mh };
                let mut s = BeliefState::new(prior, mh, ml);
                s.observe(truth.sample(&mut rng));
                s.pr_l
            })
            .collect();
        let m = xs.iter().sum::<f64>() / n as f64;
        let se = (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n as f64 - 1.0) / n as f64).sqrt();
        assert!((m - prior).abs() <= MC_SIGMAS * se, "prior {prior}: mean {m} ± {se}");
    }
}

/// Multi-step version: the five-round posterior is also a martingale.
#[test]
fn martingale_five_steps() {
    let (mh, ml) = defaults();
    let n = 10_000;
    let prior = 0.4;
    let mut rng = substream(9, 0);
    let xs: Vec<f64> = (0..n)
        .map(|_| {
            let truth = if rng.random::<f64>() < prior { ml } else { mh };
            let mut s = BeliefState::new(prior, mh, ml);
            for _ in 0..5 {
                s.observe(truth.sample(&mut rng));
            }
            s.pr_l
        })
        .collect();
    let m = xs.iter().sum::<f64>() / n as f64;
    let se = (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n as f64 - 1.0) / n as f64).sqrt();
    assert!((m - prior).abs() <= MC_SIGMAS * se);
}

#[test]
fn order_invariance_on_random_sequences() {
    let (mh, ml) = defaults();
    let mut rng = substream(5, 0);
    for _ in 0..200 {
        let len = rng.random_range(1..40);
        let mut seq: Vec<OutcomeClass> = (0..len).map(|_| ml.sample(&mut rng)).collect();
        let run = |seq: &[OutcomeClass]| {
            let mut s = BeliefState::new(0.4, mh, ml);
            seq.iter().for_each(|&c| s.observe(c));
            s.pr_l
        };
        let a = run(&seq);
        seq.shuffle(&mut rng);
        assert_eq!(a, run(&seq));
    }
}

#[test]
fn belief_paths_rise_under_low_ability_truth() {
    let (mh, ml) = defaults();
    for prior in [0.4, 0.2] {
        let s = simulate_belief_paths(prior, &ml, (mh, ml), 15, 10_000, 7);
        assert_eq!(s.mean_path.len(), 15);
        assert!(s.mean_path.windows(2).all(|w| w[1] > w[0]), "prior {prior}: {:?}", s.mean_path);
        assert!(s.mean_path[0] > prior);
        for (q, m) in s.quantile_bands.iter().zip(&s.mean_path) {
            assert!(q.0 <= q.1 && (0.0..=1.0).contains(m));
        }
    }
    let s4 = simulate_belief_paths(0.4, &ml, (mh, ml), 15, 10_000, 7);
    let s2 = simulate_belief_paths(0.2, &ml, (mh, ml), 15, 10_000, 7);
    assert!(s4.mean_path[14] > 0.6);
    assert!(s2.mean_path[0] < s4.mean_path[0]);
}

#[test]
fn belief_paths_are_seed_deterministic() {
    let (mh, ml) = defaults();
    let a = simulate_belief_paths(0.4, &ml, (mh, ml), 10, 2000, 11);
    let b = simulate_belief_paths(0.4, &ml, (mh, ml), 10, 2000, 11);
    assert_eq!(a, b);
}

#[test]
fn first_passage_examples() {
    let (mh, ml) = defaults();
    let fp = first_passage_r(0.4, &ml, (mh, ml), 0.5, 15, 10_000, 3);
    assert!(fp.median <= 5.0, "{}", fp.median);
    let all = first_passage_r(0.4, &ml, (mh, ml), 1.0, 15, 1000, 3);
    assert_eq!(all.censored, 1000);
    assert!(all.rounds.iter().all(|&r| r == all.sentinel()));
    assert!(all.mean_uncensored.is_none());
    let zero = first_passage_r(0.0, &ml, (mh, ml), 0.3, 15, 1000, 3);
    assert_eq!(zero.censored, 1000);
}

proptest! {
    #[test]
    fn log_space_matches_direct(prior in 0.01f64..0.99, n in 0u64..=50, m in 0u64..=50, o in 0u64..=50) {
        let (mh, ml) = defaults();
        let mut s = BeliefState::new(prior, mh, ml);
        s.counts = [n, m, o];
        prop_assert!((posterior(&s).pr_l - posterior_direct(&s)).abs() <= LOG_DIRECT);
    }

    #[test]
    fn posterior_depends_on_counts_only(seq in proptest::collection::vec(0usize..3, 0..60), seed: u64) {
        let (mh, ml) = defaults();
        let classes = [OutcomeClass::A, OutcomeClass::B, OutcomeClass::C];
        let mut a = BeliefState::new(0.4, mh, ml);
        seq.iter().for_each(|&i| a.observe(classes[i]));
        let mut shuffled = seq.clone();
        shuffled.shuffle(&mut substream(seed, 0));
        let mut b = BeliefState::new(0.4, mh, ml);
        shuffled.iter().for_each(|&i| b.observe(classes[i]));
        prop_assert_eq!(a.pr_l, b.pr_l);
        prop_assert!((0.0..=1.0).contains(&a.pr_l));
    }
}
