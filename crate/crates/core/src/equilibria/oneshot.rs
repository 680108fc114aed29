//! One-shot coordination game among the three experts.
//!
//! The attraction matrix is indexed `[e2][e3]` with 0 = Invest and 1 = NotInvest.
//! The symmetric mixed equilibrium solves the indifference condition exactly
//! in rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{frac, int, one, to_f64};
use crate::market::{expected_consumer_income_exact, MenuKind, Mode};
use crate::MarketParams;

/// Share of attracted consumers given the other two experts' choices.
#[derive(Debug, Clone, PartialEq)]
pub struct OneShotMatrix {
    pub invest: [[BigRational; 2]; 2],
    pub not_invest: [[BigRational; 2]; 2],
}

impl OneShotMatrix {
    /// The matrix from the one-shot analysis.
    pub fn reference() -> Self {
        Self {
            invest: [[frac(1, 3), int(0)], [int(0), int(1)]],
            not_invest: [[int(1), int(0)], [int(0), frac(1, 3)]],
        }
    }

    /// Coefficients (a, b, c) of the invest-minus-not-invest gap a p^2 + b p + c
    /// when both others invest with probability p.
    fn gap_poly(&self) -> (BigRational, BigRational, BigRational) {
        let g = |i: usize, j: usize| &self.invest[i][j] - &self.not_invest[i][j];
        let a = g(0, 0);
        let b = g(0, 1) + g(1, 0);
        let c = g(1, 1);
        let two = int(2);
        (&a - &b + &c, &b - &two * &c, c)
    }

    /// Invest-minus-not-invest expected attraction when the others invest with p2 and p3.
    pub fn gap(&self, p2: &BigRational, p3: &BigRational) -> BigRational {
        let q2 = one() - p2;
        let q3 = one() - p3;
        let w = [[p2 * p3, p2 * &q3], [&q2 * p3, &q2 * &q3]];
        let mut tot = BigRational::zero();
        for i in 0..2 {
            for j in 0..2 {
                tot += &w[i][j] * (&self.invest[i][j] - &self.not_invest[i][j]);
            }
        }
        tot
    }
}

/// Invest-minus-not-invest payoff in the scaled form 1 - (p2 + p3).
pub fn oneshot_payoff_diff(p2: f64, p3: f64) -> f64 {
    1.0 - (p2 + p3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolutionKind {
    /// Interior root of the indifference condition.
    Mixed,
    /// Investing weakly dominates for every p.
    PureInvest,
    /// Not investing weakly dominates for every p.
    PureNotInvest,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixedSolution {
    pub p: f64,
    /// Exact value when the root is rational.
    pub exact: Option<BigRational>,
    pub kind: SolutionKind,
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(x.numer())?, root(x.denom())?))
}

fn in_open_unit(x: &BigRational) -> bool {
    x.is_positive() && *x < one()
}

/// Symmetric equilibrium probability of investing.
pub fn oneshot_mixed_solver(m: &OneShotMatrix) -> MixedSolution {
    let (a, b, c) = m.gap_poly();
    let mut roots: Vec<(f64, Option<BigRational>)> = Vec::new();
    if a.is_zero() {
        if !b.is_zero() {
            let r = -&c / &b;
            if in_open_unit(&r) {
                roots.push((to_f64(&r), Some(r)));
            }
        }
    } else {
        let disc = &b * &b - int(4) * &a * &c;
        if !disc.is_negative() {
            let two_a = int(2) * &a;
            match rational_sqrt(&disc) {
                Some(s) => {
                    for r in [(-&b - &s) / &two_a, (-&b + &s) / &two_a] {
                        if in_open_unit(&r) && !roots.iter().any(|x| x.1.as_ref() == Some(&r)) {
                            roots.push((to_f64(&r), Some(r)));
                        }
                    }
                }
                None => {
                    let (af, bf, df) = (to_f64(&a), to_f64(&b), to_f64(&disc).sqrt());
                    for r in [(-bf - df) / (2.0 * af), (-bf + df) / (2.0 * af)] {
                        if r > 0.0 && r < 1.0 {
                            roots.push((r, None));
                        }
                    }
                }
            }
        }
    }
    roots.sort_by(|x, y| x.0.total_cmp(&y.0));
    if let Some((p, exact)) = roots.into_iter().next() {
        return MixedSolution { p, exact, kind: SolutionKind::Mixed };
    }
    // No interior root: the gap keeps one sign on (0, 1).
    let mid = m.gap(&frac(1, 2), &frac(1, 2));
    if mid.is_negative() || (mid.is_zero() && m.gap(&int(0), &int(0)).is_negative()) {
        MixedSolution { p: 0.0, exact: Some(int(0)), kind: SolutionKind::PureNotInvest }
    } else {
        MixedSolution { p: 1.0, exact: Some(int(1)), kind: SolutionKind::PureInvest }
    }
}

/// Consumer income when both non-investors pool: equal weight on HA and LA Pe incomes.
pub fn oneshot_pooled_income(params: &MarketParams) -> Result<BigRational> {
    let hi = expected_consumer_income_exact(MenuKind::Pe, Mode::TransparentHigh, false, params)?;
    let lo = expected_consumer_income_exact(MenuKind::Pe, Mode::TransparentLow, false, params)?;
    Ok(frac(1, 2) * hi + frac(1, 2) * lo)
}
