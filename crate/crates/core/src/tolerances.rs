//! Centralized numeric tolerances. Every comparison threshold used by the
//! library and its tests is defined here with its rationale.

/// Comparison tolerance for closed-form money and probability values.
///
/// Quantities are short compositions of exact decimal inputs; 1e-9 leaves
/// ample room for f64 rounding while still catching any formula slip.
pub const EXACT: f64 = 1e-9;

/// Equality test for payoff differences in best-response comparisons.
///
/// Shares are O(1) sums of a handful of products; genuine ties (for example
/// at alpha exactly on a hyperbola) evaluate to within a few ulps of zero.
pub const TIE: f64 = 1e-12;

/// Bisection stopping width for root finding.
pub const BISECTION: f64 = 1e-13;

/// Allowed disagreement between a bisection root and its closed form.
pub const ROOT_MATCH: f64 = 1e-6;

/// Monte Carlo agreement width in standard errors.
pub const MC_SIGMAS: f64 = 3.0;

/// Sum-to-one tolerance for observation models.
pub const PROB_SUM: f64 = 1e-12;

/// Log-space versus direct-space posterior agreement (counts up to 50).
pub const LOG_DIRECT: f64 = 1e-9;
