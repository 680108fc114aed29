//! Credence-goods market model with diagnostic uncertainty and obfuscated
//! expert ability.
//!
//! Modules mirror the analysis pipeline: [`market`] holds primitives and
//! closed-form consumer incomes, [`thresholds`] the price-setting and
//! signaling bounds, [`beliefs`] Bayesian consumer learning, [`equilibria`]
//! the consumer-attraction registry with Nash/level-1 analysis and the
//! one-shot game, and [`abm`] a seeded simulator of the repeated market.

pub mod abm;
pub mod beliefs;
pub mod equilibria;
pub mod error;
pub mod exact;
pub mod fmt;
pub mod market;
pub mod rng;
pub mod thresholds;
pub mod tolerances;

pub use error::ModelError;
pub use market::MarketParams;
