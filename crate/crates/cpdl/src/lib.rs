//! Contextual preference distribution learning for discrete choice problems.
//!
//! This crate learns per-edge cost distributions of a shortest-path choice
//! problem from aggregated edge-selection frequencies, then uses the learned
//! distributions to generate cost scenarios for a risk-averse (CVaR)
//! driver-rider assignment.
//!
//! The pipeline has two phases:
//!
//! 1. **Estimate.** An encoder maps a per-edge feature matrix to the location
//!    and scale of a log-normal cost distribution. Training matches moments of
//!    the induced choice distribution to observed choice frequencies with a
//!    score-function gradient estimator ([`trainer`]).
//! 2. **Optimize.** The trained encoder generates cost scenarios for unseen
//!    contexts, which feed a scenario-based CVaR assignment ([`decision`]).
//!
//! [`datagen`] provides the synthetic data-generating process, [`metrics`]
//! the evaluation suite, and [`experiment`] the CLI-facing orchestration.

pub mod config;
pub mod datagen;
pub mod decision;
pub mod dist;
pub mod encoder;
pub mod experiment;
pub mod features;
pub mod grid;
pub mod metrics;
pub mod rng;
pub mod trainer;

pub use dist::{PrefDistParams, SIGMA_FLOOR};
pub use encoder::Encoder;
pub use features::FeatureMatrix;
pub use grid::{GridGraph, OdSpec, PathIndicator, Topology};
