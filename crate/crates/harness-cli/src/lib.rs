//! Reproducible Monte Carlo experiments for OFDM PAPR reduction.
//!
//! Symbols are generated from counter-based RNG streams and processed in parallel
//! with ordered collection, so outputs depend only on the configuration and seed.

pub mod config;
pub mod csv;
mod error;
pub mod experiments;
pub mod pipeline;
pub mod seed;

pub use config::{ChannelKind, ExperimentConfig, Overrides, Solver};
pub use error::HarnessError;
