//! Transmitter-to-receiver chain and link metrics.

mod error;
pub mod metrics;
pub mod multipath;
pub mod noise;
pub mod psd;
pub mod sspa;

pub use error::ChannelError;
pub use metrics::{ber, ccdf, evm_db, evm_ratio, MetricAccumulator};
pub use multipath::{zf_equalize, Multipath, MultipathProfile};
pub use noise::{awgn, awgn_with_variance, energy_per_bit, noise_variance};
pub use psd::{welch, Psd, Window};
pub use sspa::{Sspa, SspaParams};
