//! ADMM on the distortion model
//!
//! ```text
//! min ½‖S_D(c − c_o)‖²  s.t.  papr(x) ≤ α,  ‖S_F c‖² ≤ β‖S_D c‖²,  Ac = x
//! ```
//!
//! splitting on the coupling constraint `Ac = x`.

mod engine;
mod error;
mod kkt;
mod params;

pub use engine::{direct_solve, validate_original, AdmmDirect, DirectIterate, DirectOutput, DirectReport, DirectState};
pub use error::EngineError;
pub use kkt::{direct_kkt_residual, KktBreakdown};
pub use params::AdmmParams;
