//! ADMM on the relaxed model
//!
//! ```text
//! min ½‖S_D(c − c_o)‖² + (ρ̃/2)‖u − w‖²
//! s.t. papr(x) ≤ α,  ‖S_F c‖² ≤ β‖S_D c‖²,  Ac = u,  x = w
//! ```
//!
//! With ρ > 2ρ̃ the augmented Lagrangian decreases by at least
//! `λ_min(Q)(‖Δu‖² + ‖Δw‖²)` per iteration once `y1 = ρ̃(u − w) = −y2`.
//! The engine records that margin, the multiplier identities and the
//! iteration-count bound that follows from them.

mod bounds;
mod engine;
mod feasible;

pub use admm_direct::{AdmmParams, EngineError};
pub use bounds::{descent_check, lambda_min_q, multiplier_identity_residual, theorem3_bound, DescentCheck, IterationBound};
pub use engine::{relax_solve, AdmmRelax, MultiplierInit, RelaxIterate, RelaxOutput, RelaxReport, RelaxStart, RelaxState};
pub use feasible::{feasible_start, FeasibleStart};
