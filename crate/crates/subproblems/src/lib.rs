//! Subproblem solvers shared by the ADMM engines.
//!
//! * [`c_update`]: the carrier prox step under the free-carrier power bound
//!   `‖S_F c‖² ≤ β‖S_D c‖²`, solved through a scalar multiplier μ.
//! * [`z_projection`] / [`x_update`]: projection onto the PAPR set via the
//!   factorization `x = t z`, with γ found by bisection.
//! * [`uw_update`]: the closed-form auxiliary step of the relaxed model.

mod c_update;
mod error;
mod uw_update;
mod x_update;

pub use c_update::{c_objective, c_update, CUpdateResult};
pub use error::SubproblemError;
pub use uw_update::uw_update;
pub use x_update::{x_update, z_of_gamma, z_projection, BisectionConfig, XUpdateResult, ZProjection};
