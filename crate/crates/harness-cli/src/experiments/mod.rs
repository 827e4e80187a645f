//! Monte Carlo drivers. Each `run_*` returns typed rows; the matching `*_csv`
//! function renders them.

pub mod ber;
pub mod bench;
pub mod convergence;
pub mod psd;
pub mod table2;

pub use ber::{ber_csv, run_ber, BerRow};
pub use bench::{bench_csv, fit_scaling, run_bench, BenchReport, BenchRow, ScalingFit};
pub use convergence::{consensus_csv, convergence_csv, run_consensus, run_convergence, ConsensusRow, ConvergenceRow};
pub use psd::{psd_csv, psd_summary_csv, run_psd, PsdReport};
pub use table2::{ccdf_csv, ccdf_rows, default_thresholds, run_ccdf, run_table2, table2_csv, table2_row, CcdfRow, Table2Row};
