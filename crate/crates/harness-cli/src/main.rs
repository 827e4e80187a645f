use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use harness_cli::experiments::{self as ex};
use harness_cli::{csv, ExperimentConfig, HarnessError, Overrides, Solver};

#[derive(Debug, Subcommand)]
enum Command {
    /// EVM per solver and β
    Table2,
    /// PAPR CCDF curves
    Ccdf,
    /// Residual curves and the consensus-gap sweep
    Convergence,
    /// BER after the SSPA
    Ber,
    /// Transmit spectra after the SSPA
    Psd,
    /// Per-iteration timing against transform size
    Bench,
}

#[derive(Debug, Parser)]
#[command(name = "paprsim", version, about = "OFDM PAPR reduction experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// key = value config file; flags override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Comma-separated solvers: original, rcf, direct, relax
    #[arg(long, global = true, value_delimiter = ',')]
    solver: Option<Vec<String>>,
    /// Comma-separated free-carrier power ratios
    #[arg(long, global = true, value_delimiter = ',')]
    beta: Option<Vec<f64>>,
    #[arg(long, global = true)]
    alpha_db: Option<f64>,
    #[arg(long, global = true)]
    rho: Option<f64>,
    #[arg(long, global = true)]
    rho_tilde: Option<f64>,
    #[arg(long, global = true)]
    iters: Option<usize>,
    #[arg(long, global = true)]
    symbols: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

fn load(cli: &Cli) -> Result<ExperimentConfig, HarnessError> {
    let mut cfg = match &cli.config {
        Some(p) => ExperimentConfig::from_file(p)?,
        None => ExperimentConfig::default(),
    };
    let solvers = cli
        .solver
        .as_ref()
        .map(|v| v.iter().map(|s| s.parse()).collect::<Result<Vec<Solver>, _>>())
        .transpose()?;
    cfg.apply(&Overrides {
        solvers,
        betas: cli.beta.clone(),
        alpha_db: cli.alpha_db,
        rho: cli.rho,
        rho_tilde: cli.rho_tilde,
        iters: cli.iters,
        symbols: cli.symbols,
        seed: cli.seed,
        out_dir: cli.out.clone(),
    })?;
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<Vec<PathBuf>, HarnessError> {
    let cfg = load(cli)?;
    let dir = cfg.out_dir.clone();
    let files = match cli.command {
        Command::Table2 => vec![("table2.csv", ex::table2_csv(&ex::run_table2(&cfg)?))],
        Command::Ccdf => vec![("ccdf.csv", ex::ccdf_csv(&ex::run_ccdf(&cfg)?))],
        Command::Convergence => vec![
            ("convergence.csv", ex::convergence_csv(&ex::run_convergence(&cfg)?)),
            ("consensus.csv", ex::consensus_csv(&ex::run_consensus(&cfg)?)),
        ],
        Command::Ber => vec![("ber.csv", ex::ber_csv(&ex::run_ber(&cfg)?))],
        Command::Psd => {
            let r = ex::run_psd(&cfg)?;
            vec![("psd.csv", ex::psd_csv(&r)), ("psd_summary.csv", ex::psd_summary_csv(&r))]
        }
        Command::Bench => {
            let r = ex::run_bench(&cfg)?;
            if let Some(f) = r.fit {
                eprintln!("n log n fit: R2 = {:.4} (free slope {:.3}, R2 {:.4})", f.r2, f.free_slope, f.free_r2);
            }
            vec![("bench.csv", ex::bench_csv(&r))]
        }
    };
    files.into_iter().map(|(name, content)| csv::write(&dir, name, &content)).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("paprsim: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
