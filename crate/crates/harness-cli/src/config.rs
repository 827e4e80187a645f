//! Experiment configuration.
//!
//! Files are line-based `key = value` text. `#` starts a comment, list values are
//! comma separated, and unknown keys are rejected. Command-line flags are applied
//! afterwards through [`Overrides`], so they always win over the file.
//!
//! | key | default | meaning |
//! |-----|---------|---------|
//! | `n_carriers` | 64 | subcarriers N |
//! | `free` | 12 | free (reserved) carriers: DC plus the top `free − 1` bins |
//! | `data` | N − free | optional consistency check |
//! | `ell` | 4 | oversampling factor ℓ |
//! | `constellation` | qam16 | `qpsk` or `qam16` |
//! | `symbols` | 5000 | OFDM symbols per curve |
//! | `alpha_db` | 4.0 | PAPR target |
//! | `beta` | 0, 0.15, 0.3 | free-carrier power ratios for the ADMM solvers |
//! | `solver` | original, rcf, direct, relax | curves to run (`none` is an alias of `original`) |
//! | `rho`, `rho_tilde` | 100 (direct) / 300, 100 (relax) | penalties |
//! | `iters` | 5 | ADMM iterations |
//! | `eps` | 1e-8 | ADMM iterate-change stopping threshold |
//! | `rcf_iters` | 10 | clipping-and-filtering passes |
//! | `rcf_target_db` | `alpha_db` | RCF clipping target |
//! | `seed` | 1 | master seed |
//! | `ebn0_db` | 0, 2, …, 14 | BER sweep |
//! | `channel` | awgn, multipath | BER channels |
//! | `sspa_p`, `ibo_db` | 3, 4.1 | Rapp smoothing factor and input back-off |
//! | `cp_len` | 64 | cyclic prefix in oversampled samples |
//! | `delays_ns`, `gains` | 0,190,300,400 / 1,0.2,0.07,0.05 | multipath taps |
//! | `bandwidth_hz` | 20e6 | native bandwidth; the sample rate is ℓ times this |
//! | `convergence_iters` | 50 | iterations recorded for residual curves |
//! | `rho_tilde_grid` | 10, 30, 100, 300 | consensus-gap sweep, with ρ = 3ρ̃ |
//! | `consensus_beta` | 0.15 | β used in the consensus-gap sweep |
//! | `consensus_iters` | 500 | relaxed iterations per symbol in that sweep |
//! | `bench_sizes` | 64, 256, 1024 | N values for timing |
//! | `bench_iters`, `bench_reps` | 20, 5 | iterations per timed run, repetitions |
//! | `out` | out | output directory |
//!
//! Multipath delays are nanoseconds of the native-bandwidth signal, rounded onto
//! the oversampled grid. The raw values exceed a symbol if read as samples.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use admm_direct::AdmmParams;
use channel_metrics::MultipathProfile;
use dsp_core::ConstellationKind;

use crate::error::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Solver {
    /// No PAPR processing.
    Original,
    Rcf,
    Direct,
    Relax,
}

impl Solver {
    pub fn is_admm(self) -> bool {
        matches!(self, Solver::Direct | Solver::Relax)
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Solver::Original => "original",
            Solver::Rcf => "rcf",
            Solver::Direct => "direct",
            Solver::Relax => "relax",
        })
    }
}

impl FromStr for Solver {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "none" | "original" => Ok(Solver::Original),
            "rcf" => Ok(Solver::Rcf),
            "direct" => Ok(Solver::Direct),
            "relax" => Ok(Solver::Relax),
            other => Err(HarnessError::Config(format!("unknown solver '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelKind {
    Awgn,
    Multipath,
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChannelKind::Awgn => "awgn",
            ChannelKind::Multipath => "multipath",
        })
    }
}

impl FromStr for ChannelKind {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "awgn" => Ok(ChannelKind::Awgn),
            "multipath" => Ok(ChannelKind::Multipath),
            other => Err(HarnessError::Config(format!("unknown channel '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n_carriers: usize,
    pub n_free: usize,
    pub ell: usize,
    pub constellation: ConstellationKind,
    pub n_symbols: usize,
    pub alpha_db: f64,
    pub betas: Vec<f64>,
    pub solvers: Vec<Solver>,
    /// `None` picks the per-engine default.
    pub rho: Option<f64>,
    pub rho_tilde: Option<f64>,
    pub iters: usize,
    pub eps: f64,
    pub rcf_iters: usize,
    pub rcf_target_db: Option<f64>,
    pub seed: u64,
    pub ebn0_db: Vec<f64>,
    pub channels: Vec<ChannelKind>,
    pub sspa_p: f64,
    pub ibo_db: f64,
    pub cp_len: usize,
    pub delays_ns: Vec<f64>,
    pub gains: Vec<f64>,
    pub bandwidth_hz: f64,
    pub convergence_iters: usize,
    pub rho_tilde_grid: Vec<f64>,
    pub consensus_beta: f64,
    pub consensus_iters: usize,
    pub bench_sizes: Vec<usize>,
    pub bench_iters: usize,
    pub bench_reps: usize,
    pub out_dir: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            n_carriers: 64,
            n_free: 12,
            ell: 4,
            constellation: ConstellationKind::Qam16,
            n_symbols: 5000,
            alpha_db: 4.0,
            betas: vec![0.0, 0.15, 0.3],
            solvers: vec![Solver::Original, Solver::Rcf, Solver::Direct, Solver::Relax],
            rho: None,
            rho_tilde: None,
            iters: 5,
            eps: 1e-8,
            rcf_iters: 10,
            rcf_target_db: None,
            seed: 1,
            ebn0_db: (0..=7).map(|i| 2.0 * i as f64).collect(),
            channels: vec![ChannelKind::Awgn, ChannelKind::Multipath],
            sspa_p: 3.0,
            ibo_db: 4.1,
            cp_len: 64,
            delays_ns: MultipathProfile::default().taps.iter().map(|t| t.0).collect(),
            gains: MultipathProfile::default().taps.iter().map(|t| t.1).collect(),
            bandwidth_hz: 20e6,
            convergence_iters: 50,
            rho_tilde_grid: vec![10.0, 30.0, 100.0, 300.0],
            consensus_beta: 0.15,
            consensus_iters: 500,
            bench_sizes: vec![64, 256, 1024],
            bench_iters: 20,
            bench_reps: 5,
            out_dir: PathBuf::from("out"),
        }
    }
}

/// Values given on the command line.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub solvers: Option<Vec<Solver>>,
    pub betas: Option<Vec<f64>>,
    pub alpha_db: Option<f64>,
    pub rho: Option<f64>,
    pub rho_tilde: Option<f64>,
    pub iters: Option<usize>,
    pub symbols: Option<usize>,
    pub seed: Option<u64>,
    pub out_dir: Option<PathBuf>,
}

fn parse_one<T: FromStr>(key: &str, v: &str) -> Result<T, HarnessError> {
    v.trim().parse().map_err(|_| HarnessError::Config(format!("cannot parse '{}' for key '{key}'", v.trim())))
}

fn parse_list<T: FromStr>(key: &str, v: &str) -> Result<Vec<T>, HarnessError> {
    v.split(',').filter(|s| !s.trim().is_empty()).map(|s| parse_one(key, s)).collect()
}

impl ExperimentConfig {
    /// Parses config text on top of the defaults, then validates.
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let mut cfg = Self::default();
        let mut data: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| HarnessError::Config(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, v) = (key.trim(), value.trim());
            match key {
                "n_carriers" => cfg.n_carriers = parse_one(key, v)?,
                "free" => cfg.n_free = parse_one(key, v)?,
                "data" => data = Some(parse_one(key, v)?),
                "ell" => cfg.ell = parse_one(key, v)?,
                "constellation" => {
                    cfg.constellation = v.parse().map_err(|e: dsp_core::DspError| HarnessError::Config(e.to_string()))?
                }
                "symbols" => cfg.n_symbols = parse_one(key, v)?,
                "alpha_db" => cfg.alpha_db = parse_one(key, v)?,
                "beta" => cfg.betas = parse_list(key, v)?,
                "solver" => cfg.solvers = parse_list(key, v)?,
                "rho" => cfg.rho = Some(parse_one(key, v)?),
                "rho_tilde" => cfg.rho_tilde = Some(parse_one(key, v)?),
                "iters" => cfg.iters = parse_one(key, v)?,
                "eps" => cfg.eps = parse_one(key, v)?,
                "rcf_iters" => cfg.rcf_iters = parse_one(key, v)?,
                "rcf_target_db" => cfg.rcf_target_db = Some(parse_one(key, v)?),
                "seed" => cfg.seed = parse_one(key, v)?,
                "ebn0_db" => cfg.ebn0_db = parse_list(key, v)?,
                "channel" => cfg.channels = parse_list(key, v)?,
                "sspa_p" => cfg.sspa_p = parse_one(key, v)?,
                "ibo_db" => cfg.ibo_db = parse_one(key, v)?,
                "cp_len" => cfg.cp_len = parse_one(key, v)?,
                "delays_ns" => cfg.delays_ns = parse_list(key, v)?,
                "gains" => cfg.gains = parse_list(key, v)?,
                "bandwidth_hz" => cfg.bandwidth_hz = parse_one(key, v)?,
                "convergence_iters" => cfg.convergence_iters = parse_one(key, v)?,
                "rho_tilde_grid" => cfg.rho_tilde_grid = parse_list(key, v)?,
                "consensus_beta" => cfg.consensus_beta = parse_one(key, v)?,
                "consensus_iters" => cfg.consensus_iters = parse_one(key, v)?,
                "bench_sizes" => cfg.bench_sizes = parse_list(key, v)?,
                "bench_iters" => cfg.bench_iters = parse_one(key, v)?,
                "bench_reps" => cfg.bench_reps = parse_one(key, v)?,
                "out" => cfg.out_dir = PathBuf::from(v),
                other => return Err(HarnessError::Config(format!("line {}: unknown key '{other}'", lineno + 1))),
            }
        }
        if let Some(d) = data {
            if d + cfg.n_free != cfg.n_carriers {
                return Err(HarnessError::Config(format!(
                    "data ({d}) + free ({}) must equal n_carriers ({})",
                    cfg.n_free, cfg.n_carriers
                )));
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| HarnessError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<(), HarnessError> {
        if let Some(v) = &o.solvers {
            self.solvers = v.clone();
        }
        if let Some(v) = &o.betas {
            self.betas = v.clone();
        }
        if let Some(v) = o.alpha_db {
            self.alpha_db = v;
        }
        if let Some(v) = o.rho {
            self.rho = Some(v);
        }
        if let Some(v) = o.rho_tilde {
            self.rho_tilde = Some(v);
        }
        if let Some(v) = o.iters {
            self.iters = v;
        }
        if let Some(v) = o.symbols {
            self.n_symbols = v;
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        if let Some(v) = &o.out_dir {
            self.out_dir = v.clone();
        }
        self.validate()
    }

    pub fn m_data(&self) -> usize {
        self.n_carriers - self.n_free
    }

    pub fn rcf_target_db(&self) -> f64 {
        self.rcf_target_db.unwrap_or(self.alpha_db)
    }

    pub fn multipath_profile(&self) -> MultipathProfile {
        MultipathProfile {
            taps: self.delays_ns.iter().copied().zip(self.gains.iter().copied()).collect(),
            sample_rate: self.bandwidth_hz * self.ell as f64,
        }
    }

    /// Engine settings for one ADMM curve.
    pub fn admm_params(&self, solver: Solver, beta: f64) -> AdmmParams {
        let base = match solver {
            Solver::Relax => AdmmParams::relax_default(),
            _ => AdmmParams::direct_default(),
        };
        AdmmParams {
            beta,
            rho: self.rho.unwrap_or(base.rho),
            rho_tilde: self.rho_tilde.unwrap_or(base.rho_tilde),
            max_iters: self.iters,
            eps: self.eps,
            ..base.with_alpha_db(self.alpha_db)
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: String| Err(HarnessError::Config(m));
        if self.n_carriers < 2 || self.n_free == 0 || self.n_free >= self.n_carriers {
            return bad(format!("need 0 < free ({}) < n_carriers ({})", self.n_free, self.n_carriers));
        }
        if self.ell == 0 {
            return bad("ell must be at least 1".into());
        }
        if self.n_symbols == 0 {
            return bad("symbols must be at least 1".into());
        }
        if !(self.alpha_db > 0.0 && self.alpha_db.is_finite()) {
            return bad(format!("alpha_db must be positive, got {}", self.alpha_db));
        }
        if self.betas.is_empty() || self.betas.iter().any(|b| !(*b >= 0.0 && b.is_finite())) {
            return bad(format!("beta values must be non-negative, got {:?}", self.betas));
        }
        if self.solvers.is_empty() {
            return bad("at least one solver is required".into());
        }
        if self.iters == 0 || self.rcf_iters == 0 {
            return bad("iteration counts must be at least 1".into());
        }
        if self.solvers.contains(&Solver::Relax) {
            let p = self.admm_params(Solver::Relax, 0.0);
            if !(p.rho > 2.0 * p.rho_tilde && p.rho_tilde > 0.0) {
                return bad(format!("relax requires rho > 2·rho_tilde > 0, got rho={} rho_tilde={}", p.rho, p.rho_tilde));
            }
        }
        if self.delays_ns.len() != self.gains.len() || self.delays_ns.is_empty() {
            return bad("delays_ns and gains must have the same non-zero length".into());
        }
        if !(self.sspa_p > 0.0) {
            return bad(format!("sspa_p must be positive, got {}", self.sspa_p));
        }
        if self.rho_tilde_grid.iter().any(|r| !(*r > 0.0)) {
            return bad("rho_tilde_grid values must be positive".into());
        }
        if self.bench_iters == 0 || self.bench_reps == 0 {
            return bad("bench_iters and bench_reps must be at least 1".into());
        }
        Ok(())
    }
}
