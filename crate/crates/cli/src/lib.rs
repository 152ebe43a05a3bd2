//! Command-line experiments over `hbspace`.
//!
//! Each subcommand writes `<out>/<experiment>.json` (inputs, config, outputs,
//! curves and verdicts) and one `<experiment>_<curve>.csv` per curve; wall-clock
//! times go to `<out>/timings.json` so the result files are reproducible.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

pub mod config;
pub mod experiments;
pub mod record;

use config::{parse_tolerance, ExperimentConfig, Format};
use experiments::Space;
use record::{write_atomic, ResultRecord};

/// A bad flag, config file or input expression.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Parser)]
#[command(name = "hbspace", version, about = "Experiments on de Branges-Rovnyak spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// Ascending truncation orders, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub orders: Vec<usize>,
    /// Boundary grid size (power of two).
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Output directory.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Override a tolerance, `name=value`; repeatable.
    #[arg(long, global = true, value_parser = parse_tolerance)]
    pub tol: Vec<(String, f64)>,
    /// TOML file with any of orders, tolerances, grid, out, seed, format.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extreme or non-extreme.
    Classify {
        #[arg(long)]
        b: String,
    },
    /// Pythagorean mate of a rational b, or a check of a given pair.
    Mate {
        #[arg(long)]
        b: String,
        #[arg(long)]
        a: Option<String>,
    },
    /// H(b) norm through f+ against the defect-operator oracle.
    Norm {
        #[arg(long, default_value = "(1+z)/2")]
        b: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long, default_value = "1")]
        f: String,
    },
    /// f = W g + p and the membership curve.
    Decompose {
        #[arg(long, default_value = "(1+z)/2", conflicts_with = "zeros")]
        b: String,
        #[arg(long)]
        a: Option<String>,
        /// Boundary zeros of the mate, repeated for multiplicity.
        #[arg(long)]
        zeros: Option<String>,
        #[arg(long, default_value = "1/(2-z)")]
        f: String,
    },
    /// Best polynomial approximation errors.
    Density {
        #[arg(long, default_value = "(1+z)/2")]
        b: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long, default_value = "(z-1)(1-(z/2)^21)/(1-z/2)")]
        f: String,
    },
    /// Composition by a self-map fixing the boundary zeros.
    Compop {
        #[arg(long, default_value = "(1+z^2)/2")]
        b: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long, default_value = "(z+0.5)/(1+0.5z)")]
        phi: String,
    },
    /// Composition by a finite Blaschke product between two spaces.
    Crossop {
        #[arg(long, default_value = "(1+z)/2")]
        b: String,
        #[arg(long, default_value = "(1+z^2)/2")]
        target: String,
        /// Zeros of the Blaschke product.
        #[arg(long, default_value = "0,0")]
        zeros: String,
    },
    /// Green's function, prime function and harmonic measure checks.
    Annulus {
        #[arg(long, default_value_t = 0.3)]
        q: f64,
    },
    /// Generalized Blaschke product on the annulus and its period.
    Gblaschke {
        #[arg(long, default_value_t = 0.3)]
        q: f64,
        #[arg(long, default_value = "0.5+0.2i; -0.1-0.6i")]
        zeros: String,
        /// Harmonic-measure coefficient; solved for when absent.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<f64>,
        #[arg(long, default_value = "z")]
        f: String,
    },
    /// Every experiment with reference inputs.
    Suite,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Mate { .. } => "mate",
            Command::Norm { .. } => "norm",
            Command::Decompose { .. } => "decompose",
            Command::Density { .. } => "density",
            Command::Compop { .. } => "compop",
            Command::Crossop { .. } => "crossop",
            Command::Annulus { .. } => "annulus",
            Command::Gblaschke { .. } => "gblaschke",
            Command::Suite => "suite",
        }
    }
}

pub fn build_config(common: &Common) -> Result<ExperimentConfig, UsageError> {
    let mut cfg = match &common.config {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    if !common.orders.is_empty() {
        cfg.orders = common.orders.clone();
    }
    if let Some(g) = common.grid {
        cfg.grid = g;
    }
    if let Some(o) = &common.out {
        cfg.out = o.clone();
    }
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    if let Some(f) = common.format {
        cfg.format = f;
    }
    cfg.set_tolerances(common.tol.iter().cloned().collect())?;
    cfg.validate()?;
    Ok(cfg)
}

fn execute(command: &Command, cfg: &ExperimentConfig) -> Result<Vec<ResultRecord>, hbspace::Error> {
    use experiments as e;
    let one = |r: Result<ResultRecord, hbspace::Error>| r.map(|r| vec![r]);
    match command {
        Command::Classify { b } => one(e::classify("classify", b, None, cfg)),
        Command::Mate { b, a } => one(e::mate("mate", b, a.as_deref(), cfg)),
        Command::Norm { b, a, f } => one(e::norm("norm", b, a.as_deref(), f, cfg)),
        Command::Decompose { b, a, zeros, f } => {
            let space = match zeros {
                Some(z) => Space::Zeros(z),
                None => Space::Symbol(b, a.as_deref()),
            };
            one(e::decomposition("decompose", space, f, cfg))
        }
        Command::Density { b, a, f } => one(e::density("density", b, a.as_deref(), f, cfg)),
        Command::Compop { b, a, phi } => one(e::compop("compop", b, a.as_deref(), phi, cfg)),
        Command::Crossop { b, target, zeros } => one(e::crossop("crossop", b, target, zeros, cfg)),
        Command::Annulus { q } => one(e::annulus("annulus", *q, cfg)),
        Command::Gblaschke { q, zeros, c, f } => one(e::gblaschke("gblaschke", *q, zeros, *c, f, cfg)),
        Command::Suite => e::suite(cfg),
    }
}

/// Parse `args`, run the subcommand and write its results. Returns the exit
/// code: 0 when every verdict passes, 1 on a failed verdict, 2 on bad usage.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let cfg = match build_config(&cli.common) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let start = Instant::now();
    let records = match execute(&cli.command, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let seconds = start.elapsed().as_secs_f64();
    for r in &records {
        print!("{}", r.summary());
        if let Err(e) = r.write(&cfg.out, cfg.format.json(), cfg.format.csv()) {
            eprintln!("error: cannot write results to {}: {e}", cfg.out.display());
            return 2;
        }
    }
    let timings = serde_json::json!({ "command": cli.command.name(), "seconds": seconds });
    if let Err(e) = write_atomic(&cfg.out, "timings.json", timings.to_string().as_bytes()) {
        eprintln!("error: cannot write timings: {e}");
        return 2;
    }
    let failed = records.iter().filter(|r| !r.pass).count();
    println!(
        "{} experiment(s), {} failed, {:.2} s; results in {}",
        records.len(),
        failed,
        seconds,
        cfg.out.display()
    );
    if failed > 0 {
        1
    } else {
        0
    }
}
