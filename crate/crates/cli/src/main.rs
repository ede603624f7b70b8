//! `abh`: solve, expand, evaluate bounds and run audits for
//! (α,β)-harmonic functions on the unit disk.
//!
//! Exit codes: 0 success, 1 audit violations, 2 bad arguments, 3 bad input file.

use abharmonic::audit::{self, AuditResult, SuiteConfig};
use abharmonic::boundary::BoundaryFunction;
use abharmonic::bounds::{full_report, HolderPair};
use abharmonic::harmonic::{
    coefficients_from_boundary, evaluate_grid, polar_grid, write_grid_csv, PoissonSolver,
};
use abharmonic::kernel::{make_params, AlphaBeta};
use abharmonic::{Error, Exec};
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "abh",
    version,
    about = "(alpha, beta)-harmonic functions on the unit disk"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the Dirichlet problem and write `x,y,re,im` on a polar grid.
    Solve {
        /// Boundary document (JSON with `fourier` or `samples`).
        #[arg(long)]
        boundary: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Series coefficients of the solution as JSON.
    Expand {
        #[arg(long)]
        boundary: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Every bound constant for the parameters and exponent, as JSON.
    Bounds {
        #[command(flatten)]
        common: Common,
    },
    /// Run an audit suite; exits 1 when any case is violated.
    Audit {
        /// One of growth, integral_means, means, distortion, partials, means_partials,
        /// inequalities, sharpness, lemmas, kernel, identities, coefficients, all.
        #[arg(long, default_value = "inequalities")]
        suite: String,
        /// Number of random boundaries.
        #[arg(long, default_value_t = 100)]
        boundaries: usize,
        /// Also write `check,case,r,margin` rows here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Run cases sequentially.
        #[arg(long)]
        sequential: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Kernel mean identity, residual order and integral identities; exits 1 on violations.
    Identities {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Exponent in [1, inf]; `inf` accepted.
    #[arg(long)]
    p: Option<HolderPair>,
    /// Quadrature nodes on the circle.
    #[arg(long, default_value_t = 4096)]
    nodes: usize,
    /// Polar grid as NRxNT.
    #[arg(long, value_parser = parse_grid, default_value = "8x16")]
    grid: (usize, usize),
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn params(&self) -> Result<AlphaBeta, Error> {
        make_params(self.alpha.unwrap_or(0.0), self.beta.unwrap_or(0.0))
    }
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected NRxNT, got {s:?}"))?;
    let nr: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad radial count {a:?}"))?;
    let nt: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad angular count {b:?}"))?;
    if nr == 0 || nt == 0 {
        return Err("grid counts must be positive".into());
    }
    Ok((nr, nt))
}

enum Failure {
    Args(String),
    File(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Args(e.to_string())
    }
}

fn read_boundary(path: &Path) -> Result<BoundaryFunction, Failure> {
    BoundaryFunction::read_json(path).map_err(|e| Failure::File(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, body: &[u8]) -> Result<(), Failure> {
    let res = match out {
        Some(p) => std::fs::write(p, body),
        None => std::io::stdout().write_all(body),
    };
    res.map_err(|e| Failure::File(format!("cannot write output: {e}")))
}

fn with_newline(mut s: String) -> Vec<u8> {
    s.push('\n');
    s.into_bytes()
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Solve { boundary, common } => {
            let p = common.params()?;
            let f = read_boundary(&boundary)?;
            let solver = PoissonSolver::new(&p, &f, common.nodes)?;
            let pts = polar_grid(common.grid.0, common.grid.1);
            let vals = evaluate_grid(Exec::default(), &pts, |z| solver.eval(z))?;
            let mut buf = Vec::new();
            write_grid_csv(&mut buf, &pts, &vals)?;
            emit(&common.out, &buf)?;
            Ok(true)
        }
        Command::Expand { boundary, common } => {
            let p = common.params()?;
            let f = read_boundary(&boundary)?;
            emit(
                &common.out,
                &with_newline(coefficients_from_boundary(&p, &f)?.to_json()),
            )?;
            Ok(true)
        }
        Command::Bounds { common } => {
            let p = common.params()?;
            let hp = common.p.unwrap_or(HolderPair::new(2.0)?);
            emit(&common.out, &with_newline(full_report(&p, hp)?.to_json()))?;
            Ok(true)
        }
        Command::Audit {
            suite,
            boundaries,
            csv,
            sequential,
            common,
        } => {
            let results =
                audit::run_suite(&suite, &suite_config(&common, boundaries, sequential)?)?;
            emit(&common.out, &with_newline(audit::results_to_json(&results)))?;
            if let Some(path) = csv {
                write_csv(&path, &results)?;
            }
            Ok(results.iter().all(AuditResult::passed))
        }
        Command::Identities { common } => {
            let results = audit::run_suite("identities", &suite_config(&common, 0, false)?)?;
            emit(&common.out, &with_newline(audit::results_to_json(&results)))?;
            Ok(results.iter().all(AuditResult::passed))
        }
    }
}

fn suite_config(
    common: &Common,
    boundaries: usize,
    sequential: bool,
) -> Result<SuiteConfig, Failure> {
    let mut cfg = SuiteConfig {
        seed: common.seed,
        boundaries,
        ..SuiteConfig::default()
    };
    if common.alpha.is_some() || common.beta.is_some() {
        cfg.params = vec![(common.alpha.unwrap_or(0.0), common.beta.unwrap_or(0.0))];
    }
    for &(a, b) in &cfg.params {
        make_params(a, b)?;
    }
    if let Some(hp) = common.p {
        cfg.exponents = vec![hp];
    }
    cfg.nodes = common.nodes;
    if sequential {
        cfg.exec = Exec::Sequential;
    }
    Ok(cfg)
}

fn write_csv(path: &Path, results: &[AuditResult]) -> Result<(), Failure> {
    let mut buf = Vec::new();
    audit::write_results_csv(&mut buf, results)?;
    std::fs::write(path, buf)
        .map_err(|e| Failure::File(format!("cannot write {}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Args(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::File(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
