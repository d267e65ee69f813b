mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use parity_wilson::config::{CaseSelection, OutputFormat, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "parity-wilson", version, about = "Wilson polynomial families, parity eigenproblems and Lorentz audits")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format: json or csv.
    #[arg(long, global = true, value_parser = parse_format)]
    pub format: Option<OutputFormat>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// key = value configuration file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// A or B.
    #[arg(long, value_parser = parse_case)]
    pub case: Option<CaseSelection>,
    /// Value of B for case B (`1.5`, `3/2`).
    #[arg(long)]
    pub b: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Monic polynomials P_0..P_n.
    Poly {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: Option<usize>,
        /// corrected or printed recurrence; default is the hypergeometric route.
        #[arg(long)]
        recurrence: Option<String>,
    },
    /// Eigenvalue and polynomial part of f_n.
    Eigen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Master-equation residual of f_n on a W grid.
    Residual {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: Option<usize>,
        /// Defaults to 2n+1.
        #[arg(long)]
        ell1: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        m: f64,
        /// Comma separated W values; defaults to ten points from 1.1 - B in steps of 0.8.
        #[arg(long)]
        w: Option<String>,
    },
    /// Second solution h_n = g_n u_n on a lattice.
    SecondSolution {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "2")]
        z0: String,
        #[arg(long, default_value_t = 8)]
        length: usize,
    },
    /// Coefficients c_n of the parity reconstruction.
    Coeffs {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_max: Option<usize>,
        /// corrected or printed.
        #[arg(long, default_value = "corrected")]
        convention: String,
        /// Also compare against generic projection.
        #[arg(long)]
        dual: bool,
    },
    /// Weighted L2 residual of the truncated reconstruction.
    Reconstruct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value = "corrected")]
        convention: String,
    },
    /// Algebra audit of a finite-dimensional representation.
    Lorentz {
        /// vector or j1,j2.
        #[arg(long, default_value = "vector")]
        rep: String,
    },
    /// Least-squares search for ell1^2 with a polynomial ansatz.
    Scan {
        #[arg(long)]
        b: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        m: f64,
        #[arg(long)]
        n: Option<usize>,
        /// Ansatz degree, defaults to n.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Lift the n caps.
        #[arg(long)]
        extended: bool,
    },
    /// Equation-to-check coverage table.
    Traceability,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e: parity_wilson::Error| e.to_string())
}

fn parse_case(s: &str) -> Result<CaseSelection, String> {
    s.parse().map_err(|e: parity_wilson::Error| e.to_string())
}

/// Why a run stopped.
pub enum Failure {
    Usage(String),
    Compute(String),
    ChecksFailed,
}

impl From<parity_wilson::Error> for Failure {
    fn from(e: parity_wilson::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn load_config(global: &GlobalArgs) -> Result<RunConfig, Failure> {
    let mut cfg = match &global.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            RunConfig::from_text(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        None => RunConfig::default(),
    };
    if let Some(f) = global.format {
        cfg.format = f;
    }
    if let Some(o) = &global.out {
        cfg.out = Some(o.clone());
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = load_config(&cli.global)?;
    let name = commands::name(&cli.command);
    let (payload, ok) = commands::dispatch(cli.command, &cfg)?;
    let text = output::render(&payload, cfg.format);
    let dest = output::destination(cfg.out.as_deref(), name, cfg.format);
    output::emit(&text, dest.as_deref()).map_err(|e| Failure::Compute(format!("writing output: {e}")))?;
    if ok {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::ChecksFailed) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
    }
}
