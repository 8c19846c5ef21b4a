use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Parser, Subcommand};
use npirred::oracle::factor_completely_with;
use npirred::report::{analyze_polynomial, analyze_uadic, AnalysisOptions, DEFAULT_TRIAL_BOUND, REPORT_SCHEMA};
use npirred::svg::render_panels;
use npirred::{BigInt, Execution, IntPoly};

/// Newton polygon irreducibility certificates for integer polynomials.
#[derive(Parser)]
#[command(name = "npirred", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every criterion and print a JSON report.
    #[command(group(ArgGroup::new("input").required(true).args(["poly", "uadic"])))]
    Analyze {
        /// Polynomial in x, e.g. "x^3-2" or ascending coefficients "2,2,1,1".
        #[arg(long)]
        poly: Option<String>,
        /// Coefficients as polynomials in u, e.g. "0,1;;0,1;1" for u + u y^2 + y^3.
        #[arg(long)]
        uadic: Option<String>,
        /// Extra prime to analyse; may be repeated.
        #[arg(long = "prime")]
        primes: Vec<BigInt>,
        /// Trial-division bound for candidate primes.
        #[arg(long, default_value_t = DEFAULT_TRIAL_BOUND)]
        trial_bound: u64,
        /// Cross-check against the factorisation oracle (degree <= 8).
        #[arg(long)]
        oracle: bool,
        /// Write Newton polygon drawings to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Do not spread per-prime work across threads.
        #[arg(long)]
        sequential: bool,
    },
    /// Factor completely by Kronecker's method (degree <= 8).
    Oracle {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        sequential: bool,
    },
    /// Print the JSON schema of the analysis report.
    Schema,
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze {
            poly,
            uadic,
            primes,
            trial_bound,
            oracle,
            svg,
            json,
            sequential,
        } => {
            let report = match (poly, uadic) {
                (Some(text), _) => {
                    let opts = AnalysisOptions {
                        primes,
                        trial_bound,
                        oracle,
                        exec: execution(sequential),
                    };
                    analyze_polynomial(&text, &opts)?
                }
                (None, Some(text)) => analyze_uadic(&text)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            if let Some(path) = &svg {
                let drawing = render_panels(&report.svg_panels());
                fs::write(path, drawing).with_context(|| format!("writing {}", path.display()))?;
            }
            emit(&(report.to_json() + "\n"), json.as_ref())?;
            Ok(report.exit_code() as u8)
        }
        Command::Oracle { poly, sequential } => {
            let f = IntPoly::parse(&poly)?;
            let fac = factor_completely_with(&f, execution(sequential))?;
            println!("{}", serde_json::to_string_pretty(&fac)?);
            Ok(if fac.is_irreducible() { 0 } else { 2 })
        }
        Command::Schema => {
            print!("{REPORT_SCHEMA}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
