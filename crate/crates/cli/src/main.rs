//! Command-line front end for the signed clique family toolkit.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
//! 3 I/O failure.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use seidel_spectra::closed_form::{charpoly_closed, spectrum_closed, DEFAULT_TOL};
use seidel_spectra::verify::{sweep, verify_instance, SweepConfig};
use seidel_spectra::{Error, FamilyParams};

#[derive(Parser)]
#[command(
    name = "seidel-spectra",
    version,
    about = "Exact spectra of signed complete graphs whose negative edges form k cliques of order h sharing an (h-p)-clique"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues with multiplicities from the closed form.
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Characteristic polynomial det(S - λI), factored by default.
    Charpoly {
        #[command(flatten)]
        params: ParamArgs,
        /// Print the full coefficient vector, ascending degree.
        #[arg(long)]
        expanded: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Compare the closed form with the brute-force oracle.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Verify every (h, p, k) up to the given bounds.
    Sweep {
        #[arg(long)]
        h_max: usize,
        #[arg(long)]
        k_max: usize,
        #[arg(long, env = "SEIDEL_SPECTRA_N_CAP", default_value_t = seidel_spectra::verify::DEFAULT_N_CAP)]
        n_cap: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Serialize the signed complete graph.
    Export {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Dot)]
        format: OutputFormat,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Clique order.
    #[arg(long)]
    h: usize,
    /// Private vertices per clique.
    #[arg(long)]
    p: usize,
    /// Number of cliques.
    #[arg(long)]
    k: usize,
}

impl ParamArgs {
    fn build(&self) -> Result<FamilyParams, Failure> {
        FamilyParams::new(self.h, self.p, self.k).map_err(Failure::from)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
    Csv,
    Dot,
}

enum Failure {
    Invalid(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::DegenerateFamily(_) | Error::UnsupportedShape(_) => {
                Failure::Invalid(e.to_string())
            }
            other => Failure::Invalid(format!("computation failed: {other}")),
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
    s.push('\n');
    s
}

fn no_dot(format: OutputFormat) -> Result<(), Failure> {
    if format == OutputFormat::Dot {
        Err(Failure::Invalid(
            "the dot format is only valid for export".into(),
        ))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Spectrum {
            params,
            tol,
            format,
        } => {
            no_dot(format)?;
            let params = params.build()?;
            let spectrum = spectrum_closed(&params, tol)?;
            let cubic = charpoly_closed(&params)?.cubic;
            let text = match format {
                OutputFormat::Json => json_text(&render::spectrum_json(&params, &spectrum, &cubic)),
                OutputFormat::Csv => render::spectrum_csv(&spectrum),
                _ => render::spectrum_human(&params, &spectrum, &cubic),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly {
            params,
            expanded,
            format,
        } => {
            no_dot(format)?;
            let params = params.build()?;
            let f = charpoly_closed(&params)?;
            let text = match format {
                OutputFormat::Json => json_text(&render::charpoly_json(&params, &f, expanded)),
                OutputFormat::Csv => render::charpoly_csv(&f),
                _ if expanded => format!("{}\n", render::coeff_list(&f.expand())),
                _ => format!("{f}\n"),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            params,
            tol,
            format,
        } => {
            no_dot(format)?;
            let params = params.build()?;
            let report = verify_instance(&params, tol)?;
            let text = match format {
                OutputFormat::Json => json_text(&render::report_json(&report)),
                OutputFormat::Csv => render::report_csv(&report),
                _ => render::report_human(&report, tol),
            };
            print!("{text}");
            Ok(if report.passed(tol) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Sweep {
            h_max,
            k_max,
            n_cap,
            tol,
            out,
            format,
        } => {
            if h_max < 2 || k_max < 2 {
                return Err(Failure::Invalid(format!(
                    "sweep bounds must satisfy h_max >= 2 and k_max >= 2 (got {h_max}, {k_max})"
                )));
            }
            if !matches!(format, OutputFormat::Csv | OutputFormat::Json) {
                return Err(Failure::Invalid("sweep writes csv or json".into()));
            }
            let config = SweepConfig {
                h_max,
                k_max,
                n_cap,
                tol,
            };
            let summary = sweep(&config);
            let body = match format {
                OutputFormat::Json => json_text(&render::sweep_json(&summary)),
                _ => render::sweep_csv(&summary),
            };
            fs::write(&out, body)
                .map_err(|e| Failure::Io(format!("cannot write {}: {e}", out.display())))?;
            println!("{}", render::summary_line(&summary));
            Ok(if summary.failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Export { params, format } => {
            let params = params.build()?;
            let text = match format {
                OutputFormat::Dot => render::export_dot(&params),
                OutputFormat::Json => json_text(&render::export_json(&params)),
                _ => return Err(Failure::Invalid("export writes dot or json".into())),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
