use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hodge_infinity::curve::CurveSpec;
use hodge_infinity::io::{
    analyze, compare, load_spec, render_comparison, render_report, render_selfcheck, selfcheck,
    Spec,
};
use hodge_infinity::jconst::{j_constant, JConstantKey};
use hodge_infinity::Error;

#[derive(Parser)]
#[command(
    name = "hodge-inf",
    version,
    about = "Hodge theory at infinity of (*)-polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for an input document.
    Analyze {
        file: PathBuf,
        /// Print JSON instead of text tables.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Report for a plane curve given by the multiplicities of the factors of f_d.
    Curve {
        #[arg(long, value_delimiter = ',', required = true)]
        multiplicities: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of a graded piece of the Jacobian ring of a smooth hypersurface.
    Jconst {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        s: i64,
    },
    /// Runs the property checks on an input document.
    Selfcheck {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Spectral semicontinuity of the second input against the first.
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Error(Error),
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| {
        Error::Validation {
            path: path.display().to_string(),
            message: e.to_string(),
        }
        .into()
    })
}

fn report(spec: &Spec, json: bool, out: Option<&Path>) -> Result<(), Failure> {
    let r = analyze(spec)?;
    if let Some(path) = out {
        write_file(path, &format!("{}\n", to_json(&r)))?;
    }
    if json {
        println!("{}", to_json(&r));
    } else {
        print!("{}", render_report(&r));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            file,
            json,
            report: out,
        } => report(&load_spec(&file)?, json, out.as_deref()),
        Command::Curve {
            multiplicities,
            json,
        } => report(&Spec::Curve(CurveSpec::new(multiplicities)?), json, None),
        Command::Jconst { n, d, k, s } => {
            let key = JConstantKey::try_new(n, d, k, s)?;
            println!("{}", j_constant(key));
            Ok(())
        }
        Command::Selfcheck { file, json } => {
            let r = selfcheck(&load_spec(&file)?)?;
            if json {
                println!("{}", to_json(&r));
            } else {
                print!("{}", render_selfcheck(&r));
            }
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::Property("self-check failed".into()))
            }
        }
        Command::Compare {
            file_a,
            file_b,
            json,
        } => {
            let r = compare(&load_spec(&file_a)?, &load_spec(&file_b)?)?;
            if json {
                println!("{}", to_json(&r));
            } else {
                print!("{}", render_comparison(&r));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Property(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
