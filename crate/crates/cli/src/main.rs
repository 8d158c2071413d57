//! `jarlskog`: generate qudit gates, synthesize them from modules, compose
//! and decompose factor files, and compare matrices.
//!
//! Exit codes: 0 success, 1 numerical check failed, 2 usage or parse error,
//! 3 unsupported dimension, 4 non-unitary input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use jarlskog::io::{read_factors, read_matrix, write_factors, write_matrix, FactorFile};
use jarlskog::{
    compose_sequence, decompose, max_abs_diff, recipe_for, unitary_error, verify_recipe, Error,
    Gate, GateId,
};

#[derive(Parser)]
#[command(
    name = "jarlskog",
    version,
    about = "Qudit gates from Jarlskog modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a gate matrix built by its direct constructor.
    Gen {
        #[command(flatten)]
        gate: GateArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the module recipe for a gate and check it against the gate.
    Recipe {
        #[command(flatten)]
        gate: GateArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multiply out a factor file.
    Compose {
        #[arg(long)]
        factors: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Factor a unitary matrix file into modules.
    Decompose {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare two matrix files entrywise.
    Verify {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
    },
}

#[derive(Args)]
struct GateArgs {
    /// sigma1, sigma3, pauli, walsh or k
    #[arg(value_name = "GATE", required_unless_present = "gate")]
    gate_pos: Option<String>,
    #[arg(long, conflicts_with = "gate_pos")]
    gate: Option<String>,
    #[arg(long)]
    n: usize,
    /// Σ₁ exponent for `pauli`
    #[arg(long, default_value_t = 0)]
    a: usize,
    /// Σ₃ exponent for `pauli`
    #[arg(long, default_value_t = 0)]
    b: usize,
}

impl GateArgs {
    fn resolve(&self) -> Result<GateId, Failure> {
        let name = self
            .gate
            .as_deref()
            .or(self.gate_pos.as_deref())
            .unwrap_or_default();
        let gate = match name {
            "sigma1" => Gate::Sigma1,
            "sigma3" => Gate::Sigma3,
            "pauli" => Gate::PauliPower {
                a: self.a,
                b: self.b,
            },
            "walsh" => Gate::WalshHadamard,
            "k" => Gate::KMatrix,
            other => {
                return Err(Failure::usage(format!(
                    "unknown gate '{other}' (expected sigma1, sigma3, pauli, walsh or k)"
                )))
            }
        };
        Ok(GateId::new(gate, self.n)?)
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Self {
        Self { code: 2, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedDimension(_) => 3,
            Error::NonUnitary(_) => 4,
            _ => 2,
        };
        let message = match e {
            Error::UnsupportedDimension(n) => {
                format!("unsupported dimension n = {n} (walsh recipes exist for n = 3, 4, 5 only)")
            }
            other => other.to_string(),
        };
        Self { code, message }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gen { gate, out } => {
            let id = gate.resolve()?;
            write_matrix(&out, &id.matrix::<f64>()?)?;
            Ok(0)
        }
        Command::Recipe { gate, out } => {
            let id = gate.resolve()?;
            let recipe = recipe_for::<f64>(id)?;
            let check = verify_recipe(&recipe);
            if let Some(out) = out {
                write_factors(&out, &FactorFile::from_recipe(&recipe))?;
            }
            eprintln!("module_count {}", recipe.module_count());
            eprintln!("verify_error {:.16e}", check.error);
            Ok(if check.pass { 0 } else { 1 })
        }
        Command::Compose { factors, out } => {
            let seq = read_factors(&factors)?.to_sequence()?;
            let u = compose_sequence(&seq);
            write_matrix(&out, &u)?;
            eprintln!("unitary_error {:.16e}", unitary_error(&u));
            Ok(0)
        }
        Command::Decompose { matrix, out } => {
            let u = read_matrix(&matrix)?;
            let d = decompose(&u)?;
            write_factors(&out, &FactorFile::from_decomposition(&d))?;
            eprintln!("residual {:.16e}", d.residual);
            Ok(if d.residual <= 1e-9 { 0 } else { 1 })
        }
        Command::Verify { a, b, tol } => {
            let diff = max_abs_diff(&read_matrix(&a)?, &read_matrix(&b)?)?;
            eprintln!("max_abs_diff {diff:.16e}");
            Ok(if diff <= tol { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
