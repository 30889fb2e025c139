use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use superimmanant::superimm::SuperMatrix;
use superimmanant::verify::CheckOptions;
use superimmanant_cli::commands::{self, SchurForm};
use superimmanant_cli::expr::Context;
use superimmanant_cli::matrix::load_matrix;
use superimmanant_cli::CliError;

#[derive(Parser)]
#[command(name = "superimm", version, about = "Super-immanants, super Schur functions and identity checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Imm_{χ^λ}(X^I_J) of a supermatrix.
    Imm {
        /// Partition, e.g. 2,1
        #[arg(long)]
        lambda: String,
        /// Row multi-index I, e.g. 1,2
        #[arg(long)]
        rows: String,
        /// Column multi-index J
        #[arg(long)]
        cols: String,
        /// Matrix document; defaults to the generic generator matrix of size (m|n)
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Print the value as a JSON term list
        #[arg(long)]
        json: bool,
    },
    /// The super Schur function in x_1..x_m, y_1..y_n.
    Schur {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SchurForm::Expanded)]
        form: SchurForm,
        #[arg(long)]
        json: bool,
    },
    /// Ber(I - uX) series coefficients of a supermatrix document.
    Berezinian {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run an identity check; exit status 0 iff every report passes.
    Check {
        /// vanishing, kostant, schur-weyl, littlewood1, littlewood2, lmw, macmahon,
        /// newton, goulden-jackson, littlewood3, hessenberg, phi, or all
        name: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        /// Series truncation order (macmahon, newton)
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Seed for random Grassmann points (littlewood3)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random points (littlewood3)
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Write the JSON report document here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.cmd {
        Cmd::Imm { lambda, rows, cols, matrix, m, n, json } => {
            let (x, ctx) = match matrix {
                Some(p) => load_matrix(&p)?,
                None => (SuperMatrix::generator(m, n), Context::generic_matrix(m, n)),
            };
            print!("{}", commands::imm(&lambda, &rows, &cols, &x, &ctx, json)?);
        }
        Cmd::Schur { lambda, m, n, form, json } => print!("{}", commands::schur(&lambda, m, n, form, json)?),
        Cmd::Berezinian { matrix, order, json } => {
            let (x, ctx) = load_matrix(&matrix)?;
            print!("{}", commands::berezinian_cmd(&x, &ctx, order, json)?);
        }
        Cmd::Check { name, m, n, max_r, order, seed, trials, out } => {
            let doc = commands::check(&name, &CheckOptions { m, n, max_r, order, seed, trials })?;
            print!("{}", commands::check_table(&doc));
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&doc).expect("serializable");
                std::fs::write(&path, text + "\n").map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            }
            return Ok(doc.passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
