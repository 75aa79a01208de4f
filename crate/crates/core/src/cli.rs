//! Command-line front end: `build`, `export`, `verify`, `casimir`, `slice`
//! and `charpoly`.
//!
//! Exit codes: 0 success, 1 a verification failure, 2 usage or input error,
//! 3 internal consistency error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::casimir::{c2, dim, slice_char_poly, slice_value, SliceQuantity};
use crate::error::{Error, Result};
use crate::linalg::RepMatrix;
use crate::model::Model;
use crate::rational::Rational;
use crate::rep::BasisCatalog;
use crate::scalar::ComplexScalar;
use crate::tensors::TensorStore;
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "g2kit",
    version,
    about = "Exact g2 invariant tensors and identity verification"
)]
pub struct Cli {
    /// Worker threads for the verification suites.
    #[arg(long, global = true, value_name = "N")]
    pub parallel: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the basis matrices and invariant tensors and write them to DIR.
    Build {
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
    /// Write the matrix families H, C, Y, ad and Phi rebuilt from the tensors.
    Export {
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
        /// Read tensors from DIR instead of extracting them.
        #[arg(long, value_name = "DIR")]
        tensors: Option<PathBuf>,
    },
    /// Run an identity suite and print its report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Also write the report to FILE.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        /// Read tensors from DIR instead of extracting them.
        #[arg(long, value_name = "DIR")]
        tensors: Option<PathBuf>,
    },
    /// Print `dim=<d> c2=<c>` for the irrep with highest weight (λ, μ).
    Casimir {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        mu: u64,
    },
    /// Evaluate an invariant on the Cartan slice A = a·h₁ + b·h₂.
    Slice {
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        quantity: SliceQuantity,
    },
    /// Characteristic polynomial of the slice matrix, one `t^k <scalar>` line per power.
    Charpoly {
        /// Use B = a·ad₁ + b·ad₂ instead of A.
        #[arg(long)]
        adjoint: bool,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Results go to `out`, diagnostics and timing to `err`.
pub fn run<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let start = Instant::now();
    let result = dispatch(&cli, out);
    let _ = writeln!(err, "wall time {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InternalConsistency(_) | Error::Overflow(_) | Error::DimensionMismatch(_) | Error::DivisionByZero => {
            EXIT_INTERNAL
        }
        _ => EXIT_USAGE,
    }
}

fn workers(cli: &Cli) -> usize {
    cli.parallel
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

fn load_model(tensors: Option<&Path>) -> Result<Model> {
    match tensors {
        None => Model::build(),
        Some(dir) => Model::with_store(BasisCatalog::build()?, TensorStore::load(dir)?),
    }
}

fn dump_family(family: &[RepMatrix]) -> String {
    family.iter().map(RepMatrix::dump).collect()
}

fn dispatch(cli: &Cli, out: &mut dyn std::io::Write) -> Result<i32> {
    match &cli.command {
        Command::Build { out: dir } => {
            let model = Model::build()?;
            write_build(&model, dir)?;
            writeln!(out, "wrote {}", dir.display())?;
            Ok(EXIT_OK)
        }
        Command::Export { out: dir, tensors } => {
            let model = load_model(tensors.as_deref())?;
            write_export(&model, dir)?;
            writeln!(out, "wrote {}", dir.display())?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, report, tensors } => {
            let model = load_model(tensors.as_deref())?;
            let rep = run_suite(*suite, &model, workers(cli))?;
            let text = rep.render();
            if let Some(path) = report {
                fs::write(path, &text)?;
            }
            out.write_all(text.as_bytes())?;
            Ok(if rep.all_passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Casimir { lambda, mu } => {
            writeln!(out, "dim={} c2={}", dim(*lambda, *mu), c2(*lambda, *mu))?;
            Ok(EXIT_OK)
        }
        Command::Slice { a, b, quantity } => {
            let model = Model::build()?;
            let v = slice_value(&model, a, b, *quantity)?;
            writeln!(out, "{}", ComplexScalar::real(v).render_compact())?;
            Ok(EXIT_OK)
        }
        Command::Charpoly { adjoint, a, b } => {
            let model = Model::build()?;
            let p = slice_char_poly(&model, a, b, *adjoint)?;
            out.write_all(p.render_lines().as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

/// Matrix dumps, tensor files and a manifest.
pub fn write_build(model: &Model, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let cat = &model.catalog;
    fs::write(dir.join("b3_defining.txt"), dump_family(&cat.b3))?;
    fs::write(dir.join("g2_defining.txt"), dump_family(&cat.x))?;
    fs::write(dir.join("z.txt"), dump_family(&cat.z))?;
    fs::write(dir.join("y.txt"), dump_family(&cat.y))?;
    fs::write(dir.join("M.txt"), cat.m.dump())?;
    model.store.save(dir)?;
    let mut manifest = String::from("# g2kit build manifest\n");
    let _ = writeln!(manifest, "h_sign={}", model.derived.h_sign);
    for t in model.store.tensors() {
        let dims: Vec<String> = t.dims().iter().map(usize::to_string).collect();
        let _ = writeln!(manifest, "tensor {} dims={} nnz={}", t.name(), dims.join(","), t.nnz());
    }
    fs::write(dir.join("manifest.txt"), manifest)?;
    Ok(())
}

/// The families rebuilt from the tensors, one dump file each.
pub fn write_export(model: &Model, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let d = &model.derived;
    for (name, family) in [("H", &d.h), ("C", &d.c), ("Y", &d.y), ("ad", &d.ad), ("Phi", &d.phi)] {
        fs::write(dir.join(format!("{name}.txt")), dump_family(family))?;
    }
    Ok(())
}
