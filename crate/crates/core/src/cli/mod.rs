//! The `superext` command line: subcommands over JSON input files, text or
//! `--json` reports, exit codes 0 (holds), 1 (property fails or class
//! obstructed) and 2 (input error).

mod commands;
pub mod files;
mod render;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use crate::cochains::DEFAULT_ARITY_CAP;

pub use render::SIGN_NOTE;

pub const MAX_DIM: usize = 12;
pub const ARITY_CAP_VAR: &str = "SUPEREXT_ARITY_CAP";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{}: {}{}", .file, located(.field), .msg)]
    Parse { file: String, field: String, msg: String },
    #[error("{}: {}{}", .file, located(.field), .msg)]
    Invariant { file: String, field: String, msg: String },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Failed(String),
}

fn located(field: &str) -> String {
    if field.is_empty() {
        String::new()
    } else {
        format!("{field}: ")
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant { .. } | CliError::Failed(_) => 1,
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Guard(_) => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "superext", version, about = "Super Lie algebras and their extensions in exact arithmetic")]
struct Cli {
    /// machine-readable report
    #[arg(long, global = true)]
    json: bool,
    /// lift the dimension and arity guards
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Triple {
    /// the quotient algebra g
    #[arg(long)]
    g: String,
    /// the kernel algebra h
    #[arg(long)]
    h: String,
    /// a MapFile from g to out(h)
    #[arg(long = "alpha-bar")]
    alpha_bar: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// degree 0, graded antisymmetry and graded Jacobi
    Validate { algebra: String },
    /// the graded center
    Center { algebra: String },
    /// graded derivations, inner ones first
    Derivations { algebra: String },
    /// out(h) = der(h)/ad(h)
    Out { algebra: String },
    /// H^n(g; M) by weight; M is the trivial line unless given
    Cohomology {
        algebra: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        module: Option<String>,
    },
    /// the data (α, ρ) induced by a section of an extension
    SectionData {
        extension: String,
        #[arg(long)]
        section: String,
    },
    /// the extension conditions on a datum
    CheckData { datum: String },
    /// the extension algebra of a datum
    Build {
        datum: String,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
    },
    /// the datum of the shifted section s + i ∘ b
    Transform {
        datum: String,
        #[arg(long)]
        witness: String,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
    },
    /// whether a witness b carries one datum to another
    Equivalent {
        datum: String,
        other: String,
        #[arg(long)]
        witness: String,
    },
    /// whether a datum is split, by witness or by solving for abelian h
    SplitCheck {
        datum: String,
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        solve_abelian: bool,
    },
    /// the obstruction class of ᾱ in H^3(g; Z(h))
    Obstruction {
        #[command(flatten)]
        triple: Triple,
    },
    /// all extensions inducing ᾱ, as a torsor over H^2(g; Z(h))
    Classify {
        #[command(flatten)]
        triple: Triple,
    },
    /// the pullback of der(h) → out(h) along ᾱ, for centerless h
    Pullback {
        #[command(flatten)]
        triple: Triple,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
    },
}

/// What a run printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug)]
struct Options {
    allow_large: bool,
    cap: usize,
}

fn arity_cap(allow_large: bool) -> Result<usize, CliError> {
    if allow_large {
        return Ok(usize::MAX);
    }
    match std::env::var(ARITY_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Guard(format!("{ARITY_CAP_VAR} must be a non-negative integer, found `{v}`"))),
        Err(_) => Ok(DEFAULT_ARITY_CAP),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = arity_cap(cli.allow_large).and_then(|cap| {
        let opts = Options {
            allow_large: cli.allow_large,
            cap,
        };
        commands::dispatch(&cli.command, opts)
    });
    match result {
        Ok(report) => Outcome {
            code: report.code,
            stdout: report.finish(cli.json),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs on the process arguments, prints, and exits.
pub fn main() -> ! {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code)
}
