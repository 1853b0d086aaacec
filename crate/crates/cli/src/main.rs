//! `ehrhart`: Ehrhart polynomials, h* vectors, refined Eulerian polynomials
//! and matroid data of lattice zonotopes, as JSON.
//!
//! Exit status: 0 on success, 1 when a mathematical precondition fails,
//! 2 when a size guard refuses the work, 3 when two methods disagree, and
//! 4 for unreadable input or bad flags.

mod commands;
mod error;
mod input;
mod json;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::Value;

use crate::commands::CheckSource;
use crate::error::CliError;
use crate::input::InputDocument;

#[derive(Parser, Debug)]
#[command(name = "ehrhart", version, about = "Exact Ehrhart theory of lattice zonotopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ehrhart polynomial of the zonotope in FILE.
    Ehrhart {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// h* vector of the zonotope in FILE.
    Hstar {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Include bases, internally passive sets, the box table and the
        /// refined Eulerian multiplicities.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Test properties of an h* vector, given by FILE or by --hstar.
    Check {
        #[arg(required_unless_present = "hstar", conflicts_with = "hstar")]
        file: Option<PathBuf>,
        /// Coefficients h_0,h_1,..., integers or p/q.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        hstar: Option<Vec<String>>,
        /// Ambient degree; the vector is padded with zeros up to it.
        #[arg(long, requires = "hstar")]
        degree: Option<usize>,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Property::ALL)]
        properties: Vec<Property>,
    },
    /// Refined or full Eulerian polynomials of type A or B.
    Eulerian {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        d: usize,
        /// The refinement index j (type A) or l (type B); omit for the full polynomial.
        #[arg(long)]
        index: Option<usize>,
        #[arg(long, value_enum)]
        method: Option<EulerianMethod>,
    },
    /// Independent sets, bases, internally passive sets and coloops.
    Matroid {
        file: PathBuf,
        /// Order the ground set n > n-1 > .. > 1.
        #[arg(long)]
        reverse: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }

    pub fn uses_formula(self) -> bool {
        self != Method::Oracle
    }

    pub fn uses_oracle(self) -> bool {
        self != Method::Formula
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EulerianMethod {
    Enumerate,
    Recurrence,
    Identity,
}

impl EulerianMethod {
    pub fn name(self) -> &'static str {
        match self {
            EulerianMethod::Enumerate => "enumerate",
            EulerianMethod::Recurrence => "recurrence",
            EulerianMethod::Identity => "identity",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    RealRooted,
    Unimodal,
    AltInc,
    Palindromic,
    Reflexive,
    Cone,
}

impl Property {
    const ALL: [Property; 6] = [
        Property::RealRooted,
        Property::Unimodal,
        Property::AltInc,
        Property::Palindromic,
        Property::Reflexive,
        Property::Cone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::RealRooted => "real-rooted",
            Property::Unimodal => "unimodal",
            Property::AltInc => "alt-inc",
            Property::Palindromic => "palindromic",
            Property::Reflexive => "reflexive",
            Property::Cone => "cone",
        }
    }
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn run(command: Command) -> Result<Value, CliError> {
    match command {
        Command::Ehrhart { file, method } => commands::ehrhart(&InputDocument::read(&file)?, method),
        Command::Hstar { file, method, diagnostics } => {
            commands::hstar(&InputDocument::read(&file)?, method, diagnostics)
        }
        Command::Check { file, hstar, degree, mut properties } => {
            properties.dedup();
            match (file, hstar) {
                (Some(file), _) => commands::check(CheckSource::File(&InputDocument::read(&file)?), &properties),
                (None, Some(coeffs)) => {
                    let coeffs = coeffs
                        .iter()
                        .map(|c| json::parse_rational_str(c))
                        .collect::<Result<Vec<BigRational>, _>>()?;
                    if coeffs.is_empty() {
                        return Err(CliError::usage("InvalidInput", "--hstar needs at least one coefficient"));
                    }
                    commands::check(CheckSource::Literal { coeffs, degree }, &properties)
                }
                (None, None) => Err(CliError::usage("InvalidInput", "give a FILE or --hstar")),
            }
        }
        Command::Eulerian { family, d, index, method } => commands::eulerian(family, d, index, method),
        Command::Matroid { file, reverse } => commands::matroid(&InputDocument::read(&file)?, reverse),
    }
}

fn emit(mut stream: impl Write, value: &Value) {
    let text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    // a closed pipe is not worth a panic
    let _ = writeln!(stream, "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::usage("Usage", e.to_string().trim_end());
            emit(std::io::stderr().lock(), &err.to_json());
            return ExitCode::from(err.kind.code() as u8);
        }
    };
    match run(cli.command) {
        Ok(value) => {
            emit(std::io::stdout().lock(), &value);
            ExitCode::SUCCESS
        }
        Err(err) => {
            emit(std::io::stderr().lock(), &err.to_json());
            ExitCode::from(err.kind.code() as u8)
        }
    }
}
