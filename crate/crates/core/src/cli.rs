//! The `stieltjes-cf` command line.
//!
//! Every subcommand prints one JSON document on stdout. Exit status is 0 on
//! success, 1 when a certification is refuted (the verdict is still
//! printed), and 2 on bad arguments or unreadable input.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::cert::{certify_wall, certify_xi_stieltjes, dual_route_check, g0_max, CertVerdict};
use crate::cf::{contract, s_expand, s_extract, JCoefficients, MomentSequence, SCoefficients};
use crate::demos;
use crate::error::{Error, Result};
use crate::oracle::{hankel_report, moments, random_measure, DiscreteMeasure};
use crate::rat::{fmt_rat, parse_rat, parse_rat_list, Rat};
use crate::transform::{binomial_transform, j_shift};

#[derive(Debug, Parser)]
#[command(name = "stieltjes-cf", version, about = "Exact S-/J-fraction tools for Stieltjes moment sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand an S-fraction into moments a_0..a_N.
    Expand {
        #[arg(long)]
        order: usize,
        /// Comma-separated coefficients alpha_1,alpha_2,...
        #[arg(long, conflicts_with = "input")]
        alphas: Option<String>,
        /// Leading constant c.
        #[arg(long, default_value = "1", value_parser = parse_rat_arg, conflicts_with = "input")]
        c: Rat,
        /// SCoefficients JSON file ("-" for stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Extract the standard S-fraction of a moment prefix.
    Extract(MomentInput),
    /// Contract an S-fraction into its J-fraction.
    Contract {
        #[arg(long, conflicts_with = "input")]
        alphas: Option<String>,
        /// SCoefficients JSON file ("-" for stdin).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// xi-binomial transform of a moment prefix.
    Binomial {
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        xi: Rat,
        #[command(flatten)]
        input: MomentInput,
    },
    /// Shift every gamma of a J-fraction by xi.
    Jshift {
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        xi: Rat,
        /// JCoefficients JSON file ("-" or omitted for stdin).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Certify or refute support in [xi, inf) (or [0, xi] with --wall).
    Certify {
        #[arg(long, value_parser = parse_rat_arg)]
        xi: Rat,
        #[arg(long)]
        wall: bool,
        #[command(flatten)]
        input: MomentInput,
    },
    /// Compare the two independent g computations.
    Dualcheck {
        #[arg(long, value_parser = parse_rat_arg)]
        xi: Rat,
        #[command(flatten)]
        input: MomentInput,
    },
    /// Bracket the largest admissible g_0.
    G0max {
        #[arg(long, value_parser = parse_rat_arg)]
        xi: Rat,
        #[arg(long, value_parser = parse_rat_arg, default_value = "1/1000000")]
        tol: Rat,
        #[command(flatten)]
        input: MomentInput,
    },
    /// Certify or refute support in [0, xi].
    Wall {
        #[arg(long, value_parser = parse_rat_arg)]
        xi: Rat,
        #[command(flatten)]
        input: MomentInput,
    },
    /// Discrete measures and Hankel minors.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Reproduce the built-in worked examples.
    PaperDemos {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Generate a reproducible random discrete measure.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        min: Rat,
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        max: Rat,
        #[arg(long, default_value_t = 10)]
        denom_bound: u64,
    },
    /// Leading Hankel minors of a moment prefix.
    Hankel(MomentInput),
    /// Moments a_0..a_N of a measure.
    Moments {
        /// DiscreteMeasure JSON file ("-" for stdin).
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Where a moment sequence comes from. Defaults to stdin.
#[derive(Debug, Args)]
pub struct MomentInput {
    /// Moments file ("-" for stdin).
    #[arg(long)]
    pub moments: Option<PathBuf>,
    /// Inline comma-separated moments.
    #[arg(long, conflicts_with = "moments", allow_hyphen_values = true)]
    pub values: Option<String>,
    /// Format of moment files and moment output.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `{"moments": ["p/q", ...]}`
    Json,
    /// One rational per line.
    Csv,
}

fn parse_rat_arg(s: &str) -> std::result::Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if e.use_stderr() {
                eprint!("{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match execute(cli.command, stdin) {
        Ok((text, code)) => {
            if writeln!(out, "{text}").is_err() {
                return 2;
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(command: Command, stdin: &mut dyn BufRead) -> Result<(String, u8)> {
    match command {
        Command::Expand { order, alphas, c, input, format } => {
            let s = match input {
                Some(path) => read_json::<SCoefficients>(&path, stdin)?,
                None => SCoefficients::new(c, parse_rat_list(alphas.as_deref().unwrap_or(""))?, false)?,
            };
            Ok((render_moments(&MomentSequence::from(s_expand(&s, order)), format), 0))
        }
        Command::Extract(input) => {
            let a = input.read(stdin)?;
            Ok((to_json(&s_extract(&a)?), 0))
        }
        Command::Contract { alphas, input } => {
            let s = match (alphas, input) {
                (Some(list), _) => SCoefficients::unit(parse_rat_list(&list)?),
                (None, path) => read_json::<SCoefficients>(&path.unwrap_or_else(stdin_path), stdin)?,
            };
            Ok((to_json(&contract(&s)), 0))
        }
        Command::Binomial { xi, input } => {
            let format = input.format;
            let a = input.read(stdin)?;
            Ok((render_moments(&binomial_transform(&a, &xi), format), 0))
        }
        Command::Jshift { xi, input } => {
            let j = read_json::<JCoefficients>(&input.unwrap_or_else(stdin_path), stdin)?;
            Ok((to_json(&j_shift(&j, &xi)), 0))
        }
        Command::Certify { xi, wall, input } => {
            let a = input.read(stdin)?;
            let v = if wall { certify_wall(&a, &xi)? } else { certify_xi_stieltjes(&a, &xi)? };
            Ok(verdict_output(&v))
        }
        Command::Wall { xi, input } => {
            let a = input.read(stdin)?;
            Ok(verdict_output(&certify_wall(&a, &xi)?))
        }
        Command::Dualcheck { xi, input } => {
            let a = input.read(stdin)?;
            Ok((to_json(&dual_route_check(&a, &xi)?), 0))
        }
        Command::G0max { xi, tol, input } => {
            let a = input.read(stdin)?;
            Ok((to_json(&g0_max(&a, &xi, &tol)?), 0))
        }
        Command::Oracle { command } => match command {
            OracleCommand::Gen { seed, count, min, max, denom_bound } => {
                Ok((to_json(&random_measure(seed, count, &min, &max, denom_bound)?), 0))
            }
            OracleCommand::Hankel(input) => {
                let a = input.read(stdin)?;
                Ok((to_json(&hankel_report(&a)), 0))
            }
            OracleCommand::Moments { measure, n_max, format } => {
                let m = read_json::<DiscreteMeasure>(&measure, stdin)?;
                Ok((render_moments(&moments(&m, n_max), format), 0))
            }
        },
        Command::PaperDemos { json } => {
            let results = demos::run_all();
            let code = if results.iter().all(|r| r.passed) { 0 } else { 1 };
            let text = if json {
                to_json(&results)
            } else {
                let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
                results
                    .iter()
                    .map(|r| {
                        let mark = if r.passed { "PASS" } else { "FAIL" };
                        format!("{mark}  {:width$}  {}", r.name, r.detail)
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok((text, code))
        }
    }
}

fn verdict_output(v: &CertVerdict) -> (String, u8) {
    (to_json(v), if v.is_refuted() { 1 } else { 0 })
}

fn stdin_path() -> PathBuf {
    PathBuf::from("-")
}

impl MomentInput {
    fn read(&self, stdin: &mut dyn BufRead) -> Result<MomentSequence> {
        let a = if let Some(list) = &self.values {
            MomentSequence::new(parse_rat_list(list)?)
        } else {
            let text = read_text(self.moments.as_ref().unwrap_or(&stdin_path()), stdin)?;
            parse_moments(&text, self.format)?
        };
        if a.is_empty() {
            return Err(Error::EmptyMoments);
        }
        Ok(a)
    }
}

/// Parses a moment sequence in either supported format.
pub fn parse_moments(text: &str, format: Format) -> Result<MomentSequence> {
    match format {
        Format::Json => serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string())),
        Format::Csv => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_rat)
            .collect::<Result<Vec<_>>>()
            .map(MomentSequence::new),
    }
}

/// Prints a moment sequence in either supported format.
pub fn render_moments(a: &MomentSequence, format: Format) -> String {
    match format {
        Format::Json => to_json(a),
        Format::Csv => a.moments.iter().map(fmt_rat).collect::<Vec<_>>().join("\n"),
    }
}

fn read_text(path: &PathBuf, stdin: &mut dyn BufRead) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

fn read_json<T: DeserializeOwned>(path: &PathBuf, stdin: &mut dyn BufRead) -> Result<T> {
    let text = read_text(path, stdin)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable value")
}
