//! Command-line front end. JSON is the stable output; tables are for people.

use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::construct::{doubled_semigroup, doubling_ulrich_pair, ConstructionError};
use crate::family::semigroups_with_max_frobenius;
use crate::ideal::RelativeIdeal;
use crate::semigroup::{join, parse_list, NumericalSemigroup};
use crate::ulrich::{
    default_bound, enumerate_parameter_ideals, enumerate_ulrich, is_ulrich, UlrichCertificate, UlrichError,
};
use crate::verify::{theorem_suite, verify_homological_profile, CheckStatus, VerificationReport};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ulrich", version, about = "Ulrich ideals of numerical semigroup rings")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Print traces in table output.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a semigroup given as comma-separated generators.
    Info { gens: String },
    /// Ulrich certificate for one ideal.
    Ideal {
        gens: String,
        #[arg(long)]
        ideal: String,
    },
    /// All non-parameter Ulrich ideals with reduction degree up to the bound.
    Enumerate {
        gens: String,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        bound: Option<i64>,
        /// Also list the principal (parameter) ideals.
        #[arg(long)]
        include_parameters: bool,
    },
    /// Homological profile of an Ulrich ideal.
    Verify {
        gens: String,
        #[arg(long)]
        ideal: String,
    },
    /// Theorem suite over every semigroup with bounded Frobenius number.
    Suite {
        #[arg(long, default_value_t = 12)]
        max_frobenius: i64,
        #[arg(long)]
        max_genus: Option<usize>,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        bound: Option<i64>,
    },
    /// Constructions of Ulrich ideals.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// H = 2L + <b> with its two Ulrich ideals.
    Double {
        gens: String,
        #[arg(long)]
        b: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationOutput {
    pub semigroup: Vec<i64>,
    pub bound: i64,
    pub ideals: Vec<UlrichCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Vec<UlrichCertificate>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutput {
    pub max_frobenius: i64,
    pub max_genus: Option<usize>,
    pub bound: Option<i64>,
    pub count: usize,
    pub passed: usize,
    pub reports: Vec<VerificationReport>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let code = match &e {
                Error::Construction(ConstructionError::ConstructionFailed(_)) => EXIT_CHECK_FAILED,
                Error::Io(_) => EXIT_CHECK_FAILED,
                _ => EXIT_USAGE,
            };
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn semigroup(gens: &str) -> Result<Arc<NumericalSemigroup>, Error> {
    Ok(Arc::new(NumericalSemigroup::from_generators(&parse_list(gens)?)?))
}

fn ideal(h: &Arc<NumericalSemigroup>, gens: &str) -> Result<RelativeIdeal, Error> {
    Ok(RelativeIdeal::new(h, &parse_list(gens)?).map_err(UlrichError::from)?)
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Error> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Info { gens } => {
            let h = semigroup(gens)?;
            let record = h.record()?;
            if json {
                emit_json(out, &record)?;
            } else {
                writeln!(out, "semigroup        {h}")?;
                writeln!(out, "frobenius        {}", record.frobenius)?;
                writeln!(out, "gaps             {}", join(&record.gaps))?;
                if let Some(pf) = &record.pf {
                    writeln!(out, "pseudo-frobenius {}", join(pf))?;
                }
                if let Some(t) = record.cm_type {
                    writeln!(out, "type             {t}")?;
                }
                writeln!(out, "symmetric        {}", record.symmetric)?;
                writeln!(out, "almost symmetric {}", record.almost_symmetric)?;
            }
            Ok(EXIT_OK)
        }
        Command::Ideal { gens, ideal: list } => {
            let h = semigroup(gens)?;
            let cert = is_ulrich(&ideal(&h, list)?)?;
            if json {
                emit_json(out, &cert)?;
            } else {
                write_certificate_row(out, &cert)?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            gens,
            bound,
            include_parameters,
        } => {
            let h = semigroup(gens)?;
            let bound = bound.unwrap_or_else(|| default_bound(&h));
            let ideals = enumerate_ulrich(&h, bound)?;
            let parameters = if *include_parameters {
                Some(enumerate_parameter_ideals(&h, bound)?)
            } else {
                None
            };
            if json {
                emit_json(
                    out,
                    &EnumerationOutput {
                        semigroup: h.generators().to_vec(),
                        bound,
                        ideals,
                        parameters,
                    },
                )?;
            } else {
                writeln!(out, "semigroup {h}; bound {bound} (complete for reduction degree <= {bound})")?;
                for cert in &ideals {
                    write_certificate_row(out, cert)?;
                }
                writeln!(out, "{} Ulrich ideal(s)", ideals.len())?;
                for cert in parameters.iter().flatten() {
                    write_certificate_row(out, cert)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { gens, ideal: list } => {
            let h = semigroup(gens)?;
            let cert = is_ulrich(&ideal(&h, list)?)?;
            let report = verify_homological_profile(&cert)?;
            if json {
                emit_json(out, &report)?;
            } else {
                write_report(out, &report, cli.verbose)?;
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Suite {
            max_frobenius,
            max_genus,
            bound,
        } => {
            let family: Vec<_> = semigroups_with_max_frobenius(*max_frobenius)?
                .into_iter()
                .filter(|h| max_genus.is_none_or(|g| h.genus() <= g))
                .collect();
            let reports = theorem_suite(&family, *bound)?;
            let passed = reports.iter().filter(|r| r.pass).count();
            if json {
                emit_json(
                    out,
                    &SuiteOutput {
                        max_frobenius: *max_frobenius,
                        max_genus: *max_genus,
                        bound: *bound,
                        count: reports.len(),
                        passed,
                        reports: reports.clone(),
                    },
                )?;
            } else {
                for r in &reports {
                    write_report(out, r, cli.verbose)?;
                }
                writeln!(out, "{passed}/{} semigroups pass", reports.len())?;
            }
            Ok(if passed == reports.len() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Construct {
            kind: ConstructKind::Double { gens, b },
        } => {
            let base = semigroup(gens)?;
            let inst = doubled_semigroup(&base, *b)?;
            let pair = doubling_ulrich_pair(&inst)?;
            if json {
                emit_json(out, &pair)?;
            } else {
                writeln!(out, "H = 2{} + <{}> = {}", base, b, inst.doubled)?;
                write_certificate_row(out, &pair.i)?;
                write_certificate_row(out, &pair.j)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn write_certificate_row(out: &mut dyn Write, c: &UlrichCertificate) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<24} a={:<4} nu={:<3} t={:<3} l(R/I)={:<4} {:?}",
        c.ideal.to_string(),
        c.reduction_degree,
        c.nu,
        c.t,
        c.colength,
        c.verdict
    )
}

fn write_report(out: &mut dyn Write, r: &VerificationReport, verbose: u8) -> std::io::Result<()> {
    let ideal = r.ideal.as_deref().map(|g| format!(" ideal ({})", join(g))).unwrap_or_default();
    let bound = r.bound.map(|b| format!(" bound {b}")).unwrap_or_default();
    writeln!(
        out,
        "{} <{}>{ideal}{bound}: {}",
        if r.pass { "PASS" } else { "FAIL" },
        join(&r.semigroup),
        r.checks
            .iter()
            .map(|c| {
                let mark = match c.status {
                    CheckStatus::Pass => "ok",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "-",
                };
                format!("{}={mark}", c.name)
            })
            .collect::<Vec<_>>()
            .join(" ")
    )?;
    if verbose > 0 {
        for line in &r.trace {
            writeln!(out, "    {line}")?;
        }
        for c in &r.checks {
            writeln!(out, "    {}: {}", c.name, c.detail)?;
        }
    }
    Ok(())
}
