use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pcomplex::collections::CollectionKind;
use pcomplex::Limits;
use pcomplex_harness::commands::{self, Output};
use pcomplex_harness::config;
use pcomplex_harness::report::VerificationReport;
use pcomplex_harness::suite::run_suite;
use pcomplex_harness::verify::{verify, Instance, RunOptions, Theorem};
use pcomplex_harness::HarnessError;

#[derive(Parser)]
#[command(
    name = "pcomplex",
    version,
    about = "Subgroup complexes of finite permutation groups"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest group order accepted.
    #[arg(long, global = true)]
    max_order: Option<u64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the output here instead of stdout. For `suite`, a path stem:
    /// `<out>.txt` and `<out>.json` are both written.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall-clock times in reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List a collection's classes and the homology of its nerve.
    Collections {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        kind: CollectionKind,
    },
    /// Homology of the subposet fixed by a subgroup.
    Fixed {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        kind: CollectionKind,
        /// Generators, e.g. "(1,2);(3,4)".
        #[arg(long)]
        subgroup: String,
    },
    /// Reduced Lefschetz class function by both routes, with the vertex screen.
    Lefschetz {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        kind: CollectionKind,
    },
    /// Run one theorem verifier.
    Verify {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
        /// Generator of the subgroup T of order p.
        #[arg(long)]
        t: Option<String>,
    },
    /// Run every entry of a configuration file.
    Suite {
        #[arg(long)]
        config: PathBuf,
    },
}

fn limits(common: &Common) -> Limits {
    let mut l = Limits::default();
    if let Some(m) = common.max_order {
        l.max_order = m;
    }
    if let Some(s) = common.seed {
        l.seed = s;
    }
    l
}

fn emit(common: &Common, text: &str, json: &serde_json::Value) -> Result<(), HarnessError> {
    let body = match common.format {
        Format::Text => text.to_string(),
        Format::Json => serde_json::to_string_pretty(json).expect("reports serialize") + "\n",
    };
    match &common.out {
        Some(path) => fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn with_extension(stem: &Path, ext: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn reports_output(reports: &[VerificationReport]) -> Output {
    Output {
        text: reports.iter().map(VerificationReport::to_text).collect(),
        json: if reports.len() == 1 {
            serde_json::to_value(&reports[0])
        } else {
            serde_json::to_value(reports)
        }
        .expect("reports serialize"),
    }
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    let common = &cli.common;
    let lim = limits(common);
    let out = match cli.command {
        Command::Collections { group, prime, kind } => commands::collections(&group, prime, kind, &lim)?,
        Command::Fixed {
            group,
            prime,
            kind,
            subgroup,
        } => commands::fixed(&group, prime, kind, &subgroup, &lim)?,
        Command::Lefschetz { group, prime, kind } => commands::lefschetz(&group, prime, kind, &lim)?,
        Command::Verify {
            theorem,
            group,
            prime,
            t,
        } => {
            let inst = Instance::load(&group, prime, lim)?;
            let reports = verify(
                theorem,
                &inst,
                t.as_deref(),
                RunOptions {
                    timings: common.timings,
                },
            );
            let failed = reports.iter().any(|r| r.verdict.is_failure());
            let o = reports_output(&reports);
            emit(common, &o.text, &o.json)?;
            return Ok(!failed);
        }
        Command::Suite { config: path } => {
            let text = fs::read_to_string(&path)?;
            let mut cfg = config::parse(&text)?;
            // Flags override the file.
            if let Some(m) = common.max_order {
                cfg.limits.max_order = m;
            }
            if let Some(s) = common.seed {
                cfg.limits.seed = s;
            }
            cfg.timings |= common.timings;
            if common.out.is_some() {
                cfg.out.clone_from(&common.out);
            }
            let report = run_suite(&cfg);
            let json = serde_json::to_value(&report).expect("reports serialize");
            match &cfg.out {
                Some(stem) => {
                    fs::write(with_extension(stem, "txt"), report.to_text())?;
                    fs::write(
                        with_extension(stem, "json"),
                        serde_json::to_string_pretty(&json).expect("reports serialize") + "\n",
                    )?;
                }
                None => emit(common, &report.to_text(), &json)?,
            }
            return Ok(!report.failed());
        }
    };
    emit(common, &out.text, &out.json)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("pcomplex: {e}");
            ExitCode::from(2)
        }
    }
}
