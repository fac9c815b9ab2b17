//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use koszul_core::graded::{DegreeWindow, GradedComplex, PresentedAlgebra};
use koszul_core::groebner::satisfies_buchberger_criterion;
use koszul_core::resolution::{
    truncated_minimal_resolution, truncated_regularity, GradedAlgebra, GradedModule, QuotientModule, ResidueField,
};
use koszul_core::{groebner_basis, parse_polynomial, Multidegree};
use serde_json::json;

use crate::config::{load_config, JobCommand, JobConfig, ResolveTarget};
use crate::params::{parse_window, Params, Result, VerifyError};
use crate::report::{emit_report, Check, Report};
use crate::scenarios::run_scenario;

#[derive(Debug, Parser)]
#[command(name = "koszul", version, about = "Verify Koszulness and regularity claims for diagonals of Rees algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one verification scenario.
    Verify {
        scenario: String,
        /// Job file supplying a ring and forms.
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Evidence grid over (c, e).
    Explore {
        #[command(flatten)]
        flags: Flags,
    },
    /// Truncated minimal resolution from a job file.
    Resolve {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
    /// Reduced Gröbner basis from a job file.
    Gb {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug, Args)]
#[command(next_help_heading = "Parameters")]
struct Flags {
    #[arg(long, allow_negative_numbers = true)]
    d: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    e: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// Top homological index.
    #[arg(long = "N", allow_negative_numbers = true)]
    max_index: Option<i64>,
    /// Characteristic of the coefficient field.
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// Degree window, e.g. `5` or `8,4`.
    #[arg(long, value_parser = parse_window_arg)]
    window: Option<WindowArg>,
    #[arg(long, allow_negative_numbers = true)]
    grid: Option<i64>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include `runtime_ms` in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Debug)]
struct WindowArg(Vec<i64>);

fn parse_window_arg(text: &str) -> std::result::Result<WindowArg, String> {
    parse_window(text).map(WindowArg)
}

impl Flags {
    fn params(&self) -> Params {
        Params {
            d: self.d,
            c: self.c,
            e: self.e,
            k: self.k,
            n: self.n,
            max_index: self.max_index,
            p: self.p,
            seed: self.seed,
            window: self.window.clone().map(|w| w.0),
            grid: self.grid,
        }
    }

    /// Command-line values override the job file.
    fn merged(&self, base: &Params) -> Result<Params> {
        if let (Some(a), Some(b)) = (self.p, base.p) {
            if a != b {
                return Err(VerifyError::Input(format!("p is {b} in the job file but {a} on the command line")));
            }
        }
        let own = self.params();
        Ok(Params {
            d: own.d.or(base.d),
            c: own.c.or(base.c),
            e: own.e.or(base.e),
            k: own.k.or(base.k),
            n: own.n.or(base.n),
            max_index: own.max_index.or(base.max_index),
            p: own.p.or(base.p),
            seed: own.seed.or(base.seed),
            window: own.window.or_else(|| base.window.clone()),
            grid: own.grid.or(base.grid),
        })
    }
}

/// Parses `argv` (including the program name), runs the job and returns the exit code:
/// 0 when every binding check passes, 1 when one fails, 2 on input errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let start = Instant::now();
    let (outcome, out, timing) = match &cli.command {
        Command::Verify { scenario, config, flags } => (verify(scenario, config.as_deref(), flags), flags.out.clone(), flags.timing),
        Command::Explore { flags } => {
            (run_scenario("explore", &flags.params(), None).map(|r| (r, None)), flags.out.clone(), flags.timing)
        }
        Command::Resolve { config, out, timing } => (job(config, JobCommand::Resolve), out.clone(), *timing),
        Command::Gb { config, out, timing } => (job(config, JobCommand::Gb), out.clone(), *timing),
    };
    match outcome {
        Ok((mut report, config_out)) => {
            if timing {
                report.runtime_ms = Some(start.elapsed().as_millis() as u64);
            }
            let written = match out.or(config_out) {
                Some(path) => emit_report(&report, &path),
                None => std::io::stdout().write_all(report.to_json().as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            for c in report.failed_checks() {
                eprintln!("failed: {} [{}]", c.claim, c.cite);
            }
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input() {
                2
            } else {
                1
            }
        }
    }
}

type Outcome = Result<(Report, Option<PathBuf>)>;

fn verify(scenario: &str, config: Option<&Path>, flags: &Flags) -> Outcome {
    match config {
        None => Ok((run_scenario(scenario, &flags.params(), None)?, None)),
        Some(path) => {
            let cfg = load_config(path)?;
            if let Some(id) = &cfg.scenario {
                if id != scenario {
                    return Err(VerifyError::Input(format!("job file is for scenario {id}, not {scenario}")));
                }
            }
            let params = flags.merged(&cfg.params)?;
            Ok((run_scenario(scenario, &params, cfg.forms.as_ref())?, cfg.out))
        }
    }
}

fn job(path: &Path, command: JobCommand) -> Outcome {
    let cfg = load_config(path)?;
    if let Some(c) = cfg.command {
        if c != command {
            return Err(VerifyError::Input(format!("job file declares command {c:?}")));
        }
    }
    let report = match command {
        JobCommand::Gb => gb_job(&cfg)?,
        JobCommand::Resolve => resolve_job(&cfg)?,
        JobCommand::Verify => unreachable!("verify jobs go through the verify command"),
    };
    Ok((report, cfg.out))
}

fn job_report(name: &str, cfg: &JobConfig) -> Report {
    let mut report = Report::new(name, cfg.ring.field().characteristic(), cfg.params.seed());
    report.param("variables", cfg.ring.descriptor().variables().iter().map(|v| v.name.clone()).collect::<Vec<_>>());
    report.param("generators", cfg.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>());
    report
}

pub fn gb_job(cfg: &JobConfig) -> Result<Report> {
    let mut report = job_report("gb", cfg);
    let gb = groebner_basis(&cfg.ring, &cfg.generators)?;
    let printed: Vec<String> = gb.polys().iter().map(|g| g.to_string()).collect();
    let reparsed = gb
        .polys()
        .iter()
        .zip(&printed)
        .all(|(g, s)| parse_polynomial(s, &cfg.ring).is_ok_and(|h| &h == g));
    report.push(Check::engine(
        "reduced Gröbner basis: every S-pair reduces to zero",
        json!(printed),
        json!(null),
        satisfies_buchberger_criterion(&gb),
    ));
    report.push(Check::engine("every printed basis element parses back to itself", reparsed, true, reparsed));
    Ok(report)
}

pub fn resolve_job(cfg: &JobConfig) -> Result<Report> {
    let mut report = job_report("resolve", cfg);
    let opts = &cfg.resolve;
    let quotient = Arc::new(PresentedAlgebra::new(&cfg.ring, cfg.generators.clone(), "S/I")?);
    let polynomial = Arc::new(PresentedAlgebra::polynomial_ring(&cfg.ring, "S"));
    let (algebra, module): (GradedAlgebra, Box<dyn GradedModule>) = match opts.target {
        ResolveTarget::Quotient => {
            let rank = cfg.ring.descriptor().grading_rank();
            let m = QuotientModule { quotient: quotient.clone(), offset: Multidegree::zero(rank) };
            (GradedAlgebra::standard(polynomial)?, Box::new(m))
        }
        ResolveTarget::ResidueField => (GradedAlgebra::standard(quotient.clone())?, Box::new(ResidueField)),
    };
    report.param("module", match opts.target {
        ResolveTarget::Quotient => "S/I over S",
        ResolveTarget::ResidueField => "K over S/I",
    });
    report.param("max_index", opts.max_index as i64).param("window", opts.window.to_string());
    let window = DegreeWindow::new(opts.window.clone());
    let mut res = truncated_minimal_resolution(&algebra, module.as_ref(), opts.max_index, &window)?;
    let table = res.betti().clone();
    let rows: Vec<Vec<String>> = (0..=table.max_index())
        .map(|i| table.row(i).iter().map(|(d, b)| format!("{d}^{b}")).collect())
        .collect();
    report.push(Check::engine("minimal resolution: no unit entries in any differential", json!(rows), json!(null), res.is_minimal()));
    if table.is_exhausted() {
        report.disclose("window exhausted before the requested homological index");
    }
    report.disclose(format!("resolution truncated at index {} and degrees <= {}", opts.max_index, opts.window));

    let last = (0..=table.max_index()).rev().find(|&i| !table.row(i).is_empty()).unwrap_or(0);
    let twists: Vec<Vec<Multidegree>> =
        (0..=last).map(|i| res.generator_degrees(i).iter().map(|g| g.neg()).collect()).collect();
    let differentials = (1..=last).map(|i| res.differential(i)).collect();
    let complex = GradedComplex::new(algebra.quotient().clone(), twists, differentials)?;
    let mut cache = complex.cache();
    let squares = window.degrees().iter().all(|d| complex.composition_vanishes(&mut cache, d));
    report.push(Check::engine("d^2 = 0 at every window degree", squares, true, squares));

    if cfg.ring.descriptor().grading_rank() == 1 {
        let reg = truncated_regularity(&table, algebra.is_polynomial_ring())?;
        report.param("regularity", json!(reg.value));
        report.param("regularity_certified", reg.certified_upper);
    }
    Ok(report)
}
