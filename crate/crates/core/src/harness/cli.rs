//! The `pebbling` command line.
//!
//! Exit codes: 0 ok / solvable / match, 1 unsolvable / witness / mismatch,
//! 2 usage or input error, 3 internal assertion, 4 state budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::report::{
    emit_report, verify_family, verify_graph, CampaignOptions, ReportFormat, Status,
};
use crate::constructive::{
    solve_multipartite, solve_pigeonhole_traced, solve_rst, solve_wheel_traced,
};
use crate::error::Error;
use crate::formulas::{bound_report, nonincreasing_lists};
use crate::graph::{generate, FamilySpec, Graph};
use crate::pebble::{validate_certificate, BinaryWeighting, Configuration};
use crate::solver::{default_workers, gamma_exact_with, solve_with, SolverOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "pebbling",
    about = "Cover pebbling numbers, bounds and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a family graph in the `n m` / `u v` text format.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a configuration is cover-solvable.
    Solve {
        #[command(flatten)]
        source: GraphSource,
        /// Space-separated pebble counts.
        #[arg(long)]
        config: String,
        /// Space-separated 0/1 marks; omitted means every vertex.
        #[arg(long)]
        weighting: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compute the cover pebbling number exactly.
    Gamma {
        #[command(flatten)]
        source: GraphSource,
        /// Starting size for the downward search (default: diameter bound).
        #[arg(long)]
        hint: Option<u64>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Compare closed forms and bounds against the exact oracle.
    Verify {
        #[command(flatten)]
        family: RangeArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Report elapsed_ms as 0 for byte-identical output.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print the stacked lower bound and the diameter upper bound.
    Bound {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Run one of the constructive cover-solving procedures.
    Construct {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        config: String,
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        /// Marks for the pigeonhole procedure; omitted means every vertex.
        #[arg(long)]
        weighting: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Multipartite,
    Wheel,
    Fuse,
    Path,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Wheel,
    Multipartite,
    Rst,
    Pigeonhole,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Rim size (wheel) or order (fuse, path).
    #[arg(long)]
    n: Option<usize>,
    /// Fuse diameter.
    #[arg(long)]
    d: Option<usize>,
    /// Comma-separated class sizes, nonincreasing.
    #[arg(long)]
    sizes: Option<String>,
    #[arg(long)]
    leaves: Option<usize>,
}

#[derive(Debug, Args)]
struct GraphSource {
    /// Graph file in the `n m` / `u v` text format.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Debug, Args)]
struct RangeArgs {
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Single value or inclusive range `a..b`.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    d: Option<String>,
    /// Class sizes; repeat the flag for several graphs.
    #[arg(long)]
    sizes: Vec<String>,
    /// Every multipartite graph with at most this many vertices.
    #[arg(long)]
    max_total: Option<usize>,
    #[arg(long)]
    leaves: Option<String>,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    workers: Option<usize>,
    /// Cap on expanded states per solver call.
    #[arg(long)]
    budget: Option<u64>,
}

impl RunArgs {
    fn workers(&self) -> usize {
        self.workers.unwrap_or_else(default_workers).max(1)
    }

    fn solver(&self) -> SolverOptions {
        SolverOptions {
            budget: self.budget,
            ..Default::default()
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InternalAssertion(_) | Error::StrategyIncomplete(_) | Error::Overflow(_) => {
                EXIT_INTERNAL
            }
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        message: format!("write failed: {e}"),
    }
}

/// Runs the command line with `args` (program name first), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "{first}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Gen { family, output } => {
            let spec = family_spec(&family)?;
            let text = generate(&spec)?.to_text();
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
                None => out.write_all(text.as_bytes()).map_err(io_failure)?,
            }
            Ok(EXIT_OK)
        }
        Command::Solve {
            source,
            config,
            weighting,
            budget,
        } => {
            let (_, g) = load_graph(&source)?;
            let config = Configuration::parse(&config, g.order())?;
            let weighting = weighting
                .map(|w| BinaryWeighting::parse(&w, g.order()))
                .transpose()?;
            let options = SolverOptions {
                budget,
                ..Default::default()
            };
            let outcome = match solve_with(&g, &config, weighting.as_ref(), options) {
                Ok(o) => o,
                Err(Error::BudgetExceeded { states }) => {
                    writeln!(out, "budget-exceeded states={states}").map_err(io_failure)?;
                    return Ok(EXIT_BUDGET);
                }
                Err(e) => return Err(e.into()),
            };
            match outcome.certificate {
                Some(cert) => {
                    validate_certificate(&g, &cert, weighting.as_ref())
                        .map_err(|e| Failure::from(Error::InternalAssertion(e.to_string())))?;
                    write!(
                        out,
                        "solvable\nstates_explored={}\n{cert}",
                        outcome.states_explored
                    )
                    .map_err(io_failure)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(
                        out,
                        "unsolvable\nstates_explored={}",
                        outcome.states_explored
                    )
                    .map_err(io_failure)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Gamma { source, hint, run } => {
            let (_, g) = load_graph(&source)?;
            let r = gamma_exact_with(&g, hint, run.workers(), run.solver())?;
            writeln!(
                out,
                "gamma={}\nwitness={}\nconfigs_checked={}",
                r.gamma, r.witness, r.configs_checked
            )
            .map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            family,
            format,
            no_timing,
            run,
        } => {
            let options = CampaignOptions {
                workers: run.workers(),
                solver: run.solver(),
                timing: !no_timing,
            };
            let reports = match &family.graph {
                Some(path) => {
                    let g = read_graph(path)?;
                    vec![verify_graph(
                        &path.display().to_string(),
                        &g,
                        None,
                        &options,
                    )?]
                }
                None => {
                    let mut reports = Vec::new();
                    for spec in family_range(&family)? {
                        reports.push(verify_family(&spec, &options)?);
                    }
                    reports
                }
            };
            out.write_all(emit_report(&reports, format).as_bytes())
                .map_err(io_failure)?;
            let failed = reports
                .iter()
                .any(|r| matches!(r.status, Status::Mismatch | Status::BoundViolation));
            if failed {
                Ok(EXIT_NEGATIVE)
            } else if reports.iter().any(|r| r.status == Status::BudgetExceeded) {
                Ok(EXIT_BUDGET)
            } else {
                Ok(EXIT_OK)
            }
        }
        Command::Bound { source } => {
            let (_, g) = load_graph(&source)?;
            let r = bound_report(&g)?;
            let per_vertex: Vec<String> = r.per_vertex_s.iter().map(u64::to_string).collect();
            writeln!(
                out,
                "lower_stacked={}\nupper_diameter={}\nper_vertex_s={}",
                r.lower_stacked,
                r.upper_diameter,
                per_vertex.join(" ")
            )
            .map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Construct {
            source,
            config,
            algorithm,
            weighting,
        } => {
            let (_, g) = load_graph(&source)?;
            let config = Configuration::parse(&config, g.order())?;
            let mut trace = String::new();
            let mut target = None;
            let cert = match algorithm {
                Algorithm::Wheel => {
                    let (cert, t) = solve_wheel_traced(&g, &config)?;
                    trace = format!(
                        "case={:?} covered_after_sweep={}\n",
                        t.case, t.covered_after_sweep
                    );
                    cert
                }
                Algorithm::Multipartite => solve_multipartite(&g, &config)?,
                Algorithm::Rst => {
                    let (cert, t) = solve_rst(&g, &config)?;
                    trace = t.to_string();
                    cert
                }
                Algorithm::Pigeonhole => {
                    let b = match weighting {
                        Some(w) => BinaryWeighting::parse(&w, g.order())?,
                        None => BinaryWeighting::all_ones(g.order()),
                    };
                    let (cert, steps) = solve_pigeonhole_traced(&g, &b, &config)?;
                    for s in steps {
                        trace.push_str(&format!(
                            "cover target={} source={} delivered={}\n",
                            s.target, s.source, s.delivered
                        ));
                    }
                    target = Some(b);
                    cert
                }
            };
            // Independent replay before anything is printed.
            let last = validate_certificate(&g, &cert, target.as_ref())
                .map_err(|e| Failure::from(Error::InternalAssertion(e.to_string())))?;
            writeln!(out, "{cert}{trace}final: {last}").map_err(io_failure)?;
            Ok(EXIT_OK)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Graph::from_text(&text)?)
}

fn load_graph(source: &GraphSource) -> Result<(String, Graph), Failure> {
    match &source.graph {
        Some(path) => Ok((path.display().to_string(), read_graph(path)?)),
        None => {
            let spec = family_spec(&source.family)?;
            Ok((spec.to_string(), generate(&spec)?))
        }
    }
}

fn require<T: Copy>(value: Option<T>, flag: &str, family: Family) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("--{flag} is required for {family:?}").to_lowercase()))
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("bad --sizes value {text:?}")))
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, Failure> {
    let family = args
        .family
        .ok_or_else(|| usage("either --graph or --family is required"))?;
    let spec = match family {
        Family::Multipartite => {
            let sizes = args
                .sizes
                .as_deref()
                .ok_or_else(|| usage("--sizes is required for multipartite"))?;
            FamilySpec::Multipartite(parse_sizes(sizes)?)
        }
        Family::Wheel => FamilySpec::Wheel(require(args.n, "n", family)?),
        Family::Fuse => FamilySpec::Fuse {
            n: require(args.n, "n", family)?,
            d: require(args.d, "d", family)?,
        },
        Family::Path => FamilySpec::Path(require(args.n, "n", family)?),
        Family::Star => FamilySpec::Star(require(args.leaves, "leaves", family)?),
    };
    spec.validate()?;
    Ok(spec)
}

fn parse_range(text: &str, flag: &str) -> Result<Vec<usize>, Failure> {
    let bad = || usage(format!("bad --{flag} value {text:?}, expected N or A..B"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn family_range(args: &RangeArgs) -> Result<Vec<FamilySpec>, Failure> {
    let family = args
        .family
        .ok_or_else(|| usage("either --graph or --family is required"))?;
    let range = |value: &Option<String>, flag: &str| -> Result<Vec<usize>, Failure> {
        let text = value
            .as_deref()
            .ok_or_else(|| usage(format!("--{flag} is required for {family:?}").to_lowercase()))?;
        parse_range(text, flag)
    };
    let mut specs = match family {
        Family::Multipartite => {
            let mut specs = Vec::new();
            for s in &args.sizes {
                specs.push(FamilySpec::Multipartite(parse_sizes(s)?));
            }
            if let Some(total) = args.max_total {
                for t in 1..=total {
                    specs.extend(
                        nonincreasing_lists(t)
                            .into_iter()
                            // one class of size >= 2 is edgeless
                            .filter(|sizes| sizes.len() >= 2 || sizes == &[1])
                            .map(FamilySpec::Multipartite),
                    );
                }
            }
            if specs.is_empty() {
                return Err(usage("--sizes or --max-total is required for multipartite"));
            }
            specs
        }
        Family::Wheel => range(&args.n, "n")?
            .into_iter()
            .map(FamilySpec::Wheel)
            .collect(),
        Family::Path => range(&args.n, "n")?
            .into_iter()
            .map(FamilySpec::Path)
            .collect(),
        Family::Star => range(&args.leaves, "leaves")?
            .into_iter()
            .map(FamilySpec::Star)
            .collect(),
        Family::Fuse => {
            let ds = range(&args.d, "d")?;
            let mut specs = Vec::new();
            for n in range(&args.n, "n")? {
                for &d in &ds {
                    if d >= 1 && d < n {
                        specs.push(FamilySpec::Fuse { n, d });
                    }
                }
            }
            specs
        }
    };
    for spec in &specs {
        spec.validate()?;
    }
    specs.sort();
    specs.dedup();
    Ok(specs)
}
