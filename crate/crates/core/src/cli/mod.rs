//! The `ocpoly` command line: poset files in, exact reports out.
//!
//! Exit codes: 0 on success, 1 on a domain error or a failed `verify` suite,
//! 2 on a usage error (bad arguments or an unreadable input file).

mod file;
mod output;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::descent::{family_f_with, max_beta_over_f_with, runs};
use crate::equivalence::equivalent_exhaustive_with;
use crate::error::Result;
use crate::geometry::{format_rational, hrep_order_chain, rational::is_integer, Polytope, Rational};
use crate::limits::Limits;
use crate::partition::enumerate_partitions_with;
use crate::verify::{run_suite, SUITES};

pub use file::{format_poset_file, parse_poset_file, PosetFile};
use output::{
    rationals, DescentEntry, DescentReport, EquivReport, FacetsReport, HrepReport, Inequality, IntegralReport,
    InvariantsReport, LatticeCounts, Report, SearchReport, VerticesReport, VolumeReport,
};

#[derive(Parser, Debug)]
#[command(name = "ocpoly", version, about = "Order, chain and order-chain polytopes of finite posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest dilation `t` for lattice point counts (counts for 1..=t).
    #[arg(long, global = true, default_value_t = 3)]
    dilations: u32,
    /// Work cap for exhaustive steps: candidate maps tried by `equiv` and
    /// grid points scanned per lattice count.
    #[arg(long, global = true)]
    cap: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Input {
    /// Poset file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Defining inequalities of the order-chain polytope.
    Hrep(Input),
    /// Exact vertices, sorted lexicographically.
    Vertices(Input),
    /// Irredundant facet inequalities.
    Facets(Input),
    /// Whether every vertex is integral, with a witness otherwise.
    Integral(Input),
    /// Exact Euclidean volume.
    Volume(Input),
    /// Dimension, vertex and facet counts, volume, integrality and lattice counts.
    Invariants(Input),
    /// Decides affine unimodular equivalence of two polytopes.
    Equiv { a: PathBuf, b: PathBuf },
    /// All edge partitions of the poset maximizing the volume.
    SearchPartitions(Input),
    /// Maximum of the descent statistic over the run-constrained family.
    DescentMax { n: usize },
    /// Runs a verification suite.
    Verify {
        #[arg(value_parser = SUITES)]
        suite: String,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }
}

/// Parses `args` (program name first), runs the command and captures output.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut limits = Limits::default();
    if let Some(cap) = cli.cap {
        limits.equivalence_budget = cap;
        limits.lattice_work = cap;
    }
    let ctx = Context { format: cli.format, dilations: cli.dilations, limits };
    match ctx.dispatch(&cli.command) {
        Ok(Dispatched { text, success }) => Outcome { code: if success { 0 } else { 1 }, stdout: text, stderr: String::new() },
        Err(Failure::Usage(message)) => Outcome::usage(format!("error: {message}\n")),
        Err(Failure::Domain(e)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Runs the command line and writes its output; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let outcome = execute(args);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}

enum Failure {
    Usage(String),
    Domain(crate::Error),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Domain(e)
    }
}

struct Dispatched {
    text: String,
    success: bool,
}

struct Context {
    format: Format,
    dilations: u32,
    limits: Limits,
}

fn read_poset_file(path: &Path) -> std::result::Result<PosetFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_poset_file(&text)?)
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).map(BigInt::from).product())
}

impl Context {
    fn emit(&self, report: &impl Report) -> String {
        match self.format {
            Format::Text => report.text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }

    fn polytope(&self, path: &Path) -> std::result::Result<Polytope, Failure> {
        let f = read_poset_file(path)?;
        Ok(Polytope::with_limits(hrep_order_chain(&f.effective_partition()), &self.limits)?)
    }

    fn dispatch(&self, command: &Command) -> std::result::Result<Dispatched, Failure> {
        let ok = |text| Ok(Dispatched { text, success: true });
        match command {
            Command::Hrep(input) => {
                let f = read_poset_file(&input.input)?;
                let sys = hrep_order_chain(&f.effective_partition());
                ok(self.emit(&HrepReport { d: sys.dim, inequalities: sys.halfspaces.iter().map(Inequality::from).collect() }))
            }
            Command::Vertices(input) => {
                let p = self.polytope(&input.input)?;
                ok(self.emit(&VerticesReport {
                    d: p.dim(),
                    vertex_count: p.vertex_count(),
                    vertices: p.vertices.iter().map(|v| rationals(v)).collect(),
                }))
            }
            Command::Facets(input) => {
                let p = self.polytope(&input.input)?;
                ok(self.emit(&FacetsReport {
                    d: p.dim(),
                    facet_count: p.facet_count(),
                    facets: p.facets.iter().map(Inequality::from).collect(),
                }))
            }
            Command::Integral(input) => {
                let p = self.polytope(&input.input)?;
                let witness = p.vertices.iter().find(|v| !v.iter().all(is_integer)).cloned();
                ok(self.emit(&IntegralReport {
                    d: p.dim(),
                    integral: witness.is_none(),
                    witness: witness.as_deref().map(rationals),
                    witness_point: witness,
                }))
            }
            Command::Volume(input) => {
                let p = self.polytope(&input.input)?;
                let v = p.volume()?;
                ok(self.emit(&VolumeReport {
                    d: p.dim(),
                    volume: format_rational(&v),
                    normalized_volume: format_rational(&(&v * factorial(p.dim()))),
                }))
            }
            Command::Invariants(input) => {
                let p = self.polytope(&input.input)?;
                let counts = (1..=self.dilations)
                    .map(|t| Ok((t, p.lattice_points(t, &self.limits)?)))
                    .collect::<Result<Vec<_>>>()?;
                ok(self.emit(&InvariantsReport {
                    d: p.dim(),
                    vertices: p.vertices.iter().map(|v| rationals(v)).collect(),
                    facets: p.facet_count(),
                    volume: format_rational(&p.volume()?),
                    integral: p.is_integral(),
                    lattice_counts: LatticeCounts(counts),
                    vertex_count: p.vertex_count(),
                    facet_count: p.facet_count(),
                }))
            }
            Command::Equiv { a, b } => {
                let (pa, pb) = (self.polytope(a)?, self.polytope(b)?);
                let cert = equivalent_exhaustive_with(&pa, &pb, &self.limits)?;
                ok(self.emit(&EquivReport::from(&cert)))
            }
            Command::SearchPartitions(input) => {
                let f = read_poset_file(&input.input)?;
                let (mut best, mut argmax, mut checked) = (None::<Rational>, Vec::new(), 0);
                for l in enumerate_partitions_with(&f.poset, &self.limits)? {
                    let v = Polytope::with_limits(hrep_order_chain(&l), &self.limits)?.volume()?;
                    checked += 1;
                    if best.as_ref().is_none_or(|b| v > *b) {
                        best = Some(v.clone());
                        argmax.clear();
                    }
                    if best.as_ref() == Some(&v) {
                        argmax.push(l.order_edges());
                    }
                }
                let best = best.expect("at least one partition");
                ok(self.emit(&SearchReport {
                    d: f.poset.d(),
                    partitions_checked: checked,
                    max_volume: format_rational(&best),
                    argmax,
                }))
            }
            Command::DescentMax { n } => {
                let best = max_beta_over_f_with(*n, &self.limits)?;
                ok(self.emit(&DescentReport {
                    n: *n,
                    family_size: family_f_with(*n, &self.limits)?.len(),
                    max_beta: best.value,
                    argmax: best
                        .argmax
                        .iter()
                        .map(|s| DescentEntry { descent_set: s.elements(), run_list: runs(s).parts })
                        .collect(),
                }))
            }
            Command::Verify { suite } => {
                let report = run_suite(suite)?;
                Ok(Dispatched { text: self.emit(&report), success: report.passed })
            }
        }
    }
}
