//! Command-line front end.
//!
//! ```text
//! unitcodes graph <n> <m> [--invariants] [--export-edges P] [--export-dot P] [--export-incidence P] [--field r]
//! unitcodes code <n> <m> --field <r> [--exact] [--budget N]
//! unitcodes dual <n> <m> --field <r> [--cap K]
//! unitcodes verify --n A..B --m C..D --fields 2,3,5 [--json P] [--csv P] [--jobs W]
//! unitcodes conjecture --n A..B --m C..D --fields LIST
//! ```
//!
//! Exit codes: 0 success, 1 usage error, 2 a proven-result check failed,
//! 3 I/O error. Reports go to files only through `--json`/`--csv`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::code::{self, predict, DualSearch, LinearCode, MinDistance};
use crate::error::Error;
use crate::exec::Exec;
use crate::graph::{ExportFormat, UnitGraph};
use crate::ring::{is_prime, RingSpec};
use crate::verify::{self, CheckName, Report, Span, Status, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_THEOREM_FAIL: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "unitcodes",
    version,
    about = "Unit graphs of Z_n + Z_m and their incidence codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the unit graph, optionally report invariants and export it.
    Graph {
        n: u64,
        m: u64,
        #[arg(long)]
        invariants: bool,
        #[arg(long, value_name = "PATH")]
        export_edges: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        export_dot: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        export_incidence: Option<PathBuf>,
        /// Also report the incidence matrix rank over GF(r).
        #[arg(long, value_name = "R")]
        field: Option<u64>,
    },
    /// Parameters of the incidence code over GF(r).
    Code {
        n: u64,
        m: u64,
        #[arg(long, value_name = "R")]
        field: u64,
        /// Compute the minimum distance by exhaustive enumeration.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_name = "N", default_value_t = code::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Parameters of the dual code over GF(r).
    Dual {
        n: u64,
        m: u64,
        #[arg(long, value_name = "R")]
        field: u64,
        #[arg(long, value_name = "K", default_value_t = code::DEFAULT_DUAL_CAP)]
        cap: usize,
    },
    /// Check every closed form over a range of instances.
    Verify {
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Report only the conjecture checks over a range of instances.
    Conjecture {
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long = "n", value_name = "A..B")]
    n: Span,
    #[arg(long = "m", value_name = "A..B")]
    m: Span,
    #[arg(long, value_name = "LIST", value_delimiter = ',', required = true)]
    fields: Vec<u64>,
    #[arg(long, value_name = "W")]
    jobs: Option<usize>,
    #[arg(long, value_name = "N", default_value_t = code::DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_name = "K", default_value_t = code::DEFAULT_DUAL_CAP)]
    cap: usize,
    #[arg(long, value_name = "N", default_value_t = 200_000)]
    max_matrix_entries: u64,
}

impl SweepArgs {
    fn config(&self) -> SweepConfig {
        SweepConfig {
            budget: self.budget,
            dual_cap: self.cap,
            max_matrix_entries: self.max_matrix_entries,
            jobs: self.jobs,
            ..SweepConfig::new(self.n, self.m, self.fields.clone())
        }
    }
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn io_err(path: &Path) -> impl Fn(io::Error) -> Failure + '_ {
    move |e| Failure::Io(format!("{}: {e}", path.display()))
}

fn out_err(e: io::Error) -> Failure {
    Failure::Io(format!("stdout: {e}"))
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Graph {
            n,
            m,
            invariants,
            export_edges,
            export_dot,
            export_incidence,
            field,
        } => {
            let spec = RingSpec::new(n, m)?;
            if let Some(r) = field {
                check_field(r)?;
            }
            let g = UnitGraph::build(spec);
            graph_command(&g, invariants, field, out)?;
            for (path, format) in [
                (export_edges, ExportFormat::EdgeList),
                (export_dot, ExportFormat::Dot),
                (export_incidence, ExportFormat::IncidenceText),
            ] {
                if let Some(path) = path {
                    let file = File::create(&path).map_err(io_err(&path))?;
                    g.export(format, BufWriter::new(file))
                        .map_err(io_err(&path))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Code {
            n,
            m,
            field,
            exact,
            budget,
        } => {
            let spec = RingSpec::new(n, m)?;
            check_field(field)?;
            let code = LinearCode::from_incidence(&UnitGraph::build(spec), field)?;
            let d = if exact {
                code.min_distance_exact(budget).to_string()
            } else {
                "?".to_string()
            };
            writeln!(
                out,
                "[{},{},{}]_{}",
                code.length(),
                code.dimension(),
                d,
                field
            )
            .map_err(out_err)?;
            if exact {
                if let MinDistance::Unknown { reason, .. } = code.min_distance_exact(budget) {
                    writeln!(err, "note: minimum distance not exact ({reason})")
                        .map_err(out_err)?;
                }
            }
            let p = predict(&spec.classify(), field);
            if let Some(primal) = p.primal {
                writeln!(
                    out,
                    "predicted ({}): {}",
                    p.source,
                    primal.display_over(field as u32)
                )
                .map_err(out_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Dual { n, m, field, cap } => {
            let spec = RingSpec::new(n, m)?;
            check_field(field)?;
            let code = LinearCode::from_incidence(&UnitGraph::build(spec), field)?;
            let res = code.dual_search(DualSearch::with_cap(cap), Exec::default());
            writeln!(
                out,
                "[{},{},{}]_{}",
                code.length(),
                code.dual_dimension(),
                res.distance,
                field
            )
            .map_err(out_err)?;
            if let Some(cols) = res.witness {
                let cols: Vec<String> = cols.iter().map(ToString::to_string).collect();
                writeln!(out, "dependent columns: {}", cols.join(" ")).map_err(out_err)?;
            }
            let p = predict(&spec.classify(), field);
            if let Some(dual) = p.dual {
                writeln!(
                    out,
                    "predicted ({}): {}",
                    p.source,
                    dual.display_over(field as u32)
                )
                .map_err(out_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { sweep, json, csv } => {
            let report = verify::sweep(&sweep.config())?;
            if let Some(path) = &json {
                std::fs::write(path, report.to_json()).map_err(io_err(path))?;
            }
            if let Some(path) = &csv {
                let file = File::create(path).map_err(io_err(path))?;
                report
                    .write_csv(BufWriter::new(file))
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            print_summary(&report, out).map_err(out_err)?;
            print_listing(&report, Status::Fail, out).map_err(out_err)?;
            print_listing(&report, Status::ConjectureFail, out).map_err(out_err)?;
            Ok(exit_for(&report))
        }
        Command::Conjecture { sweep } => {
            let report = verify::sweep(&sweep.config())?;
            print_conjectures(&report, out).map_err(out_err)?;
            print_listing(&report, Status::Fail, out).map_err(out_err)?;
            Ok(exit_for(&report))
        }
    }
}

fn check_field(r: u64) -> Result<(), Failure> {
    if is_prime(r) {
        Ok(())
    } else {
        Err(Error::NotPrime(r).into())
    }
}

fn exit_for(report: &Report) -> i32 {
    if report.has_theorem_failure() {
        EXIT_THEOREM_FAIL
    } else {
        EXIT_OK
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn graph_command(
    g: &UnitGraph,
    invariants: bool,
    field: Option<u64>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let spec = g.spec();
    let profile = spec.classify();
    let mut lines = vec![
        ("ring", spec.to_string()),
        ("case", profile.case_tag.to_string()),
        ("vertices", g.vertex_count().to_string()),
        ("edges", g.edge_count().to_string()),
    ];
    if invariants {
        let inv = g.invariants();
        lines.extend([
            ("connected", yes_no(inv.connected).to_string()),
            ("components", inv.num_components.to_string()),
            ("bipartite", yes_no(inv.bipartite).to_string()),
            ("diameter", inv.diameter.to_string()),
            ("girth", inv.girth.to_string()),
            ("min degree", inv.min_degree.to_string()),
            ("edge connectivity", inv.edge_connectivity.to_string()),
        ]);
    }
    if let Some(r) = field {
        let rank = g.incidence_matrix(r)?.rank();
        lines.push(("incidence rank", format!("{rank} over GF({r})")));
    }
    for (key, value) in lines {
        writeln!(out, "{key:<18} {value}").map_err(out_err)?;
    }
    Ok(())
}

fn print_summary(report: &Report, out: &mut dyn Write) -> io::Result<()> {
    let s = &report.summary;
    writeln!(out, "{} records, {} checks", s.records, s.checks)?;
    let statuses = [
        Status::Pass,
        Status::Fail,
        Status::Skipped,
        Status::ConjecturePass,
        Status::ConjectureFail,
    ];
    write!(out, "{:<26}", "check")?;
    for st in statuses {
        write!(out, " {:>15}", st.as_str())?;
    }
    writeln!(out)?;
    for (name, counts) in &s.by_check {
        write!(out, "{name:<26}")?;
        for st in statuses {
            write!(
                out,
                " {:>15}",
                counts.get(st.as_str()).copied().unwrap_or(0)
            )?;
        }
        writeln!(out)?;
    }
    writeln!(
        out,
        "theorem failures: {}, conjecture failures: {}",
        s.theorem_failures, s.conjecture_failures
    )
}

fn print_listing(report: &Report, status: Status, out: &mut dyn Write) -> io::Result<()> {
    for (rec, c) in report.with_status(status) {
        let show =
            |q: &Option<verify::Quantity>| q.as_ref().map_or("-".to_string(), ToString::to_string);
        writeln!(
            out,
            "{status}: n={} m={} r={} case={} {} predicted={} observed={}{}",
            rec.n,
            rec.m,
            rec.r,
            rec.case,
            c.name,
            show(&c.predicted),
            show(&c.observed),
            c.reason
                .as_ref()
                .map_or(String::new(), |r| format!(" ({r})")),
        )?;
    }
    Ok(())
}

fn print_conjectures(report: &Report, out: &mut dyn Write) -> io::Result<()> {
    for name in [CheckName::ConjectureI, CheckName::ConjectureII] {
        let count = |st: Status| {
            report
                .with_status(st)
                .filter(|(_, c)| c.name == name)
                .count()
        };
        writeln!(
            out,
            "{name}: {} pass, {} fail, {} skipped",
            count(Status::ConjecturePass),
            count(Status::ConjectureFail),
            count(Status::Skipped),
        )?;
    }
    print_listing(report, Status::ConjectureFail, out)
}
