//! Command-line front end: count rows of the partial-tiling table, run the
//! cross-verification suites, list polyedge censuses, and tabulate the
//! closed-form counts.

use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lozenge::closedforms::{eval_formula, FormulaId};
use lozenge::counting::{
    brute_guard_from_env, count_brute_force, count_dp, count_dp_range, CountVector,
};
use lozenge::polyedges::census::{
    enumerate_forbidden_free, enumerate_free_polyedges, fixed_forbidden_census,
};
use lozenge::polyedges::FixedPolyedge;
use lozenge::table_io::{write_row, OutputFormat};
use lozenge::verify::{run_suites, Suite, VERIFY_MAX_N_LIMIT};
use lozenge::Error;

#[derive(Parser)]
#[command(
    name = "lozenge",
    version,
    about = "Exact enumeration of partial lozenge tilings of the subdivided equilateral triangle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count partial tilings of the side-n triangle for every l.
    Count {
        /// Side length of the subdivided triangle.
        #[arg(long)]
        n: u32,
        /// Counting method.
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Write output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run cross-verification suites and report pass/fail per check.
    Verify {
        /// Largest side length to verify (at most 15).
        #[arg(long, default_value_t = VERIFY_MAX_N_LIMIT)]
        max_n: u32,
        /// Comma-separated suites to run (default: all).
        #[arg(long, value_enum, value_delimiter = ',', num_args = 1..)]
        suites: Option<Vec<SuiteArg>>,
        /// Also write the computed count table as CSV to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List polyedge shapes of a given size and class.
    Polyedges {
        /// Number of edges per shape.
        #[arg(long)]
        k: usize,
        /// Shape class to enumerate.
        #[arg(long, value_enum, default_value_t = ShapeClass::Free)]
        class: ShapeClass,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Write output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the closed-form counts over their domains.
    Formulas {
        /// Largest side length to tabulate.
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Write output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Guarded brute-force subset scan (see LOZENGE_BRUTE_GUARD).
    Brute,
    /// Profile dynamic program; practical through n = 15 and beyond.
    Dp,
    /// Closed-form polynomials; covers l = 0..=6 only.
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Plain,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> OutputFormat {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
            Format::Plain => OutputFormat::Plain,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeClass {
    /// Free polyedges: connected shapes up to rotation, reflection, and
    /// translation.
    Free,
    /// Free polyedges in which every edge conflicts with another.
    Forbidden,
    /// Fixed conflict-connected forbidden shapes (translation only).
    FixedForbidden,
}

impl ShapeClass {
    fn name(self) -> &'static str {
        match self {
            ShapeClass::Free => "free",
            ShapeClass::Forbidden => "forbidden",
            ShapeClass::FixedForbidden => "fixed-forbidden",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Count {
            n,
            method,
            format,
            out,
        } => {
            let row = match method {
                Method::Dp => count_dp(n)?,
                Method::Brute => count_brute_force(n, brute_guard_from_env())?,
                Method::Formula => formula_row(n)?,
            };
            with_writer(out.as_deref(), |w| write_row(&row, format.into(), w))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n, suites, out } => {
            let suites: Vec<Suite> = match suites {
                Some(args) => args.into_iter().map(SuiteArg::into).collect(),
                None => Suite::ALL.to_vec(),
            };
            let report = run_suites(max_n, &suites)?;
            report.render(std::io::stdout().lock())?;
            if let Some(path) = out {
                let rows = count_dp_range(max_n)?;
                let file = File::create(&path)?;
                write_csv_table(&rows, file)?;
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Polyedges {
            k,
            class,
            format,
            out,
        } => {
            let shapes: Vec<FixedPolyedge> = match class {
                ShapeClass::Free => enumerate_free_polyedges(k)?
                    .into_iter()
                    .map(|f| f.canonical().clone())
                    .collect(),
                ShapeClass::Forbidden => enumerate_forbidden_free(k)?
                    .into_iter()
                    .map(|f| f.canonical().clone())
                    .collect(),
                ShapeClass::FixedForbidden => fixed_forbidden_census(k)?,
            };
            with_writer(out.as_deref(), |w| {
                write_shapes(k, class, &shapes, format, w)
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Formulas { max_n, format, out } => {
            with_writer(out.as_deref(), |w| write_formula_table(max_n, format, w))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Table,
    Formulas,
    Conjectures,
    Polyedges,
    Identities,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::Table => Suite::Table,
            SuiteArg::Formulas => Suite::Formulas,
            SuiteArg::Conjectures => Suite::Conjectures,
            SuiteArg::Polyedges => Suite::Polyedges,
            SuiteArg::Identities => Suite::Identities,
        }
    }
}

/// Row of counts from the closed forms: l = 0..=min(6, capacity). Larger l
/// have no closed form; use the dp method for full rows.
fn formula_row(n: u32) -> Result<CountVector, Error> {
    if n == 0 {
        return Err(Error::InvalidSide(0));
    }
    let top = CountVector::capacity_for(n).min(6);
    let counts = (0..=top)
        .map(|l| eval_formula(FormulaId::COUNTS[l], n))
        .collect::<Result<Vec<_>, _>>()?;
    CountVector::from_counts(n, counts)
}

fn with_writer(
    out: Option<&Path>,
    body: impl FnOnce(&mut dyn Write) -> Result<(), Error>,
) -> Result<(), Error> {
    match out {
        Some(path) => {
            let mut file = File::create(path)?;
            body(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            body(&mut stdout)
        }
    }
}

/// One CSV file holding several count rows under a single n,l,count header.
fn write_csv_table<W: Write>(rows: &[CountVector], writer: W) -> Result<(), Error> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["n", "l", "count"])?;
    for row in rows {
        let last = row.max_lozenge_count();
        for (l, count) in row.counts().iter().take(last + 1).enumerate() {
            csv.write_record([row.n().to_string(), l.to_string(), count.to_string()])?;
        }
    }
    csv.flush()?;
    Ok(())
}

fn write_shapes(
    k: usize,
    class: ShapeClass,
    shapes: &[FixedPolyedge],
    format: Format,
    writer: &mut dyn Write,
) -> Result<(), Error> {
    match format {
        Format::Plain => {
            writeln!(
                writer,
                "k={k} class={} count={}",
                class.name(),
                shapes.len()
            )?;
            for shape in shapes {
                writeln!(writer, "{shape}")?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(writer);
            csv.write_record(["shape", "edge", "row", "col", "orientation"])?;
            for (s, shape) in shapes.iter().enumerate() {
                for (e, edge) in shape.edges().iter().enumerate() {
                    csv.write_record([
                        s.to_string(),
                        e.to_string(),
                        edge.row.to_string(),
                        edge.col.to_string(),
                        edge.orientation.letter().to_string(),
                    ])?;
                }
            }
            csv.flush()?;
            Ok(())
        }
        Format::Json => {
            let value = serde_json::json!({
                "k": k,
                "class": class.name(),
                "count": shapes.len(),
                "shapes": shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            });
            serde_json::to_writer(&mut *writer, &value)?;
            writeln!(writer)?;
            Ok(())
        }
    }
}

fn write_formula_table(max_n: u32, format: Format, writer: &mut dyn Write) -> Result<(), Error> {
    let mut entries: Vec<(FormulaId, u32, String)> = Vec::new();
    for id in FormulaId::COUNTS {
        for n in id.domain_min()..=max_n {
            entries.push((id, n, eval_formula(id, n)?.to_string()));
        }
    }
    match format {
        Format::Plain => {
            for (id, n, value) in &entries {
                writeln!(writer, "formula={id} n={n} value={value}")?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(writer);
            csv.write_record(["formula", "n", "value"])?;
            for (id, n, value) in &entries {
                csv.write_record([id.name(), &n.to_string(), value])?;
            }
            csv.flush()?;
            Ok(())
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = entries
                .iter()
                .map(|(id, n, value)| {
                    serde_json::json!({ "formula": id.name(), "n": n, "value": value })
                })
                .collect();
            serde_json::to_writer(&mut *writer, &values)?;
            writeln!(writer)?;
            Ok(())
        }
    }
}
