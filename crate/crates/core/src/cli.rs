//! Command-line front end.
//!
//! Exit codes: `0` success, `1` domain failure (not a lattice, not a fuzzy interval, an
//! asserted law failed), `2` usage or parse error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::crisp::CrispInterval;
use crate::error::Error;
use crate::fuzzy_interval::{self as fi, FuzzyInterval};
use crate::fuzzy_set::FuzzySet;
use crate::grade::{parse_grade_set, Grade};
use crate::io;
use crate::laws::{self, Budget, LawReport, Suite, Verifier};
use crate::lattice::{FiniteLattice, StandardLattice};

#[derive(Debug, Parser)]
#[command(name = "fuzzy-lattice", version, about = "Fuzzy intervals over finite lattices")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Meet,
    Join,
}

#[derive(Debug, Args)]
pub struct LatticeSource {
    /// Use a built-in lattice (chain3, boolean2, m3, n5, product(chain2,chain3), ...)
    /// instead of a lattice file.
    #[arg(long)]
    pub fixture: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a lattice file and report its bounds and distributivity.
    Validate {
        #[command(flatten)]
        source: LatticeSource,
        lattice: Option<PathBuf>,
    },
    /// Place a fuzzy set in the ladder fuzzy interval ⊂ convex sublattice ⊂ sublattice.
    Classify {
        #[command(flatten)]
        source: LatticeSource,
        /// `LATTICE FUZZYSET`, or just `FUZZYSET` with --fixture.
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
    },
    /// Meet or join of two fuzzy intervals.
    Op {
        op: OpKind,
        #[command(flatten)]
        source: LatticeSource,
        /// Also print the cut of the result at every threshold.
        #[arg(long)]
        cuts: bool,
        /// `LATTICE A B`, or `A B` with --fixture.
        #[arg(required = true, num_args = 2..=3)]
        files: Vec<PathBuf>,
    },
    /// Run law suites over enumerated intervals.
    Laws {
        #[command(flatten)]
        source: LatticeSource,
        lattice: Option<PathBuf>,
        /// Grade chain, e.g. `0,1/2,1`.
        #[arg(long, default_value = "0,1/2,1")]
        grades: String,
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Instance count above which a law is sampled.
        #[arg(long, default_value_t = laws::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = laws::DEFAULT_SEED)]
        seed: u64,
    },
    /// List all crisp intervals, or all fuzzy intervals when --grades is given.
    Enumerate {
        #[command(flatten)]
        source: LatticeSource,
        lattice: Option<PathBuf>,
        #[arg(long)]
        grades: Option<String>,
    },
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Cycle(..) | Error::NotALattice(..) | Error::NotAFuzzyInterval(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed stdout ends the command quietly
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: 0,
                message: String::new(),
            };
        }
        Failure::usage(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Validate { source, lattice } => {
            validate(source, lattice.as_deref(), cli.format.unwrap_or(Format::Text), out)
        }
        Command::Classify { source, files } => {
            classify(source, files, cli.format.unwrap_or(Format::Text), out)
        }
        Command::Op {
            op,
            source,
            cuts,
            files,
        } => binary_op(*op, source, *cuts, files, cli.format.unwrap_or(Format::Json), out),
        Command::Laws {
            source,
            lattice,
            grades,
            suite,
            budget,
            seed,
        } => {
            if *budget == 0 {
                return Err(Failure::usage("--budget must be positive"));
            }
            let budget = Budget {
                max_instances: *budget,
                seed: *seed,
            };
            run_laws(
                source,
                lattice.as_deref(),
                grades,
                suite,
                budget,
                cli.format.unwrap_or(Format::Text),
                out,
            )
        }
        Command::Enumerate {
            source,
            lattice,
            grades,
        } => enumerate(
            source,
            lattice.as_deref(),
            grades.as_deref(),
            cli.format.unwrap_or(Format::Text),
            out,
        ),
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_lattice(
    source: &LatticeSource,
    path: Option<&Path>,
) -> std::result::Result<Arc<FiniteLattice>, Failure> {
    match (&source.fixture, path) {
        (Some(_), Some(_)) => Err(Failure::usage("give either --fixture or a lattice file, not both")),
        (None, None) => Err(Failure::usage("a lattice file or --fixture is required")),
        (Some(name), None) => Ok(Arc::new(name.parse::<StandardLattice>()?.build()?)),
        (None, Some(path)) => Ok(Arc::new(io::parse_lattice(&read(path)?)?)),
    }
}

/// Splits positional files into the lattice source and the remaining inputs.
fn lattice_and_inputs<'a>(
    source: &LatticeSource,
    files: &'a [PathBuf],
    inputs: usize,
) -> std::result::Result<(Arc<FiniteLattice>, &'a [PathBuf]), Failure> {
    let expected = inputs + usize::from(source.fixture.is_none());
    if files.len() != expected {
        return Err(Failure::usage(format!(
            "expected {expected} file arguments, got {}",
            files.len()
        )));
    }
    let (lattice_path, rest) = if source.fixture.is_some() {
        (None, files)
    } else {
        (Some(files[0].as_path()), &files[1..])
    };
    Ok((load_lattice(source, lattice_path)?, rest))
}

fn emit(out: &mut dyn Write, value: &Value) -> std::result::Result<(), Failure> {
    out.write_all(io::to_pretty(value).as_bytes())?;
    Ok(())
}

fn validate(
    source: &LatticeSource,
    path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let l = load_lattice(source, path)?;
    let (distributive, witness) = l.is_distributive();
    let witness: Option<Vec<&str>> =
        witness.map(|(x, y, z)| vec![l.element_name(x), l.element_name(y), l.element_name(z)]);
    match format {
        Format::Json => emit(
            out,
            &json!({
                "lattice": l.name(),
                "elements": l.len(),
                "bottom": l.element_name(l.bottom()),
                "top": l.element_name(l.top()),
                "distributive": distributive,
                "witness": witness,
            }),
        )?,
        Format::Text => {
            writeln!(out, "lattice: {}", l.name())?;
            writeln!(out, "elements: {}", l.len())?;
            writeln!(out, "bottom: {}", l.element_name(l.bottom()))?;
            writeln!(out, "top: {}", l.element_name(l.top()))?;
            match witness {
                None => writeln!(out, "distributive: true")?,
                Some(w) => writeln!(out, "distributive: false, witness: ({})", w.join(","))?,
            }
        }
    }
    Ok(0)
}

fn classification_value(m: &FuzzySet) -> (fi::Classification, Value) {
    let c = fi::classify(m);
    let l = m.lattice();
    let witness = c.witness.map(|w| w.render(l));
    let failed = match c.class {
        fi::FuzzyClass::FuzzyInterval => None,
        fi::FuzzyClass::FuzzyConvexSublattice => Some("fuzzy-interval"),
        fi::FuzzyClass::FuzzySublattice => Some("fuzzy-convex-sublattice"),
        fi::FuzzyClass::None => Some("fuzzy-sublattice"),
    };
    let v = json!({
        "class": c.class.as_str(),
        "failed": failed,
        "witness": witness,
    });
    (c, v)
}

fn write_classification(out: &mut dyn Write, format: Format, v: &Value) -> std::result::Result<(), Failure> {
    match format {
        Format::Json => emit(out, v),
        Format::Text => {
            writeln!(out, "{}", v["class"].as_str().unwrap_or_default())?;
            if let (Some(failed), Some(w)) = (v["failed"].as_str(), v["witness"].as_str()) {
                writeln!(out, "not {failed}: witness {w}")?;
            }
            Ok(())
        }
    }
}

fn classify(source: &LatticeSource, files: &[PathBuf], format: Format, out: &mut dyn Write) -> CmdResult {
    let (l, inputs) = lattice_and_inputs(source, files, 1)?;
    let m = io::parse_fuzzy_set(&read(&inputs[0])?, &l)?;
    let (_, v) = classification_value(&m);
    write_classification(out, format, &v)?;
    Ok(0)
}

fn binary_op(
    op: OpKind,
    source: &LatticeSource,
    cuts: bool,
    files: &[PathBuf],
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let (l, inputs) = lattice_and_inputs(source, files, 2)?;
    let mut operands = Vec::with_capacity(2);
    for path in inputs {
        let m = io::parse_fuzzy_set(&read(path)?, &l)?;
        let (c, v) = classification_value(&m);
        if c.class != fi::FuzzyClass::FuzzyInterval {
            writeln!(out, "{}: not a fuzzy interval", path.display())?;
            write_classification(out, format, &v)?;
            return Ok(1);
        }
        operands.push(FuzzyInterval::new(m)?);
    }
    let result = match op {
        OpKind::Meet => fi::fi_meet(&operands[0], &operands[1])?,
        OpKind::Join => fi::fi_join(&operands[0], &operands[1])?,
    };
    let cut_rows: Vec<(Grade, CrispInterval)> = result.cut_intervals().to_vec();
    match format {
        Format::Json => {
            let mut v = io::fuzzy_set_to_json(result.as_fuzzy_set());
            if cuts {
                let rows: Vec<Value> = cut_rows
                    .iter()
                    .map(|(p, i)| json!({"threshold": p.to_string(), "cut": i.display_ascii(&l).to_string()}))
                    .collect();
                v["cuts"] = Value::Array(rows);
            }
            emit(out, &v)?;
        }
        Format::Text => {
            for x in l.elements() {
                writeln!(out, "{}: {}", l.element_name(x), result.grade(x))?;
            }
            if cuts {
                writeln!(out, "cuts:")?;
                for (p, i) in &cut_rows {
                    writeln!(out, "  {p}: {}", i.display(&l))?;
                }
            }
        }
    }
    Ok(0)
}

fn run_laws(
    source: &LatticeSource,
    path: Option<&Path>,
    grades: &str,
    suite: &str,
    budget: Budget,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let l = load_lattice(source, path)?;
    let grades = parse_grade_set(grades)?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        suite
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_, Error>>()?
    };
    let verifier = Verifier::new(l, grades, budget)?;
    let reports: Vec<LawReport> = suites.iter().map(|&s| verifier.run(s)).collect();
    match format {
        Format::Json => {
            let v = match reports.as_slice() {
                [single] => single.to_json(),
                many => Value::Array(many.iter().map(LawReport::to_json).collect()),
            };
            emit(out, &v)?;
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}", r.to_table())?;
            }
        }
    }
    let passed = reports.iter().all(LawReport::passed);
    if format == Format::Text {
        writeln!(out, "{}", if passed { "all asserted laws pass" } else { "asserted law failures" })?;
    }
    Ok(if passed { 0 } else { 1 })
}

fn enumerate(
    source: &LatticeSource,
    path: Option<&Path>,
    grades: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let l = load_lattice(source, path)?;
    let (grade_list, items): (Option<Vec<Grade>>, Vec<String>) = match grades {
        None => (
            None,
            laws::enumerate_intervals(&l)
                .iter()
                .map(|i| i.display(&l).to_string())
                .collect(),
        ),
        Some(g) => {
            let g = parse_grade_set(g)?;
            let items = laws::enumerate_fuzzy_intervals(&l, &g)?
                .iter()
                .map(|m| m.display().to_string())
                .collect();
            (Some(g), items)
        }
    };
    match format {
        Format::Json => {
            let mut v = json!({"lattice": l.name(), "count": items.len(), "items": items});
            if let Some(g) = &grade_list {
                v["grades"] = json!(g.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            }
            emit(out, &v)?;
        }
        Format::Text => {
            writeln!(out, "count: {}", items.len())?;
            for item in items {
                writeln!(out, "{item}")?;
            }
        }
    }
    Ok(0)
}
