use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parcat::census::{generate, parabolic_catalan, total_parabolic_catalan, verify, Family};
use parcat::maps::{self, RPermutation};
use parcat::polynomials::{demazure_poly, gv_determinant, is_nonpermutable, key_poly_dd, row_bound_sum};
use parcat::rtuples::{critical_list, tuple_from_critical};
use parcat::scanning::scan;
use parcat::tableaux::{enumerate_tableaux, key_of};
use parcat::{
    Composition, CriticalList, Error, FillKind, Limits, Partition, RSet, RTuple, SparsePoly, Tableau, TheoremId,
};

/// Environment variable holding the worker thread count.
const THREADS_VAR: &str = "PARCAT_THREADS";

#[derive(Parser)]
#[command(name = "parcat", version, about = "R-tuples, tableaux, Demazure polynomials and parabolic Catalan counts")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the labels a tuple satisfies
    Classify {
        #[command(flatten)]
        tuple: TupleArgs,
    },
    /// Critical list of a tuple, or the tuple of one kind built from a list
    Critical {
        #[command(flatten)]
        tuple: OptTupleArgs,
        /// Critical list such as "1:2,2:4,3:6;7:7,8:9;9:9"
        #[arg(long, conflicts_with = "tuple")]
        list: Option<String>,
        /// Fill used with --list
        #[arg(long, default_value = "increasing")]
        kind: String,
    },
    /// Apply one of the tuple and permutation maps
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        #[command(flatten)]
        tuple: OptTupleArgs,
        /// R-permutation, or a classical permutation for `project`
        #[arg(long)]
        perm: Option<String>,
    },
    /// The λ-key of an R-permutation
    Key {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        perm: String,
    },
    /// The scanning tableau S(T)
    Scan {
        #[command(flatten)]
        tableau: TableauArgs,
    },
    /// Enumerate the tableaux of a shape, optionally with row bounds
    Tableaux {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        bounds: Option<String>,
        /// Print only the number of tableaux
        #[arg(long)]
        count: bool,
    },
    /// Demazure polynomial d_λ(π; x)
    Demazure {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value_t = Method::Tableau)]
        method: Method,
    },
    /// Row bound sum s_λ(β; x)
    Rowsum {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        bounds: String,
    },
    /// Determinant of flagged complete homogeneous polynomials
    Gvdet {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        bounds: String,
    },
    /// Parabolic Catalan numbers and family sizes
    Count {
        #[arg(long, value_enum)]
        what: CountWhat,
        #[arg(long)]
        n: usize,
        /// Comma-separated elements of R
        #[arg(long, default_value = "")]
        r: String,
        /// Family name for --what family
        #[arg(long)]
        family: Option<String>,
    },
    /// List the members of a family
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        r: String,
    },
    /// Run a verification sweep
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Shape box as ROWSxCOLS
        #[arg(long = "box", default_value = "3x3")]
        bbox: String,
        /// Include wall-clock time, which makes the output vary between runs
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args)]
struct TupleArgs {
    /// Tuple such as "2,4,6;1,5,7,8,9;3"; `@path` reads it from a file
    #[arg(long)]
    tuple: String,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated elements of R, overriding the semicolons
    #[arg(long)]
    r: Option<String>,
}

#[derive(Args)]
struct OptTupleArgs {
    #[arg(long)]
    tuple: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<String>,
}

#[derive(Args)]
struct TableauArgs {
    /// Tableau JSON, or `@path`
    #[arg(long, conflicts_with_all = ["shape", "columns"])]
    tableau: Option<String>,
    #[arg(long, requires = "columns")]
    shape: Option<String>,
    /// Columns such as "1,2/2"
    #[arg(long, requires = "shape")]
    columns: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Core,
    Floor,
    Ceiling,
    Platform,
    Rank,
    Pi,
    Project,
    Lift,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tableau,
    Dd,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountWhat {
    Cnr,
    Total,
    Family,
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// A check failed; the payload is already rendered output.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

type Outcome = Result<String, Failure>;

fn payload(s: &str) -> anyhow::Result<String> {
    match s.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?.trim().to_string()),
        None => Ok(s.to_string()),
    }
}

fn rset_from(n: usize, r: &str) -> Result<RSet, Failure> {
    Ok(RSet::parse_list(n, r)?)
}

/// A tuple from its text, with `--r` (and `--n`) overriding or checking the
/// dividers written in the text.
fn tuple_from(text: &str, n: Option<usize>, r: Option<&str>) -> Result<RTuple, Failure> {
    let text = payload(text)?;
    let parsed = RTuple::parse(&text)?;
    if let Some(n) = n {
        if n != parsed.n() {
            return Err(Failure::Usage(format!("--n is {n} but the tuple has {} entries", parsed.n())));
        }
    }
    match r {
        None => Ok(parsed),
        Some(r) => {
            let rset = rset_from(parsed.n(), r)?;
            if text.contains(';') && parsed.rset() != &rset {
                return Err(Error::RSetMismatch { expected: rset.to_string(), found: parsed.rset().to_string() }.into());
            }
            Ok(parsed.with_rset(rset)?)
        }
    }
}

fn require<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| Failure::Usage(format!("{flag} is required here")))
}

/// Parses a name given on the command line; an unknown name is a usage error.
fn name_arg<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn shape_from(s: &str) -> Result<Partition, Failure> {
    Ok(Partition::parse(&payload(s)?)?)
}

fn perm_from(s: &str) -> Result<RPermutation, Failure> {
    Ok(RPermutation::parse(&payload(s)?)?)
}

/// A tuple read alongside a shape; without semicolons it takes the shape's dividers.
fn tuple_for(text: &str, shape: &Partition) -> Result<RTuple, Failure> {
    let text = payload(text)?;
    let t = RTuple::parse(&text)?;
    if text.contains(';') || t.n() != shape.n() {
        return Ok(t);
    }
    Ok(t.with_rset(shape.rset())?)
}

fn perm_for(text: &str, shape: &Partition) -> Result<RPermutation, Failure> {
    Ok(RPermutation::from_tuple(tuple_for(text, shape)?)?)
}

fn tableau_from(a: &TableauArgs) -> Result<Tableau, Failure> {
    match (&a.tableau, &a.shape, &a.columns) {
        (Some(j), _, _) => Ok(Tableau::parse_json(&payload(j)?)?),
        (None, Some(s), Some(c)) => Ok(Tableau::parse_columns(&shape_from(s)?, &payload(c)?)?),
        _ => Err(Failure::Usage("give --tableau, or --shape with --columns".to_string())),
    }
}

fn emit(format: Format, text: String, json: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => json.to_string(),
    }
}

fn emit_poly(format: Format, p: &SparsePoly) -> String {
    emit(format, p.to_string(), p.to_json_value())
}

fn emit_tableau(format: Format, t: &Tableau) -> String {
    emit(format, t.to_string(), serde_json::to_value(t).expect("tableaux serialize"))
}

fn run(cli: Cli) -> Outcome {
    let f = cli.format;
    match cli.command {
        Command::Classify { tuple } => {
            let t = tuple_from(&tuple.tuple, tuple.n, tuple.r.as_deref())?;
            let labels: Vec<&str> = t.classify().into_iter().map(|l| l.name()).collect();
            Ok(emit(f, labels.join(" "), json!({ "tuple": t.to_string(), "labels": labels })))
        }
        Command::Critical { tuple, list, kind } => match list {
            Some(list) => {
                let kind: FillKind = name_arg(&kind)?;
                let c = CriticalList::parse(&payload(&list)?)?;
                let t = tuple_from_critical(&c, kind)?;
                Ok(emit(f, t.to_string(), json!({ "critical_list": c.to_string(), "tuple": t.to_string() })))
            }
            None => {
                let t = tuple_from(require(&tuple.tuple, "--tuple or --list")?, tuple.n, tuple.r.as_deref())?;
                let c = critical_list(&t)?;
                Ok(emit(f, c.to_string(), json!({ "tuple": t.to_string(), "critical_list": c.to_string() })))
            }
        },
        Command::Map { name, tuple, perm } => {
            let out = match name {
                MapName::Core | MapName::Floor | MapName::Ceiling | MapName::Platform | MapName::Pi => {
                    let t = tuple_from(require(&tuple.tuple, "--tuple")?, tuple.n, tuple.r.as_deref())?;
                    match name {
                        MapName::Core => maps::core(&t)?.to_string(),
                        MapName::Floor => maps::floor_of(&t)?.to_string(),
                        MapName::Ceiling => maps::ceiling_of(&t)?.to_string(),
                        MapName::Platform => maps::platform(&t)?.to_string(),
                        _ => maps::pi_of(&t)?.to_string(),
                    }
                }
                MapName::Rank => maps::rank_tuple(&perm_from(require(&perm, "--perm")?)?).to_string(),
                MapName::Lift => maps::min_lift(&perm_from(require(&perm, "--perm")?)?)?.to_string(),
                MapName::Project => {
                    let text = payload(require(&perm, "--perm")?)?;
                    let s = if text.contains(';') {
                        RPermutation::parse(&text)?
                    } else {
                        RPermutation::classical(RTuple::parse(&text)?.entries().to_vec())?
                    };
                    let r = require(&tuple.r, "--r")?;
                    maps::r_projection(&s, &rset_from(s.n(), r)?)?.to_string()
                }
            };
            Ok(emit(f, out.clone(), json!({ "result": out })))
        }
        Command::Key { shape, perm } => {
            let shape = shape_from(&shape)?;
            Ok(emit_tableau(f, &key_of(&shape, &perm_for(&perm, &shape)?)?))
        }
        Command::Scan { tableau } => Ok(emit_tableau(f, &scan(&tableau_from(&tableau)?)?)),
        Command::Tableaux { shape, bounds, count } => {
            let shape = shape_from(&shape)?;
            let bounds = bounds.map(|b| tuple_for(&b, &shape)).transpose()?;
            let all: Vec<Tableau> = enumerate_tableaux(&shape, bounds.as_ref())?.collect();
            if count {
                return Ok(emit(f, all.len().to_string(), json!({ "count": all.len() })));
            }
            let text: Vec<String> = all.iter().map(ToString::to_string).collect();
            Ok(emit(f, text.join("\n\n"), serde_json::to_value(&all).expect("tableaux serialize")))
        }
        Command::Demazure { shape, perm, method } => {
            let shape = shape_from(&shape)?;
            let p = perm_for(&perm, &shape)?;
            let by_tableaux = || demazure_poly(&shape, &p);
            let by_dd = || key_poly_dd(&Composition::permuted(&shape, &p)?);
            match method {
                Method::Tableau => Ok(emit_poly(f, &by_tableaux()?)),
                Method::Dd => Ok(emit_poly(f, &by_dd()?)),
                Method::Both => {
                    let (a, b) = (by_tableaux()?, by_dd()?);
                    if a == b {
                        Ok(emit_poly(f, &a))
                    } else {
                        Err(Failure::Verification(emit(
                            f,
                            format!("mismatch\ntableau: {a}\ndd: {b}"),
                            json!({ "mismatch": true, "tableau": a.to_json_value(), "dd": b.to_json_value() }),
                        )))
                    }
                }
            }
        }
        Command::Rowsum { shape, bounds } => {
            let shape = shape_from(&shape)?;
            Ok(emit_poly(f, &row_bound_sum(&shape, &tuple_for(&bounds, &shape)?)?))
        }
        Command::Gvdet { shape, bounds } => {
            let shape = shape_from(&shape)?;
            let beta = tuple_for(&bounds, &shape)?;
            let det = gv_determinant(&shape, &beta)?;
            let np = is_nonpermutable(&shape, &beta)?;
            Ok(emit(
                f,
                format!("{det}\nnonpermutable: {np}"),
                json!({ "determinant": det.to_json_value(), "nonpermutable": np }),
            ))
        }
        Command::Count { what, n, r, family } => {
            let value = match what {
                CountWhat::Cnr => parabolic_catalan(&rset_from(n, &r)?),
                CountWhat::Total => {
                    if n == 0 {
                        return Err(Failure::Usage("--n must be at least 1".to_string()));
                    }
                    total_parabolic_catalan(n)
                }
                CountWhat::Family => {
                    let fam: Family = name_arg(require(&family, "--family")?)?;
                    generate(fam, &rset_from(n, &r)?).len() as u128
                }
            };
            Ok(emit(f, value.to_string(), json!({ "count": value.to_string() })))
        }
        Command::Generate { family, n, r } => {
            let fam: Family = name_arg(&family)?;
            let items: Vec<String> = generate(fam, &rset_from(n, &r)?).iter().map(ToString::to_string).collect();
            Ok(emit(f, items.join("\n"), json!({ "family": fam.name(), "items": items })))
        }
        Command::Verify { theorem, max_n, bbox, timing } => {
            let id: TheoremId = name_arg(&theorem)?;
            let (rows, cols) = bbox
                .split_once(['x', 'X'])
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Failure::Usage(format!("--box must look like 3x3, not {bbox:?}")))?;
            let report = verify(id, &Limits::new(max_n, rows, cols))?;
            let mut text = format!(
                "{}: {} ({} checks)",
                report.theorem,
                if report.pass { "pass" } else { "FAIL" },
                report.checked
            );
            if timing {
                let _ = write!(text, " in {} ms", report.ms);
            }
            for line in &report.failures {
                let _ = write!(text, "\n  {line}");
            }
            let mut json = report.to_json();
            if !timing {
                json.as_object_mut().expect("report is an object").remove("ms");
            }
            let out = emit(f, text, json);
            if report.pass {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let n: usize = v.parse().map_err(|_| Failure::Usage(format!("{THREADS_VAR} must be a number, not {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(format!("{THREADS_VAR}: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match configure_threads().and_then(|_| run(cli)) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(out)) => {
            println!("{out}");
            ExitCode::from(3)
        }
    }
}
