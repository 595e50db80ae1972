//! Command-line front end.
//!
//! Every command prints one JSON document (or a flattened `key: value`
//! listing with `--output text`). Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | unreadable input: bad arguments, missing file, malformed JSON |
//! | 2 | the fan fails validation |
//! | 3 | any other domain error |
//!
//! Failures print `{"error": {"code": ..., "message": ...}}`; for exit 2 the
//! violated axioms are listed alongside. Ray indices are 1-based in all
//! input and output.
//!
//! Polynomial tuple files look like `{"polys": [["-3", "0"], [["1/2", "-1*i"]]]}`:
//! one list per polynomial holding the coefficients below the implicit
//! leading 1, constant term first. A coefficient is a real `"p/q"` or a pair
//! `["p/q", "p/q*i"]`.
//!
//! `TORICKIT_MAX_R` caps the number of rays accepted (default 20).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cox::{cox_report, degree_of, CoxGroupReport, DegreeVector};
use crate::document::{FanDocument, PolyTupleDocument};
use crate::error::Error;
use crate::fan::{
    classify_fans, enumerate_subfans, is_complete, is_smooth, primitive_collections, r_min, validate_fan, Axiom,
    Fan, Face, ValidationReport,
};
use crate::holmap::{membership, stabilize, WitnessSummary};
use crate::lattice::complete_degrees;
use crate::par::Execution;
use crate::stability::{stability_report, standing_hypotheses, EquivalenceKind};

pub const MAX_R_VAR: &str = "TORICKIT_MAX_R";
pub const DEFAULT_MAX_R: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "torickit", version, about = "Exact toolkit for smooth toric varieties given by fans")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a fan and report smoothness, completeness, primitive
    /// collections and the Cox group.
    Analyze { fan: PathBuf },
    /// Stability dimension for a degree vector. Without `--degrees` or
    /// `--free` the smallest positive degree is used.
    Stability {
        fan: PathBuf,
        /// Full degree vector `d₁,…,d_r`.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "free")]
        degrees: Option<Vec<i64>>,
        /// Partial degrees `i=dᵢ,…` completed through the kernel.
        #[arg(long, value_delimiter = ',', value_parser = parse_assignment)]
        free: Option<Vec<(usize, u64)>>,
    },
    /// Decide whether a polynomial tuple defines a based holomorphic map.
    Holcheck { fan: PathBuf, tuple: PathBuf },
    /// Apply the stabilization map with increment `a`.
    Stabilize {
        fan: PathBuf,
        tuple: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        increment: Vec<u64>,
    },
    /// List the proper subfans sharing all rays of the fan.
    Subfans {
        fan: PathBuf,
        /// Group the subfans into GL(n, Z) classes.
        #[arg(long)]
        classify: bool,
    },
}

fn parse_assignment(s: &str) -> Result<(usize, u64), String> {
    let (i, d) = s.split_once('=').ok_or_else(|| format!("expected i=d, got {s:?}"))?;
    let i = i.trim().parse().map_err(|e| format!("bad index in {s:?}: {e}"))?;
    let d = d.trim().parse().map_err(|e| format!("bad degree in {s:?}: {e}"))?;
    Ok((i, d))
}

/// Result of one invocation, ready to print.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub body: Value,
}

enum Failure {
    Unreadable(String),
    Invalid(ValidationReport),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => Failure::Unreadable(m),
            other => Failure::Domain(other),
        }
    }
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        match self {
            Failure::Unreadable(message) => Outcome {
                exit_code: 1,
                body: error_body("PARSE_ERROR", &message),
            },
            Failure::Invalid(report) => {
                let mut body = error_body("INVALID_FAN", "fan fails validation");
                body["violations"] = json!(violations_out(&report));
                Outcome { exit_code: 2, body }
            }
            Failure::Domain(e) => Outcome {
                exit_code: 3,
                body: error_body(e.code(), &e.to_string()),
            },
        }
    }
}

fn error_body(code: &str, message: &str) -> Value {
    json!({ "error": { "code": code, "message": message } })
}

#[derive(Serialize)]
struct ViolationOut {
    axiom: Axiom,
    witness: Vec<usize>,
}

fn violations_out(report: &ValidationReport) -> Vec<ViolationOut> {
    report
        .violations
        .iter()
        .map(|v| ViolationOut {
            axiom: v.axiom,
            witness: v.witness.iter().map(|i| i + 1).collect(),
        })
        .collect()
}

fn one_based(faces: &[Face]) -> Vec<Vec<usize>> {
    faces.iter().map(|f| f.to_one_based()).collect()
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Unreadable(format!("{}: {e}", path.display())))
}

struct LoadedFan {
    name: Option<String>,
    fan: Fan,
}

fn load_fan(path: &Path, max_r: usize) -> Result<LoadedFan, Failure> {
    let doc = FanDocument::parse(&read(path)?)?;
    if doc.generators.len() > max_r {
        return Err(Error::TooManyRays {
            r: doc.generators.len(),
            cap: max_r,
        }
        .into());
    }
    let fan = doc.to_fan()?;
    Ok(LoadedFan { name: doc.name, fan })
}

fn require_valid(f: &Fan) -> Result<(), Failure> {
    let report = validate_fan(f);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Failure::Invalid(report))
    }
}

#[derive(Serialize)]
struct AnalyzeOut {
    name: Option<String>,
    valid: bool,
    violations: Vec<ViolationOut>,
    num_rays: usize,
    dimension: usize,
    smooth: Option<bool>,
    complete: Option<bool>,
    primitive_collections: Option<Vec<Vec<usize>>>,
    r_min: Option<usize>,
    cox: Option<CoxGroupReport>,
}

fn analyze(path: &Path, max_r: usize) -> Result<Outcome, Failure> {
    let LoadedFan { name, fan } = load_fan(path, max_r)?;
    let report = validate_fan(&fan);
    let valid = report.is_valid();
    let out = AnalyzeOut {
        name,
        valid,
        violations: violations_out(&report),
        num_rays: fan.num_rays(),
        dimension: fan.dim(),
        smooth: valid.then(|| is_smooth(&fan)),
        complete: valid.then(|| is_complete(&fan)),
        primitive_collections: valid.then(|| one_based(&primitive_collections(&fan))),
        r_min: if valid { r_min(&fan).ok() } else { None },
        cox: valid.then(|| cox_report(&fan)),
    };
    Ok(Outcome {
        exit_code: if valid { 0 } else { 2 },
        body: to_value(&out),
    })
}

#[derive(Serialize)]
struct StabilityOut {
    degrees: DegreeVector,
    primitive_collections: Vec<Vec<usize>>,
    r_min: i64,
    d_min: i64,
    stability_dim: i64,
    kind: EquivalenceKind,
    connectivity: i64,
    vanishing_line: i64,
    oracle_dim: i64,
    sentence: String,
}

fn resolve_degrees(f: &Fan, degrees: Option<&[i64]>, free: Option<&[(usize, u64)]>) -> Result<DegreeVector, Error> {
    match (degrees, free) {
        (Some(d), _) => degree_of(f, d),
        (None, Some(free)) => {
            let r = f.num_rays();
            let mut partial = BTreeMap::new();
            for &(i, d) in free {
                if i == 0 || i > r {
                    return Err(Error::IndexOutOfRange { index: i, len: r });
                }
                partial.insert(i - 1, d);
            }
            complete_degrees(&f.generator_matrix(), &partial)
        }
        (None, None) => cox_report(f).witness_degree.ok_or(Error::Condition2Failed),
    }
}

fn stability(
    path: &Path,
    degrees: Option<&[i64]>,
    free: Option<&[(usize, u64)]>,
    max_r: usize,
) -> Result<Outcome, Failure> {
    let LoadedFan { fan, .. } = load_fan(path, max_r)?;
    require_valid(&fan)?;
    // Conditions first: a fan without positive degrees should report that
    // rather than a kernel error from degree resolution.
    standing_hypotheses(&fan)?;
    let d = resolve_degrees(&fan, degrees, free)?;
    let rep = stability_report(&fan, &d)?;
    let out = StabilityOut {
        degrees: d,
        primitive_collections: one_based(&primitive_collections(&fan)),
        r_min: rep.r_min,
        d_min: rep.d_min,
        stability_dim: rep.stability_dim,
        kind: rep.kind,
        connectivity: rep.connectivity,
        vanishing_line: rep.vanishing_line,
        oracle_dim: rep.oracle_dim,
        sentence: rep.sentence(),
    };
    Ok(ok(&out))
}

#[derive(Serialize)]
struct HolcheckOut {
    member: bool,
    degrees: Vec<u64>,
    witness: Option<WitnessSummary>,
}

fn holcheck(fan_path: &Path, tuple_path: &Path, max_r: usize) -> Result<Outcome, Failure> {
    let LoadedFan { fan, .. } = load_fan(fan_path, max_r)?;
    require_valid(&fan)?;
    let t = PolyTupleDocument::parse(&read(tuple_path)?)?.to_tuple()?;
    let verdict = membership(&t, &fan)?;
    Ok(ok(&HolcheckOut {
        member: verdict.member,
        degrees: t.degrees(),
        witness: verdict.witness.as_ref().map(WitnessSummary::from),
    }))
}

#[derive(Serialize)]
struct StabilizeOut {
    degrees_before: Vec<u64>,
    increment: Vec<u64>,
    degrees_after: DegreeVector,
    member: bool,
    tuple: PolyTupleDocument,
}

fn stabilize_cmd(fan_path: &Path, tuple_path: &Path, a: &[u64], max_r: usize) -> Result<Outcome, Failure> {
    let LoadedFan { fan, .. } = load_fan(fan_path, max_r)?;
    require_valid(&fan)?;
    let t = PolyTupleDocument::parse(&read(tuple_path)?)?.to_tuple()?;
    let s = stabilize(&t, &fan, a, None)?;
    Ok(ok(&StabilizeOut {
        degrees_before: t.degrees(),
        increment: a.to_vec(),
        degrees_after: s.degrees,
        member: s.member,
        tuple: PolyTupleDocument::from_tuple(&s.tuple),
    }))
}

#[derive(Serialize)]
struct SubfanOut {
    index: usize,
    maximal_cones: Vec<Vec<usize>>,
    valid: bool,
    smooth: bool,
    complete: bool,
}

#[derive(Serialize)]
struct ClassificationOut {
    count: usize,
    /// 1-based subfan indices per class.
    classes: Vec<Vec<usize>>,
    /// Classes with more than one member.
    collisions: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct SubfansOut {
    count: usize,
    subfans: Vec<SubfanOut>,
    classification: Option<ClassificationOut>,
}

fn subfans(path: &Path, classify: bool, max_r: usize) -> Result<Outcome, Failure> {
    let LoadedFan { fan, .. } = load_fan(path, max_r)?;
    require_valid(&fan)?;
    let subs = enumerate_subfans(&fan);
    let listed = subs
        .iter()
        .enumerate()
        .map(|(i, s)| SubfanOut {
            index: i + 1,
            maximal_cones: one_based(&s.maximal_faces()),
            valid: validate_fan(s).is_valid(),
            smooth: is_smooth(s),
            complete: is_complete(s),
        })
        .collect();
    let classification = classify.then(|| {
        let classes = classify_fans(&subs, Execution::default());
        let shift = |c: &[usize]| c.iter().map(|i| i + 1).collect::<Vec<_>>();
        ClassificationOut {
            count: classes.count(),
            collisions: classes.collisions().into_iter().map(shift).collect(),
            classes: classes.classes.iter().map(|c| shift(c)).collect(),
        }
    });
    Ok(ok(&SubfansOut {
        count: subs.len(),
        subfans: listed,
        classification,
    }))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn ok<T: Serialize>(v: &T) -> Outcome {
    Outcome {
        exit_code: 0,
        body: to_value(v),
    }
}

/// Runs a parsed command.
pub fn execute(command: &Command, max_r: usize) -> Outcome {
    let res = match command {
        Command::Analyze { fan } => analyze(fan, max_r),
        Command::Stability { fan, degrees, free } => stability(fan, degrees.as_deref(), free.as_deref(), max_r),
        Command::Holcheck { fan, tuple } => holcheck(fan, tuple, max_r),
        Command::Stabilize { fan, tuple, increment } => stabilize_cmd(fan, tuple, increment, max_r),
        Command::Subfans { fan, classify } => subfans(fan, *classify, max_r),
    };
    res.unwrap_or_else(Failure::into_outcome)
}

/// Reads the ray cap from the environment value, if any.
pub fn max_r_from(var: Option<&str>) -> Result<usize, String> {
    match var {
        None => Ok(DEFAULT_MAX_R),
        Some(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| (1..=crate::fan::MAX_RAYS).contains(&n))
            .ok_or_else(|| format!("{MAX_R_VAR} must be an integer in 1..={}", crate::fan::MAX_RAYS)),
    }
}

pub fn render(body: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(body).expect("values serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut lines = Vec::new();
            flatten("", body, &mut lines);
            let mut s = lines.join("\n");
            s.push('\n');
            s
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}: {s}")),
        other => out.push(format!("{prefix}: {other}")),
    }
}

/// Parses arguments and runs; returns the exit code and the text for
/// stdout and stderr.
pub fn run<I, T>(args: I, max_r_var: Option<&str>) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (1, String::new(), text)
            };
        }
    };
    let max_r = match max_r_from(max_r_var) {
        Ok(n) => n,
        Err(m) => return (1, render(&error_body("PARSE_ERROR", &m), cli.output), String::new()),
    };
    let outcome = execute(&cli.command, max_r);
    (outcome.exit_code, render(&outcome.body, cli.output), String::new())
}
