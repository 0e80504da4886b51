//! Command-line front end: reads JSON inputs, runs the engines and prints
//! JSON or an aligned table derived from it.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{evaluate_bounds, weighted_image_bounds};
use crate::error::{FoliageError, Result};
use crate::foliation::index_formulas;
use crate::gallery::{acceptance_cases, build_example, verify_example, GalleryId};
use crate::json;
use crate::plane::{reduce_singularities, DEFAULT_DEPTH_CAP};
use crate::zariski::{chain_negative_part, check_axioms, detect_f_chains, zariski_decompose};

/// Environment variable overriding the reduction depth cap.
pub const DEPTH_CAP_VAR: &str = "FOLIAGE_DEPTH_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "foliage", version, about = "Exact invariants of foliated surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// K_F², K_S², χ, curve indices, F-chains and the Zariski decomposition of a model.
    Invariants {
        /// Foliated surface JSON (`-` for stdin).
        input: String,
    },
    /// Zariski decomposition of K_F (or of "D") relative to the marked curves, or of a chain.
    Zariski {
        /// Foliated surface JSON or a chain `{"e": [...]}` (`-` for stdin).
        input: String,
    },
    /// Locate and classify the singularities of a plane vector field.
    ClassifySing {
        /// Plane field JSON with keys `A`, `B` and optional `ext` (`-` for stdin).
        input: String,
    },
    /// Seidenberg reduction of every singularity of a plane vector field.
    Reduce {
        /// Plane field JSON with keys `A`, `B` and optional `ext` (`-` for stdin).
        input: String,
        /// Maximal blow-up depth; defaults to FOLIAGE_DEPTH_CAP or 16.
        #[arg(long)]
        depth_cap: Option<usize>,
    },
    /// Evaluate the bound catalog on an invariant record.
    CheckInequalities {
        /// Invariant record JSON (`-` for stdin).
        input: String,
    },
    /// Rebuild a worked example, optionally comparing against its closed forms.
    Gallery {
        /// Case name (ex3_1, ex3_2, ex3_3, ex3_4, ex6_4, ex6_5) or `all`.
        #[arg(long)]
        case: String,
        /// Comma-separated `name=value` parameters, e.g. `d=2` or `m=4,n=1,k=1`.
        #[arg(long, default_value = "")]
        params: String,
        /// Recompute the invariants and compare.
        #[arg(long)]
        verify: bool,
    },
}

fn read_json(path: &str) -> Result<Value> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| FoliageError::input(format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| FoliageError::input(format!("cannot read {path}: {e}")))?;
    }
    serde_json::from_str(&text).map_err(|e| FoliageError::input(format!("malformed JSON in {path}: {e}")))
}

fn parse_params(s: &str) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| FoliageError::input(format!("parameter {part:?} is not name=value")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| FoliageError::input(format!("parameter {k} must be an integer")))?;
        if out.insert(k.trim().to_string(), v).is_some() {
            return Err(FoliageError::input(format!("parameter {k} given twice")));
        }
    }
    Ok(out)
}

/// The reduction depth cap from the flag, the environment or the default.
pub fn depth_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(DEPTH_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| FoliageError::input(format!("{DEPTH_CAP_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_DEPTH_CAP),
    }
}

fn invariants(v: &Value) -> Result<Value> {
    let fs = json::parse_foliated(v)?;
    let l = &fs.lattice;
    let k = l.canonical_class();
    let mut curves = serde_json::Map::new();
    for c in &fs.curves {
        curves.insert(c.label.clone(), json::index_json(&index_formulas(&fs, c)?));
    }
    let z = zariski_decompose(l, &fs.kf, &fs.curves)?;
    let axioms = check_axioms(l, &fs.kf, &fs.curves, &z)?;
    let chains: Vec<Value> = detect_f_chains(&fs)?
        .iter()
        .map(|spec| {
            let y = chain_negative_part(spec);
            let mut c = json::chain_json(spec, &y);
            c["labels"] = json!(spec.labels);
            c["copies"] = json!(spec.copies);
            c
        })
        .collect();
    Ok(json!({
        "kf_squared": json::rat_json(&l.square(&fs.kf)?),
        "ks_squared": json::rat_json(&l.square(&k)?),
        "kf_dot_ks": json::rat_json(&l.intersect(&fs.kf, &k)?),
        "chi": json::rat_json(&l.chi),
        "curves": curves,
        "f_chains": chains,
        "zariski": json::zariski_json(&z),
        "axioms": json::axioms_json(&axioms),
    }))
}

fn zariski(v: &Value) -> Result<Value> {
    if v.get("e").is_some() {
        let spec = json::parse_chain(v)?;
        return Ok(json::chain_json(&spec, &chain_negative_part(&spec)));
    }
    let fs = json::parse_foliated(v)?;
    let d = match v.get("D") {
        Some(d) => json::parse_class(&fs.lattice, d)?,
        None => fs.kf.clone(),
    };
    Ok(json::zariski_json(&zariski_decompose(&fs.lattice, &d, &fs.curves)?))
}

fn classify(v: &Value) -> Result<Value> {
    let f = json::parse_field(v)?;
    let sings = f.find_singularities()?;
    Ok(json::singularities_json(&f, &sings))
}

fn reduce(v: &Value, cap: usize) -> Result<Value> {
    let f = json::parse_field(v)?;
    Ok(json::reduction_json(&reduce_singularities(&f, cap)?))
}

fn check_inequalities(v: &Value) -> Result<Value> {
    let r = json::parse_record(v)?;
    Ok(json::bounds_json(&evaluate_bounds(&r)?, &weighted_image_bounds(&r)?))
}

fn gallery_one(id: GalleryId, verify: bool) -> Result<Value> {
    let case = build_example(id)?;
    if verify {
        Ok(json::verification_json(&case, &verify_example(&case)?))
    } else {
        Ok(json::case_json(&case))
    }
}

fn gallery(case: &str, params: &str, verify: bool) -> Result<Value> {
    if case == "all" {
        if !params.trim().is_empty() {
            return Err(FoliageError::input("--case all takes no parameters"));
        }
        let out = acceptance_cases().into_iter().map(|id| gallery_one(id, verify)).collect::<Result<Vec<_>>>()?;
        return Ok(Value::Array(out));
    }
    gallery_one(GalleryId::parse(case, &parse_params(params)?)?, verify)
}

fn dispatch(cli: &Cli) -> Result<Value> {
    match &cli.command {
        Command::Invariants { input } => invariants(&read_json(input)?),
        Command::Zariski { input } => zariski(&read_json(input)?),
        Command::ClassifySing { input } => classify(&read_json(input)?),
        Command::Reduce { input, depth_cap: cap } => {
            let cap = depth_cap(*cap)?;
            reduce(&read_json(input)?, cap)
        }
        Command::CheckInequalities { input } => check_inequalities(&read_json(input)?),
        Command::Gallery { case, params, verify } => gallery(case, params, *verify),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, rows);
            }
        }
        Value::Array(a) if !a.is_empty() && a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            rows.push((prefix.to_string(), a.iter().map(scalar_text).collect::<Vec<_>>().join(", ")));
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, rows);
            }
        }
        Value::Array(_) => rows.push((prefix.to_string(), "[]".into())),
        other => rows.push((prefix.to_string(), scalar_text(other))),
    }
}

/// Aligned two-column rendering of a JSON report: one row per leaf.
pub fn render_table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, val) in rows {
        let pad = width - k.chars().count();
        out.push_str(&k);
        out.push_str(&" ".repeat(pad + 2));
        out.push_str(&val);
        out.push('\n');
    }
    out
}

fn error_json(code: &str, message: &str) -> String {
    let mut s = serde_json::to_string(&json!({"error_code": code, "message": message})).expect("serializable");
    s.push('\n');
    s
}

/// Runs the command line `argv` (program name first), writing the report to
/// `out` and diagnostics to `err`; returns the process exit status.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = err.write_all(error_json("usage_error", e.to_string().trim()).as_bytes());
            return 2;
        }
    };
    match dispatch(&cli) {
        Ok(v) => {
            let text = match cli.format {
                Format::Json => json::to_text(&v),
                Format::Table => render_table(&v),
            };
            match out.write_all(text.as_bytes()) {
                Ok(()) => 0,
                Err(_) => 2,
            }
        }
        Err(e) => {
            let _ = err.write_all(error_json(e.code(), &e.to_string()).as_bytes());
            e.exit_code()
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
