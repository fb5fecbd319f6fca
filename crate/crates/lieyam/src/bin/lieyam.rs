//! Command-line front end: catalog verification, weight queries and algebra
//! inspection, with text or JSON reports.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lieyam::algcore::{Counterexample, StructureAlgebra};
use lieyam::exactla::{Matrix, Rational};
use lieyam::lycore::{catalog, catalog_verify, catalog_verify_all, EntryReport};
use lieyam::triples::{check_triple, read_triple, TripleKind};
use lieyam::weights::{
    lambda2_decompose, root_system, sym2_decompose, tensor_decompose, weyl_dim, Decomposition, RootSystem, RootType,
};
use lieyam::Error;

const SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(name = "lieyam", version, about = "Exact checks for Lie-Yamaguti algebras, triple systems and root systems")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock times (makes output vary between runs).
    #[arg(long, global = true)]
    timings: bool,
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
    /// Verified catalog of irreducible LY-algebras.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Highest-weight module queries.
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Inspect an algebra given as a `.sca` file.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Triple system identities for a `.tri` file.
    #[command(subcommand)]
    Triple(TripleCmd),
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// Also run entries with enveloping algebras above dimension 52.
        #[arg(long, requires = "all")]
        stretch: bool,
    },
}

#[derive(Args)]
struct WeightArgs {
    /// Cartan type letter, A to G.
    kind: String,
    rank: usize,
    /// Fundamental-weight coordinates; `tensor` takes two weights in a row.
    #[arg(allow_negative_numbers = true, num_args = 1..)]
    weight: Vec<i64>,
}

#[derive(Subcommand)]
enum WeightsCmd {
    Dim(WeightArgs),
    Tensor(WeightArgs),
    Wedge2(WeightArgs),
    Sym2(WeightArgs),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Derivations { file: PathBuf },
    Killing { file: PathBuf },
    Simple { file: PathBuf },
}

#[derive(Subcommand)]
enum TripleCmd {
    Check {
        file: PathBuf,
        /// lts, anti_lts, orthogonal or symplectic.
        #[arg(long)]
        kind: String,
    },
}

/// A finished command: JSON body, text rendering and verdict.
struct Outcome {
    json: Value,
    text: String,
    passed: bool,
}

/// Failure before a report could be produced.
enum Failure {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
            Failure::Lib(e) => match e {
                Error::UnknownEntry(_) | Error::InvalidRootSystem(..) => 2,
                Error::Parse { .. }
                | Error::InvalidInput(_)
                | Error::DimensionMismatch { .. }
                | Error::NonDominant
                | Error::MissingForm => 3,
                Error::CapExceeded { .. } => 4,
                _ => 1,
            },
        }
    }

    fn kind(&self) -> &'static str {
        match self.code() {
            2 => "unknown",
            3 => "malformed",
            4 => "cap_exceeded",
            _ => "failed",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Io(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| rationals(m.row(i))).collect())
}

fn counterexample_json(c: &Counterexample) -> Value {
    json!({ "identity": c.identity, "indices": c.indices, "lhs": rationals(&c.lhs), "rhs": rationals(&c.rhs) })
}

fn secs(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64())
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn catalog_list() -> Outcome {
    let entries = catalog();
    let mut text = String::new();
    for e in &entries {
        let gate = if e.stretch { "  [stretch]" } else { "" };
        text.push_str(&format!("{:<3} {}{gate}\n", e.id, e.table_row));
    }
    let list: Vec<Value> =
        entries.iter().map(|e| json!({ "id": e.id, "table_row": e.table_row, "stretch": e.stretch })).collect();
    Outcome { json: json!({ "entries": list }), text, passed: true }
}

fn entry_json(r: &EntryReport, timings: bool) -> Value {
    let axioms: Vec<Value> = r
        .axioms
        .axioms
        .iter()
        .map(|(name, c)| match c {
            Ok(()) => json!({ "axiom": name, "passed": true }),
            Err(cx) => json!({ "axiom": name, "passed": false, "counterexample": counterexample_json(cx) }),
        })
        .collect();
    let report = r.report.as_ref().map(|e| {
        json!({
            "dim_g": e.dim_g, "dim_h": e.dim_h, "dim_m": e.dim_m,
            "g_is_lie": e.g_is_lie, "g_simple": e.g_simple, "h_simple": e.h_simple,
            "m_abs_irred": e.m_abs_irred, "killing_rank": e.killing_rank,
            "type": e.ly_type.map(|t| t.name()), "symmetric_pair": e.symmetric_pair,
            "xi": e.xi.as_ref().map(|x| x.to_string()),
        })
    });
    let checks: Vec<Value> =
        r.cross_checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect();
    let mismatches: Vec<Value> =
        r.mismatches.iter().map(|m| json!({ "field": m.field, "expected": m.expected, "found": m.found })).collect();
    let mut v = json!({
        "id": r.id, "table_row": r.table_row, "provenance": r.provenance.name(), "passed": r.passed(),
        "axioms": axioms, "report": report, "cross_checks": checks, "mismatches": mismatches,
    });
    if timings {
        v["elapsed_s"] = Value::String(secs(r.elapsed));
    }
    v
}

fn entry_text(r: &EntryReport, timings: bool) -> String {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let mut s = format!("{} {verdict} ({})\n  {}\n", r.id, r.provenance.name(), r.table_row);
    if let Some(e) = &r.report {
        s.push_str(&format!("  dims g/h/m: {}/{}/{}\n", e.dim_g, e.dim_h, e.dim_m));
        s.push_str(&format!(
            "  g simple: {}, h simple: {}, m absolutely irreducible: {}, Killing rank: {}\n",
            e.g_simple, e.h_simple, e.m_abs_irred, e.killing_rank
        ));
        let ty = e.ly_type.map_or("none", |t| t.name());
        let xi = e.xi.as_ref().map_or("none".to_string(), |x| x.to_string());
        s.push_str(&format!("  type: {ty}, symmetric pair: {}, xi: {xi}\n", e.symmetric_pair));
    }
    for (name, c) in &r.axioms.axioms {
        match c {
            Ok(()) => s.push_str(&format!("  {name}: pass\n")),
            Err(cx) => s.push_str(&format!("  {name}: FAIL {cx}\n")),
        }
    }
    for c in &r.cross_checks {
        let v = if c.passed { "pass" } else { "FAIL" };
        match &c.detail {
            Some(d) => s.push_str(&format!("  check {}: {v} ({d})\n", c.name)),
            None => s.push_str(&format!("  check {}: {v}\n", c.name)),
        }
    }
    for m in &r.mismatches {
        s.push_str(&format!("  mismatch {}: expected {}, found {}\n", m.field, m.expected, m.found));
    }
    if timings {
        s.push_str(&format!("  elapsed: {}s\n", secs(r.elapsed)));
    }
    s
}

fn catalog_verify_cmd(id: Option<String>, stretch: bool, timings: bool) -> Result<Outcome, Failure> {
    let results: Vec<(&str, lieyam::Result<EntryReport>)> = match id {
        Some(id) => {
            // a single unknown id is an error, not a failed row
            let r = catalog_verify(&id)?;
            vec![(r.id, Ok(r))]
        }
        None => catalog_verify_all(stretch),
    };
    let mut text = String::new();
    let mut entries = Vec::new();
    let mut passed = true;
    for (id, r) in &results {
        match r {
            Ok(r) => {
                passed &= r.passed();
                text.push_str(&entry_text(r, timings));
                entries.push(entry_json(r, timings));
            }
            Err(e) => {
                passed = false;
                text.push_str(&format!("{id} ERROR {e}\n"));
                entries.push(json!({ "id": id, "passed": false, "error": e.to_string() }));
            }
        }
    }
    let ok = results.iter().filter(|(_, r)| r.as_ref().is_ok_and(|r| r.passed())).count();
    text.push_str(&format!("{ok}/{} entries passed\n", results.len()));
    Ok(Outcome { json: json!({ "entries": entries, "passed": passed }), text, passed })
}

fn weight_name(w: &[i64]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("V({})", parts.join(","))
}

fn decomposition_outcome(rs: &RootSystem, header: Value, d: &Decomposition) -> lieyam::Result<Outcome> {
    let mut summands = Vec::new();
    let mut names = Vec::new();
    let mut total = 0;
    for (w, m) in d {
        let dim = weyl_dim(rs, w)?;
        total += m * dim;
        summands.push(json!({ "weight": w, "multiplicity": m, "dim": dim }));
        names.push(if *m == 1 { weight_name(w) } else { format!("{m} {}", weight_name(w)) });
    }
    let mut json = header;
    json["summands"] = Value::Array(summands);
    json["dim"] = json!(total);
    Ok(Outcome { json, text: format!("{}\ndim {total}\n", names.join(" + ")), passed: true })
}

fn weights_cmd(cmd: WeightsCmd) -> Result<Outcome, Failure> {
    let (op, args) = match cmd {
        WeightsCmd::Dim(a) => ("dim", a),
        WeightsCmd::Tensor(a) => ("tensor", a),
        WeightsCmd::Wedge2(a) => ("wedge2", a),
        WeightsCmd::Sym2(a) => ("sym2", a),
    };
    let kind = RootType::parse(&args.kind)?;
    let rs = root_system(kind, args.rank)?;
    let n = args.rank;
    let expected = if op == "tensor" { 2 * n } else { n };
    if args.weight.len() != expected {
        return Err(Error::DimensionMismatch { expected, found: args.weight.len() }.into());
    }
    let lambda = &args.weight[..n];
    let header = json!({ "type": kind.letter().to_string(), "rank": n, "weight": lambda });
    let outcome = match op {
        "dim" => {
            let d = weyl_dim(&rs, lambda)?;
            let mut json = header;
            json["dim"] = json!(d);
            Outcome { json, text: format!("{d}\n"), passed: true }
        }
        "tensor" => {
            let mu = &args.weight[n..];
            rs.require_dominant(mu)?;
            let mut header = header;
            header["other"] = json!(mu);
            decomposition_outcome(&rs, header, &tensor_decompose(&rs, lambda, mu)?)?
        }
        "wedge2" => decomposition_outcome(&rs, header, &lambda2_decompose(&rs, lambda)?)?,
        _ => decomposition_outcome(&rs, header, &sym2_decompose(&rs, lambda)?)?,
    };
    Ok(outcome)
}

fn algebra_cmd(cmd: AlgebraCmd) -> Result<Outcome, Failure> {
    let file = match &cmd {
        AlgebraCmd::Derivations { file } | AlgebraCmd::Killing { file } | AlgebraCmd::Simple { file } => file,
    };
    let a = std::sync::Arc::new(StructureAlgebra::from_sca(&read_file(file)?)?);
    let is_lie = a.is_lie();
    let outcome = match cmd {
        AlgebraCmd::Derivations { .. } => {
            let der = a.derivation_algebra().algebra().dim();
            let mut json = json!({ "dim": a.dim(), "is_lie": is_lie.is_ok(), "derivations": der });
            let mut text = format!("dim {}\nderivations {der}\n", a.dim());
            if is_lie.is_ok() {
                let inner = a.dim() - a.center()?.dim();
                json["inner_derivations"] = json!(inner);
                text.push_str(&format!("inner derivations {inner}\n"));
            }
            Outcome { json, text, passed: true }
        }
        AlgebraCmd::Killing { .. } => {
            let k = a.killing_form()?;
            let rank = k.rank();
            let json =
                json!({ "dim": a.dim(), "gram": matrix_json(k.gram()), "rank": rank, "nondegenerate": k.is_nondegenerate() });
            let mut text = String::new();
            for i in 0..k.gram().rows() {
                let row: Vec<String> = k.gram().row(i).iter().map(|x| x.to_string()).collect();
                text.push_str(&row.join(" "));
                text.push('\n');
            }
            text.push_str(&format!("rank {rank}\nnondegenerate {}\n", k.is_nondegenerate()));
            Outcome { json, text, passed: true }
        }
        AlgebraCmd::Simple { .. } => match &is_lie {
            Err(c) => Outcome {
                json: json!({ "dim": a.dim(), "is_lie": false, "simple": false, "counterexample": counterexample_json(c) }),
                text: format!("not a Lie algebra: {c}\n"),
                passed: false,
            },
            Ok(()) => {
                let simple = a.is_simple_lie()?;
                Outcome {
                    json: json!({ "dim": a.dim(), "is_lie": true, "simple": simple }),
                    text: format!("simple {simple}\n"),
                    passed: simple,
                }
            }
        },
    };
    Ok(outcome)
}

fn triple_cmd(cmd: TripleCmd) -> Result<Outcome, Failure> {
    let TripleCmd::Check { file, kind } = cmd;
    let k = TripleKind::parse(&kind)
        .filter(|k| TripleKind::ALL.contains(k))
        .ok_or_else(|| Failure::Usage(format!("unknown triple kind {kind:?}")))?;
    let t = read_triple(&read_file(&file)?)?;
    let cert = check_triple(&t, k)?;
    let (json, text) = match &cert {
        Ok(()) => (json!({ "kind": k.name(), "dim": t.module_dim(), "passed": true }), format!("{} identities hold\n", k.name())),
        Err(c) => (
            json!({ "kind": k.name(), "dim": t.module_dim(), "passed": false, "counterexample": counterexample_json(c) }),
            format!("FAIL {c}\n"),
        ),
    };
    Ok(Outcome { json, text, passed: cert.is_ok() })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Catalog(CatalogCmd::List) => "catalog list",
        Command::Catalog(CatalogCmd::Verify { .. }) => "catalog verify",
        Command::Weights(WeightsCmd::Dim(_)) => "weights dim",
        Command::Weights(WeightsCmd::Tensor(_)) => "weights tensor",
        Command::Weights(WeightsCmd::Wedge2(_)) => "weights wedge2",
        Command::Weights(WeightsCmd::Sym2(_)) => "weights sym2",
        Command::Algebra(AlgebraCmd::Derivations { .. }) => "algebra derivations",
        Command::Algebra(AlgebraCmd::Killing { .. }) => "algebra killing",
        Command::Algebra(AlgebraCmd::Simple { .. }) => "algebra simple",
        Command::Triple(TripleCmd::Check { .. }) => "triple check",
    }
}

fn emit(cli_out: &Option<PathBuf>, body: &str) -> Result<(), String> {
    match cli_out {
        Some(path) => fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let start = Instant::now();
    let result = match cli.command {
        Command::Catalog(CatalogCmd::List) => Ok(catalog_list()),
        Command::Catalog(CatalogCmd::Verify { id, stretch, .. }) => catalog_verify_cmd(id, stretch, cli.timings),
        Command::Weights(w) => weights_cmd(w),
        Command::Algebra(a) => algebra_cmd(a),
        Command::Triple(t) => triple_cmd(t),
    };
    let elapsed = start.elapsed();
    let (body, code) = match result {
        Ok(o) => {
            let code = if o.passed { 0 } else { 1 };
            let body = match cli.format {
                Format::Json => {
                    let mut v = json!({ "schema": SCHEMA, "command": name, "passed": o.passed, "result": o.json });
                    if cli.timings {
                        v["elapsed_s"] = Value::String(secs(elapsed));
                    }
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON values serialize"))
                }
                Format::Text if cli.timings => format!("{}elapsed: {}s\n", o.text, secs(elapsed)),
                Format::Text => o.text,
            };
            (body, code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            let body = match cli.format {
                Format::Json => {
                    let v = json!({
                        "schema": SCHEMA, "command": name, "passed": false,
                        "error": { "kind": f.kind(), "code": f.code(), "message": f.message() },
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON values serialize"))
                }
                Format::Text => String::new(),
            };
            (body, f.code())
        }
    };
    if let Err(e) = emit(&cli.out, &body) {
        eprintln!("error: {e}");
        return ExitCode::from(3);
    }
    ExitCode::from(code)
}
