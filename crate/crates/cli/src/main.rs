mod object;

use clap::{Parser, Subcommand, ValueEnum};
use euclid_frieze::characters::{reorient_character, CharacterReport};
use euclid_frieze::checks::{self, Outcome};
use euclid_frieze::laurent::LaurentPoly;
use euclid_frieze::transjective::DEFAULT_WINDOW;
use euclid_frieze::{CanonicalModel, Engine, Error, EuclideanType, Evaluator, ObjectSpec, Quiver, RegularIndex};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "euclid-frieze", version, about = "Cluster characters and quiver grassmannian Euler characteristics for euclidean quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Init {
    Symbolic,
    Ones,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Mesh,
    Modular,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Mesh => Engine::Mesh,
            EngineArg::Modular => Engine::Modular,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Mesh,
    Chebyshev,
    Mutation,
    Grassmann,
    Tables,
}

#[derive(clap::Args)]
struct EvalOpts {
    /// Largest |slice| the frieze may reach.
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    max_slice: i64,
    #[arg(long, value_enum, default_value = "auto")]
    engine: EngineArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Cluster character of an object.
    Char {
        /// A:r:s, D:n, E6, E7 or E8.
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value = "symbolic")]
        init: Init,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Euler characteristics of complete quiver grassmannians for every quasi-simple.
    EulerTable {
        #[arg(long = "type")]
        ty: String,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Runs a property suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Restrict to one type; all canonical types by default.
        #[arg(long = "type")]
        ty: Option<String>,
        /// Slice window for the mesh and mutation suites.
        #[arg(long)]
        window: Option<i64>,
    },
    /// Character of an object rewritten in the cluster of another orientation.
    Reorient {
        #[arg(long = "type")]
        ty: String,
        /// Quiver JSON: {"vertices": [...], "arrows": [[src, dst], ...]}.
        #[arg(long)]
        quiver: std::path::PathBuf,
        /// JSON object sending canonical vertex names to vertices of the new quiver.
        #[arg(long)]
        map: std::path::PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Error(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidInput(_) | Error::NotAModule(_) => 2,
        Error::GraphMismatch(_) => 4,
        _ => 3,
    }
}

fn model(ty: &str) -> Result<CanonicalModel, Error> {
    CanonicalModel::build(ty.parse::<EuclideanType>()?)
}

fn int_json(v: &euclid_frieze::Int) -> Value {
    Value::String(v.to_string())
}

fn report_json(names: &[String], r: &CharacterReport) -> Value {
    json!({
        "rendered": r.polynomial.render(names),
        "polynomial": r.polynomial.to_json(names),
        "monomial_count": r.monomial_count,
        "monomials_with_multiplicity": int_json(&r.monomials_with_multiplicity),
        "denominator_vector": r.denominator_vector,
        "nonneg": r.nonneg,
    })
}

fn report_text(names: &[String], r: &CharacterReport) -> String {
    format!(
        "{}\nmonomials: {}\nmonomials with multiplicity: {}\ndenominator: {:?}\nnonneg: {}",
        r.polynomial.render(names),
        r.monomial_count,
        r.monomials_with_multiplicity,
        r.denominator_vector,
        r.nonneg
    )
}

fn evaluator<'m>(m: &'m CanonicalModel, opts: &EvalOpts) -> Evaluator<'m> {
    Evaluator::new(m).with_engine(opts.engine.into()).with_window(opts.max_slice)
}

fn cmd_char(ty: &str, object: &str, init: Init, opts: &EvalOpts) -> Result<String, Failure> {
    let m = model(ty)?;
    let obj = object::parse_object(&m.quiver, object)?;
    let mut ev = evaluator(&m, opts);
    let names = m.var_names();
    Ok(match (init, opts.format) {
        (Init::Ones, Format::Text) => ev.integer_value(&obj)?.to_string(),
        (Init::Ones, Format::Json) => {
            json!({"type": ty, "object": object, "init": "ones", "value": int_json(&ev.integer_value(&obj)?)}).to_string()
        }
        (Init::Symbolic, Format::Text) => report_text(&names, &ev.report(&obj)?),
        (Init::Symbolic, Format::Json) => {
            let mut v = report_json(&names, &ev.report(&obj)?);
            v["type"] = json!(ty);
            v["object"] = json!(object);
            v["init"] = json!("symbolic");
            v.to_string()
        }
    })
}

fn cmd_euler_table(ty: &str, opts: &EvalOpts) -> Result<String, Failure> {
    let m = model(ty)?;
    let mut ev = evaluator(&m, opts);
    let mut rows = Vec::new();
    for t in m.tubes.clone() {
        let mut vals = Vec::new();
        for k in 0..t.rank as i64 {
            vals.push(ev.euler_characteristic(&ObjectSpec::Regular(RegularIndex::new(t.lambda, k, 1)))?);
        }
        rows.push((t.lambda, t.rank, vals));
    }
    Ok(match opts.format {
        Format::Text => {
            let mut s = format!("{}\nlambda\tp\tvalues", m.ty);
            for (l, p, vals) in &rows {
                let v: Vec<String> = vals.iter().map(|x| x.to_string()).collect();
                s.push_str(&format!("\n{l}\t{p}\t{}", v.join(" ")));
            }
            s
        }
        Format::Json => json!({
            "type": m.ty.to_string(),
            "tubes": rows.iter().map(|(l, p, vals)| json!({
                "lambda": l.to_string(),
                "rank": p,
                "values": vals.iter().map(int_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
        .to_string(),
    })
}

fn cmd_verify(suite: Suite, ty: Option<&str>, window: Option<i64>) -> Result<String, Failure> {
    if let Suite::Chebyshev = suite {
        let o = checks::chebyshev_cross_check(100, 8, 0xc4eb);
        return finish("chebyshev", vec![("all".into(), o)]);
    }
    let types = match ty {
        Some(t) => vec![t.parse::<EuclideanType>()?],
        None => EuclideanType::all_canonical_test_types(),
    };
    let mut results = Vec::new();
    for t in types {
        let m = CanonicalModel::build(t)?;
        let o = match suite {
            Suite::Mesh => {
                let w = window.unwrap_or(4);
                checks::mesh_window(&m, w, 2 * w)?
            }
            Suite::Mutation => checks::mutation(&m, window.unwrap_or(3)),
            Suite::Grassmann => checks::grassmann(&m)?,
            Suite::Tables => checks::tables(&m),
            Suite::Chebyshev => unreachable!(),
        };
        let failed = !o.passed();
        results.push((t.to_string(), o));
        if failed {
            break;
        }
    }
    let name = match suite {
        Suite::Mesh => "mesh",
        Suite::Mutation => "mutation",
        Suite::Grassmann => "grassmann",
        Suite::Tables => "tables",
        Suite::Chebyshev => "chebyshev",
    };
    finish(name, results)
}

fn finish(suite: &str, results: Vec<(String, Outcome)>) -> Result<String, Failure> {
    let mut lines = Vec::new();
    for (t, o) in results {
        match o.failure {
            None => lines.push(format!("{suite} {t}: ok ({} checks)", o.checked)),
            Some(f) => {
                lines.push(format!("{suite} {t}: FAILED after {} checks: {f}", o.checked));
                return Err(Failure::Verify(lines.join("\n")));
            }
        }
    }
    Ok(lines.join("\n"))
}

fn read(path: &std::path::Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn cmd_reorient(ty: &str, quiver: &std::path::Path, map: &std::path::Path, object: &str, format: Format) -> Result<String, Failure> {
    let m = model(ty)?;
    let q = Quiver::from_json_str(&read(quiver)?)?;
    let raw: BTreeMap<String, String> = serde_json::from_str(&read(map)?).map_err(|e| {
        Error::Parse(format!("map file, line {} column {}: {e}", e.line(), e.column()))
    })?;
    let pairs: Vec<(String, String)> = raw.into_iter().collect();
    let obj = object::parse_object(&m.quiver, object)?;
    let p: LaurentPoly = reorient_character(&m, &q, &pairs, &obj)?;
    let names: Vec<String> = q.vertices().iter().map(|v| format!("x{v}")).collect();
    let r = CharacterReport::of(p);
    Ok(match format {
        Format::Text => report_text(&names, &r),
        Format::Json => {
            let mut v = report_json(&names, &r);
            v["type"] = json!(ty);
            v["object"] = json!(object);
            v.to_string()
        }
    })
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}").and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Char { ty, object, init, opts } => cmd_char(ty, object, *init, opts),
        Command::EulerTable { ty, opts } => cmd_euler_table(ty, opts),
        Command::Verify { suite, ty, window } => cmd_verify(*suite, ty.as_deref(), *window),
        Command::Reorient { ty, quiver, map, object, format } => cmd_reorient(ty, quiver, map, object, *format),
    };
    match out {
        Ok(s) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(s)) => {
            emit(&s);
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
