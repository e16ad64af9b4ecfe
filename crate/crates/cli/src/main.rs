//! `momentangle`: analyses of simplicial complexes and their moment-angle
//! complexes from the command line.
//!
//! Exit codes: 0 on success, 1 for usage and input errors, 2 when a
//! postcondition or verification check fails.

mod input;
mod report;
mod text;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use momentangle_core::cluster::{
    default_tolerance, eval_lambda, find_lambda_violation, verify_comult, verify_homotopy, Rational,
};
use momentangle_core::complex::{
    boundary_simplex, flag_from_graph, full_skeleton, random_complex, simplex, single_missing_face,
};
use momentangle_core::golod::{product_golod_check, theorem_verdict};
use momentangle_core::hochster::{hochster_decomposition, poincare_series};
use momentangle_core::homology::{connectivity_from_groups, reduced_homology_all};
use momentangle_core::{Coeffs, Error, SimplicialComplex, VertexSet};
use serde_json::{json, Value};

use crate::input::{parse_rational, read_complex, render_complex};
use crate::report::SCHEMA;

pub enum Failure {
    Usage(String),
    Postcondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Postcondition(m) => Failure::Postcondition(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "momentangle", version, about = "Moment-angle complex cohomology, Golod checks and cluster geometry")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (defaults to all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial summary: f-vector, neighbourliness, minimal non-faces.
    Analyze { file: PathBuf },
    /// Hochster decomposition of H*(Z_K) and its Poincaré series.
    Hochster {
        file: PathBuf,
        #[arg(long, default_value = "Q")]
        coeffs: String,
    },
    /// Product vanishing check over each coefficient system.
    Golod {
        file: PathBuf,
        #[arg(long, default_value = "Z,Q,F2,F3,F5")]
        coeffs: String,
    },
    /// Co-H verdict with per-pair nullhomotopy certificates.
    Theorem {
        file: PathBuf,
        /// List every pair, including those with contractible targets.
        #[arg(long)]
        all_pairs: bool,
    },
    /// Pointwise verification of the cluster geometry.
    Cluster {
        #[command(subcommand)]
        command: ClusterCommand,
    },
    /// Write a complex file for a named family.
    Generate(GenerateArgs),
}

#[derive(Subcommand)]
enum ClusterCommand {
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Ground set size for the decomposition and retraction checks.
    #[arg(long)]
    n: Option<usize>,
    /// Complex for the homotopy and λ checks.
    #[arg(long)]
    complex: Option<PathBuf>,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Gauge bisection tolerance, as p/q (default 2^-40).
    #[arg(long)]
    tol: Option<String>,
    /// Allowed suspension-coordinate error between H_1 and ζ, as p/q.
    #[arg(long, default_value = "1/1000000000")]
    bound: String,
}

#[derive(Args)]
struct GenerateArgs {
    /// simplex | boundary-simplex | skeleton | flag | random | single-non-face | join
    family: String,
    /// Family parameters (see the README).
    params: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Postcondition(m)) => {
            eprintln!("postcondition failed: {m}");
            ExitCode::from(2)
        }
    }
}

/// Runs the command; `Ok(false)` when the report records a failed check.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let (report, passed) = match &cli.command {
        Command::Analyze { file } => (analyze(file)?, true),
        Command::Hochster { file, coeffs } => (hochster(file, coeffs)?, true),
        Command::Golod { file, coeffs } => (golod(file, coeffs)?, true),
        Command::Theorem { file, all_pairs } => (theorem(file, *all_pairs)?, true),
        Command::Cluster {
            command: ClusterCommand::Verify(args),
        } => cluster_verify(args)?,
        Command::Generate(args) => {
            generate(args)?;
            return Ok(true);
        }
    };
    let out = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string(&report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => text::render(&report),
    };
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(out.as_bytes())
        .map_err(|e| Failure::Usage(format!("writing report: {e}")))?;
    Ok(passed)
}

fn envelope(command: &str, config: Value, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command, "config": config });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    v
}

fn parse_coeffs(list: &str) -> Result<Vec<Coeffs>, Failure> {
    let cs = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<Coeffs>())
        .collect::<Result<Vec<_>, _>>()?;
    if cs.is_empty() {
        return Err(Failure::Usage("empty coefficient list".to_string()));
    }
    Ok(cs)
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn analyze(file: &Path) -> Result<Value, Failure> {
    let k = read_complex(file)?.complex;
    let homology = reduced_homology_all(&k, Coeffs::Integers)?;
    let conn = connectivity_from_groups(&k, &homology);
    Ok(envelope(
        "analyze",
        json!({ "file": path_str(file) }),
        report::complex_summary(&k, &homology, &conn),
    ))
}

fn hochster(file: &Path, coeffs: &str) -> Result<Value, Failure> {
    let k = read_complex(file)?.complex;
    let cs = parse_coeffs(coeffs)?;
    let [c] = cs.as_slice() else {
        return Err(Failure::Usage("hochster takes a single coefficient system".to_string()));
    };
    let decomposition = hochster_decomposition(&k, *c)?;
    let series = if c.is_field() {
        let s = poincare_series(&k, *c)?;
        json!({ "series": report::series(&s), "series_text": s.to_string() })
    } else {
        json!({ "series": Value::Null, "series_text": Value::Null })
    };
    let mut body = json!({
        "coeffs": c.to_string(),
        "summands": report::summands(&decomposition),
        "torsion": momentangle_core::hochster::has_torsion(&decomposition),
    });
    if let (Value::Object(m), Value::Object(s)) = (&mut body, series) {
        m.extend(s);
    }
    Ok(envelope(
        "hochster",
        json!({ "file": path_str(file), "coeffs": c.to_string() }),
        body,
    ))
}

fn golod(file: &Path, coeffs: &str) -> Result<Value, Failure> {
    let k = read_complex(file)?.complex;
    let cs = parse_coeffs(coeffs)?;
    let mut results = Vec::new();
    for c in &cs {
        let (ok, witnesses) = product_golod_check(&k, *c)?;
        results.push(json!({
            "coeffs": c.to_string(),
            "products_vanish": ok,
            "witnesses": witnesses.iter().map(report::pair_report).collect::<Vec<_>>(),
        }));
    }
    let names: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
    Ok(envelope(
        "golod",
        json!({ "file": path_str(file), "coeffs": names }),
        json!({ "results": results }),
    ))
}

fn theorem(file: &Path, all_pairs: bool) -> Result<Value, Failure> {
    let k = read_complex(file)?.complex;
    let v = theorem_verdict(&k)?;
    Ok(envelope(
        "theorem",
        json!({ "file": path_str(file), "all_pairs": all_pairs }),
        report::verdict(&v, k.n(), all_pairs),
    ))
}

fn cluster_verify(args: &VerifyArgs) -> Result<(Value, bool), Failure> {
    if args.n.is_none() && args.complex.is_none() {
        return Err(Failure::Usage("cluster verify needs --n and/or --complex".to_string()));
    }
    let tol = match &args.tol {
        Some(s) => parse_rational(s).map_err(Failure::Usage)?,
        None => default_tolerance(),
    };
    let bound: Rational = parse_rational(&args.bound).map_err(Failure::Usage)?;
    let mut passed = true;
    let comult = match args.n {
        Some(n) => {
            let r = verify_comult(n, args.samples, args.seed)?;
            passed &= r.passed();
            report::comult(&r)
        }
        None => Value::Null,
    };
    let (homotopy, lambda) = match &args.complex {
        Some(path) => {
            let input = read_complex(path)?;
            let k = &input.complex;
            let h = verify_homotopy(k, args.samples, args.seed, &tol, &bound)?;
            passed &= h.passed();
            let search = find_lambda_violation(k, args.samples, args.seed, &tol)?;
            passed &= search.is_none();
            let stored = match &input.witness {
                None => Value::Null,
                Some(w) => {
                    let result = eval_lambda(k, w.i, w.j, &w.point, &tol);
                    let ok = result.is_ok();
                    passed &= ok;
                    json!({
                        "I": report::vset(w.i),
                        "J": report::vset(w.j),
                        "point": report::suspension_point(&w.point),
                        "membership": ok,
                        "image": result.as_ref().map(report::q_point).unwrap_or(Value::Null),
                        "error": result.err().map(|e| e.to_string()),
                    })
                }
            };
            let lambda = json!({
                "hypothesis": k.is_n3_neighbourly(),
                "violation": search.as_ref().map(report::lambda_witness),
                "stored_witness": stored,
            });
            (report::homotopy(&h), lambda)
        }
        None => (Value::Null, Value::Null),
    };
    let config = json!({
        "n": args.n,
        "complex": args.complex.as_deref().map(path_str),
        "samples": args.samples,
        "seed": args.seed,
        "tol": tol.to_string(),
        "bound": bound.to_string(),
    });
    let body = json!({
        "comult": comult,
        "homotopy": homotopy,
        "lambda": lambda,
        "passed": passed,
    });
    Ok((envelope("cluster verify", config, body), passed))
}

fn number<T: std::str::FromStr>(params: &[String], idx: usize, what: &str) -> Result<T, Failure> {
    let s = params
        .get(idx)
        .ok_or_else(|| Failure::Usage(format!("missing parameter {what}")))?;
    s.parse()
        .map_err(|_| Failure::Usage(format!("parameter {what}: cannot parse '{s}'")))
}

fn expect_params(params: &[String], count: usize, usage: &str) -> Result<(), Failure> {
    if params.len() != count {
        return Err(Failure::Usage(format!("expected: {usage}")));
    }
    Ok(())
}

fn vertex_list(s: &str, n: usize) -> Result<VertexSet, Failure> {
    let vs = s
        .split(',')
        .map(|v| v.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("cannot parse vertex list '{s}'")))?;
    Ok(VertexSet::from_vertices(vs, n)?)
}

/// Builds a family member from `family` and its parameters.
fn build(family: &str, params: &[String], seed: u64) -> Result<SimplicialComplex, Failure> {
    let k = match family {
        "simplex" => {
            expect_params(params, 1, "simplex N")?;
            simplex(number(params, 0, "N")?)?
        }
        "boundary-simplex" => {
            expect_params(params, 1, "boundary-simplex N")?;
            boundary_simplex(number(params, 0, "N")?)?
        }
        "skeleton" => {
            expect_params(params, 2, "skeleton N K")?;
            full_skeleton(number(params, 0, "N")?, number(params, 1, "K")?)?
        }
        "random" => {
            expect_params(params, 3, "random N K DENSITY")?;
            random_complex(
                number(params, 0, "N")?,
                number(params, 1, "K")?,
                number(params, 2, "DENSITY")?,
                seed,
            )?
        }
        "single-non-face" => {
            expect_params(params, 2, "single-non-face N V1,V2,...")?;
            let n: usize = number(params, 0, "N")?;
            single_missing_face(n, vertex_list(&params[1], n)?)?
        }
        "flag" => {
            if params.is_empty() {
                return Err(Failure::Usage("expected: flag N A-B ...".to_string()));
            }
            let n: usize = number(params, 0, "N")?;
            let edges = params[1..]
                .iter()
                .map(|e| {
                    let (a, b) = e
                        .split_once('-')
                        .ok_or_else(|| Failure::Usage(format!("edge '{e}' is not of the form A-B")))?;
                    let a = a.trim().parse().map_err(|_| Failure::Usage(format!("bad edge '{e}'")))?;
                    let b = b.trim().parse().map_err(|_| Failure::Usage(format!("bad edge '{e}'")))?;
                    Ok((a, b))
                })
                .collect::<Result<Vec<(usize, usize)>, Failure>>()?;
            flag_from_graph(n, &edges)?
        }
        "join" => {
            expect_params(params, 2, "join SPEC SPEC (SPEC = family:param:... or a complex file)")?;
            let left = operand(&params[0], seed)?;
            let right = operand(&params[1], seed)?;
            left.join_shifted(&right)?
        }
        other => return Err(Failure::Usage(format!("unknown family '{other}'"))),
    };
    Ok(k)
}

fn operand(spec: &str, seed: u64) -> Result<SimplicialComplex, Failure> {
    let path = Path::new(spec);
    if path.exists() {
        return Ok(read_complex(path)?.complex);
    }
    let mut parts = spec.split(':');
    let family = parts.next().unwrap_or_default();
    let params: Vec<String> = parts.map(str::to_string).collect();
    build(family, &params, seed)
}

fn generate(args: &GenerateArgs) -> Result<(), Failure> {
    let k = build(&args.family, &args.params, args.seed)?;
    let text = render_complex(&k);
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(e.to_string())),
    }
}
