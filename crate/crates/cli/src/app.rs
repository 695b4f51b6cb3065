//! Argument parsing and subcommand dispatch.
//!
//! [`run`] never prints or exits; it returns an [`Outcome`] holding the exit
//! status and both output streams so that it can be tested in-process.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use seifert_cs::dedekind::{dedekind_cotangent, dedekind_fast, dedekind_sawtooth, DedekindArgs};
use seifert_cs::homology::{flat_bundle_classes, homology_h1, presentation_matrix, DEFAULT_ENUMERATION_CAP};
use seifert_cs::invariants::{counterterm, eta0, eta0_audited, eta_contact, grav_cs_adiabatic, phase, twist_framing};
use seifert_cs::report::build_report_with_cap;
use seifert_cs::{PhaseExponent, Rational, SeifertData};

use crate::catalog::Catalog;
use crate::error::CliError;
use crate::parse::parse_seifert;

/// Environment variable overriding the flat-class enumeration cap.
pub const ENUM_CAP_VAR: &str = "SEIFERT_CS_ENUM_CAP";

#[derive(Debug, Parser)]
#[command(name = "seifert-cs", version, about = "Exact U(1) Chern-Simons invariants of Seifert 3-manifolds")]
pub struct Cli {
    /// Emit JSON instead of `key = value` lines.
    #[arg(long, global = true)]
    pub json: bool,

    /// Add floating-point renderings next to exact values.
    #[arg(long, global = true)]
    pub approx: bool,

    /// Catalog JSON file to use instead of the bundled one.
    #[arg(long, global = true, value_name = "FILE")]
    pub catalog_file: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fast,
    Sawtooth,
    Cotangent,
}

/// Seifert data from the command line, a catalog reference, or a batch file.
#[derive(Debug, Args)]
pub struct SeifertInput {
    /// Seifert data such as "g=0; n=0; (2,1) (3,1) (5,1)", or @NAME for a catalog entry.
    #[arg(allow_hyphen_values = true, required_unless_present = "batch")]
    pub seifert: Option<String>,

    /// File with one Seifert datum per line; prints a JSON array.
    #[arg(long, value_name = "FILE", conflicts_with = "seifert")]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dedekind sum s(alpha, beta) with alpha the modulus.
    Dedekind {
        #[arg(long, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long, allow_negative_numbers = true)]
        beta: i64,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        /// Bits of precision for the cotangent method.
        #[arg(long, default_value_t = seifert_cs::dedekind::DEFAULT_COTANGENT_PRECISION)]
        precision: usize,
    },
    /// Degree d = n + sum beta/alpha.
    Degree(SeifertInput),
    /// Squared isotropy volume Vol(H)^2 = d (requires d > 0).
    Vol(SeifertInput),
    /// First homology, Betti number and the level exponent n_X.
    Homology {
        #[command(flatten)]
        input: SeifertInput,
        /// List the flat bundle classes.
        #[arg(long)]
        classes: bool,
        /// Include the presentation matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Renormalized eta-invariant 1 + d/3 + 4 sum s(alpha, beta).
    Eta0 {
        #[command(flatten)]
        input: SeifertInput,
        /// Recompute every Dedekind sum by brute force and compare.
        #[arg(long)]
        audit: bool,
        /// Value of the integral of R^2 kappa^dkappa; adds the counterterm and contact eta-invariant.
        #[arg(long, value_name = "RATIONAL", allow_negative_numbers = true)]
        r2_integral: Option<Rational>,
    },
    /// Partition-function phase exp(i*pi*eta0/4), optionally reframed.
    Phase {
        #[command(flatten)]
        input: SeifertInput,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        framing: i64,
    },
    /// Full partition-function report.
    Report {
        #[command(flatten)]
        input: SeifertInput,
        /// Chern-Simons level.
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        framing: i64,
    },
    /// Gravitational Chern-Simons term of the metric family g_epsilon.
    Gravcs {
        /// Integral of r*omega over the base.
        #[arg(long, allow_negative_numbers = true)]
        r_omega: Rational,
        /// Integral of f^2*omega over the base.
        #[arg(long, allow_negative_numbers = true)]
        f2_omega: Rational,
        #[arg(long, allow_negative_numbers = true)]
        epsilon: Rational,
    },
    /// List the named manifolds.
    Catalog {
        /// Show only this entry.
        name: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Context {
    json: bool,
    approx: bool,
    cap: u64,
    catalog: Catalog,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn enumeration_cap() -> Result<u64, CliError> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{ENUM_CAP_VAR}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let catalog = match &cli.catalog_file {
        Some(path) => Catalog::load(path)?,
        None => Catalog::builtin(),
    };
    let ctx = Context { json: cli.json, approx: cli.approx, cap: enumeration_cap()?, catalog };

    let record = match &cli.command {
        Command::Dedekind { alpha, beta, method, precision } => dedekind_record(*alpha, *beta, *method, *precision)?,
        Command::Gravcs { r_omega, f2_omega, epsilon } => {
            let mut m = Map::new();
            m.insert("cs".into(), rat(&grav_cs_adiabatic(r_omega, f2_omega, epsilon)?));
            m.insert("epsilon".into(), rat(epsilon));
            m
        }
        Command::Catalog { name } => return catalog_output(&ctx, name.as_deref()),
        other => {
            let input = seifert_input(other).expect("remaining commands take Seifert input");
            if let Some(path) = &input.batch {
                return run_batch(&ctx, other, path);
            }
            let text = input.seifert.as_deref().expect("clap enforces presence");
            let sd = resolve(&ctx, text)?;
            seifert_record(&ctx, other, &sd)?
        }
    };
    Ok(render(&ctx, with_approx(&ctx, record)))
}

fn seifert_input(cmd: &Command) -> Option<&SeifertInput> {
    match cmd {
        Command::Degree(input) | Command::Vol(input) => Some(input),
        Command::Homology { input, .. }
        | Command::Eta0 { input, .. }
        | Command::Phase { input, .. }
        | Command::Report { input, .. } => Some(input),
        _ => None,
    }
}

fn resolve(ctx: &Context, text: &str) -> Result<SeifertData, CliError> {
    match text.trim().strip_prefix('@') {
        Some(name) => ctx
            .catalog
            .get(name)
            .map(|e| e.data.clone())
            .ok_or_else(|| CliError::Usage(format!("no catalog entry named {name:?}"))),
        None => parse_seifert(text),
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn phase_value(p: &PhaseExponent) -> Value {
    serde_json::to_value(p).expect("phase serializes")
}

fn dedekind_record(alpha: i64, beta: i64, method: Method, precision: usize) -> Result<Map<String, Value>, CliError> {
    let args = DedekindArgs::new(alpha, beta)?;
    let mut m = Map::new();
    match method {
        Method::Fast | Method::Sawtooth => {
            let s = if method == Method::Fast { dedekind_fast(args) } else { dedekind_sawtooth(args) };
            m.insert("s".into(), rat(&s));
            m.insert("alpha".into(), json!(alpha));
            m.insert("beta".into(), json!(beta));
            if method == Method::Sawtooth {
                m.insert("method".into(), json!("sawtooth"));
            }
        }
        Method::Cotangent => {
            if precision == 0 {
                return Err(CliError::Usage("--precision must be positive".into()));
            }
            let s = dedekind_cotangent(args, precision);
            m.insert("s_approx".into(), json!(s.to_f64()));
            m.insert("alpha".into(), json!(alpha));
            m.insert("beta".into(), json!(beta));
            m.insert("method".into(), json!("cotangent"));
            m.insert("precision".into(), json!(precision));
        }
    }
    Ok(m)
}

fn seifert_record(ctx: &Context, cmd: &Command, sd: &SeifertData) -> Result<Map<String, Value>, CliError> {
    let mut m = Map::new();
    match cmd {
        Command::Degree(_) => {
            m.insert("degree".into(), rat(&sd.degree()));
        }
        Command::Vol(_) => {
            m.insert("vol_h_squared".into(), rat(&sd.vol_isotropy_squared()?));
        }
        Command::Homology { classes, matrix, .. } => {
            let h = homology_h1(sd);
            let Value::Object(fields) = serde_json::to_value(&h).map_err(internal)? else {
                return Err(CliError::Internal("homology summary is not an object".into()));
            };
            m.extend(fields);
            m.insert("n_exponent".into(), rat(&h.n_exponent()));
            if *classes {
                m.insert("classes".into(), json!(flat_bundle_classes(&h, ctx.cap)?));
            }
            if *matrix {
                let pres = presentation_matrix(sd);
                m.insert("presentation".into(), serde_json::to_value(&pres.matrix).map_err(internal)?);
                m.insert("free_rank_adjunct".into(), json!(pres.free_rank_adjunct));
            }
        }
        Command::Eta0 { audit, r2_integral, .. } => {
            let value = if *audit { eta0_audited(sd)? } else { eta0(sd) };
            m.insert("eta0".into(), rat(&value));
            if let Some(integral) = r2_integral {
                let ct = counterterm(integral)?;
                m.insert("counterterm".into(), rat(&ct));
                m.insert("eta_contact".into(), rat(&eta_contact(&value, &ct)));
            }
            if sd.genus() > 0 {
                m.insert("note".into(), json!("genus > 0: formula applied as stated, without a genus term"));
            }
        }
        Command::Phase { framing, .. } => {
            let value = eta0(sd);
            m.insert("eta0".into(), rat(&value));
            m.insert("framing".into(), json!(framing));
            m.insert("phase".into(), phase_value(&twist_framing(&phase(&value), *framing)));
        }
        Command::Report { k, framing, .. } => {
            let report = build_report_with_cap(sd, *k, *framing, ctx.cap)?;
            let Value::Object(fields) = serde_json::to_value(&report).map_err(internal)? else {
                return Err(CliError::Internal("report is not an object".into()));
            };
            m.extend(fields);
        }
        Command::Dedekind { .. } | Command::Gravcs { .. } | Command::Catalog { .. } => {
            unreachable!("not a Seifert command")
        }
    }
    Ok(m)
}

fn internal(e: serde_json::Error) -> CliError {
    CliError::Internal(e.to_string())
}

fn run_batch(ctx: &Context, cmd: &Command, path: &std::path::Path) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.to_path_buf(), message: e.to_string() })?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<Result<Value, CliError>> = lines
        .par_iter()
        .map(|&(line, datum)| {
            let eval = || -> Result<Value, CliError> {
                let sd = resolve(ctx, datum)?;
                let mut m = Map::new();
                m.insert("seifert".into(), json!(sd.to_string()));
                m.extend(seifert_record(ctx, cmd, &sd)?);
                Ok(Value::Object(with_approx(ctx, m)))
            };
            eval().map_err(|e| CliError::BatchLine { line, source: Box::new(e) })
        })
        .collect();
    let values = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{}\n", serde_json::to_string_pretty(&Value::Array(values)).map_err(internal)?))
}

fn catalog_output(ctx: &Context, name: Option<&str>) -> Result<String, CliError> {
    let entries: Vec<_> = match name {
        Some(n) => vec![ctx.catalog.get(n).ok_or_else(|| CliError::Usage(format!("no catalog entry named {n:?}")))?],
        None => ctx.catalog.entries().iter().collect(),
    };
    let values: Vec<Map<String, Value>> = entries
        .iter()
        .map(|e| {
            let mut m = Map::new();
            m.insert("name".into(), json!(e.name));
            m.insert("seifert".into(), json!(e.data.to_string()));
            m.insert("degree".into(), rat(&e.data.degree()));
            m.insert("notes".into(), json!(e.notes));
            with_approx(ctx, m)
        })
        .collect();
    if ctx.json {
        return Ok(format!("{}\n", serde_json::to_string_pretty(&values).map_err(internal)?));
    }
    Ok(values.iter().map(render_text).collect::<Vec<_>>().join("\n"))
}

/// Adds `<key>_approx` beside every top-level exact rational, and the complex
/// value beside the phase.
fn with_approx(ctx: &Context, record: Map<String, Value>) -> Map<String, Value> {
    if !ctx.approx {
        return record;
    }
    let mut out = Map::new();
    for (key, value) in record {
        let extra = match &value {
            Value::String(s) => s.parse::<Rational>().ok().map(|r| json!(r.to_f64())),
            Value::Object(o) if key == "phase" => o
                .get("q")
                .and_then(Value::as_str)
                .and_then(|q| q.parse::<Rational>().ok())
                .map(|q| {
                    let (re, im) = PhaseExponent::new(q).to_complex();
                    json!([re, im])
                }),
            _ => None,
        };
        out.insert(key.clone(), value);
        if let Some(extra) = extra {
            out.insert(format!("{key}_approx"), extra);
        }
    }
    out
}

fn render(ctx: &Context, record: Map<String, Value>) -> String {
    if ctx.json {
        format!("{}\n", Value::Object(record))
    } else {
        render_text(&record)
    }
}

/// One `key = value` line per field; strings unquoted, anything else as
/// compact JSON.
pub fn render_text(record: &Map<String, Value>) -> String {
    let mut out = String::new();
    for (key, value) in record {
        match value {
            Value::String(s) => out.push_str(&format!("{key} = {s}\n")),
            other => out.push_str(&format!("{key} = {other}\n")),
        }
    }
    out
}
