//! Command-line front end. Every command prints JSON lines on stdout.
//!
//! Exit codes: 0 when every check in scope passed, 1 on numeric failures
//! (with whatever partial report was produced), 2 on usage errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::{parse_literal, CDNumber};
use crate::catalog::verify::{algebra_suite, catalog_suite, mellin_suite, rules_suite, spherical_suite};
use crate::catalog::{all_pass, build_pair, catalog_list, forward_original, rule_list, CheckRecord, PairKind, Params, RuleFamily};
use crate::error::{Error, Result};
use crate::inversion::{bromwich_invert, residue_invert_rational, series_invert, BromwichOptions, RationalImage, THETA_MAX};
use crate::kernel::{KernelSpec, KernelVariant};
use crate::ode::{grid, solve_ode, Forcing, Method, ODEProblem, SolveOptions};

/// Names accepted as `--<name> VALUE` shorthands for pair parameters.
const PAIR_PARAM_FLAGS: &[&str] = &["a", "alpha", "b", "c", "n", "omega", "zeta0", "zeta1", "zeta2", "zeta3"];

#[derive(Parser, Debug)]
#[command(name = "cdlaplace", version, about = "Transforms over Cayley-Dickson algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Target accuracy; each command has its own default.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, default_value_t = crate::catalog::DEFAULT_SEED)]
    pub seed: u64,
    /// Level `r` for parsed literals (dimension `2^r`).
    #[arg(long, global = true)]
    pub level: Option<u8>,
    /// Cap of the Bromwich cut-off ladder.
    #[arg(long, global = true)]
    pub theta_max: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Forward transform of a catalog original.
    Transform(TransformArgs),
    /// Recover an original from a rational or catalog image.
    Invert(InvertArgs),
    /// Solve a constant-coefficient ODE described in a TOML file.
    Ode(OdeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// List catalog pairs (and rules).
    Table(TableArgs),
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[arg(long)]
    pub pair: String,
    /// Pair parameter `key=value`; `--omega 1` is shorthand for
    /// `--param omega=1`.
    #[arg(long = "param")]
    pub params: Vec<String>,
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub zeta: Option<String>,
    #[arg(long, value_enum)]
    pub kernel: Option<KernelArg>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KernelArg {
    Linear,
    Spherical,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum InvertMethod {
    Bromwich,
    Residue,
    Series,
}

#[derive(Args, Debug)]
pub struct InvertArgs {
    #[arg(long, value_enum, default_value = "bromwich")]
    pub method: InvertMethod,
    /// Numerator coefficients, ascending, as literals separated by spaces
    /// or commas.
    #[arg(long)]
    pub num: Option<String>,
    /// Real denominator coefficients, ascending.
    #[arg(long)]
    pub den: Option<String>,
    /// Catalog pair whose closed-form image is inverted (Bromwich only).
    #[arg(long, conflicts_with_all = ["num", "den"])]
    pub pair: Option<String>,
    #[arg(long = "param")]
    pub params: Vec<String>,
    /// Abscissa of the Bromwich line.
    #[arg(long)]
    pub a: Option<f64>,
    /// Unit imaginary direction `S` of the line.
    #[arg(long, default_value = "1i1")]
    pub axis: String,
    /// Evaluation times; repeat or separate by commas.
    #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub t: Vec<f64>,
    /// Terms of the Laurent tail for `--method series`.
    #[arg(long, default_value_t = 40)]
    pub terms: usize,
}

#[derive(Args, Debug)]
pub struct OdeArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the `method` key of the config.
    #[arg(long, value_enum)]
    pub method: Option<OdeMethod>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum OdeMethod {
    Residue,
    Bromwich,
}

impl From<OdeMethod> for Method {
    fn from(m: OdeMethod) -> Self {
        match m {
            OdeMethod::Residue => Method::Residue,
            OdeMethod::Bromwich => Method::Bromwich,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum Suite {
    Catalog,
    Rules,
    Mellin,
    Algebra,
    Spherical,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Print only failing gating records and the summary.
    #[arg(long)]
    pub failures_only: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Also list the operational rules.
    #[arg(long)]
    pub rules: bool,
}

/// ODE job file. Literals use the `1.5 + 2i1 - 0.25i7` grammar.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OdeConfig {
    pub order: usize,
    /// `a_0` first.
    pub coeffs: Vec<String>,
    pub ics: Vec<String>,
    #[serde(default)]
    pub forcing: Option<ForcingConfig>,
    pub t: GridConfig,
    #[serde(default = "default_method")]
    pub method: OdeMethod,
}

fn default_method() -> OdeMethod {
    OdeMethod::Residue
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForcingConfig {
    pub pair: Option<String>,
    #[serde(default)]
    pub params: Params,
    /// `zero`, `step` or `sin`.
    pub builtin: Option<String>,
    pub omega: Option<f64>,
    /// Constant left factor of the forcing.
    pub coeff: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

/// Outcome of a command: records already printed, and whether all checks
/// in scope passed.
type Outcome = Result<bool>;

/// Rewrites `--omega 1` style pair parameters into `--param omega=1`.
fn expand_param_flags(argv: Vec<String>) -> Vec<String> {
    let mut out = Vec::with_capacity(argv.len());
    let mut it = argv.into_iter().peekable();
    let mut in_pair_command = false;
    while let Some(arg) = it.next() {
        if arg == "transform" || arg == "invert" {
            in_pair_command = true;
        }
        let key = arg.strip_prefix("--").map(|k| k.split_once('=').map_or(k, |(k, _)| k).to_string());
        match key {
            Some(k) if in_pair_command && PAIR_PARAM_FLAGS.contains(&k.as_str()) && !(k == "a" && out.contains(&"invert".to_string())) => {
                let value = match arg.split_once('=') {
                    Some((_, v)) => Some(v.to_string()),
                    None => it.next(),
                };
                out.push("--param".into());
                out.push(format!("{k}={}", value.unwrap_or_default()));
            }
            _ => out.push(arg),
        }
    }
    out
}

/// Parses `argv` (program name first), runs the command and writes JSON
/// lines to `out`. Returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = expand_param_flags(argv.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let pool = match std::env::var("HCT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new().num_threads(n).build().ok(),
        _ => None,
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = match &pool {
        Some(p) => p.install(|| dispatch(&cli, &mut buf)),
        None => dispatch(&cli, &mut buf),
    };
    if out.write_all(&buf).is_err() {
        return 1;
    }
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = emit(out, &json!({ "error": e.to_string(), "kind": error_kind(&e) }));
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) | Error::Parse(_) | Error::NotFound(_) | Error::IndexOutOfRange { .. } | Error::LevelOutOfRange(_) => "usage",
        Error::Domain(_) | Error::Contract(_) | Error::Unsupported(_) => "usage",
        _ => "numeric",
    }
}

fn exit_code(e: &Error) -> i32 {
    if error_kind(e) == "usage" {
        2
    } else {
        1
    }
}

fn emit(out: &mut dyn Write, v: &impl serde::Serialize) -> Result<()> {
    let line = serde_json::to_string(v).map_err(|e| Error::Input(e.to_string()))?;
    writeln!(out, "{line}").map_err(|e| Error::Input(format!("cannot write output: {e}")))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Transform(a) => transform(cli, a, out),
        Command::Invert(a) => invert(cli, a, out),
        Command::Ode(a) => ode(cli, a, out),
        Command::Verify(a) => verify(cli, a, out),
        Command::Table(a) => table(a, out),
    }
}

fn parse_params(items: &[String]) -> Result<Params> {
    let mut params = Params::new();
    for item in items {
        let (k, v) = item.split_once('=').ok_or_else(|| Error::Input(format!("expected key=value, got {item:?}")))?;
        let v: f64 = v.trim().parse().map_err(|_| Error::Parse(format!("bad number for {k}: {v:?}")))?;
        params.insert(k.trim().to_string(), v);
    }
    Ok(params)
}

fn literal_list(text: &str, level: Option<u8>) -> Result<Vec<CDNumber>> {
    let items: Vec<&str> = text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
    if items.is_empty() {
        return Err(Error::Input("empty coefficient list".into()));
    }
    let parsed: Vec<CDNumber> = items.iter().map(|s| parse_literal(s, level)).collect::<Result<_>>()?;
    common_level(parsed)
}

fn common_level(items: Vec<CDNumber>) -> Result<Vec<CDNumber>> {
    let level = items.iter().map(CDNumber::level).max().unwrap_or(2);
    items.iter().map(|c| c.embed(level)).collect()
}

fn real_list(text: &str) -> Result<Vec<f64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| Error::Parse(format!("bad real coefficient {s:?}"))))
        .collect()
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn transform(cli: &Cli, args: &TransformArgs, out: &mut dyn Write) -> Outcome {
    let pair = build_pair(&args.pair, &parse_params(&args.params)?)?;
    let p = parse_literal(&args.p, cli.level)?;
    let zeta = match &args.zeta {
        Some(z) => parse_literal(z, cli.level)?,
        None => CDNumber::zero(p.level()),
    };
    let level = p.level().max(zeta.level()).max(pair.kernel.level);
    let (p, zeta) = (p.embed(level)?, zeta.embed(level)?);
    let variant = match args.kernel {
        Some(KernelArg::Linear) => KernelVariant::Linear,
        Some(KernelArg::Spherical) => KernelVariant::Spherical,
        None => pair.kernel.variant,
    };
    let kernel = KernelSpec { variant, level };
    let tol = cli.tol.unwrap_or(pair.tol);
    let quad_tol = (tol * 1e-4).max(1e-12);
    let q = forward_original(pair.kind, &pair.original, kernel, &p, &zeta, quad_tol)?;
    let closed = if variant == pair.kernel.variant {
        match pair.image_at(&p, &zeta) {
            Ok(v) => Some(v),
            Err(Error::Unsupported(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let dev = closed.as_ref().map(|c| q.value.dist_max(c) / c.norm().max(f64::MIN_POSITIVE));
    let pass = dev.is_none_or(|d| d <= tol);
    emit(
        out,
        &json!({
            "command": "transform",
            "pair": pair.name,
            "params": pair.params,
            "value": q.value,
            "err_estimate": q.err_estimate,
            "closed_form": closed,
            "dev": dev,
            "tol": tol,
            "pass": pass,
            "meta": {
                "kind": pair.kind,
                "kernel": variant,
                "p": p.to_string(),
                "zeta": zeta.to_string(),
                "domain": [finite(pair.strip.0), finite(pair.strip.1)],
                "panels": q.panels_used,
                "truncation_point": q.truncation_point,
            },
        }),
    )?;
    Ok(pass)
}

fn invert(cli: &Cli, args: &InvertArgs, out: &mut dyn Write) -> Outcome {
    let tol = cli.tol.unwrap_or(1e-6);
    let theta_max = cli.theta_max.unwrap_or(THETA_MAX);
    if let Some(name) = &args.pair {
        return invert_pair(cli, args, name, tol, theta_max, out);
    }
    let (num, den) = match (&args.num, &args.den) {
        (Some(n), Some(d)) => (literal_list(n, cli.level)?, real_list(d)?),
        _ => return Err(Error::Input("give --num and --den, or --pair".into())),
    };
    let level = num.iter().map(CDNumber::level).max().unwrap_or(2);
    let image = RationalImage::new(num, den, KernelSpec::linear(level))?;
    let roots = image.denominator().roots()?;
    let abscissa = roots.iter().map(|r| r.value.re).fold(f64::NEG_INFINITY, f64::max);
    let mut pass = true;
    for &t in &args.t {
        let record = match args.method {
            InvertMethod::Residue => {
                let v = residue_invert_rational(&image, t)?;
                // roundoff of the residue sum
                let err = 64.0 * f64::EPSILON * v.norm().max(1.0) * roots.len() as f64;
                json!({ "command": "invert", "method": "residue", "t": t, "value": v, "err_estimate": err })
            }
            InvertMethod::Series => {
                let s = series_invert(&image.laurent_tail(args.terms)?, t)?;
                pass &= s.remainder_bound <= tol;
                json!({ "command": "invert", "method": "series", "t": t, "value": s.value, "err_estimate": s.remainder_bound, "terms": args.terms })
            }
            InvertMethod::Bromwich => {
                let a = args.a.unwrap_or(abscissa.max(0.0) + 0.5);
                let axis = parse_literal(&args.axis, cli.level)?;
                let opts = BromwichOptions { theta_max, ..BromwichOptions::one_sided(abscissa) };
                let r = bromwich_invert(|p: &CDNumber| image.eval(p), a, &axis, t, KernelSpec::linear(level), tol, &opts)?;
                json!({
                    "command": "invert", "method": "bromwich", "t": t, "value": r.value,
                    "err_estimate": r.err_estimate, "a": a, "theta_max": r.theta_max, "jump_midpoint": r.jump_midpoint,
                })
            }
        };
        emit(out, &record)?;
    }
    Ok(pass)
}

fn invert_pair(cli: &Cli, args: &InvertArgs, name: &str, tol: f64, theta_max: f64, out: &mut dyn Write) -> Outcome {
    if args.method != InvertMethod::Bromwich {
        return Err(Error::Input("catalog images are inverted with --method bromwich".into()));
    }
    let pair = build_pair(name, &parse_params(&args.params)?)?;
    if pair.kind == PairKind::Mellin || pair.kernel.variant != KernelVariant::Linear {
        return Err(Error::Unsupported("pair inversion covers linear-kernel Laplace pairs".into()));
    }
    let axis = parse_literal(&args.axis, cli.level)?;
    let (s0, s1) = pair.strip;
    let a = args.a.unwrap_or(if s1.is_finite() { 0.5 * (s0 + s1) } else { s0.max(-1e300) + 0.5 });
    let opts = BromwichOptions { theta_max, strip: pair.strip };
    let level = axis.level().max(2);
    let nan = CDNumber::from_slice(level, &vec![f64::NAN; 1 << level]);
    let image = |p: &CDNumber| pair.image(p).unwrap_or_else(|_| nan.clone());
    let mut pass = true;
    for &t in &args.t {
        let r = bromwich_invert(image, a, &axis, t, KernelSpec::linear(level), tol, &opts)?;
        let exact = pair.original.eval(t);
        let dev = r.value.dist_max(&exact);
        let ok = r.jump_midpoint || dev <= r.err_estimate.max(tol) * 10.0 + 1e-3;
        pass &= ok;
        emit(
            out,
            &json!({
                "command": "invert", "method": "bromwich", "pair": pair.name, "t": t, "value": r.value,
                "err_estimate": r.err_estimate, "original": exact, "dev": dev, "a": a,
                "theta_max": r.theta_max, "jump_midpoint": r.jump_midpoint,
            }),
        )?;
    }
    Ok(pass)
}

/// Builds the ODE problem described by a config.
pub fn ode_problem(cfg: &OdeConfig, level: Option<u8>) -> Result<ODEProblem> {
    if cfg.coeffs.len() != cfg.order + 1 {
        return Err(Error::Input(format!("order {} needs {} coefficients", cfg.order, cfg.order + 1)));
    }
    let parse = |v: &[String]| -> Result<Vec<CDNumber>> { v.iter().map(|s| parse_literal(s, level)).collect() };
    let coeffs = parse(&cfg.coeffs)?;
    let ics = parse(&cfg.ics)?;
    let forcing = match &cfg.forcing {
        None => Forcing::Zero,
        Some(f) => {
            let coeff = match &f.coeff {
                Some(c) => parse_literal(c, level)?,
                None => CDNumber::real(2, 1.0),
            };
            match (&f.pair, f.builtin.as_deref()) {
                (Some(_), Some(_)) => return Err(Error::Input("forcing takes either pair or builtin".into())),
                (Some(name), None) => {
                    if f.omega.is_some() {
                        return Err(Error::Input("omega belongs in forcing.params for a pair".into()));
                    }
                    Forcing::Pair { name: name.clone(), params: f.params.clone(), coeff }
                }
                (None, Some(b)) => {
                    if !f.params.is_empty() {
                        return Err(Error::Input("builtin forcing takes omega, not params".into()));
                    }
                    match b {
                        "zero" => Forcing::Zero,
                        "step" => Forcing::Pair { name: "step".into(), params: Params::new(), coeff },
                        "sin" => {
                            let params: Params = BTreeMap::from([("omega".to_string(), f.omega.unwrap_or(1.0))]);
                            Forcing::Pair { name: "sin".into(), params, coeff }
                        }
                        other => return Err(Error::Input(format!("unknown builtin forcing {other:?}"))),
                    }
                }
                (None, None) => return Err(Error::Input("forcing needs pair or builtin".into())),
            }
        }
    };
    let all = common_level(coeffs.iter().chain(&ics).cloned().collect())?;
    let (coeffs, ics) = all.split_at(coeffs.len());
    ODEProblem::new(coeffs.to_vec(), ics.to_vec(), forcing)
}

fn ode(cli: &Cli, args: &OdeArgs, out: &mut dyn Write) -> Outcome {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", args.config.display())))?;
    let cfg: OdeConfig = toml::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let prob = ode_problem(&cfg, cli.level)?;
    let ts = grid(cfg.t.start, cfg.t.stop, cfg.t.step)?;
    let method: Method = args.method.unwrap_or(cfg.method).into();
    let opts = SolveOptions { tol: cli.tol.unwrap_or(1e-6), theta_max: cli.theta_max.unwrap_or(THETA_MAX) };
    let sol = solve_ode(&prob, &ts, method, opts)?;
    for ((t, x), err) in sol.t.iter().zip(&sol.x).zip(&sol.err_estimate) {
        emit(out, &json!({ "command": "ode", "t": t, "x": x, "err_estimate": err }))?;
    }
    let ic_ok = sol.initial_error.is_none_or(|e| e <= 1e-6);
    let pass = ic_ok && !sol.defect.flagged;
    emit(
        out,
        &json!({
            "command": "ode", "summary": true, "method": sol.method, "value_domain": prob.value_domain,
            "initial_error": sol.initial_error, "defect": sol.defect, "pass": pass,
        }),
    )?;
    Ok(pass)
}

fn verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let records: Vec<CheckRecord> = match args.suite {
        Suite::Catalog => catalog_suite(cli.seed, cli.tol),
        Suite::Rules => rules_suite(&[RuleFamily::OneSided, RuleFamily::TwoSided], cli.seed, cli.tol),
        Suite::Mellin => mellin_suite(cli.seed, cli.tol),
        Suite::Algebra => algebra_suite(cli.seed),
        Suite::Spherical => spherical_suite(cli.seed),
    };
    for r in &records {
        if !args.failures_only || (r.gating() && !r.pass) {
            emit(out, r)?;
        }
    }
    let gating: Vec<&CheckRecord> = records.iter().filter(|r| r.gating()).collect();
    let failed = gating.iter().filter(|r| !r.pass).count();
    let pass = all_pass(&records);
    emit(
        out,
        &json!({
            "suite": format!("{:?}", args.suite).to_lowercase(),
            "seed": cli.seed,
            "checks": gating.len(),
            "failed": failed,
            "skipped": records.iter().filter(|r| r.skipped.is_some()).count(),
            "informational": records.iter().filter(|r| r.informational).count(),
            "pass": pass,
        }),
    )?;
    Ok(pass)
}

fn table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    for pair in catalog_list() {
        emit(out, &pair.descriptor())?;
    }
    if args.rules {
        for r in rule_list() {
            let v: Value = json!({
                "rule": r.name, "family": format!("{:?}", r.family), "kernel": r.kernel, "statement": r.statement,
                "bases": r.bases, "tol": r.tol, "informational": r.informational,
            });
            emit(out, &v)?;
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(args: &[&str]) -> (i32, Vec<Value>) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("cdlaplace").chain(args.iter().copied()), &mut buf);
        let text = String::from_utf8(buf).unwrap();
        (code, text.lines().map(|l| serde_json::from_str(l).unwrap()).collect())
    }

    #[test]
    fn param_shorthand() {
        let v = expand_param_flags(["x", "transform", "--omega", "2", "--p", "1"].map(String::from).to_vec());
        assert_eq!(v, ["x", "transform", "--param", "omega=2", "--p", "1"]);
        let v = expand_param_flags(["x", "invert", "--a", "2"].map(String::from).to_vec());
        assert_eq!(v, ["x", "invert", "--a", "2"]);
    }

    #[test]
    fn transform_sin() {
        let (code, out) = lines(&["transform", "--pair", "sin", "--omega", "1", "--p", "1+1i1"]);
        assert_eq!(code, 0);
        let v: Vec<f64> = serde_json::from_value(out[0]["value"].clone()).unwrap();
        let want = [0.2, -0.4, 0.0, 0.0];
        assert!(v.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-9), "{v:?}");
        assert!(out[0]["err_estimate"].is_number());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(lines(&["transform", "--pair", "nope", "--p", "1"]).0, 2);
        assert_eq!(lines(&["transform", "--pair", "sin", "--p", "2i9", "--level", "3"]).0, 2);
        assert_eq!(lines(&["frobnicate"]).0, 2);
    }
}
