//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 when a verification or `--expect` check
//! fails, 1 on input errors.

pub mod emit;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::rational::{fmt_rat, parse_rat};
use crate::algebra::{Rat, RatFun1, UniPoly};
use crate::corpus::{DEFAULT_RANDOM_COUNT, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::germ::{parse_germ, parse_sparse, FactoredGerm};
use crate::hodge::{hodge_pole_order, hodge_poles, hodge_specialize_top, zeta_hodge};
use crate::resolution::{resolve_germ, ResolutionGraph};
use crate::suites::{run_suite, Suite};
use crate::surface::{arrangement_resolve, contribution_surface, parse_alphas, parse_lines, Preset, SurfaceConfig};
use crate::suspension::{
    family_zeta, suspend_zeta, verify_suspension, verify_threevar, verify_x3y2xk, verify_y2xk,
    FamilyCheck, FamilyId,
};
use crate::zeta::{classify_small_poles, lct, pole_set, predicted_poles, zeta_d};

use emit::{emit_dot, emit_latex, pole_records, RatFunRecord};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "topzeta", version, about = "Resolution graphs and topological zeta functions of plane curve germs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false, id = "source")]
pub struct Source {
    /// Polynomial in x and y, e.g. "y^2+x^3".
    #[arg(long)]
    pub poly: Option<String>,
    /// Named family (y2xk, x3y2xk, suspension, threevar); needs --k.
    #[arg(long, requires = "k")]
    pub family: Option<FamilyId>,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyParams {
    #[arg(long)]
    pub k: Option<u64>,
    /// Second parameter of the threevar family.
    #[arg(long, default_value_t = 0)]
    pub n: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimal embedded resolution graph.
    Resolve {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Topological zeta function (restricted to N divisible by --d).
    Zeta {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, default_value_t = 1)]
        d: u64,
        #[arg(long, value_enum, default_value_t = ZetaFormat::Json)]
        format: ZetaFormat,
        /// Expected zeta, e.g. "(4*s+5)/((s+1)*(6*s+5))"; exit 2 on mismatch.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Log canonical threshold.
    Lct {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long)]
        expect: Option<String>,
    },
    /// Zeta function of f + z^2.
    Suspend {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long)]
        expect: Option<String>,
    },
    /// Contribution of an exceptional plane carrying a line arrangement.
    SurfaceContrib {
        #[arg(long, conflicts_with = "lines", required_unless_present = "lines")]
        preset: Option<String>,
        /// Lines separated by ';', e.g. "x; y; x+y".
        #[arg(long)]
        lines: Option<String>,
        /// Comma-separated alpha values, one per line.
        #[arg(long, allow_hyphen_values = true)]
        alphas: String,
        /// N of the exceptional surface.
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<String>,
    },
    /// Hodge zeta function, its real poles and specializations.
    Hodge {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        params: FamilyParams,
        /// Specialize to the topological zeta at these values.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        specialize: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
        /// Random germs in the corpus.
        #[arg(long, default_value_t = DEFAULT_RANDOM_COUNT)]
        count: usize,
    },
    /// Check a family against its closed forms over a parameter range.
    Sweep {
        #[arg(long)]
        family: FamilyId,
        /// Inclusive range a..b.
        #[arg(long)]
        range: String,
        #[arg(long, default_value_t = 0)]
        n: u64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaFormat {
    Json,
    Latex,
    Plain,
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Decimal or `0x`-prefixed hexadecimal.
fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    parsed.map_err(|e| format!("bad seed `{s}`: {e}"))
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { code: 0, stdout: text, stderr: String::new() }
    }
}

/// Parses arguments and runs the command. Never exits the process.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let output = cli.output.clone();
    let mut outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    if let Some(path) = output {
        if outcome.code != 1 {
            if let Err(e) = std::fs::write(&path, &outcome.stdout) {
                return Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                };
            }
            outcome.stdout.clear();
        }
    }
    outcome
}

fn report_text(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn germ_text(source: &Source, params: &FamilyParams) -> Result<String> {
    if let Some(p) = &source.poly {
        return Ok(p.clone());
    }
    let family = source.family.expect("clap enforces one source");
    let k = params.k.expect("clap enforces --k");
    if k < family.min_k(params.n) {
        return Err(Error::ParamOutOfRange(format!("{family} needs k >= {}", family.min_k(params.n))));
    }
    match family {
        FamilyId::Y2xk | FamilyId::Suspension => Ok(format!("y^2+x^{k}")),
        FamilyId::X3y2xk => Ok(format!("x^3*y^2+x^{k}")),
        FamilyId::Threevar => Err(Error::InvalidArgument(
            "threevar is a three-variable family with no curve germ".into(),
        )),
    }
}

fn load(source: &Source, params: &FamilyParams) -> Result<(FactoredGerm, ResolutionGraph)> {
    let germ = parse_germ(&germ_text(source, params)?)?;
    let graph = resolve_germ(&germ)?;
    Ok((germ, graph))
}

/// Parses `num/den` where both sides are polynomials in `s`; the split is
/// at the last top-level `/` that is followed by `(`.
pub fn parse_ratfun(text: &str) -> Result<RatFun1> {
    let bytes = text.as_bytes();
    let mut depth = 0i32;
    let mut split = None;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'/' if depth == 0 && text[i + 1..].trim_start().starts_with('(') => split = Some(i),
            _ => {}
        }
    }
    let poly = |t: &str| -> Result<UniPoly> {
        let sparse = parse_sparse(t, &["s"])?;
        let degree = sparse.keys().map(|e| e[0] as usize).max().unwrap_or(0);
        let mut coeffs = vec![Rat::from_integer(0.into()); degree + 1];
        for (e, c) in sparse {
            coeffs[e[0] as usize] = c;
        }
        Ok(UniPoly::new(coeffs))
    };
    match split {
        Some(i) => RatFun1::new(poly(&text[..i])?, poly(&text[i + 1..])?),
        None => Ok(RatFun1::from_poly(poly(text)?)),
    }
}

fn parse_rational(text: &str) -> Result<Rat> {
    parse_rat(text).ok_or_else(|| Error::InvalidArgument(format!("bad rational `{}`", text.trim())))
}

/// Attaches an expectation verdict; exit 2 if it fails.
fn with_expectation(mut report: Value, expected: Option<(String, bool)>) -> Outcome {
    let mut code = 0;
    if let Some((text, matched)) = expected {
        report["expectation"] = json!({ "expected": text, "matched": matched });
        if !matched {
            code = 2;
        }
    }
    Outcome { code, stdout: report_text(&report), stderr: String::new() }
}

fn zeta_json(z: &RatFun1) -> Result<Value> {
    Ok(json!({
        "zeta": RatFunRecord::new(z),
        "poles": pole_records(z)?,
    }))
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Resolve { source, params, format } => {
            let (germ, graph) = load(source, params)?;
            Ok(Outcome::ok(match format {
                GraphFormat::Dot => emit_dot(&graph),
                GraphFormat::Json => report_text(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "input": germ.echo(),
                    "graph": graph,
                })),
            }))
        }
        Command::Zeta { source, params, d, format, expect } => {
            if *d == 0 {
                return Err(Error::InvalidArgument("--d must be positive".into()));
            }
            let (germ, graph) = load(source, params)?;
            let z = zeta_d(&graph, *d);
            let expected = match expect {
                Some(t) => Some((t.clone(), parse_ratfun(t)? == z)),
                None => None,
            };
            let code = if expected.as_ref().is_some_and(|e| !e.1) { 2 } else { 0 };
            match format {
                ZetaFormat::Latex => Ok(Outcome { code, stdout: emit_latex(&z) + "\n", stderr: String::new() }),
                ZetaFormat::Plain => Ok(Outcome { code, stdout: emit::emit_plain(&z) + "\n", stderr: String::new() }),
                ZetaFormat::Json => {
                    let poles = pole_set(&z)?;
                    let mut report = json!({
                        "schema_version": SCHEMA_VERSION,
                        "input": germ.echo(),
                        "d": d,
                        "graph": graph,
                        "lct": crate::algebra::rational::serde_rat::to_value(&lct(&graph)),
                    });
                    let body = zeta_json(&z)?;
                    report["zeta"] = body["zeta"].clone();
                    report["poles"] = body["poles"].clone();
                    if *d == 1 {
                        let listed: Vec<Rat> = poles.iter().cloned().collect();
                        report["verdicts"] = json!({
                            "predicted_poles_match": predicted_poles(&graph) == poles,
                            "small_poles_in_set": classify_small_poles(&listed).outside_set.is_empty(),
                            "at_most_one_pole_in_window": classify_small_poles(&listed).in_window.len() <= 1,
                        });
                    }
                    Ok(with_expectation(report, expected))
                }
            }
        }
        Command::Lct { source, params, expect } => {
            let (germ, graph) = load(source, params)?;
            let value = lct(&graph);
            let expected = match expect {
                Some(t) => Some((t.clone(), parse_rational(t)? == value)),
                None => None,
            };
            let report = json!({
                "schema_version": SCHEMA_VERSION,
                "input": germ.echo(),
                "lct": crate::algebra::rational::serde_rat::to_value(&value),
                "lct_text": fmt_rat(&value),
            });
            Ok(with_expectation(report, expected))
        }
        Command::Suspend { source, params, expect } => {
            let mut report = json!({ "schema_version": SCHEMA_VERSION });
            let zf = if source.family == Some(FamilyId::Threevar) {
                let k = params.k.expect("clap enforces --k");
                report["input"] = json!({ "family": "threevar", "n": params.n, "k": k });
                family_zeta(FamilyId::Threevar, params.n, k)?.0
            } else {
                let (germ, graph) = load(source, params)?;
                let z = zeta_d(&graph, 1);
                let z2 = zeta_d(&graph, 2);
                report["input"] = serde_json::to_value(germ.echo()).expect("echo serializes");
                report["curve_zeta"] = json!(RatFunRecord::new(&z));
                report["curve_zeta_d2"] = json!(RatFunRecord::new(&z2));
                suspend_zeta(&z, &z2)
            };
            let body = zeta_json(&zf)?;
            report["zeta"] = body["zeta"].clone();
            report["poles"] = body["poles"].clone();
            let expected = match expect {
                Some(t) => Some((t.clone(), parse_ratfun(t)? == zf)),
                None => None,
            };
            Ok(with_expectation(report, expected))
        }
        Command::SurfaceContrib { preset, lines, alphas, n, expect } => {
            let lines = match (preset, lines) {
                (Some(p), _) => Preset::from_name(p)?.lines(),
                (None, Some(l)) => parse_lines(l)?,
                (None, None) => unreachable!("clap requires one of --preset, --lines"),
            };
            let config = SurfaceConfig::new(lines, parse_alphas(alphas)?)?;
            let res = arrangement_resolve(&config);
            let value = contribution_surface(&res, *n)?;
            let expected = match expect {
                Some(t) => Some((t.clone(), parse_rational(t)? == value)),
                None => None,
            };
            let euler: Vec<i64> = (0..res.curves.len()).map(|j| res.curve_euler(j)).collect();
            let report = json!({
                "schema_version": SCHEMA_VERSION,
                "input": {
                    "preset": preset,
                    "lines": config.lines.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                    "alphas": config.alphas.iter().map(crate::algebra::rational::serde_rat::to_value).collect::<Vec<_>>(),
                    "N": n,
                },
                "resolution": res,
                "euler": { "complement": res.complement_euler(), "curves": euler },
                "contribution": crate::algebra::rational::serde_rat::to_value(&value),
                "contribution_text": fmt_rat(&value),
            });
            Ok(with_expectation(report, expected))
        }
        Command::Hodge { source, params, specialize } => {
            let (germ, graph) = load(source, params)?;
            let zh = zeta_hodge(&graph);
            let poles: Vec<Value> = hodge_poles(&graph, &zh)?
                .into_iter()
                .map(|(p, order)| json!({ "location": crate::algebra::rational::serde_rat::to_value(&p), "order": order }))
                .collect();
            let top = zeta_d(&graph, 1);
            let mut specs = Vec::new();
            for t in specialize {
                let s0 = parse_rational(t)?;
                let value = hodge_specialize_top(&zh, &s0)?;
                let expected = top.eval(&s0);
                specs.push(json!({
                    "s": crate::algebra::rational::serde_rat::to_value(&s0),
                    "value": crate::algebra::rational::serde_rat::to_value(&value),
                    "matches_topological": expected.as_ref() == Some(&value),
                }));
            }
            let matched = specs.iter().all(|s| s["matches_topological"] == json!(true));
            let candidate_orders: Vec<Value> = crate::zeta::candidate_poles(&graph)
                .iter()
                .map(|p| Ok(json!({ "location": fmt_rat(p), "order": hodge_pole_order(&zh, p)? })))
                .collect::<Result<_>>()?;
            let report = json!({
                "schema_version": SCHEMA_VERSION,
                "input": germ.echo(),
                "hodge_zeta": zh,
                "text": zh.display(),
                "poles": poles,
                "candidate_orders": candidate_orders,
                "specializations": specs,
            });
            Ok(Outcome { code: if matched { 0 } else { 2 }, stdout: report_text(&report), stderr: String::new() })
        }
        Command::Verify { suite, seed, count } => {
            let report = run_suite(*suite, *seed, *count)?;
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "seed": seed,
                "report": report,
            });
            Ok(Outcome {
                code: if report.passed { 0 } else { 2 },
                stdout: report_text(&value),
                stderr: String::new(),
            })
        }
        Command::Sweep { family, range, n } => {
            let (a, b) = parse_range(range)?;
            let mut records: Vec<FamilyCheck> = Vec::new();
            let mut closed = Vec::new();
            for k in a..=b {
                let check = match family {
                    FamilyId::Y2xk => verify_y2xk(k)?,
                    FamilyId::X3y2xk => verify_x3y2xk(k)?,
                    FamilyId::Suspension => verify_suspension(k)?,
                    FamilyId::Threevar => verify_threevar(*n, k)?,
                };
                let (z, _) = family_zeta(*family, *n, k)?;
                closed.push(json!({ "k": k, "zeta": RatFunRecord::new(&z) }));
                records.push(check);
            }
            let passed = records.iter().all(FamilyCheck::passed);
            let report = json!({
                "schema_version": SCHEMA_VERSION,
                "family": family.name(),
                "n": n,
                "range": [a, b],
                "passed": passed,
                "closed_forms": closed,
                "checks": records,
            });
            Ok(Outcome { code: if passed { 0 } else { 2 }, stdout: report_text(&report), stderr: String::new() })
        }
    }
}

fn parse_range(text: &str) -> Result<(u64, u64)> {
    let bad = || Error::InvalidArgument(format!("bad range `{text}`, expected a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratfun_parsing() {
        let z = parse_ratfun("(4*s+5)/((s+1)*(6*s+5))").unwrap();
        assert_eq!(z, RatFun1::from_ints(&[5, 4], &[5, 11, 6]).unwrap());
        assert_eq!(parse_ratfun("1/(2*s+1)").unwrap(), RatFun1::from_ints(&[1], &[1, 2]).unwrap());
        assert_eq!(parse_ratfun("1/2*s").unwrap(), RatFun1::from_ints(&[0, 1], &[2]).unwrap());
    }

    #[test]
    fn seeds_and_ranges() {
        assert_eq!(parse_seed("0x2E7A_5EED").unwrap(), DEFAULT_SEED);
        assert_eq!(parse_seed("17").unwrap(), 17);
        assert_eq!(parse_range("5..16").unwrap(), (5, 16));
        assert!(parse_range("9..3").is_err());
    }

    #[test]
    fn exit_codes() {
        let ok = run_args(["topzeta", "lct", "--poly", "y^2+x^3", "--expect", "5/6"]);
        assert_eq!(ok.code, 0, "{}", ok.stderr);
        let wrong = run_args(["topzeta", "lct", "--poly", "y^2+x^3", "--expect", "4/5"]);
        assert_eq!(wrong.code, 2);
        let bad = run_args(["topzeta", "lct", "--poly", "y^2+"]);
        assert_eq!(bad.code, 1);
        let usage = run_args(["topzeta", "lct"]);
        assert_eq!(usage.code, 1);
    }
}
