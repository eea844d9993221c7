//! Command-line front end: point/batch evaluation, diagonal pole
//! scanning, representation benchmarking, and self-tests.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::json;

use tornheim::bench::run_bench;
use tornheim::selftest;
use tornheim::series::{eval_s1, eval_s2, eval_s3, eval_s4, EvalConfig, SeriesValue, TriplePoint};
use tornheim::tornheim::{eval_t, scan_diag_poles, DiagPole, Identity, Method};
use tornheim::EvalError;

#[derive(Parser)]
#[command(name = "tornheim", version, about = "Tornheim double zeta evaluator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FnName {
    T,
    S1,
    S2,
    S3,
    S4,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval {
        #[arg(long = "fn", value_enum, default_value = "t")]
        function: FnName,
        /// Complex literal: <real> or <real>+<real>i / <real>-<real>i
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        u: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 120)]
        max_order: usize,
        /// auto, or a fixed recombination i..viii (T only)
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Evaluate every point record in a CSV or JSON-lines file.
    Batch {
        #[arg(long)]
        input: String,
        #[arg(long)]
        output: String,
        #[arg(long = "fn", value_enum, default_value = "t")]
        function: FnName,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Scan the real diagonal for simple poles of T(s,s,s).
    ScanPoles {
        #[arg(long, default_value_t = -4.0)]
        min: f64,
        #[arg(long, default_value_t = 1.0)]
        max: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long, default_value_t = 1e-3)]
        radius: f64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Compare term counts of the eta-based and legacy S1/S2 series.
    Bench {
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// CSV output path; stdout when omitted
        #[arg(long)]
        output: Option<String>,
    },
    /// Run the built-in verification suites.
    Selftest,
}

/// Grammar: <real>, or <real>+<real>i / <real>-<real>i (decimal or
/// scientific notation).
fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = t.strip_suffix('i') {
        // split at the last +/- that is not a leading sign or exponent sign
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
                split = Some(i);
                break;
            }
        }
        let i = split.ok_or_else(|| format!("missing real part in '{t}'"))?;
        let re: f64 = body[..i]
            .parse()
            .map_err(|_| format!("bad real part '{}' in '{t}'", &body[..i]))?;
        let im: f64 = body[i..]
            .parse()
            .map_err(|_| format!("bad imaginary part '{}' in '{t}'", &body[i..]))?;
        Ok(Complex64::new(re, im))
    } else {
        let re: f64 = t.parse().map_err(|_| format!("bad real literal '{t}'"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

fn parse_method(text: &str) -> Result<Method, String> {
    let ids = [
        ("i", Identity::I),
        ("ii", Identity::II),
        ("iii", Identity::III),
        ("iv", Identity::IV),
        ("v", Identity::V),
        ("vi", Identity::VI),
        ("vii", Identity::VII),
        ("viii", Identity::VIII),
    ];
    if text.eq_ignore_ascii_case("auto") {
        return Ok(Method::Auto);
    }
    for (name, id) in ids {
        if text.eq_ignore_ascii_case(name) {
            return Ok(Method::Fixed(id));
        }
    }
    Err(format!("unknown method '{text}' (expected auto or i..viii)"))
}

fn status_of(e: &EvalError) -> (&'static str, u8) {
    match e {
        EvalError::SingularPoint(_) | EvalError::Pole { .. } => ("singular", 2),
        EvalError::Convergence { .. } => ("convergence", 3),
        _ => ("error", 1),
    }
}

fn evaluate(
    function: FnName,
    p: &TriplePoint,
    cfg: &EvalConfig,
    method: Method,
) -> Result<(SeriesValue, &'static str), EvalError> {
    match function {
        FnName::T => eval_t(p, cfg, method).map(|e| (e.result, e.method)),
        FnName::S1 => eval_s1(p, cfg).map(|r| (r, "series")),
        FnName::S2 => eval_s2(p, cfg).map(|r| (r, "series")),
        FnName::S3 => eval_s3(p, cfg).map(|r| (r, "series")),
        FnName::S4 => eval_s4(p, cfg).map(|r| (r, "series")),
    }
}

fn print_eval(format: Format, outcome: &Result<(SeriesValue, &'static str), EvalError>) -> u8 {
    match outcome {
        Ok((v, method)) => {
            match format {
                Format::Human => {
                    println!("value  = {:.17e} {:+.17e}i", v.value.re, v.value.im);
                    println!("err    = {:.3e}", v.err_estimate);
                    println!("terms  = {}", v.terms_used);
                    println!("method = {method}");
                }
                Format::Json => {
                    let rec = json!({
                        "value": {"re": v.value.re, "im": v.value.im},
                        "err": v.err_estimate,
                        "terms": v.terms_used,
                        "method": method,
                        "status": "ok",
                    });
                    println!("{rec}");
                }
                Format::Csv => {
                    println!("value_re,value_im,err,terms,method,status");
                    println!(
                        "{:.17e},{:.17e},{:.3e},{},{method},ok",
                        v.value.re, v.value.im, v.err_estimate, v.terms_used
                    );
                }
            }
            0
        }
        Err(e) => {
            let (status, code) = status_of(e);
            match format {
                Format::Human => eprintln!("{status}: {e}"),
                Format::Json => println!("{}", json!({"status": status, "message": e.to_string()})),
                Format::Csv => {
                    println!("value_re,value_im,err,terms,method,status");
                    println!(",,,,,{status}");
                    eprintln!("{status}: {e}");
                }
            }
            code
        }
    }
}

struct BatchRow {
    label: String,
    point: Result<TriplePoint, String>,
}

fn parse_batch(input: &str) -> Result<(Vec<BatchRow>, bool), String> {
    let mut rows = Vec::new();
    let mut jsonl = false;
    for (idx, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('{') {
            jsonl = true;
            let row = (|| -> Result<BatchRow, String> {
                let v: serde_json::Value =
                    serde_json::from_str(line).map_err(|e| format!("line {}: {e}", idx + 1))?;
                let label = v
                    .get("label")
                    .and_then(|x| x.as_str())
                    .unwrap_or(&format!("line{}", idx + 1))
                    .to_string();
                let field = |name: &str| -> Result<Complex64, String> {
                    let raw = v
                        .get(name)
                        .ok_or_else(|| format!("line {}: missing field {name}", idx + 1))?;
                    match raw {
                        serde_json::Value::String(s) => parse_complex(s),
                        serde_json::Value::Number(n) => Ok(Complex64::new(
                            n.as_f64().ok_or_else(|| format!("line {}: bad number", idx + 1))?,
                            0.0,
                        )),
                        _ => Err(format!("line {}: field {name} must be a literal", idx + 1)),
                    }
                };
                let point = (|| {
                    Ok(TriplePoint::new(field("s")?, field("t")?, field("u")?))
                })();
                Ok(BatchRow { label, point })
            })();
            match row {
                Ok(r) => rows.push(r),
                Err(e) => rows.push(BatchRow {
                    label: format!("line{}", idx + 1),
                    point: Err(e),
                }),
            }
            continue;
        }
        // CSV: label,s_re,s_im,t_re,t_im,u_re,u_im
        let fields: Vec<&str> = line.split(',').map(|f| f.trim()).collect();
        if idx == 0 && fields.first() == Some(&"label") {
            continue; // header
        }
        let label = fields.first().unwrap_or(&"").to_string();
        let point = (|| -> Result<TriplePoint, String> {
            if fields.len() != 7 {
                return Err(format!(
                    "line {}: expected 7 fields, got {}",
                    idx + 1,
                    fields.len()
                ));
            }
            let num = |j: usize| -> Result<f64, String> {
                fields[j]
                    .parse()
                    .map_err(|_| format!("line {}: bad number '{}'", idx + 1, fields[j]))
            };
            Ok(TriplePoint::new(
                Complex64::new(num(1)?, num(2)?),
                Complex64::new(num(3)?, num(4)?),
                Complex64::new(num(5)?, num(6)?),
            ))
        })();
        rows.push(BatchRow { label, point });
    }
    Ok((rows, jsonl))
}

fn cmd_batch(input: &str, output: &str, function: FnName, tol: f64) -> Result<(), String> {
    let text = std::fs::read_to_string(input).map_err(|e| format!("read {input}: {e}"))?;
    let (rows, jsonl) = parse_batch(&text)?;
    let cfg = EvalConfig::with_tol(tol);
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Ok(n) = std::env::var("TORNHEIM_THREADS") {
            if let Ok(n) = n.parse::<usize>() {
                builder = builder.num_threads(n.max(1));
            }
        }
        builder.build().map_err(|e| e.to_string())?
    };
    let results: Vec<String> = pool.install(|| {
        rows.par_iter()
            .map(|row| {
                let outcome = row
                    .point
                    .as_ref()
                    .map_err(|e| e.clone())
                    .and_then(|p| evaluate(function, p, &cfg, Method::Auto).map_err(|e| e.to_string()));
                if jsonl {
                    match outcome {
                        Ok((v, method)) => json!({
                            "label": row.label,
                            "value": {"re": v.value.re, "im": v.value.im},
                            "err": v.err_estimate,
                            "terms": v.terms_used,
                            "method": method,
                            "status": "ok",
                        })
                        .to_string(),
                        Err(msg) => json!({
                            "label": row.label,
                            "status": "error",
                            "message": msg,
                        })
                        .to_string(),
                    }
                } else {
                    match outcome {
                        Ok((v, method)) => format!(
                            "{},{:.17e},{:.17e},{:.3e},{},{method},ok",
                            row.label, v.value.re, v.value.im, v.err_estimate, v.terms_used
                        ),
                        Err(msg) => {
                            format!("{},,,,,,\"{}\"", row.label, msg.replace('"', "'"))
                        }
                    }
                }
            })
            .collect()
    });
    let mut out = String::new();
    if !jsonl {
        out.push_str("label,value_re,value_im,err,terms,method,status\n");
    }
    for r in results {
        out.push_str(&r);
        out.push('\n');
    }
    std::fs::write(output, out).map_err(|e| format!("write {output}: {e}"))?;
    Ok(())
}

fn print_poles(format: Format, hits: &[DiagPole]) {
    match format {
        Format::Human => {
            if hits.is_empty() {
                println!("no poles detected");
            }
            for h in hits {
                println!(
                    "pole at s = {:.6}: residue {:.12e} {:+.12e}i (two-radius spread {:.2e})",
                    h.location, h.residue.re, h.residue.im, h.spread
                );
            }
        }
        Format::Json => {
            let list: Vec<_> = hits
                .iter()
                .map(|h| {
                    json!({
                        "location": h.location,
                        "residue": {"re": h.residue.re, "im": h.residue.im},
                        "spread": h.spread,
                    })
                })
                .collect();
            println!("{}", json!({ "poles": list }));
        }
        Format::Csv => {
            println!("location,residue_re,residue_im,spread");
            for h in hits {
                println!(
                    "{:.6},{:.12e},{:.12e},{:.2e}",
                    h.location, h.residue.re, h.residue.im, h.spread
                );
            }
        }
    }
}

fn cmd_bench(tol: f64, output: Option<&str>) -> Result<(), String> {
    let csv = run_bench(tol).map_err(|e| e.to_string())?.to_csv();
    match output {
        Some(path) => std::fs::write(path, csv).map_err(|e| format!("write {path}: {e}"))?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap help/version are not errors
            let kind = e.kind();
            let _ = e.print();
            return if kind == clap::error::ErrorKind::DisplayHelp
                || kind == clap::error::ErrorKind::DisplayVersion
            {
                0
            } else {
                1
            };
        }
    };
    match cli.command {
        Command::Eval {
            function,
            s,
            t,
            u,
            tol,
            max_order,
            method,
            format,
        } => {
            let parsed = (|| -> Result<(TriplePoint, Method), String> {
                let p = TriplePoint::new(parse_complex(&s)?, parse_complex(&t)?, parse_complex(&u)?);
                Ok((p, parse_method(&method)?))
            })();
            let (p, m) = match parsed {
                Ok(v) => v,
                Err(msg) => {
                    eprintln!("usage error: {msg}");
                    return 1;
                }
            };
            let mut cfg = EvalConfig::with_tol(tol);
            cfg.max_order = max_order;
            print_eval(format, &evaluate(function, &p, &cfg, m))
        }
        Command::Batch {
            input,
            output,
            function,
            tol,
        } => match cmd_batch(&input, &output, function, tol) {
            Ok(()) => 0,
            Err(msg) => {
                eprintln!("error: {msg}");
                1
            }
        },
        Command::ScanPoles {
            min,
            max,
            step,
            radius,
            format,
        } => match scan_diag_poles(min, max, step, radius, &EvalConfig::default())
            .map_err(|e| e.to_string())
        {
            Ok(hits) => {
                print_poles(format, &hits);
                0
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                1
            }
        },
        Command::Bench { tol, output } => match cmd_bench(tol, output.as_deref()) {
            Ok(()) => 0,
            Err(msg) => {
                eprintln!("error: {msg}");
                1
            }
        },
        Command::Selftest => {
            let mut all_ok = true;
            for s in selftest::run_all() {
                let tag = if s.passed { "PASS" } else { "FAIL" };
                println!("{tag} {}: {}", s.name, s.detail);
                all_ok &= s.passed;
            }
            let _ = std::io::stdout().flush();
            if all_ok {
                0
            } else {
                1
            }
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run())
}
