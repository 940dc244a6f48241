//! Command implementations behind the `ratsum` binary. Each returns the text
//! to print and the process exit code so they can be tested in-process.

pub mod report;

use ratsum_core::arith::int;
use ratsum_core::transforms::split_at;
use ratsum_core::{
    check_identity, decide_traced, direct_sum, m_section, parse, psi_norm, reflect_full, BiRat, EvalConfig,
    Identity, Verdict,
};
use serde_json::json;

pub use report::RunReport;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const ERROR: i32 = 1;
    pub const UNSUPPORTED: i32 = 2;
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: exit::OK }
    }

    fn error(message: String) -> Self {
        Output { stdout: String::new(), stderr: format!("error: {message}"), code: exit::ERROR }
    }
}

/// Largest number of digits `eval-psi` prints; evaluation is in `f64`.
pub const MAX_PRECISION: usize = 15;

/// Runs the decision procedure and builds the report. `verify` asks for that
/// many exact comparisons from `valid_from` on when the sum is rational.
pub fn sum_report(expr: &str, verify: u64, trace: bool) -> (RunReport, i32) {
    let mut report = RunReport { input: expr.to_string(), ..RunReport::default() };
    let r = match parse(expr) {
        Ok(r) => r,
        Err(e) => {
            report.status = "error".into();
            report.reason = Some(e.to_string());
            return (report, exit::ERROR);
        }
    };
    let (verdict, stages) = match decide_traced(&r) {
        Ok(v) => v,
        Err(e) => {
            report.status = "error".into();
            report.reason = Some(e.to_string());
            return (report, exit::ERROR);
        }
    };
    report.status = verdict.status().as_str().to_string();
    if trace {
        report.trace = Some(stages.iter().map(Into::into).collect());
    }
    let code = match &verdict {
        Verdict::Rational { closed_form, valid_from } => {
            report.closed_form = Some(closed_form.to_string());
            report.valid_from = Some(*valid_from);
            if verify > 0 {
                report.verify = Some(verify_entries(&r, closed_form, *valid_from, verify));
            }
            exit::OK
        }
        Verdict::NotRational { residual, .. } | Verdict::Unknown { residual } => {
            report.set_residual(residual);
            exit::OK
        }
        Verdict::Unsupported { reason } => {
            report.reason = Some(reason.clone());
            exit::UNSUPPORTED
        }
    };
    (report, code)
}

/// Compares against direct summation at the first `count` integers from
/// `from` where both sides are defined.
fn verify_entries(r: &BiRat, closed_form: &ratsum_core::RatFn, from: u64, count: u64) -> Vec<report::VerifyEntry> {
    let mut out = Vec::new();
    let mut n = from;
    // singular points are isolated, so this terminates quickly
    while (out.len() as u64) < count && n < from + 64 * count + 64 {
        if let (Ok(oracle), Some(value)) = (direct_sum(r, n), closed_form.eval(&int(n as i64))) {
            out.push(report::VerifyEntry {
                n,
                matches: oracle == value,
                oracle: oracle.to_string(),
                value: value.to_string(),
            });
        }
        n += 1;
    }
    out
}

pub fn cmd_sum(expr: &str, json: bool, verify: u64, trace: bool) -> Output {
    let (report, code) = sum_report(expr, verify, trace);
    let stdout = if json { serde_json::to_string_pretty(&report).expect("serializable") } else { report.to_text() };
    Output { stdout, stderr: String::new(), code }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    Reflect,
    MSection(u32),
    Split(u32),
}

pub fn cmd_transform(expr: &str, which: Transform, json: bool) -> Output {
    let r = match parse(expr) {
        Ok(r) => r,
        Err(e) => return Output::error(e.to_string()),
    };
    let value = match which {
        Transform::Reflect => json!({
            "input": expr,
            "transform": "reflect",
            "summand": reflect_full(&r).to_string(),
        }),
        Transform::MSection(m) => match m_section(&r, m) {
            Ok(sec) => json!({
                "input": expr,
                "transform": "msection",
                "modulus": m,
                "substitution": format!("n -> {m}*n"),
                "parts": sec.parts.iter().enumerate()
                    .map(|(res, p)| json!({"residue": res, "summand": p.to_string()}))
                    .collect::<Vec<_>>(),
            }),
            Err(e) => return Output::error(e.to_string()),
        },
        Transform::Split(m) => {
            let (head, tail) = split_at(&r, m);
            let head: Vec<Option<String>> = head.iter().map(|h| h.as_ref().map(ToString::to_string)).collect();
            json!({
                "input": expr,
                "transform": "split",
                "head": head,
                "tail": tail.to_string(),
            })
        }
    };
    if json {
        return Output::ok(serde_json::to_string_pretty(&value).expect("serializable"));
    }
    let text = match which {
        Transform::Reflect => value["summand"].as_str().unwrap_or_default().to_string(),
        Transform::MSection(m) => {
            let mut lines = vec![format!("sum to {m}*n = sum over residues r of parts summed to n (n -> {m}*n)")];
            for p in value["parts"].as_array().into_iter().flatten() {
                lines.push(format!("r = {}: {}", p["residue"], p["summand"].as_str().unwrap_or_default()));
            }
            lines.join("\n")
        }
        Transform::Split(_) => {
            let head: Vec<String> = value["head"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|h| h.as_str().unwrap_or("undefined").to_string())
                .collect();
            format!("head: [{}]\ntail: {}", head.join(", "), value["tail"].as_str().unwrap_or_default())
        }
    };
    Output::ok(text)
}

/// Accepts decimals and exact fractions such as `-7/3`.
fn parse_real(x: &str) -> Option<f64> {
    if let Some((p, q)) = x.split_once('/') {
        let (p, q): (f64, f64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
        return (q != 0.0).then_some(p / q);
    }
    x.trim().parse().ok()
}

pub fn cmd_eval_psi(s: u32, x: &str, precision: usize) -> Output {
    if precision > MAX_PRECISION {
        return Output::error(format!("precision {precision} exceeds {MAX_PRECISION} digits"));
    }
    let Some(xv) = parse_real(x) else {
        return Output::error(format!("cannot parse argument {x:?}"));
    };
    match psi_norm(s, xv, &EvalConfig::default()) {
        Ok(v) => Output::ok(format!("{v:.precision$}")),
        Err(e) => Output::error(e.to_string()),
    }
}

/// Identity residuals above this count as failures.
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

pub fn cmd_check_identities(points: usize) -> Output {
    let cfg = EvalConfig::default();
    let mut lines = Vec::new();
    let mut failed = false;
    for which in [Identity::Shift, Identity::Reflection, Identity::Multiplication] {
        match check_identity(which, &[0, 1, 2], points, &cfg) {
            Ok(rep) => {
                let pass = rep.max_abs_error <= IDENTITY_TOLERANCE;
                failed |= !pass;
                lines.push(format!(
                    "{}: max abs error {:.3e} over {} points [{}]",
                    which.as_str(),
                    rep.max_abs_error,
                    rep.points,
                    if pass { "PASS" } else { "FAIL" }
                ));
            }
            Err(e) => return Output::error(e.to_string()),
        }
    }
    Output { stdout: lines.join("\n"), stderr: String::new(), code: if failed { exit::ERROR } else { exit::OK } }
}

