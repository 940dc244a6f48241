//! JSON-serializable run reports.

use ratsum_core::{PGExpr, TraceStage};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualTerm {
    pub coef: String,
    pub order: u32,
    pub arg: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogEntry {
    pub prime: u64,
    pub coef: String,
}

/// One comparison of the closed form against exact direct summation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyEntry {
    pub n: u64,
    pub oracle: String,
    pub value: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub stage: String,
    pub detail: String,
}

impl From<&TraceStage> for TraceEntry {
    fn from(t: &TraceStage) -> Self {
        TraceEntry { stage: t.stage.to_string(), detail: t.detail.clone() }
    }
}

/// Outcome of `ratsum sum`. Optional fields are omitted from JSON when
/// absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub input: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid_from: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<ResidualTerm>>,
    /// Full rendering of the residual, rational part included.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub logs: Option<Vec<LogEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<Vec<VerifyEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl RunReport {
    pub fn set_residual(&mut self, e: &PGExpr) {
        let mut e = e.clone();
        e.canonicalize();
        self.residual = Some(
            e.pg_terms
                .iter()
                .map(|t| ResidualTerm { coef: t.coef.to_string(), order: t.order, arg: t.arg.to_string() })
                .collect(),
        );
        if !e.log_terms.is_empty() {
            self.logs = Some(e.log_terms.iter().map(|l| LogEntry { prime: l.prime, coef: l.coef.to_string() }).collect());
        }
        self.residual_text = Some(e.to_string());
    }

    /// Line-oriented rendering for text mode.
    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("input: {}", self.input), format!("status: {}", self.status)];
        if let Some(cf) = &self.closed_form {
            lines.push(format!("closed_form: {cf}"));
        }
        if let Some(v) = self.valid_from {
            lines.push(format!("valid_from: {v}"));
        }
        if let Some(r) = &self.residual_text {
            lines.push(format!("residual: {r}"));
        }
        if let Some(reason) = &self.reason {
            lines.push(format!("reason: {reason}"));
        }
        if let Some(entries) = &self.verify {
            let ok = entries.iter().filter(|e| e.matches).count();
            lines.push(format!("verify: {ok}/{} match", entries.len()));
            for e in entries {
                let mark = if e.matches { "ok" } else { "MISMATCH" };
                lines.push(format!("  n = {}: direct {} closed form {} {mark}", e.n, e.oracle, e.value));
            }
        }
        if let Some(trace) = &self.trace {
            lines.push("trace:".to_string());
            for t in trace {
                lines.push(format!("  [{}] {}", t.stage, t.detail));
            }
        }
        lines.join("\n")
    }
}
