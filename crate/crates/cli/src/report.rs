//! Command reports, rendered as human text or as deterministic JSON.

use std::collections::BTreeMap;

use hom_embed::cohomology::CohomologySummary;
use hom_embed::{CheckReport, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, EXIT_FAIL, EXIT_PASS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
}

/// A violated identity with a 1-based index tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureEntry {
    pub verdict: String,
    pub law: String,
    pub tuple: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorEntry {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub verdicts: Vec<Verdict>,
    pub failures: Vec<FailureEntry>,
    pub cohomology: Vec<CohomologySummary>,
    pub notes: Vec<String>,
    pub outputs: Vec<String>,
    pub error: Option<ErrorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn verdict(&mut self, name: &str, passed: bool) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            passed,
        });
    }

    /// Records a checker outcome as one verdict plus its failures.
    pub fn check(&mut self, name: &str, report: CheckReport) {
        let mut report = report;
        report.sort();
        self.verdict(name, report.passed());
        for f in report.failures {
            self.failures.push(FailureEntry {
                verdict: name.to_string(),
                law: f.law,
                tuple: f.tuple.iter().map(|i| i + 1).collect(),
                lhs: f.lhs,
                rhs: f.rhs,
            });
        }
        self.notes.extend(report.notes);
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn fail_with(&mut self, err: &CliError) {
        self.error = Some(ErrorEntry {
            kind: err.kind().to_string(),
            message: err.to_string(),
        });
    }

    pub fn exit_code(&self) -> i32 {
        if let Some(e) = &self.error {
            return match e.kind.as_str() {
                "input" => crate::error::EXIT_INPUT,
                "capacity" => crate::error::EXIT_CAPACITY,
                _ => EXIT_FAIL,
            };
        }
        if self.verdicts.iter().all(|v| v.passed) {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn to_machine(&self) -> String {
        crate::json::to_string(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let args: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("{} {}\n", self.command, args.join(" ")));
        for v in &self.verdicts {
            let mark = if v.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {}\n", v.name));
        }
        for f in &self.failures {
            let t: Vec<String> = f.tuple.iter().map(usize::to_string).collect();
            out.push_str(&format!(
                "    {} / {} at ({}): lhs = {}, rhs = {}\n",
                f.verdict,
                f.law,
                t.join(","),
                vector_text(&f.lhs),
                vector_text(&f.rhs)
            ));
        }
        for c in &self.cohomology {
            out.push_str(&format!(
                "  degree {}: dim C = {}, dim Z = {}, dim B = {}, dim H = {}\n",
                c.degree, c.dim_cochain, c.dim_cocycle, c.dim_coboundary, c.dim_h
            ));
            for w in &c.warnings {
                out.push_str(&format!("    warning: {w}\n"));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        for o in &self.outputs {
            out.push_str(&format!("  wrote {o}\n"));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("  error ({}): {}\n", e.kind, e.message));
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("  time: {t:.3} ms\n"));
        }
        out
    }
}

fn vector_text(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}
