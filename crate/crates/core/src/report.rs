use serde::{Deserialize, Serialize};

use crate::linalg::Vector;

/// One violated identity instance: the law, the basis-index tuple it was
/// evaluated on (0-based), and both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub law: String,
    pub tuple: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Outcome of an axiom checker. Passes iff there are no failures; `notes`
/// carry informational remarks that never affect the verdict.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records a failure when the two sides differ.
    pub fn expect_eq(&mut self, law: &str, tuple: &[usize], lhs: Vector, rhs: Vector) {
        if lhs != rhs {
            self.failures.push(Failure {
                law: law.to_string(),
                tuple: tuple.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn failures_for<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Failure> + 'a {
        self.failures.iter().filter(move |f| f.law == law)
    }

    /// Sorts failures by (law, tuple) so reports are reproducible regardless
    /// of evaluation order.
    pub fn sort(&mut self) {
        self.failures
            .sort_by(|a, b| a.law.cmp(&b.law).then_with(|| a.tuple.cmp(&b.tuple)));
    }
}
