//! Outcome reporting for verification runs.

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Which plane a point set lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Plane {
    /// The grid plane with 4/8-adjacency.
    Z2,
    /// The Khalimsky plane.
    K2,
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Plane::Z2 => write!(f, "Z2"),
            Plane::K2 => write!(f, "K2"),
        }
    }
}

/// A point set participating in a counterexample, tagged with its role.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct LabeledSet {
    pub label: String,
    pub plane: Plane,
    pub points: Vec<(i32, i32)>,
}

/// One failing case of a verification suite, reported verbatim.
///
/// Ordering is by the input sets first, so reducing a run to its
/// minimum counterexample is independent of execution order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: Vec<LabeledSet>,
    pub description: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.description)?;
        for set in &self.inputs {
            write!(f, "  {} ({}):", set.label, set.plane)?;
            for (x, y) in &set.points {
                write!(f, " ({x}, {y})")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "  expected: {}", self.expected)?;
        write!(f, "  actual:   {}", self.actual)
    }
}

/// Outcome of one verification suite run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Which suite produced this report.
    pub suite: String,
    /// Inputs the run looked at (generator outputs, sampled sets, pairs).
    pub cases_examined: u64,
    /// Inputs that met the statement's hypothesis and were checked.
    pub cases_checked: u64,
    /// True exactly when no counterexample was found.
    pub passed: bool,
    /// The canonically smallest failing case, when one exists.
    pub first_counterexample: Option<Counterexample>,
    /// Informational remarks (hypothesis tallies, exclusions, extras).
    pub notes: Vec<String>,
    /// Wall-clock duration of the run in milliseconds.
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn elapsed(&self) -> Duration {
        Duration::from_millis(self.elapsed_ms)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} ({} cases examined, {} checked, {} ms)",
            self.suite,
            if self.passed { "passed" } else { "FAILED" },
            self.cases_examined,
            self.cases_checked,
            self.elapsed_ms
        )?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        if let Some(cex) = &self.first_counterexample {
            writeln!(f, "  first counterexample:")?;
            for line in cex.to_string().lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}
