//! Structured outcomes of verification runs and conjecture searches.
//!
//! A [`Report`] serializes to a single JSON object with the keys
//! `subject`, `params`, `bound`, `status`, an optional `witness`, and
//! `elapsed_ms`. Everything except `elapsed_ms` is a pure function of the
//! inputs, so [`Report::canonical_json`] is byte-stable across runs.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::rulesets::Position;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// A proven statement checked exhaustively up to the bound.
    Verified,
    /// An open statement with no counterexample up to the bound.
    ConsistentUpToBound,
    Counterexample,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::ConsistentUpToBound => "consistent-up-to-bound",
            Status::Counterexample => "counterexample",
        })
    }
}

/// Evidence attached to a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// First position (lexicographically) lying in exactly one of two g-sets.
    GSetMismatch {
        g: u32,
        position: Position,
        in_left: bool,
        in_right: bool,
    },
    /// A single nim-value that differs from the expected one.
    ValueMismatch {
        position: Position,
        expected: u32,
        actual: u32,
    },
    /// An integer covered `count` times by the two Beatty sequences.
    Coverage { value: u64, count: u32 },
    /// Index-wise pair whose coordinate distance exceeds the allowed deviation.
    Deviation {
        index: usize,
        left: Position,
        right: Position,
        deviation: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub subject: String,
    pub params: BTreeMap<String, u32>,
    pub bound: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Largest index-wise deviation, for closeness checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<u64>,
    /// Set when the checked claim is an empirical observation rather than a
    /// proven statement; a failure then reflects on the claim, not the code.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub soft: bool,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(subject: impl Into<String>, bound: u64) -> Self {
        Report {
            subject: subject.into(),
            params: BTreeMap::new(),
            bound,
            status: Status::Verified,
            witness: None,
            max_deviation: None,
            soft: false,
            elapsed_ms: 0.0,
        }
    }

    pub fn param(mut self, name: &str, value: u32) -> Self {
        self.params.insert(name.to_owned(), value);
        self
    }

    pub fn soft(mut self) -> Self {
        self.soft = true;
        self
    }

    /// Settles the status: `counterexample` when a witness exists, `success`
    /// otherwise. Keeps the witness/status invariant in one place.
    pub fn conclude(mut self, success: Status, witness: Option<Witness>) -> Self {
        debug_assert_ne!(success, Status::Counterexample);
        self.status = if witness.is_some() {
            Status::Counterexample
        } else {
            success
        };
        self.witness = witness;
        self
    }

    pub fn timed(mut self, started: Instant) -> Self {
        let micros = started.elapsed().as_micros() as f64;
        self.elapsed_ms = micros / 1000.0;
        self
    }

    pub fn is_success(&self) -> bool {
        self.status != Status::Counterexample
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }

    /// JSON without the runtime field.
    pub fn canonical_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serialization is infallible");
        if let Some(map) = value.as_object_mut() {
            map.remove("elapsed_ms");
        }
        value.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_forces_counterexample() {
        let r = Report::new("x", 5).conclude(
            Status::Verified,
            Some(Witness::Coverage { value: 3, count: 2 }),
        );
        assert_eq!(r.status, Status::Counterexample);
        assert!(!r.is_success());

        let r = Report::new("x", 5).conclude(Status::ConsistentUpToBound, None);
        assert_eq!(r.status, Status::ConsistentUpToBound);
        assert!(r.witness.is_none());
    }

    #[test]
    fn json_shape() {
        let r = Report::new("thm3", 100)
            .param("k", 2)
            .conclude(Status::Verified, None);
        let json = r.canonical_json();
        assert_eq!(
            json,
            r#"{"bound":100,"params":{"k":2},"status":"verified","subject":"thm3"}"#
        );
        let full = r.to_json();
        assert!(full.starts_with(r#"{"subject":"thm3","params":{"k":2},"bound":100,"status":"verified","#));
        assert!(full.contains("\"elapsed_ms\""));
        assert!(!full.contains("witness"));
        assert!(!full.contains("soft"));
    }
}
