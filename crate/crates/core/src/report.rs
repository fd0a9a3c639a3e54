//! Pass/fail reports produced by the verification routines.

use std::collections::BTreeMap;

use serde::Serialize;

/// One named identity and whether it held on every sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A verification report:
/// `{"suite": …, <params>…, "checks": [{"name": …, "pass": …}, …]}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    #[serde(flatten)]
    pub params: BTreeMap<String, serde_json::Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), params: BTreeMap::new(), checks: Vec::new() }
    }

    pub fn param<V: Into<serde_json::Value>>(mut self, key: &str, v: V) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    pub fn push(&mut self, name: &str, pass: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.to_string(), pass, detail });
    }

    /// Records a check from per-sample outcomes; errors count as failures and
    /// the first failing sample is noted.
    pub fn push_samples<E: std::fmt::Display>(&mut self, name: &str, outcomes: Vec<Result<bool, E>>) {
        let failure = outcomes.iter().enumerate().find_map(|(i, o)| match o {
            Ok(true) => None,
            Ok(false) => Some(format!("sample {i} failed")),
            Err(e) => Some(format!("sample {i}: {e}")),
        });
        self.push(name, failure.is_none(), failure);
    }

    /// Appends all checks of another report, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = Report::new("daha").param("n", 2).param("seed", 42);
        r.push("braid", true, None);
        let j = r.to_json();
        assert_eq!(j["suite"], "daha");
        assert_eq!(j["n"], 2);
        assert_eq!(j["checks"][0]["name"], "braid");
        assert_eq!(j["checks"][0]["pass"], true);
        assert!(j["checks"][0].get("detail").is_none());
        assert!(r.passed());
    }

    #[test]
    fn sample_failures_are_located() {
        let mut r = Report::new("x");
        r.push_samples::<String>("id", vec![Ok(true), Ok(false), Err("boom".into())]);
        assert!(!r.passed());
        assert_eq!(r.checks[0].detail.as_deref(), Some("sample 1 failed"));
    }
}
