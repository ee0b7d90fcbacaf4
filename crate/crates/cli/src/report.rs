use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{Map, Value};
use std::time::Instant;

/// One named verification attached to a report.
#[derive(Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// The machine-readable result of one command. Serializes identically
/// across runs for identical inputs; only `timing_ms` varies.
#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub n: u64,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
    #[serde(skip)]
    started: Instant,
}

impl Report {
    pub fn new(command: &str, n: usize) -> Self {
        Report {
            command: command.to_string(),
            n: n as u64,
            inputs: Map::new(),
            results: Map::new(),
            checks: Vec::new(),
            timing_ms: 0,
            started: Instant::now(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    /// Large integers go out as decimal strings so consumers keep precision.
    pub fn result_int(&mut self, key: &str, value: &BigInt) {
        self.result(key, value.to_string());
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.to_string(),
        });
    }

    pub fn finish(&mut self) {
        self.timing_ms = self.started.elapsed().as_millis() as u64;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} (n = {})\n", self.command, self.n);
        if !self.inputs.is_empty() {
            out.push_str("inputs:\n");
            for (k, v) in &self.inputs {
                out.push_str(&format!("  {k} = {}\n", render(v)));
            }
        }
        out.push_str("results:\n");
        for (k, v) in &self.results {
            out.push_str(&format!("  {k} = {}\n", render(v)));
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                let mark = if c.pass { "pass" } else { "FAIL" };
                if c.detail.is_empty() {
                    out.push_str(&format!("  [{mark}] {}\n", c.name));
                } else {
                    out.push_str(&format!("  [{mark}] {}: {}\n", c.name, c.detail));
                }
            }
        }
        out.push_str(&format!("timing_ms: {}\n", self.timing_ms));
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => serde_json::to_string(other).expect("value serializes"),
    }
}
