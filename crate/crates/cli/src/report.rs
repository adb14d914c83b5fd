use hyprank::criteria::Check;
use hyprank::{RationalMatrix, RationalVector};
use serde_json::{json, Map, Value};

/// Machine-readable result of one command. Serialized with keys in
/// insertion order so output is byte-stable.
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub verdict: String,
    pub checks: Vec<Check>,
    pub witnesses: Vec<Value>,
    pub details: Value,
}

impl Report {
    pub fn new(command: &'static str, verdict: impl Into<String>) -> Self {
        Self {
            command,
            inputs: Map::new(),
            verdict: verdict.into(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            details: Value::Object(Map::new()),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "checks": self.checks.iter().map(check_json).collect::<Vec<_>>(),
            "witnesses": self.witnesses,
            "details": self.details,
        })
    }
}

pub fn check_json(check: &Check) -> Value {
    json!({ "name": check.name, "lhs": check.lhs, "rhs": check.rhs, "passed": check.passed })
}

pub fn vector_json(v: &RationalVector) -> Value {
    Value::Array(v.coords().iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn matrix_json(m: &RationalMatrix) -> Value {
    Value::Array(m.row_vectors().iter().map(vector_json).collect())
}

pub fn check_line(check: &Check, relation: &str) -> String {
    let status = if check.passed { "pass" } else { "FAIL" };
    format!("  {:<12} {} {} {}  {}", check.name, check.lhs, relation, check.rhs, status)
}
