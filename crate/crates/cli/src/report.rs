//! Command reports, rendered either as text or as deterministic JSON.

use std::str::FromStr;

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error(String),
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub status: Status,
    /// 0 success, 1 verification mismatch, 2 input error, 3 budget exceeded.
    pub exit_code: u8,
    /// Human-readable lines, printed without `--json`. Errors go to stderr.
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Map<String, Value>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results: Map::new(),
            status: Status::Ok,
            exit_code: 0,
            lines: Vec::new(),
        }
    }

    pub fn fail(mut self, exit_code: u8, message: impl Into<String>) -> Self {
        self.status = Status::Error(message.into());
        self.exit_code = exit_code;
        self
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn to_json_value(&self) -> Value {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.clone()));
        root.insert("inputs".into(), Value::Object(self.inputs.clone()));
        root.insert("results".into(), Value::Object(self.results.clone()));
        match &self.status {
            Status::Ok => {
                root.insert("status".into(), Value::String("ok".into()));
            }
            Status::Error(message) => {
                root.insert("status".into(), Value::String("error".into()));
                root.insert("message".into(), Value::String(message.clone()));
            }
        }
        Value::Object(root)
    }

    /// Keys are sorted at every level and integers are written in full.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_json_value()).expect("serializable");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

/// An exact JSON integer from any decimal rendering.
pub fn integer(n: impl ToString) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn object<const K: usize>(entries: [(&str, Value); K]) -> Value {
    Value::Object(
        entries
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    )
}
