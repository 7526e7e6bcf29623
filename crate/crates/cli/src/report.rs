//! Command results and their two renderings.

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// The data of one command result. `fields` is what the JSON object
/// holds; `lines` is the same data laid out for reading.
#[derive(Debug, Default)]
pub struct Report {
    fields: Map<String, Value>,
    lines: Vec<String>,
    /// False when a mathematical check came out negative.
    pub ok: bool,
}

impl Report {
    pub fn new() -> Self {
        Report {
            ok: true,
            ..Default::default()
        }
    }

    /// Adds a field that prints as `key: value` in text mode.
    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        let value = value.into();
        self.lines.push(format!("{}: {}", key, plain(&value)));
        self.fields.insert(key.to_string(), value);
        self
    }

    /// Adds a field whose text rendering is given explicitly.
    pub fn field_as(&mut self, key: &str, value: impl Into<Value>, text: Vec<String>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self.lines.extend(text);
        self
    }

    /// Merges every key of a serialized object as a plain field.
    pub fn fields_from(&mut self, value: Value) -> &mut Self {
        if let Value::Object(obj) = value {
            for (k, v) in obj {
                self.field(&k, v);
            }
        }
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => Value::Object(self.fields.clone()).to_string(),
            Format::Text => self.lines.join("\n"),
        }
    }
}

/// Scalars without quotes, lists comma-separated, `none` for null.
fn plain(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(plain).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}
