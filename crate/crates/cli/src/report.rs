//! Command reports and the exit-code contract.

use serde_json::{json, Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Exit code of a successful command.
pub const EXIT_OK: i32 = 0;
/// Exit code of a decision verb whose answer is "false" or "absent".
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit code of any error.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub verb: String,
    pub field: Option<String>,
    pub result: Value,
    pub witnesses: Value,
    /// A decision verb answered "false" or "absent".
    pub negative: bool,
    /// Replaces the generic text rendering when set.
    pub text: Option<String>,
}

impl Report {
    pub fn new(verb: &str, field: Option<String>, result: Value, witnesses: Value) -> Self {
        Self {
            verb: verb.to_owned(),
            field,
            result,
            witnesses,
            negative: false,
            text: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.negative {
            EXIT_NEGATIVE
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verb": self.verb,
            "field": self.field,
            "result": self.result,
            "witnesses": self.witnesses,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.to_json()),
            Format::Text => match &self.text {
                Some(t) => t.clone(),
                None => {
                    let mut out = format!("verb: {}\n", self.verb);
                    if let Some(f) = &self.field {
                        out.push_str(&format!("field: {f}\n"));
                    }
                    out.push_str(&format!("result: {}\n", plain(&self.result)));
                    if let Value::Object(w) = &self.witnesses {
                        for (k, v) in w {
                            out.push_str(&format!("{k}: {}\n", plain(v)));
                        }
                    }
                    out
                }
            },
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Rendering of an error, in the same envelope as a report.
pub fn render_error(verb: &str, err: &CliError, format: Format) -> String {
    match format {
        Format::Json => {
            let mut error = Map::new();
            error.insert("code".into(), err.code().into());
            error.insert("message".into(), err.to_string().into());
            format!("{}\n", json!({ "verb": verb, "error": error }))
        }
        Format::Text => format!("error [{}]: {err}\n", err.code()),
    }
}
