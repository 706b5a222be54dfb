use serde_json::{json, Map, Value};
use thiserror::Error;

/// The verdict of a command that ran to completion.
#[derive(Debug)]
pub struct Outcome {
    pub ok: bool,
    pub fields: Map<String, Value>,
    /// Plain text printed instead of the JSON verdict.
    pub text: Option<String>,
}

impl Outcome {
    pub fn new(ok: bool, fields: Value) -> Self {
        let Value::Object(fields) = fields else { panic!("verdict fields must be an object") };
        Self { ok, fields, text: None }
    }

    pub fn positive(fields: Value) -> Self {
        Self::new(true, fields)
    }

    /// A negative verdict carrying the datum that fails.
    pub fn negative(mut fields: Value, witness: Value) -> Self {
        fields["witness"] = witness;
        Self::new(false, fields)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source_name}: line {line}: {message}")]
    Parse { source_name: String, line: u64, column: Option<u64>, message: String },
    #[error("{source_name}: {message}")]
    Read { source_name: String, message: String },
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn invalid(e: impl std::fmt::Display) -> Self {
        CliError::Invalid(e.to_string())
    }

    fn to_json(&self) -> Value {
        match self {
            CliError::Parse { source_name, line, column, message } => {
                json!({"kind": "parse", "source": source_name, "line": line, "column": column, "message": message})
            }
            CliError::Read { source_name, message } => {
                json!({"kind": "read", "source": source_name, "message": message})
            }
            CliError::Invalid(message) => json!({"kind": "invalid", "message": message}),
        }
    }
}

/// The text to print and the exit code.
pub fn render(command: &str, result: Result<Outcome, CliError>) -> (String, u8) {
    let mut out = Map::new();
    out.insert("command".into(), Value::from(command));
    match result {
        Ok(outcome) => {
            let code = if outcome.ok { 0 } else { 1 };
            if let Some(text) = outcome.text {
                return (text, code);
            }
            out.insert("ok".into(), Value::from(outcome.ok));
            out.extend(outcome.fields);
            (pretty(out), code)
        }
        Err(e) => {
            out.insert("ok".into(), Value::from(false));
            out.insert("error".into(), e.to_json());
            (pretty(out), 2)
        }
    }
}

fn pretty(map: Map<String, Value>) -> String {
    serde_json::to_string_pretty(&Value::Object(map)).expect("JSON values serialize")
}
