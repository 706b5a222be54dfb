use std::io::Read;

use serde::de::DeserializeOwned;
use simplex_fill::instances::{InstanceError, Table};
use simplex_fill::sset::{FinCategory, TruncatedSSet};

use crate::report::CliError;

/// The text behind an argument and a name for it in error messages:
/// inline JSON, `-` for standard input, or a file path.
pub fn read_text(arg: &str) -> Result<(String, String), CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(("inline".into(), arg.to_string()));
    }
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Read { source_name: "stdin".into(), message: e.to_string() })?;
        return Ok(("stdin".into(), text));
    }
    let text =
        std::fs::read_to_string(arg).map_err(|e| CliError::Read { source_name: arg.into(), message: e.to_string() })?;
    Ok((arg.into(), text))
}

pub fn parse<T: DeserializeOwned>(source_name: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| match e.line() {
        // Rejected by a type's own validation after parsing: no position.
        0 => CliError::Invalid(format!("{source_name}: {e}")),
        line => CliError::Parse {
            source_name: source_name.into(),
            line: line as u64,
            column: Some(e.column() as u64),
            message: strip_position(&e.to_string()),
        },
    })
}

/// serde_json appends the position to its messages; it is reported apart.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(at) => message[..at].to_string(),
        None => message.to_string(),
    }
}

pub fn load<T: DeserializeOwned>(arg: &str) -> Result<T, CliError> {
    let (name, text) = read_text(arg)?;
    parse(&name, &text)
}

/// A table from JSON, or from CSV when the path ends in `.csv`.
pub fn load_table(arg: &str) -> Result<Table, CliError> {
    let (name, text) = read_text(arg)?;
    if name.ends_with(".csv") {
        Table::from_csv(text.as_bytes()).map_err(|e| match e {
            InstanceError::Csv { line, message } => CliError::Parse { source_name: name, line, column: None, message },
            other => CliError::Invalid(format!("{name}: {other}")),
        })
    } else {
        parse(&name, &text)
    }
}

/// A simplicial set truncated at `dim`: built-in fixture, nerve of a
/// category file, or explicit simplicial set file.
pub fn load_sset(arg: &str, dim: usize) -> Result<TruncatedSSet, CliError> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin(name, dim);
    }
    let (name, text) = read_text(arg)?;
    let value: serde_json::Value = parse(&name, &text)?;
    if value.get("objects").is_some() {
        let category: FinCategory = parse(&name, &text)?;
        TruncatedSSet::nerve(&category, dim).map_err(CliError::invalid)
    } else {
        let x: TruncatedSSet = parse(&name, &text)?;
        Ok(x.truncate(dim))
    }
}

fn builtin(name: &str, dim: usize) -> Result<TruncatedSSet, CliError> {
    let count = |k: &str| k.parse::<usize>().map_err(|_| CliError::Invalid(format!("bad size in builtin:{name}")));
    let built = match name.split_once(':') {
        None if name == "walking-arrow" => TruncatedSSet::nerve(&FinCategory::walking_arrow(), dim),
        None if name == "hollow-triangle" => TruncatedSSet::hollow_triangle(dim),
        Some(("cyclic", k)) => TruncatedSSet::nerve(&FinCategory::cyclic_group(count(k)?), dim),
        Some(("order", k)) => TruncatedSSet::nerve(&FinCategory::linear_order(count(k)?), dim),
        Some(("discrete", points)) => TruncatedSSet::discrete(&points.split(',').collect::<Vec<_>>(), dim),
        _ => return Err(CliError::Invalid(format!("unknown fixture builtin:{name}"))),
    };
    built.map_err(CliError::invalid)
}

/// `"0,1,2"` as a vertex list.
pub fn parse_vertices(key: &str) -> Result<Vec<usize>, CliError> {
    key.split(',').map(|v| v.trim().parse().map_err(|_| CliError::Invalid(format!("bad facet key {key:?}")))).collect()
}
