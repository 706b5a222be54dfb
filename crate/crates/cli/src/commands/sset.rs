use serde_json::{json, Map, Value};
use simplex_fill::sset::{
    count_fillers, find_filler, forced_discrete, is_2segal_restricted, is_inner_span_complete, is_kan,
    is_quasicategory, is_segal_nerve, is_span_complete, is_split, is_stiff, Cell, TruncatedSSet, Verdict,
};

use crate::args::{Property, SsetInput};
use crate::input::load_sset;
use crate::report::{CliError, Outcome};

fn levels(x: &TruncatedSSet) -> Vec<usize> {
    (0..=x.dim()).map(|n| x.level_size(n)).collect()
}

pub fn validate(input: &SsetInput) -> Result<Outcome, CliError> {
    let x = load_sset(&input.sset, input.dim)?;
    let violations = x.validate();
    let fields = json!({ "dim": x.dim(), "levels": levels(&x), "violations": violations.len() });
    Ok(match violations.first() {
        None => Outcome::positive(fields),
        Some(v) => Outcome::negative(fields, json!(v)),
    })
}

const EVERY: [Property; 9] = [
    Property::Kan,
    Property::Quasicategory,
    Property::SpanComplete,
    Property::InnerSpanComplete,
    Property::Segal,
    Property::Split,
    Property::Stiff,
    Property::TwoSegal,
    Property::ForcedDiscrete,
];

fn key(p: Property) -> &'static str {
    match p {
        Property::All => "all",
        Property::Kan => "kan",
        Property::Quasicategory => "quasicategory",
        Property::SpanComplete => "span_complete",
        Property::InnerSpanComplete => "inner_span_complete",
        Property::Segal => "segal",
        Property::Split => "split",
        Property::Stiff => "stiff",
        Property::TwoSegal => "two_segal_restricted",
        Property::ForcedDiscrete => "forced_discrete",
    }
}

/// Whether the property holds, and its report.
fn classify_one(x: &TruncatedSSet, p: Property) -> (bool, Value) {
    let verdict = |v: Verdict| (v.holds, json!(v));
    match p {
        Property::Kan => verdict(is_kan(x)),
        Property::Quasicategory => verdict(is_quasicategory(x)),
        Property::SpanComplete => verdict(is_span_complete(x)),
        Property::InnerSpanComplete => verdict(is_inner_span_complete(x)),
        Property::Segal => verdict(is_segal_nerve(x)),
        Property::Split => verdict(is_split(x)),
        Property::Stiff => verdict(is_stiff(x)),
        Property::TwoSegal => verdict(is_2segal_restricted(x)),
        Property::ForcedDiscrete => {
            let r = forced_discrete(x);
            (r.families_pass(), json!({ "holds": r.families_pass(), "consistent": r.consistent(), "report": r }))
        }
        Property::All => unreachable!("expanded before classification"),
    }
}

pub fn classify(input: &SsetInput, properties: &[Property]) -> Result<Outcome, CliError> {
    let x = load_sset(&input.sset, input.dim)?;
    let mut wanted: Vec<Property> = Vec::new();
    for p in properties.iter().flat_map(|&p| if p == Property::All { EVERY.to_vec() } else { vec![p] }) {
        if !wanted.contains(&p) {
            wanted.push(p);
        }
    }
    let mut results = Map::new();
    let mut failing = Map::new();
    for p in wanted {
        let (holds, report) = classify_one(&x, p);
        if !holds {
            let witness = report.get("witness").cloned().unwrap_or_else(|| report["report"].clone());
            failing.insert(key(p).into(), witness);
        }
        results.insert(key(p).into(), report);
    }
    let fields = json!({ "dim": x.dim(), "truncation": x.dim(), "levels": levels(&x), "results": results });
    Ok(if failing.is_empty() { Outcome::positive(fields) } else { Outcome::negative(fields, Value::Object(failing)) })
}

pub fn filler(input: &SsetInput, n: usize, i: usize, j: usize, a: &str, b: &str) -> Result<Outcome, CliError> {
    let x = load_sset(&input.sset, input.dim)?;
    if n == 0 {
        return Err(CliError::Invalid("--n must be at least 1".into()));
    }
    let cell = |name: &str| {
        x.cell(n - 1, name)
            .ok_or_else(|| CliError::Invalid(format!("no simplex named {name:?} in dimension {}", n - 1)))
    };
    let (ca, cb) = (cell(a)?, cell(b)?);
    let found = find_filler(&x, n, i, j, ca.idx, cb.idx).map_err(CliError::invalid)?;
    let count = count_fillers(&x, n, i, j, ca.idx, cb.idx).map_err(CliError::invalid)?;
    let fields = json!({ "n": n, "i": i, "j": j, "a": a, "b": b, "count": count });
    Ok(match found {
        Some(idx) => {
            let mut fields = fields;
            fields["filler"] = Value::from(x.name(Cell { dim: n, idx }));
            Outcome::positive(fields)
        }
        None => Outcome::negative(fields, json!({ "reason": "no simplex has these faces", "d_j": a, "d_i": b })),
    })
}
