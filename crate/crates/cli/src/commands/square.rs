use serde_json::{json, Value};
use simplex_fill::squares::{
    compute_pushout, factor_balanced, factor_into_basic, is_balanced, is_pushout_square, is_set_pushout,
    pushout_failure_witness, spine_condition, SquareError,
};
use simplex_fill::{MonotoneMap, Span, Square};

use crate::input::load;
use crate::report::{CliError, Outcome};

fn load_square(arg: &str) -> Result<Square, CliError> {
    let q: Square = load(arg)?;
    q.check().map_err(CliError::invalid)?;
    Ok(q)
}

fn load_span(arg: &str) -> Result<Span, CliError> {
    let s: Span = load(arg)?;
    Span::new(s.f, s.g).map_err(CliError::invalid)
}

/// Why a commuting square is not a pushout: the span has none, or its
/// pushout is a different square.
fn not_pushout_witness(q: &Square) -> Value {
    match pushout_failure_witness(&q.span()) {
        Ok(w) => json!({ "reason": "span has no pushout", "cocones": w }),
        Err(_) => json!({
            "reason": "the pushout of the span is a different square",
            "pushout": compute_pushout(&q.span()).expect("span has a pushout"),
        }),
    }
}

fn not_balanced_witness(q: &Square) -> Value {
    let (m, p, qq, n) = q.objects();
    if let Some((edge, map)) =
        [("f", &q.f), ("g", &q.g), ("h", &q.h), ("k", &q.k)].into_iter().find(|(_, e)| !injective(e))
    {
        return json!({ "reason": "edge is not injective", "edge": edge, "map": map });
    }
    if p + qq != m + n {
        return json!({ "reason": "p + q differs from m + n", "objects": [m, p, qq, n] });
    }
    let missed: Vec<usize> = (0..=n).filter(|x| !q.h.values().contains(x) && !q.k.values().contains(x)).collect();
    json!({ "reason": "h and k miss a vertex", "missed": missed })
}

fn injective(m: &MonotoneMap) -> bool {
    m.image_len() == m.dom() + 1
}

pub fn check(arg: &str, balanced: bool) -> Result<Outcome, CliError> {
    let q = load_square(arg)?;
    let pushout = is_pushout_square(&q).map_err(CliError::invalid)?;
    let is_bal = is_balanced(&q).map_err(CliError::invalid)?;
    let mut fields = json!({
        "square": q,
        "objects": <[usize; 4]>::from(q.objects()),
        "pushout": pushout,
        "balanced": is_bal,
        "set_pushout": is_set_pushout(&q).map_err(CliError::invalid)?,
        "spine_condition": spine_condition(&q.h, &q.k),
    });
    let edges_injective = [&q.f, &q.g, &q.h, &q.k].into_iter().all(injective);
    fields["all_injective"] = Value::from(edges_injective);
    Ok(match (balanced, pushout, is_bal) {
        (false, true, _) | (true, _, true) => Outcome::positive(fields),
        (false, false, _) => Outcome::negative(fields, not_pushout_witness(&q)),
        (true, _, false) => Outcome::negative(fields, not_balanced_witness(&q)),
    })
}

pub fn pushout(arg: &str) -> Result<Outcome, CliError> {
    let span = load_span(arg)?;
    match compute_pushout(&span) {
        Ok(q) => {
            Ok(Outcome::positive(json!({ "span": span, "square": q, "objects": <[usize; 4]>::from(q.objects()) })))
        }
        Err(SquareError::NoPushout(_)) => {
            let w = pushout_failure_witness(&span).map_err(CliError::invalid)?;
            Ok(Outcome::negative(json!({ "span": span }), json!(w)))
        }
        Err(e) => Err(CliError::invalid(e)),
    }
}

pub fn witness(arg: &str) -> Result<Outcome, CliError> {
    let span = load_span(arg)?;
    match pushout_failure_witness(&span) {
        Ok(w) => Ok(Outcome::positive(json!({ "span": span, "cocones": w }))),
        Err(SquareError::HasPushout) => {
            let q = compute_pushout(&span).map_err(CliError::invalid)?;
            Ok(Outcome::negative(json!({ "span": span }), json!({ "reason": "span has a pushout", "pushout": q })))
        }
        Err(e) => Err(CliError::invalid(e)),
    }
}

pub fn factor(arg: &str) -> Result<Outcome, CliError> {
    let q = load_square(arg)?;
    match factor_into_basic(&q) {
        Ok(tiling) => {
            let cells = tiling.cells().len();
            Ok(Outcome::positive(json!({ "square": q, "cells": cells, "tiling": tiling, "grid": tiling.to_grid() })))
        }
        Err(SquareError::NotPushout) => Ok(Outcome::negative(json!({ "square": q }), not_pushout_witness(&q))),
        Err(e) => Err(CliError::invalid(e)),
    }
}

pub fn factor_balanced_cmd(arg: &str) -> Result<Outcome, CliError> {
    let q = load_square(arg)?;
    match factor_balanced(&q) {
        Ok(grid) => Ok(Outcome::positive(json!({ "square": q, "grid": grid }))),
        Err(SquareError::NotBalanced) => Ok(Outcome::negative(json!({ "square": q }), not_balanced_witness(&q))),
        Err(SquareError::Trivial) => {
            Ok(Outcome::negative(json!({ "square": q }), json!({ "reason": "square is trivial", "square": q })))
        }
        Err(e) => Err(CliError::invalid(e)),
    }
}
