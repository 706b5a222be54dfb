use serde_json::json;
use simplex_fill::{Generator, MonotoneMap};

use crate::input::load;
use crate::report::{CliError, Outcome};

pub fn compose(outer: &str, inner: &str) -> Result<Outcome, CliError> {
    let (f, g): (MonotoneMap, MonotoneMap) = (load(outer)?, load(inner)?);
    let composite = f.compose(&g).map_err(CliError::invalid)?;
    Ok(Outcome::positive(json!({ "result": composite })))
}

pub fn generator_name(f: &MonotoneMap) -> String {
    match f.as_generator() {
        Some(Generator::Coface { n, i }) => format!("d^{{{n},{i}}}"),
        Some(Generator::Codegeneracy { n, i }) => format!("s^{{{n},{i}}}"),
        None => format!("{f:?}"),
    }
}

pub fn factor(map: &str) -> Result<Outcome, CliError> {
    let f: MonotoneMap = load(map)?;
    let (epi, mono) = f.reedy_factorize();
    let generators: Vec<_> =
        f.factor_into_generators().iter().map(|g| json!({ "name": generator_name(g), "map": g })).collect();
    Ok(Outcome::positive(json!({
        "map": f,
        "epi": epi,
        "mono": mono,
        "generators": generators,
        "order": "generators apply first to last",
    })))
}

pub fn defect(map: &str) -> Result<Outcome, CliError> {
    let f: MonotoneMap = load(map)?;
    Ok(Outcome::positive(json!({ "map": f, "defect": f.defect(), "image": f.image() })))
}
