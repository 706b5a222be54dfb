use serde_json::json;
use simplex_fill::vee::{VeeDecomposition, VeeFamily};
use simplex_fill::MonotoneMap;

use crate::input::load;
use crate::report::{CliError, Outcome};

pub fn decompose(decomposition: &str, maps: &[String]) -> Result<Outcome, CliError> {
    let dec: VeeDecomposition = load(decomposition)?;
    let pieces = maps
        .iter()
        .map(|arg| {
            let f: MonotoneMap = load(arg)?;
            let family = dec.components_of_map(&f).map_err(CliError::invalid)?;
            let pushed = dec.pushforward(&f).map_err(CliError::invalid)?;
            Ok(json!({ "map": f, "parts": family.parts, "pushforward": pushed }))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Outcome::positive(json!({ "base": dec.base, "components": dec.components(), "maps": pieces })))
}

pub fn product(family: &str) -> Result<Outcome, CliError> {
    let family: VeeFamily = load(family)?;
    let result = family.product().map_err(CliError::invalid)?;
    Ok(Outcome::positive(json!({ "parts": family.parts, "result": result })))
}
