use serde_json::json;
use simplex_fill::instances::{join, InstanceError};
use simplex_fill::MonotoneMap;

use crate::input::{load, load_table};
use crate::report::{CliError, Outcome};

pub fn join_cmd(left: &str, right: &str, u: &str, v: &str, csv: bool) -> Result<Outcome, CliError> {
    let (a, b) = (load_table(left)?, load_table(right)?);
    let (u, v): (MonotoneMap, MonotoneMap) = (load(u)?, load(v)?);
    match join(&a, &b, &u, &v) {
        Ok(t) => {
            let mut outcome = Outcome::positive(json!({ "rows": t.len(), "table": t }));
            if csv {
                outcome.text = Some(t.to_csv().trim_end().to_string());
            }
            Ok(outcome)
        }
        Err(InstanceError::IncompatibleProjections { left, right }) => Ok(Outcome::negative(
            json!({ "left": a, "right": b }),
            json!({ "reason": "the tables project differently onto the shared columns", "left": left, "right": right }),
        )),
        Err(e) => Err(CliError::invalid(e)),
    }
}
