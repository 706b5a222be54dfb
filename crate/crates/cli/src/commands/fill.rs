use std::collections::{BTreeMap, BTreeSet};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use simplex_fill::acyclic::{
    directed_graham_reduce, fill_configuration, graham_reduce, Complex, FillError, FillerProvider,
};
use simplex_fill::instances::{Distributions, Metrics, Table, Tables};
use simplex_fill::sset::Cell;

use crate::args::{FillArgs, ProviderKind};
use crate::commands::complex::load_complex;
use crate::input::{load, load_sset, parse_vertices};
use crate::report::{CliError, Outcome};

fn assignment<T>(
    raw: BTreeMap<String, Value>,
    convert: impl Fn(&[usize], Value) -> Result<T, CliError>,
) -> Result<BTreeMap<Vec<usize>, T>, CliError> {
    raw.into_iter()
        .map(|(k, v)| {
            let facet = parse_vertices(&k)?;
            let simplex = convert(&facet, v)?;
            Ok((facet, simplex))
        })
        .collect()
}

fn from_value<T: DeserializeOwned>(facet: &[usize], v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Invalid(format!("simplex for facet {facet:?}: {e}")))
}

/// Runs the construction and reports the filler through `show`.
fn run<P: FillerProvider>(
    provider: &P,
    c: &Complex,
    assigned: BTreeMap<Vec<usize>, P::Simplex>,
    directed: bool,
    show: impl Fn(&P::Simplex) -> Value,
) -> Result<Outcome, CliError> {
    let fields = json!({ "ground": c.ground(), "facets": c.facets(), "directed": directed });
    match fill_configuration(provider, c, &assigned, directed) {
        Ok(z) => {
            let mut fields = fields;
            fields["filler"] = show(&z);
            Ok(Outcome::positive(fields))
        }
        Err(e @ FillError::NotAcyclic(_)) => {
            let graham = if directed { directed_graham_reduce(c) } else { graham_reduce(c) };
            Ok(Outcome::negative(fields, json!({ "reason": e.to_string(), "residual_facets": graham.residual })))
        }
        Err(FillError::IncompatibleAssignment { first, second, shared }) => Ok(Outcome::negative(
            fields,
            json!({ "reason": "facets disagree on a shared face", "first": first, "second": second, "shared": shared }),
        )),
        Err(FillError::NoFiller { facet, i, j, n }) => {
            Ok(Outcome::negative(fields, json!({ "reason": "no span filler", "facet": facet, "i": i, "j": j, "n": n })))
        }
        Err(e) => Err(CliError::invalid(e)),
    }
}

/// Tables over one alphabet: the union of every assigned table's values.
fn common_alphabet(tables: BTreeMap<Vec<usize>, Table>) -> Result<BTreeMap<Vec<usize>, Table>, CliError> {
    let alphabet: BTreeSet<String> = tables.values().flat_map(|t| t.values().iter().cloned()).collect();
    tables
        .into_iter()
        .map(|(facet, t)| {
            let widened =
                Table::new(t.arity(), alphabet.iter().cloned(), t.rows().iter().cloned()).map_err(CliError::invalid)?;
            Ok((facet, widened))
        })
        .collect()
}

fn serialized<T: Serialize>(x: &T) -> Value {
    json!(x)
}

pub fn fill(args: &FillArgs) -> Result<Outcome, CliError> {
    let (c, directed_file) = load_complex(&args.complex)?;
    let directed = args.directed || directed_file;
    let raw: BTreeMap<String, Value> = load(&args.assignment)?;
    match args.provider {
        ProviderKind::Sset => {
            let source =
                args.sset.as_deref().ok_or_else(|| CliError::Invalid("--provider sset needs --sset".into()))?;
            let x = load_sset(source, args.dim)?;
            let assigned = assignment(raw, |facet, v| {
                let name = v.as_str().ok_or_else(|| CliError::Invalid(format!("facet {facet:?} needs a cell name")))?;
                let dim = facet.len().saturating_sub(1);
                x.cell(dim, name)
                    .ok_or_else(|| CliError::Invalid(format!("no simplex named {name:?} in dimension {dim}")))
            })?;
            run(&x, &c, assigned, directed, |z: &Cell| json!({ "dim": z.dim, "name": x.name(*z) }))
        }
        ProviderKind::Table => run(&Tables, &c, common_alphabet(assignment(raw, from_value)?)?, directed, serialized),
        ProviderKind::Metric => run(&Metrics, &c, assignment(raw, from_value)?, directed, serialized),
        ProviderKind::Distribution => run(&Distributions, &c, assignment(raw, from_value)?, directed, serialized),
    }
}
