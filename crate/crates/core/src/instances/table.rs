//! Relational tables: an `n`-simplex is a set of rows with `n + 1` columns.

use std::collections::BTreeSet;
use std::io::Read;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::Scalar;
use super::{group_by, Glue, InstanceError, Source};
use crate::delta::MonotoneMap;

/// A set of rows over an alphabet of value names. The alphabet always
/// contains every value that occurs in a row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    arity: usize,
    values: BTreeSet<String>,
    rows: BTreeSet<Vec<String>>,
}

impl Table {
    pub fn new(
        arity: usize,
        values: impl IntoIterator<Item = String>,
        rows: impl IntoIterator<Item = Vec<String>>,
    ) -> Result<Self, InstanceError> {
        if arity == 0 {
            return Err(InstanceError::ArityMismatch { expected: 1, found: 0 });
        }
        let mut values: BTreeSet<String> = values.into_iter().collect();
        let mut set = BTreeSet::new();
        for row in rows {
            if row.len() != arity {
                return Err(InstanceError::RowLength { row, arity });
            }
            values.extend(row.iter().cloned());
            set.insert(row);
        }
        Ok(Self { arity, values, rows: set })
    }

    /// A table whose rows and alphabet are given by short names, for tests
    /// and fixtures.
    pub fn from_strs(arity: usize, values: &[&str], rows: &[&[&str]]) -> Result<Self, InstanceError> {
        Self::new(
            arity,
            values.iter().map(|s| s.to_string()),
            rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()),
        )
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &BTreeSet<String> {
        &self.values
    }

    pub fn rows(&self) -> &BTreeSet<Vec<String>> {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The rows restricted to the listed columns, in that order, without
    /// duplicates.
    pub fn project(&self, cols: &[usize]) -> Table {
        Table {
            arity: cols.len(),
            values: self.values.clone(),
            rows: self.rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect(),
        }
    }

    /// Reads a CSV file whose header lists the column indices `0,1,…`.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self, InstanceError> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
        let header = rdr.headers().map_err(csv_error)?.clone();
        if header.iter().enumerate().any(|(k, h)| h.trim() != k.to_string()) {
            return Err(InstanceError::Csv {
                line: 1,
                message: format!("header must be 0,1,… but is {:?}", header.iter().collect::<Vec<_>>()),
            });
        }
        let rows = rdr
            .records()
            .map(|r| {
                let r = r.map_err(csv_error)?;
                Ok(r.iter().map(|s| s.trim().to_string()).collect())
            })
            .collect::<Result<Vec<Vec<String>>, InstanceError>>()?;
        Table::new(header.len(), [], rows)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<String> = (0..self.arity).map(|c| c.to_string()).collect();
        w.write_record(&header).expect("writing to memory");
        for row in &self.rows {
            w.write_record(row).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("CSV of strings is UTF-8")
    }
}

/// The action of `f: [m] -> [n]` on a table with `n + 1` columns: column
/// `k` of the result is column `f(k)` of `t`. Cofaces delete columns,
/// codegeneracies duplicate them.
pub fn table_face(t: &Table, f: &MonotoneMap) -> Result<Table, InstanceError> {
    if f.cod() + 1 != t.arity {
        return Err(InstanceError::ArityMismatch { expected: t.arity, found: f.cod() + 1 });
    }
    Ok(t.project(f.values()))
}

fn csv_error(e: csv::Error) -> InstanceError {
    let line = e.position().map_or(0, csv::Position::line);
    let message = match e.kind() {
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => {
            format!("found {len} fields where {expected_len} were expected")
        }
        _ => e.to_string(),
    };
    InstanceError::Csv { line, message }
}

/// All rows on the glued columns whose restrictions lie in `a` and `b`.
/// The columns of `a` come first, followed by the columns of `b` outside
/// the overlap `u: [m] -> [p]`, `v: [m] -> [q]`.
pub fn join(a: &Table, b: &Table, u: &MonotoneMap, v: &MonotoneMap) -> Result<Table, InstanceError> {
    join_glued(a, b, &Glue::along(u, v)?)
}

pub(crate) fn join_glued(a: &Table, b: &Table, g: &Glue) -> Result<Table, InstanceError> {
    for (t, cols) in [(a, g.left()), (b, g.right())] {
        if t.arity != cols.len() {
            return Err(InstanceError::ArityMismatch { expected: t.arity, found: cols.len() });
        }
    }
    let (sa, sb) = g.shared();
    let (pa, pb) = (a.project(&sa), b.project(&sb));
    if pa.rows != pb.rows {
        return Err(InstanceError::IncompatibleProjections { left: Box::new(pa), right: Box::new(pb) });
    }
    let by_key = group_by(b.rows.iter(), |r| sb.iter().map(|&c| r[c].clone()).collect::<Vec<_>>());
    let sources = g.sources();
    let mut rows = BTreeSet::new();
    for ra in &a.rows {
        let key: Vec<String> = sa.iter().map(|&c| ra[c].clone()).collect();
        for rb in by_key.get(&key).into_iter().flatten() {
            rows.insert(
                sources
                    .iter()
                    .map(|s| match *s {
                        Source::Left(c) | Source::Both(c, _) => ra[c].clone(),
                        Source::Right(c) => rb[c].clone(),
                    })
                    .collect(),
            );
        }
    }
    Ok(Table { arity: g.n() + 1, values: a.values.union(&b.values).cloned().collect(), rows })
}

#[derive(Serialize, Deserialize)]
struct TableRepr<V> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arity: Option<usize>,
    #[serde(default = "Vec::new")]
    values: Vec<V>,
    rows: Vec<Vec<V>>,
}

impl Serialize for Table {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableRepr {
            arity: Some(self.arity),
            values: self.values.iter().collect(),
            rows: self.rows.iter().map(|r| r.iter().collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Table {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = TableRepr::<Scalar>::deserialize(d)?;
        let rows: Vec<Vec<String>> = repr.rows.into_iter().map(|r| r.into_iter().map(String::from).collect()).collect();
        let arity = repr
            .arity
            .or_else(|| rows.first().map(Vec::len))
            .ok_or_else(|| serde::de::Error::custom("an empty table needs an explicit arity"))?;
        Table::new(arity, repr.values.into_iter().map(String::from), rows).map_err(serde::de::Error::custom)
    }
}
