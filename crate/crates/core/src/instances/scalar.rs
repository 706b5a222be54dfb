//! Parsing of the scalar entries used in instance files.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::InstanceError;

/// A JSON scalar read as a value name: strings are kept, integers are
/// printed.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub(crate) enum Scalar {
    Int(i64),
    Str(String),
}

impl From<Scalar> for String {
    fn from(s: Scalar) -> Self {
        match s {
            Scalar::Int(i) => i.to_string(),
            Scalar::Str(s) => s,
        }
    }
}

/// A rational written as `"p/q"`, `"p"` or a JSON integer.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalText {
    Int(i64),
    Str(String),
}

impl RationalText {
    pub(crate) fn value(&self) -> Result<BigRational, InstanceError> {
        match self {
            RationalText::Int(i) => Ok(BigRational::from_integer(BigInt::from(*i))),
            RationalText::Str(s) => parse_rational(s),
        }
    }

    pub(crate) fn of(q: &BigRational) -> Self {
        RationalText::Str(format_rational(q))
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, InstanceError> {
    let bad = || InstanceError::BadRational(s.to_string());
    let t = s.trim();
    let (num, den) = t.split_once('/').unwrap_or((t, "1"));
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}
