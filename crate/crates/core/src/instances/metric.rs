//! Pseudometrics: an `n`-simplex is a pseudometric on the points `0..=n`,
//! and `f: [m] -> [n]` acts by pullback.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::scalar::RationalText;
use super::{Glue, InstanceError, Source};
use crate::delta::MonotoneMap;

/// A reflexive pseudometric with exact rational distances, symmetric unless
/// built with [`Pseudometric::asymmetric`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pseudometric {
    dist: Vec<Vec<BigRational>>,
    symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricViolation {
    #[error("the matrix is empty or not square")]
    Shape,
    #[error("d({i},{j}) is negative")]
    Negative { i: usize, j: usize },
    #[error("d({i},{i}) is not zero")]
    Reflexivity { i: usize },
    #[error("d({i},{j}) differs from d({j},{i})")]
    Symmetry { i: usize, j: usize },
    #[error("d({i},{k}) exceeds d({i},{j}) + d({j},{k})")]
    Triangle { i: usize, j: usize, k: usize },
}

impl Pseudometric {
    pub fn new(dist: Vec<Vec<BigRational>>) -> Result<Self, InstanceError> {
        Self::checked(dist, true)
    }

    /// Drops the symmetry requirement.
    pub fn asymmetric(dist: Vec<Vec<BigRational>>) -> Result<Self, InstanceError> {
        Self::checked(dist, false)
    }

    fn checked(dist: Vec<Vec<BigRational>>, symmetric: bool) -> Result<Self, InstanceError> {
        let d = Self { dist, symmetric };
        match d.violation() {
            Some(v) => Err(InstanceError::NotPseudometric(v)),
            None => Ok(d),
        }
    }

    /// Builds a metric from integer distances.
    pub fn from_ints(dist: &[&[i64]]) -> Result<Self, InstanceError> {
        Self::new(dist.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect())
    }

    pub fn zero(points: usize) -> Self {
        Self { dist: vec![vec![BigRational::zero(); points]; points], symmetric: true }
    }

    pub fn points(&self) -> usize {
        self.dist.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.dist[i][j]
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.dist
    }

    /// The first violated axiom, scanning indices in order.
    pub fn violation(&self) -> Option<MetricViolation> {
        let n = self.dist.len();
        if n == 0 || self.dist.iter().any(|r| r.len() != n) {
            return Some(MetricViolation::Shape);
        }
        let d = &self.dist;
        for i in 0..n {
            if !d[i][i].is_zero() {
                return Some(MetricViolation::Reflexivity { i });
            }
            for j in 0..n {
                if d[i][j] < BigRational::zero() {
                    return Some(MetricViolation::Negative { i, j });
                }
                if self.symmetric && d[i][j] != d[j][i] {
                    return Some(MetricViolation::Symmetry { i: i.min(j), j: i.max(j) });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if d[i][k] > &d[i][j] + &d[j][k] {
                        return Some(MetricViolation::Triangle { i, j, k });
                    }
                }
            }
        }
        None
    }
}

/// `(f* d)(x, y) = d(f(x), f(y))`.
pub fn metric_pullback(d: &Pseudometric, f: &MonotoneMap) -> Result<Pseudometric, InstanceError> {
    if f.cod() + 1 != d.points() {
        return Err(InstanceError::ArityMismatch { expected: d.points(), found: f.cod() + 1 });
    }
    let v = f.values();
    Ok(Pseudometric {
        dist: v.iter().map(|&x| v.iter().map(|&y| d.dist[x][y].clone()).collect()).collect(),
        symmetric: d.symmetric,
    })
}

/// The pseudometric on the glued points that agrees with `dp` and `dq` on
/// their own points and measures the remaining pairs by the shortest route
/// through a shared point. Points are laid out as in [`super::join`].
pub fn metric_fill(
    dp: &Pseudometric,
    dq: &Pseudometric,
    u: &MonotoneMap,
    v: &MonotoneMap,
) -> Result<Pseudometric, InstanceError> {
    fill_glued(dp, dq, &Glue::along(u, v)?)
}

pub(crate) fn fill_glued(dp: &Pseudometric, dq: &Pseudometric, g: &Glue) -> Result<Pseudometric, InstanceError> {
    for (d, cols) in [(dp, g.left()), (dq, g.right())] {
        if d.points() != cols.len() {
            return Err(InstanceError::ArityMismatch { expected: d.points(), found: cols.len() });
        }
    }
    let (sp, sq) = g.shared();
    for s in 0..sp.len() {
        for t in 0..sp.len() {
            if dp.dist[sp[s]][sp[t]] != dq.dist[sq[s]][sq[t]] {
                return Err(InstanceError::IncompatibleRestrictions { i: g.left()[sp[s]], j: g.left()[sp[t]] });
            }
        }
    }
    let sources = g.sources();
    let through = |a: &Pseudometric, x: usize, ka: &[usize], b: &Pseudometric, y: usize, kb: &[usize]| {
        ka.iter().zip(kb).map(|(&k1, &k2)| &a.dist[x][k1] + &b.dist[k2][y]).min().expect("the overlap is nonempty")
    };
    let entry = |r: Source, s: Source| match (r, s) {
        (Source::Left(x) | Source::Both(x, _), Source::Left(y) | Source::Both(y, _)) => dp.dist[x][y].clone(),
        (Source::Right(x) | Source::Both(_, x), Source::Right(y) | Source::Both(_, y)) => dq.dist[x][y].clone(),
        (Source::Left(x), Source::Right(y)) => through(dp, x, &sp, dq, y, &sq),
        (Source::Right(x), Source::Left(y)) => through(dq, x, &sq, dp, y, &sp),
    };
    Ok(Pseudometric {
        dist: sources.iter().map(|&r| sources.iter().map(|&s| entry(r, s)).collect()).collect(),
        symmetric: dp.symmetric && dq.symmetric,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MetricRepr {
    Matrix(Vec<Vec<RationalText>>),
    Tagged { dist: Vec<Vec<RationalText>>, symmetric: bool },
}

impl Serialize for Pseudometric {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let dist = self.dist.iter().map(|r| r.iter().map(RationalText::of).collect()).collect();
        if self.symmetric { MetricRepr::Matrix(dist) } else { MetricRepr::Tagged { dist, symmetric: false } }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pseudometric {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (dist, symmetric) = match MetricRepr::deserialize(d)? {
            MetricRepr::Matrix(m) => (m, true),
            MetricRepr::Tagged { dist, symmetric } => (dist, symmetric),
        };
        let dist = dist
            .iter()
            .map(|r| r.iter().map(RationalText::value).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Pseudometric::checked(dist, symmetric).map_err(serde::de::Error::custom)
    }
}
