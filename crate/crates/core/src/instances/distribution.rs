//! Joint distributions: an `n`-simplex is a probability distribution on
//! tuples of `n + 1` values, and `f: [m] -> [n]` acts by pushforward along
//! `x ↦ (x[f(0)], …, x[f(m)])`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{RationalText, Scalar};
use super::{Glue, InstanceError, Source};
use crate::delta::MonotoneMap;

/// Exact probabilities of tuples; only tuples of positive mass are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Distribution {
    arity: usize,
    values: BTreeSet<String>,
    prob: BTreeMap<Vec<String>, BigRational>,
}

impl Distribution {
    pub fn new(
        arity: usize,
        values: impl IntoIterator<Item = String>,
        prob: impl IntoIterator<Item = (Vec<String>, BigRational)>,
    ) -> Result<Self, InstanceError> {
        if arity == 0 {
            return Err(InstanceError::ArityMismatch { expected: 1, found: 0 });
        }
        let mut values: BTreeSet<String> = values.into_iter().collect();
        let mut map: BTreeMap<Vec<String>, BigRational> = BTreeMap::new();
        let mut total = BigRational::zero();
        for (row, p) in prob {
            if row.len() != arity {
                return Err(InstanceError::RowLength { row, arity });
            }
            if p < BigRational::zero() {
                return Err(InstanceError::NotDistribution(format!("negative mass {p}")));
            }
            total += &p;
            if !p.is_zero() {
                values.extend(row.iter().cloned());
                *map.entry(row).or_insert_with(BigRational::zero) += p;
            }
        }
        if !total.is_one() {
            return Err(InstanceError::NotDistribution(total.to_string()));
        }
        Ok(Self { arity, values, prob: map })
    }

    /// Uniform on the given tuples of short names.
    pub fn uniform(arity: usize, values: &[&str], rows: &[&[&str]]) -> Result<Self, InstanceError> {
        let p = BigRational::new(1.into(), rows.len().max(1).into());
        Self::new(
            arity,
            values.iter().map(|s| s.to_string()),
            rows.iter().map(|r| (r.iter().map(|s| s.to_string()).collect(), p.clone())),
        )
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &BTreeSet<String> {
        &self.values
    }

    /// Tuples of positive probability with their masses.
    pub fn support(&self) -> &BTreeMap<Vec<String>, BigRational> {
        &self.prob
    }

    pub fn prob(&self, row: &[String]) -> BigRational {
        self.prob.get(row).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total(&self) -> BigRational {
        self.prob.values().sum()
    }

    /// The pushforward along `x ↦ (x[c] for c in cols)`.
    pub fn marginal(&self, cols: &[usize]) -> Distribution {
        let mut prob: BTreeMap<Vec<String>, BigRational> = BTreeMap::new();
        for (row, p) in &self.prob {
            *prob.entry(cols.iter().map(|&c| row[c].clone()).collect()).or_insert_with(BigRational::zero) += p;
        }
        Distribution { arity: cols.len(), values: self.values.clone(), prob }
    }
}

pub fn dist_face(p: &Distribution, f: &MonotoneMap) -> Result<Distribution, InstanceError> {
    if f.cod() + 1 != p.arity {
        return Err(InstanceError::ArityMismatch { expected: p.arity, found: f.cod() + 1 });
    }
    Ok(p.marginal(f.values()))
}

/// The conditional product of `pa` and `pb` over the shared variables
/// `u: [m] -> [p]`, `v: [m] -> [q]`: the unshared variables of the two are
/// independent given the shared ones. Variables are laid out as in
/// [`super::join`].
pub fn dist_fill(
    pa: &Distribution,
    pb: &Distribution,
    u: &MonotoneMap,
    v: &MonotoneMap,
) -> Result<Distribution, InstanceError> {
    fill_glued(pa, pb, &Glue::along(u, v)?)
}

pub(crate) fn fill_glued(pa: &Distribution, pb: &Distribution, g: &Glue) -> Result<Distribution, InstanceError> {
    for (d, cols) in [(pa, g.left()), (pb, g.right())] {
        if d.arity != cols.len() {
            return Err(InstanceError::ArityMismatch { expected: d.arity, found: cols.len() });
        }
    }
    let (sa, sb) = g.shared();
    let (ma, mb) = (pa.marginal(&sa), pb.marginal(&sb));
    if ma.prob != mb.prob {
        return Err(InstanceError::IncompatibleMarginals { left: Box::new(ma), right: Box::new(mb) });
    }
    let by_key = super::group_by(pb.prob.iter(), |(r, _)| sb.iter().map(|&c| r[c].clone()).collect::<Vec<_>>());
    let sources = g.sources();
    let mut prob = BTreeMap::new();
    for (ra, p) in &pa.prob {
        let key: Vec<String> = sa.iter().map(|&c| ra[c].clone()).collect();
        // Rows of positive mass have a shared marginal of positive mass, so
        // null conditioning events never arise here.
        let Some(rows) = by_key.get(&key) else { continue };
        let mass = &ma.prob[&key];
        for (rb, q) in rows {
            let row: Vec<String> = sources
                .iter()
                .map(|s| match *s {
                    Source::Left(c) | Source::Both(c, _) => ra[c].clone(),
                    Source::Right(c) => rb[c].clone(),
                })
                .collect();
            prob.insert(row, p * *q / mass);
        }
    }
    Ok(Distribution { arity: g.n() + 1, values: pa.values.union(&pb.values).cloned().collect(), prob })
}

/// For a horn `Λ^n_k` of distributions, given as the faces `d_i` for
/// `i ≠ k`, the tuples for the missing face whose every pair of entries has
/// positive probability in the face containing that pair. A distribution
/// filling the missing face must be supported on these tuples, so an empty
/// result means the horn has no filler.
pub fn missing_face_support(
    faces: &BTreeMap<usize, Distribution>,
    k: usize,
) -> Result<Vec<Vec<String>>, InstanceError> {
    let n = faces.len();
    let expected: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
    if n < 3 || k > n || faces.keys().copied().ne(expected.iter().copied()) || faces.values().any(|d| d.arity != n) {
        return Err(InstanceError::BadHorn);
    }
    let vertices = expected;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (va, vb) = (vertices[a], vertices[b]);
            let i = *faces.keys().find(|&&i| i != va && i != vb).expect("n >= 3 leaves a face");
            let pos = |v: usize| if v < i { v } else { v - 1 };
            let support: BTreeSet<Vec<String>> = faces[&i].marginal(&[pos(va), pos(vb)]).prob.into_keys().collect();
            edges.push((a, b, support));
        }
    }
    let alphabet: Vec<String> =
        faces.values().flat_map(|d| d.values.iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut out = Vec::new();
    let mut tuple = vec![0usize; n];
    loop {
        let named: Vec<String> = tuple.iter().map(|&x| alphabet[x].clone()).collect();
        if edges.iter().all(|(a, b, s)| s.contains(&vec![named[*a].clone(), named[*b].clone()])) {
            out.push(named);
        }
        let Some(pos) = tuple.iter().rposition(|&x| x + 1 < alphabet.len()) else { break };
        tuple[pos] += 1;
        tuple[pos + 1..].iter_mut().for_each(|x| *x = 0);
    }
    Ok(out)
}

/// The horn `Λ^3_3` on variables `A, B, C, D` over `{0, 1}` where `D` is
/// always 0 and any two of `A, B, C` take opposite values, each with
/// probability 1/2.
pub fn opposite_values_horn() -> BTreeMap<usize, Distribution> {
    let face =
        Distribution::uniform(3, &["0", "1"], &[&["0", "1", "0"], &["1", "0", "0"]]).expect("valid distribution");
    (0..3).map(|i| (i, face.clone())).collect()
}

#[derive(Serialize, Deserialize)]
struct DistRepr<V> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arity: Option<usize>,
    #[serde(default = "Vec::new")]
    values: Vec<V>,
    prob: BTreeMap<String, RationalText>,
}

impl Serialize for Distribution {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DistRepr {
            arity: Some(self.arity),
            values: self.values.iter().collect(),
            prob: self.prob.iter().map(|(r, p)| (r.join(","), RationalText::of(p))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Distribution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = DistRepr::<Scalar>::deserialize(d)?;
        let prob = repr
            .prob
            .iter()
            .map(|(k, p)| Ok((k.split(',').map(|s| s.trim().to_string()).collect::<Vec<_>>(), p.value()?)))
            .collect::<Result<Vec<_>, InstanceError>>()
            .map_err(serde::de::Error::custom)?;
        let arity = repr
            .arity
            .or_else(|| prob.first().map(|(r, _)| r.len()))
            .ok_or_else(|| serde::de::Error::custom("a distribution needs at least one tuple"))?;
        Distribution::new(arity, repr.values.into_iter().map(String::from), prob).map_err(serde::de::Error::custom)
    }
}
