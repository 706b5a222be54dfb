//! Objects and morphisms of the simplex category: monotone maps between
//! finite ordinals `[n] = {0, ..., n}`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error("values are not monotone at position {0}")]
    NotMonotone(usize),
    #[error("value {value} at position {pos} exceeds codomain [{cod}]")]
    OutOfRange { pos: usize, value: usize, cod: usize },
    #[error("a map needs at least one value")]
    EmptyDomain,
    #[error("cannot compose: inner map lands in [{inner_cod}], outer map starts at [{outer_dom}]")]
    Mismatch { inner_cod: usize, outer_dom: usize },
    #[error("generator index {i} out of range for [{n}]")]
    IndexOutOfRange { n: usize, i: usize },
}

/// A monotone map `[dom] -> [cod]`, stored as its dense value sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    cod: usize,
    values: Vec<usize>,
}

/// Which generating map a defect-1 map is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `d^{n,i}: [n-1] -> [n]`, skipping `i`.
    Coface { n: usize, i: usize },
    /// `s^{n,i}: [n+1] -> [n]`, hitting `i` twice.
    Codegeneracy { n: usize, i: usize },
}

impl MonotoneMap {
    pub fn new(cod: usize, values: Vec<usize>) -> Result<Self, DeltaError> {
        if values.is_empty() {
            return Err(DeltaError::EmptyDomain);
        }
        for (pos, &value) in values.iter().enumerate() {
            if value > cod {
                return Err(DeltaError::OutOfRange { pos, value, cod });
            }
            if pos > 0 && values[pos - 1] > value {
                return Err(DeltaError::NotMonotone(pos));
            }
        }
        Ok(Self { cod, values })
    }

    /// Caller guarantees monotonicity and range.
    pub(crate) fn from_raw(cod: usize, values: Vec<usize>) -> Self {
        debug_assert!(Self::new(cod, values.clone()).is_ok());
        Self { cod, values }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_raw(n, (0..=n).collect())
    }

    pub fn constant(dom: usize, cod: usize, value: usize) -> Result<Self, DeltaError> {
        Self::new(cod, vec![value; dom + 1])
    }

    /// `d^{n,i}: [n-1] -> [n]`.
    pub fn coface(n: usize, i: usize) -> Result<Self, DeltaError> {
        if n == 0 || i > n {
            return Err(DeltaError::IndexOutOfRange { n, i });
        }
        Ok(Self::from_raw(n, (0..n).map(|x| if x < i { x } else { x + 1 }).collect()))
    }

    /// `s^{n,i}: [n+1] -> [n]`.
    pub fn codegeneracy(n: usize, i: usize) -> Result<Self, DeltaError> {
        if i > n {
            return Err(DeltaError::IndexOutOfRange { n, i });
        }
        Ok(Self::from_raw(n, (0..=n + 1).map(|x| if x <= i { x } else { x - 1 }).collect()))
    }

    pub fn dom(&self) -> usize {
        self.values.len() - 1
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonotoneMap) -> Result<MonotoneMap, DeltaError> {
        if inner.cod != self.dom() {
            return Err(DeltaError::Mismatch { inner_cod: inner.cod, outer_dom: self.dom() });
        }
        Ok(Self::from_raw(self.cod, inner.values.iter().map(|&x| self.values[x]).collect()))
    }

    /// Size of the image.
    pub fn image_len(&self) -> usize {
        1 + self.values.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im = self.values.clone();
        im.dedup();
        im
    }

    pub fn defect(&self) -> usize {
        self.dom() + self.cod + 2 - 2 * self.image_len()
    }

    pub fn is_coface(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_codegeneracy(&self) -> bool {
        self.values[0] == 0 && self.values[self.dom()] == self.cod && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_identity(&self) -> bool {
        self.dom() == self.cod && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn preserves_min(&self) -> bool {
        self.values[0] == 0
    }

    pub fn preserves_max(&self) -> bool {
        self.values[self.dom()] == self.cod
    }

    /// Classifies defect-1 maps.
    pub fn as_generator(&self) -> Option<Generator> {
        if self.defect() != 1 {
            return None;
        }
        if self.is_coface() {
            let i = (0..=self.cod).find(|x| self.values.binary_search(x).is_err())?;
            Some(Generator::Coface { n: self.cod, i })
        } else {
            let i = self.values.windows(2).position(|w| w[0] == w[1])?;
            Some(Generator::Codegeneracy { n: self.cod, i })
        }
    }

    /// Epi-mono factorization `self = d ∘ s`.
    pub fn reedy_factorize(&self) -> (MonotoneMap, MonotoneMap) {
        let image = self.image();
        let k = image.len() - 1;
        let s = self.values.iter().map(|v| image.binary_search(v).expect("value in image")).collect();
        (Self::from_raw(k, s), Self::from_raw(self.cod, image))
    }

    /// Generating maps in application order: codegeneracies by decreasing
    /// index, then cofaces by increasing index. Composing them in sequence
    /// gives back `self`.
    pub fn factor_into_generators(&self) -> Vec<MonotoneMap> {
        let mut out = Vec::with_capacity(self.defect());
        let collapses: Vec<usize> =
            self.values.windows(2).enumerate().filter(|(_, w)| w[0] == w[1]).map(|(j, _)| j).collect();
        let mut dim = self.dom();
        for &j in collapses.iter().rev() {
            dim -= 1;
            out.push(Self::codegeneracy(dim, j).expect("collapse index in range"));
        }
        let image = self.image();
        let missing = (0..=self.cod).filter(|x| image.binary_search(x).is_err());
        for i in missing {
            dim += 1;
            out.push(Self::coface(dim, i).expect("missing value in range"));
        }
        out
    }

    /// Whether `self ∘ inner` is an efficient factorization of the composite.
    pub fn is_efficient_with(&self, inner: &MonotoneMap) -> Result<bool, DeltaError> {
        let c = self.compose(inner)?;
        Ok(c.defect() == self.defect() + inner.defect())
    }
}

impl Generator {
    pub fn to_map(self) -> MonotoneMap {
        match self {
            Generator::Coface { n, i } => MonotoneMap::coface(n, i),
            Generator::Codegeneracy { n, i } => MonotoneMap::codegeneracy(n, i),
        }
        .expect("generator indices are in range")
    }
}

/// Composes a sequence given in application order.
pub fn compose_all<'a>(
    maps: impl IntoIterator<Item = &'a MonotoneMap>,
    start: usize,
) -> Result<MonotoneMap, DeltaError> {
    maps.into_iter().try_fold(MonotoneMap::identity(start), |acc, g| g.compose(&acc))
}

/// All monotone maps `[m] -> [n]` in lexicographic order of values.
pub fn enumerate_maps(m: usize, n: usize) -> MapIter {
    MapIter { n, next: Some(vec![0; m + 1]) }
}

pub struct MapIter {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for MapIter {
    type Item = MonotoneMap;

    fn next(&mut self) -> Option<MonotoneMap> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if let Some(pos) = succ.iter().rposition(|&v| v < self.n) {
            let v = succ[pos] + 1;
            succ[pos..].iter_mut().for_each(|x| *x = v);
            self.next = Some(succ);
        }
        Some(MonotoneMap::from_raw(self.n, cur))
    }
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}]{:?}", self.dom(), self.cod, self.values)
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize)]
struct MapRepr<'a> {
    dom: usize,
    cod: usize,
    values: &'a [usize],
}

impl Serialize for MonotoneMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MapRepr { dom: self.dom(), cod: self.cod, values: &self.values }.serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MapInput {
    Full { dom: usize, cod: usize, values: Vec<usize> },
    Id { id: usize },
    D { d: (usize, usize) },
    S { s: (usize, usize) },
}

impl<'de> Deserialize<'de> for MonotoneMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let map = match MapInput::deserialize(d)? {
            MapInput::Full { dom, cod, values } => {
                if values.len() != dom + 1 {
                    return Err(D::Error::custom(format!("dom {dom} needs {} values, got {}", dom + 1, values.len())));
                }
                MonotoneMap::new(cod, values)
            }
            MapInput::Id { id } => Ok(MonotoneMap::identity(id)),
            MapInput::D { d: (n, i) } => MonotoneMap::coface(n, i),
            MapInput::S { s: (n, i) } => MonotoneMap::codegeneracy(n, i),
        };
        map.map_err(D::Error::custom)
    }
}
