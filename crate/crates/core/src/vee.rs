//! ∨-decompositions of ordinals and the blockwise ∨-product of maps,
//! spans and squares.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::delta::{DeltaError, MonotoneMap};
use crate::squares::{Span, Square};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Min,
    Max,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VeeError {
    #[error("part {part} does not preserve the {endpoint:?} element")]
    EndpointViolation { part: usize, endpoint: Endpoint },
    #[error("empty family")]
    EmptyFamily,
    #[error("families of different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Delta(#[from] DeltaError),
}

/// A decomposition of `[n]` into `r + 2` pieces, given by its base map
/// `g: [r] -> [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeeDecomposition {
    pub base: MonotoneMap,
}

/// Parts `f_0, ..., f_{r+1}` of a ∨-product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeeFamily {
    pub parts: Vec<MonotoneMap>,
}

impl VeeDecomposition {
    pub fn new(base: MonotoneMap) -> Self {
        Self { base }
    }

    pub fn canonical(n: usize) -> Self {
        Self { base: MonotoneMap::identity(n) }
    }

    /// Total ordinal being decomposed.
    pub fn total(&self) -> usize {
        self.base.cod()
    }

    /// Sizes `n_0, ..., n_{r+1}` of the pieces.
    pub fn components(&self) -> Vec<usize> {
        let g = self.base.values();
        let mut out = Vec::with_capacity(g.len() + 1);
        out.push(g[0]);
        out.extend(g.windows(2).map(|w| w[1] - w[0]));
        out.push(self.base.cod() - g[g.len() - 1]);
        out
    }

    /// Start of each piece inside `[n]`.
    fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        out.extend_from_slice(self.base.values());
        out
    }

    /// The decomposition of the codomain of `f` induced by `f`.
    pub fn pushforward(&self, f: &MonotoneMap) -> Result<Self, VeeError> {
        Ok(Self { base: f.compose(&self.base)? })
    }

    /// The restrictions of `f` to the pieces of `self`, renormalized.
    pub fn components_of_map(&self, f: &MonotoneMap) -> Result<VeeFamily, VeeError> {
        let target = self.pushforward(f)?;
        let (src, dst) = (self.offsets(), target.offsets());
        let (src_sizes, dst_sizes) = (self.components(), target.components());
        let parts = (0..src.len())
            .map(|i| {
                let vals = (0..=src_sizes[i]).map(|j| f.apply(src[i] + j) - dst[i]).collect();
                MonotoneMap::from_raw(dst_sizes[i], vals)
            })
            .collect();
        Ok(VeeFamily { parts })
    }
}

impl VeeFamily {
    pub fn new(parts: Vec<MonotoneMap>) -> Result<Self, VeeError> {
        let family = Self { parts };
        family.check()?;
        Ok(family)
    }

    fn check(&self) -> Result<(), VeeError> {
        let last = self.parts.len().checked_sub(1).ok_or(VeeError::EmptyFamily)?;
        for (part, f) in self.parts.iter().enumerate() {
            if part < last && !f.preserves_max() {
                return Err(VeeError::EndpointViolation { part, endpoint: Endpoint::Max });
            }
            if part > 0 && !f.preserves_min() {
                return Err(VeeError::EndpointViolation { part, endpoint: Endpoint::Min });
            }
        }
        Ok(())
    }

    /// The blockwise gluing of the parts.
    pub fn product(&self) -> Result<MonotoneMap, VeeError> {
        self.check()?;
        let mut values = vec![0];
        let mut cod = 0;
        for f in &self.parts {
            values.pop();
            values.extend(f.values().iter().map(|v| v + cod));
            cod += f.cod();
        }
        Ok(MonotoneMap::from_raw(cod, values))
    }
}

pub fn vee_product(parts: &[MonotoneMap]) -> Result<MonotoneMap, VeeError> {
    VeeFamily { parts: parts.to_vec() }.product()
}

pub fn decompose_span(span: &Span, dec: &VeeDecomposition) -> Result<Vec<Span>, VeeError> {
    let fs = dec.components_of_map(&span.f)?.parts;
    let gs = dec.components_of_map(&span.g)?.parts;
    Ok(fs.into_iter().zip(gs).map(|(f, g)| Span { f, g }).collect())
}

pub fn decompose_square(sq: &Square, dec: &VeeDecomposition) -> Result<Vec<Square>, VeeError> {
    let right = dec.pushforward(&sq.f)?;
    let down = dec.pushforward(&sq.g)?;
    let fs = dec.components_of_map(&sq.f)?.parts;
    let gs = dec.components_of_map(&sq.g)?.parts;
    let hs = right.components_of_map(&sq.h)?.parts;
    let ks = down.components_of_map(&sq.k)?.parts;
    Ok(fs.into_iter().zip(gs).zip(hs.into_iter().zip(ks)).map(|((f, g), (h, k))| Square { f, g, h, k }).collect())
}

pub fn vee_product_spans(spans: &[Span]) -> Result<Span, VeeError> {
    let fs: Vec<_> = spans.iter().map(|s| s.f.clone()).collect();
    let gs: Vec<_> = spans.iter().map(|s| s.g.clone()).collect();
    Ok(Span { f: vee_product(&fs)?, g: vee_product(&gs)? })
}

pub fn vee_product_squares(squares: &[Square]) -> Result<Square, VeeError> {
    let pick = |sel: fn(&Square) -> &MonotoneMap| squares.iter().map(|q| sel(q).clone()).collect::<Vec<_>>();
    Ok(Square {
        f: vee_product(&pick(|q| &q.f))?,
        g: vee_product(&pick(|q| &q.g))?,
        h: vee_product(&pick(|q| &q.h))?,
        k: vee_product(&pick(|q| &q.k))?,
    })
}
