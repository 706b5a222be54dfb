//! Commuting squares in the simplex category.
//!
//! A square is drawn with `f` on top, `g` on the left, `h` on the right and
//! `k` on the bottom:
//!
//! ```text
//!   [m] --f--> [p]
//!    |          |
//!    g          h
//!    v          v
//!   [q] --k--> [n]
//! ```

mod catalog;
mod factor;
mod grid;
mod pushout;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::delta::{DeltaError, MonotoneMap};
use crate::vee::VeeError;

pub(crate) use catalog::basic_coface;
pub use catalog::{catalog, segal_square, CatalogEntry, CatalogKind, Family};
pub use factor::{factor_balanced, factor_into_basic, factor_pushout_horizontal};
pub use grid::{Grid, Tiling};
pub use pushout::{
    compute_pushout, has_pushout, pushout_failure_witness, violated_condition, FailureWitness, PushoutCondition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareError {
    #[error("span legs start at different objects ([{0}] and [{1}])")]
    SpanMismatch(usize, usize),
    #[error("square edges do not fit together")]
    Shape,
    #[error("square does not commute")]
    NonCommuting,
    #[error("span has no pushout: {0}")]
    NoPushout(PushoutCondition),
    #[error("span has a pushout")]
    HasPushout,
    #[error("square is not a pushout")]
    NotPushout,
    #[error("factorization is not efficient or does not compose to the top edge")]
    InefficientFactorization,
    #[error("square is not balanced")]
    NotBalanced,
    #[error("square is trivial")]
    Trivial,
    #[error("grid cells do not share edges at row {row}, column {col}")]
    GridMismatch { row: usize, col: usize },
    #[error("empty grid")]
    EmptyGrid,
    #[error(transparent)]
    Delta(#[from] DeltaError),
    #[error(transparent)]
    Vee(#[from] VeeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Span {
    pub f: MonotoneMap,
    pub g: MonotoneMap,
}

impl Span {
    pub fn new(f: MonotoneMap, g: MonotoneMap) -> Result<Self, SquareError> {
        if f.dom() != g.dom() {
            return Err(SquareError::SpanMismatch(f.dom(), g.dom()));
        }
        Ok(Self { f, g })
    }

    pub fn mirror(&self) -> Self {
        Self { f: self.g.clone(), g: self.f.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Square {
    pub f: MonotoneMap,
    pub g: MonotoneMap,
    pub h: MonotoneMap,
    pub k: MonotoneMap,
}

impl Square {
    /// Checks shapes and commutativity.
    pub fn new(f: MonotoneMap, g: MonotoneMap, h: MonotoneMap, k: MonotoneMap) -> Result<Self, SquareError> {
        let sq = Self { f, g, h, k };
        sq.check()?;
        Ok(sq)
    }

    pub fn check(&self) -> Result<(), SquareError> {
        let shape_ok = self.f.dom() == self.g.dom()
            && self.h.dom() == self.f.cod()
            && self.k.dom() == self.g.cod()
            && self.h.cod() == self.k.cod();
        if !shape_ok {
            return Err(SquareError::Shape);
        }
        if self.h.compose(&self.f)? != self.k.compose(&self.g)? {
            return Err(SquareError::NonCommuting);
        }
        Ok(())
    }

    /// The trivial square with identities on the left and right.
    pub fn trivial_horizontal(f: MonotoneMap) -> Self {
        let (m, p) = (f.dom(), f.cod());
        Self { k: f.clone(), f, g: MonotoneMap::identity(m), h: MonotoneMap::identity(p) }
    }

    /// The trivial square with identities on top and bottom.
    pub fn trivial_vertical(g: MonotoneMap) -> Self {
        let (m, q) = (g.dom(), g.cod());
        Self { h: g.clone(), g, f: MonotoneMap::identity(m), k: MonotoneMap::identity(q) }
    }

    pub fn span(&self) -> Span {
        Span { f: self.f.clone(), g: self.g.clone() }
    }

    pub fn mirror(&self) -> Self {
        Self { f: self.g.clone(), g: self.f.clone(), h: self.k.clone(), k: self.h.clone() }
    }

    /// The lexicographically smaller of the square and its mirror.
    pub fn normalize(&self) -> Self {
        let m = self.mirror();
        if m < *self {
            m
        } else {
            self.clone()
        }
    }

    /// `(m, p, q, n)`.
    pub fn objects(&self) -> (usize, usize, usize, usize) {
        (self.f.dom(), self.f.cod(), self.g.cod(), self.h.cod())
    }

    pub fn is_trivial(&self) -> bool {
        (self.f.is_identity() && self.k.is_identity()) || (self.g.is_identity() && self.h.is_identity())
    }

    pub fn all_cofaces(&self) -> bool {
        [&self.f, &self.g, &self.h, &self.k].iter().all(|m| m.is_coface())
    }

    /// `self` followed by `right`, side by side.
    pub fn hcompose(&self, right: &Square) -> Result<Square, SquareError> {
        if self.h != right.g {
            return Err(SquareError::Shape);
        }
        Ok(Square { f: right.f.compose(&self.f)?, g: self.g.clone(), h: right.h.clone(), k: right.k.compose(&self.k)? })
    }

    /// `self` above `below`.
    pub fn vcompose(&self, below: &Square) -> Result<Square, SquareError> {
        if self.k != below.f {
            return Err(SquareError::Shape);
        }
        Ok(Square { f: self.f.clone(), g: below.g.compose(&self.g)?, h: below.h.compose(&self.h)?, k: below.k.clone() })
    }
}

pub fn is_pushout_square(q: &Square) -> Result<bool, SquareError> {
    q.check()?;
    let span = q.span();
    Ok(has_pushout(&span) && compute_pushout(&span)? == *q)
}

/// Balanced: all edges cofaces, jointly surjective cospan, `p + q = m + n`.
/// Squares with a non-injective edge are reported as not balanced.
pub fn is_balanced(q: &Square) -> Result<bool, SquareError> {
    q.check()?;
    if !q.all_cofaces() {
        return Ok(false);
    }
    let (m, p, qq, n) = q.objects();
    Ok(p + qq == m + n && jointly_surjective(&q.h, &q.k))
}

fn jointly_surjective(h: &MonotoneMap, k: &MonotoneMap) -> bool {
    let mut hit = vec![false; h.cod() + 1];
    h.values().iter().chain(k.values()).for_each(|&v| hit[v] = true);
    hit.into_iter().all(|b| b)
}

/// Every edge `{i, i+1}` of `[n]` lies in the image of `h` or of `k`.
pub fn spine_condition(h: &MonotoneMap, k: &MonotoneMap) -> bool {
    let covers = |m: &MonotoneMap, i: usize| {
        let v = m.values();
        v.binary_search(&i).is_ok() && v.binary_search(&(i + 1)).is_ok()
    };
    (0..h.cod()).all(|i| covers(h, i) || covers(k, i))
}

/// Whether the square is a pushout of the underlying finite sets.
pub fn is_set_pushout(q: &Square) -> Result<bool, SquareError> {
    q.check()?;
    let (m, p, _, n) = q.objects();
    let size = p + 1 + q.g.cod() + 1;
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for i in 0..=m {
        let (a, b) = (find(&mut parent, q.f.apply(i)), find(&mut parent, p + 1 + q.g.apply(i)));
        parent[a] = b;
    }
    let mut class_image = vec![None; size];
    let mut hit = vec![false; n + 1];
    for x in 0..size {
        let target = if x <= p { q.h.apply(x) } else { q.k.apply(x - p - 1) };
        let root = find(&mut parent, x);
        match class_image[root] {
            None => {
                if hit[target] {
                    return Ok(false);
                }
                hit[target] = true;
                class_image[root] = Some(target);
            }
            Some(t) if t != target => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(hit.into_iter().all(|b| b))
}

pub fn is_concrete_pushout(q: &Square) -> Result<bool, SquareError> {
    Ok(is_pushout_square(q)? && is_set_pushout(q)?)
}
