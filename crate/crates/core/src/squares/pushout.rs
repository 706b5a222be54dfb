use std::fmt;

use serde::Serialize;

use super::{Span, Square, SquareError};
use crate::delta::MonotoneMap;

/// One of the three conditions for a span to have a pushout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PushoutCondition {
    /// `f(0) = 0` or `g(0) = 0`.
    Min,
    /// `f(i) <= f(i-1) + 1` or `g(i) <= g(i-1) + 1`.
    Middle { index: usize },
    /// `f(m) = p` or `g(m) = q`.
    Max,
}

impl PushoutCondition {
    /// Position of the offending piece in the canonical decomposition.
    pub fn component(self, m: usize) -> usize {
        match self {
            PushoutCondition::Min => 0,
            PushoutCondition::Middle { index } => index,
            PushoutCondition::Max => m + 1,
        }
    }
}

impl fmt::Display for PushoutCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PushoutCondition::Min => write!(f, "neither leg preserves the minimum"),
            PushoutCondition::Middle { index } => write!(f, "both legs jump by more than one at {index}"),
            PushoutCondition::Max => write!(f, "neither leg preserves the maximum"),
        }
    }
}

/// The first failing condition, scanning the canonical decomposition from
/// the left.
pub fn violated_condition(span: &Span) -> Option<PushoutCondition> {
    let (f, g) = (span.f.values(), span.g.values());
    let m = span.f.dom();
    if f[0] > 0 && g[0] > 0 {
        return Some(PushoutCondition::Min);
    }
    if let Some(i) = (1..=m).find(|&i| f[i] > f[i - 1] + 1 && g[i] > g[i - 1] + 1) {
        return Some(PushoutCondition::Middle { index: i });
    }
    if f[m] < span.f.cod() && g[m] < span.g.cod() {
        return Some(PushoutCondition::Max);
    }
    None
}

pub fn has_pushout(span: &Span) -> bool {
    violated_condition(span).is_none()
}

/// Pushout of a span whose pieces are each one of the minimal shapes.
#[cfg(test)]
fn component_pushout(span: Span) -> Square {
    let Span { f, g } = span;
    if f.is_identity() {
        Square::trivial_vertical(g)
    } else if g.is_identity() {
        Square::trivial_horizontal(f)
    } else if f.cod() == 0 {
        let k = MonotoneMap::from_raw(0, vec![0; g.cod() + 1]);
        Square { f, g, h: MonotoneMap::identity(0), k }
    } else {
        debug_assert_eq!(g.cod(), 0);
        let h = MonotoneMap::from_raw(0, vec![0; f.cod() + 1]);
        Square { f, g, h, k: MonotoneMap::identity(0) }
    }
}

/// The pushout as the ∨-product of the pushouts of the canonical pieces.
#[cfg(test)]
fn pushout_by_pieces(span: &Span) -> Result<Square, SquareError> {
    use crate::vee::{decompose_span, vee_product_squares, VeeDecomposition};
    let dec = VeeDecomposition::canonical(span.f.dom());
    let pieces: Vec<Square> = decompose_span(span, &dec)?.into_iter().map(component_pushout).collect();
    Ok(vee_product_squares(&pieces)?)
}

/// The pushout, glued piece by piece along the canonical ∨-decomposition
/// of `[m]`. Each piece has one leg that is an identity or collapses to a
/// point, so its pushout is read off directly.
pub fn compute_pushout(span: &Span) -> Result<Square, SquareError> {
    if let Some(cond) = violated_condition(span) {
        return Err(SquareError::NoPushout(cond));
    }
    let (f, g) = (span.f.values(), span.g.values());
    let (p, q, m) = (span.f.cod(), span.g.cod(), span.f.dom());
    // (segment of [p], segment of [q], has a left endpoint, has a right endpoint)
    let pieces = std::iter::once(((0, f[0]), (0, g[0]), false, true))
        .chain((1..=m).map(|i| ((f[i - 1], f[i]), (g[i - 1], g[i]), true, true)))
        .chain(std::iter::once(((f[m], p), (g[m], q), true, false)));
    let (mut h, mut k) = (vec![0; p + 1], vec![0; q + 1]);
    let mut offset = 0;
    for ((fs, fe), (gs, ge), left, right) in pieces {
        let (a, b) = (fe - fs, ge - gs);
        let identity = |len: usize| len == usize::from(left && right);
        let width = if identity(a) {
            (gs..=ge).for_each(|y| k[y] = offset + y - gs);
            if left {
                h[fs] = offset;
            }
            if right {
                h[fe] = offset + b;
            }
            b
        } else if identity(b) {
            (fs..=fe).for_each(|x| h[x] = offset + x - fs);
            if left {
                k[gs] = offset;
            }
            if right {
                k[ge] = offset + a;
            }
            a
        } else {
            (fs..=fe).for_each(|x| h[x] = offset);
            (gs..=ge).for_each(|y| k[y] = offset);
            0
        };
        offset += width;
    }
    Ok(Square {
        f: span.f.clone(),
        g: span.g.clone(),
        h: MonotoneMap::from_raw(offset, h),
        k: MonotoneMap::from_raw(offset, k),
    })
}

/// Two cocones into `[1]` under a span without pushout. Every commuting
/// cospan under the span fails to factor at least one of them: which one
/// depends on how the cospan orders the two sides of the failing piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub condition: PushoutCondition,
    pub phi: MonotoneMap,
    pub psi: MonotoneMap,
    pub mirror_phi: MonotoneMap,
    pub mirror_psi: MonotoneMap,
}

fn step(n: usize, up_from: usize) -> MonotoneMap {
    MonotoneMap::from_raw(1, (0..=n).map(|x| usize::from(x >= up_from)).collect())
}

pub fn pushout_failure_witness(span: &Span) -> Result<FailureWitness, SquareError> {
    let condition = violated_condition(span).ok_or(SquareError::HasPushout)?;
    let (f, g) = (&span.f, &span.g);
    let (p, q, m) = (f.cod(), g.cod(), f.dom());
    let ones = |n: usize| step(n, 0);
    let zeros = |n: usize| step(n, n + 1);
    let (phi, psi, mirror_phi, mirror_psi) = match condition {
        PushoutCondition::Min => (step(p, f.apply(0)), ones(q), ones(p), step(q, g.apply(0))),
        PushoutCondition::Middle { index: i } => {
            (step(p, f.apply(i - 1) + 1), step(q, g.apply(i)), step(p, f.apply(i)), step(q, g.apply(i - 1) + 1))
        }
        PushoutCondition::Max => (step(p, f.apply(m) + 1), zeros(q), zeros(p), step(q, g.apply(m) + 1)),
    };
    Ok(FailureWitness { condition, phi, psi, mirror_phi, mirror_psi })
}
