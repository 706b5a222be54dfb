use serde::Serialize;

use super::{members, Complex};

/// The outcome of Graham reduction: the eliminated vertices in order and
/// the facets left when no vertex can be eliminated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrahamResult {
    pub order: Vec<usize>,
    pub residual: Vec<Vec<usize>>,
    #[serde(skip)]
    pub(crate) steps: Vec<(usize, u64)>,
}

impl GrahamResult {
    pub fn is_acyclic(&self) -> bool {
        self.residual.is_empty()
    }
}

/// A partially reduced complex, keeping the original vertex labels.
#[derive(Debug, Clone)]
pub(crate) struct Reduction {
    facets: Vec<u64>,
    remaining: u64,
}

impl Reduction {
    pub(crate) fn new(c: &Complex) -> Self {
        let remaining = c.facet_masks().iter().fold(0, |m, f| m | f);
        Self { facets: c.facet_masks().to_vec(), remaining }
    }

    #[cfg(test)]
    pub(crate) fn is_empty(&self) -> bool {
        self.remaining == 0
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = 1u64 << a | 1 << b;
        self.facets.iter().any(|&f| f & e == e)
    }

    /// Extremal vertices, restricted in the directed case to those joined
    /// to their neighbours in the remaining order.
    pub(crate) fn eligible(&self, directed: bool) -> Vec<usize> {
        let rest = members(self.remaining);
        rest.iter()
            .enumerate()
            .filter(|&(_, &v)| self.facets.iter().filter(|&&f| f >> v & 1 == 1).count() == 1)
            .filter(|&(pos, &v)| {
                !directed
                    || ((pos == 0 || self.has_edge(rest[pos - 1], v))
                        && (pos + 1 == rest.len() || self.has_edge(v, rest[pos + 1])))
            })
            .map(|(_, &v)| v)
            .collect()
    }

    /// Removes `v` and returns the facet that contained it.
    pub(crate) fn eliminate(&mut self, v: usize) -> u64 {
        let facet = *self.facets.iter().find(|&&f| f >> v & 1 == 1).expect("vertex lies in a facet");
        let reduced = self.facets.iter().map(|&f| f & !(1 << v)).collect();
        self.facets = Complex::from_masks(0, reduced).facet_masks().to_vec();
        self.remaining &= !(1 << v);
        facet
    }

    fn residual(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| members(f)).collect()
    }
}

pub(crate) fn reduce(c: &Complex, directed: bool, highest_first: bool) -> GrahamResult {
    let mut r = Reduction::new(c);
    let mut steps = Vec::new();
    loop {
        let eligible = r.eligible(directed);
        let pick = if highest_first { eligible.last() } else { eligible.first() };
        let Some(&v) = pick else { break };
        steps.push((v, r.eliminate(v)));
    }
    GrahamResult { order: steps.iter().map(|s| s.0).collect(), residual: r.residual(), steps }
}

/// Eliminates extremal vertices, lowest index first, until none is left.
pub fn graham_reduce(c: &Complex) -> GrahamResult {
    reduce(c, false, false)
}

/// Graham reduction restricted to extremal vertices joined by edges to
/// their predecessor and successor among the remaining vertices.
pub fn directed_graham_reduce(c: &Complex) -> GrahamResult {
    reduce(c, true, false)
}
