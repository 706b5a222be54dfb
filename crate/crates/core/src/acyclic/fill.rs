use std::collections::BTreeMap;
use std::fmt::Debug;

use thiserror::Error;

use super::{mask_of, members, Complex, RipOrder};
use crate::delta::MonotoneMap;
use crate::squares::{factor_balanced, Square};

/// A simplicial object that can restrict simplices and fill basic spans.
pub trait FillerProvider {
    type Simplex: Clone + PartialEq + Debug;

    fn simplex_dim(&self, x: &Self::Simplex) -> usize;

    /// The action of `f: [m] -> [dim x]` on `x`.
    fn face(&self, x: &Self::Simplex, f: &MonotoneMap) -> Self::Simplex;

    /// Some `z` of dimension `n` with `d_j z = x` and `d_i z = y`, for
    /// `i < j` and `d_i x = d_{j-1} y`.
    fn span_fill(&self, x: &Self::Simplex, y: &Self::Simplex, i: usize, j: usize, n: usize) -> Option<Self::Simplex>;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillError {
    #[error("the complex is not a {0}acyclic configuration")]
    NotAcyclic(&'static str),
    #[error("no simplex assigned to facet {0:?}")]
    MissingFacet(Vec<usize>),
    #[error("{0:?} is not a facet of the configuration")]
    UnknownFacet(Vec<usize>),
    #[error("facet {facet:?} needs a simplex of dimension {expected}, got {found}")]
    WrongDimension { facet: Vec<usize>, expected: usize, found: usize },
    #[error("facets {first:?} and {second:?} disagree on {shared:?}")]
    IncompatibleAssignment { first: Vec<usize>, second: Vec<usize>, shared: Vec<usize> },
    #[error("no span filler when adding facet {facet:?} (d_{j} against d_{i} in dimension {n})")]
    NoFiller { facet: Vec<usize>, i: usize, j: usize, n: usize },
}

/// `[|sub|-1] -> [|sup|-1]` for vertex sets `sub ⊆ sup`.
fn inclusion(sub: u64, sup: u64) -> MonotoneMap {
    let sup = members(sup);
    let values = members(sub).iter().map(|v| sup.binary_search(v).expect("subset")).collect();
    MonotoneMap::new(sup.len() - 1, values).expect("inclusions are monotone")
}

/// Builds a simplex on the whole ground set restricting to the assigned
/// simplex on every facet, one running intersection step at a time. In the
/// directed case every step is a pushout and only inner spans are filled.
pub fn fill_configuration<P: FillerProvider>(
    provider: &P,
    s: &Complex,
    assignment: &BTreeMap<Vec<usize>, P::Simplex>,
    directed: bool,
) -> Result<P::Simplex, FillError> {
    let order: RipOrder = if directed {
        if !s.is_directed_acyclic_configuration() {
            return Err(FillError::NotAcyclic("directed "));
        }
        s.directed_rip_order()
    } else {
        if !s.is_acyclic_configuration() {
            return Err(FillError::NotAcyclic(""));
        }
        s.rip_order()
    }
    .expect("acyclic complexes have running intersection orders");

    let facets = s.facets();
    if let Some(extra) = assignment.keys().find(|k| !facets.contains(k)) {
        return Err(FillError::UnknownFacet(extra.clone()));
    }
    for f in &facets {
        let x = assignment.get(f).ok_or_else(|| FillError::MissingFacet(f.clone()))?;
        let found = provider.simplex_dim(x);
        if found + 1 != f.len() {
            return Err(FillError::WrongDimension { facet: f.clone(), expected: f.len() - 1, found });
        }
    }
    for (a, fa) in facets.iter().enumerate() {
        for fb in &facets[a + 1..] {
            let (ma, mb) = (mask_of(fa), mask_of(fb));
            let shared = ma & mb;
            if shared != 0
                && provider.face(&assignment[fa], &inclusion(shared, ma))
                    != provider.face(&assignment[fb], &inclusion(shared, mb))
            {
                return Err(FillError::IncompatibleAssignment {
                    first: fa.clone(),
                    second: fb.clone(),
                    shared: members(shared),
                });
            }
        }
    }

    let mut union = mask_of(&order.facets[0]);
    let mut filler = assignment[&order.facets[0]].clone();
    for facet in &order.facets[1..] {
        let t = mask_of(facet);
        let meet = t & union;
        let total = t | union;
        let step =
            Square::new(inclusion(meet, t), inclusion(meet, union), inclusion(t, total), inclusion(union, total))
                .expect("inclusions commute");
        let grid = factor_balanced(&step).expect("running intersection steps are nontrivial balanced squares");
        // corners[r][c] holds the simplex on the top-left corner of cell (r, c).
        let (rows, cols) = (grid.rows, grid.cols);
        let mut corners: Vec<Vec<Option<P::Simplex>>> = vec![vec![None; cols + 1]; rows + 1];
        let top = &assignment[facet];
        // Top edge: faces of the new facet; left edge: faces of the filler so far.
        let mut acc = MonotoneMap::identity(step.f.cod());
        for c in (0..=cols).rev() {
            corners[0][c] = Some(provider.face(top, &acc));
            if c > 0 {
                acc = acc.compose(&grid.cells[0][c - 1].f).expect("row edges compose");
            }
        }
        let mut acc = MonotoneMap::identity(step.g.cod());
        for r in (0..=rows).rev() {
            corners[r][0] = Some(provider.face(&filler, &acc));
            if r > 0 {
                acc = acc.compose(&grid.cells[r - 1][0].g).expect("column edges compose");
            }
        }
        for r in 0..rows {
            for c in 0..cols {
                let cell = &grid.cells[r][c];
                let right = corners[r][c + 1].clone().expect("filled");
                let below = corners[r + 1][c].clone().expect("filled");
                let n = cell.h.cod();
                let (beta, alpha) = (missing(&cell.h), missing(&cell.k));
                debug_assert!(!directed || alpha.abs_diff(beta) >= 2, "directed steps fill inner spans only");
                let z = if alpha < beta {
                    provider.span_fill(&right, &below, alpha, beta, n)
                } else {
                    provider.span_fill(&below, &right, beta, alpha, n)
                };
                let (i, j) = (alpha.min(beta), alpha.max(beta));
                corners[r + 1][c + 1] = Some(z.ok_or_else(|| FillError::NoFiller { facet: facet.clone(), i, j, n })?);
            }
        }
        filler = corners[rows][cols].take().expect("filled");
        union = total;
    }
    debug_assert!(facets.iter().all(|f| provider.face(&filler, &inclusion(mask_of(f), union)) == assignment[f]));
    Ok(filler)
}

/// The index a coface skips.
fn missing(d: &MonotoneMap) -> usize {
    (0..=d.cod()).find(|x| d.values().binary_search(x).is_err()).expect("coface skips one index")
}

#[cfg(test)]
pub(crate) fn tests_inclusion(sub: u64, sup: u64) -> MonotoneMap {
    inclusion(sub, sup)
}
