//! Simplicial complexes given by their facets, with Graham reduction,
//! chordality, sphere fillers, running intersection orders, their directed
//! variants, and the filler construction for acyclic configurations.

#[cfg(test)]
mod brute;
mod chordal;
mod config;
mod fill;
mod graham;
pub mod random;
mod rip;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chordal::{is_chordal, Graph};
pub use config::{polygon_triangulation, TriangulationError};
pub use fill::{fill_configuration, FillError, FillerProvider};
pub use graham::{directed_graham_reduce, graham_reduce, GrahamResult};
pub use rip::RipOrder;

/// Vertex sets are bitmasks, so the ground set is limited to 64 vertices.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is outside the ground set of {ground} vertices")]
    VertexOutOfRange { vertex: usize, ground: usize },
    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(usize),
}

pub(crate) fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

/// Vertices strictly greater than `v`.
pub(crate) fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

pub(crate) fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// A simplicial complex on the ground set `{0, …, ground-1}`, stored by its
/// maximal simplices. The same type serves as a directed complex, with the
/// natural order on the ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    ground: usize,
    /// Pairwise incomparable, sorted by their sorted vertex lists.
    facets: Vec<u64>,
}

pub type DirectedComplex = Complex;

impl Complex {
    /// Builds the complex generated by `simplices`; non-maximal and empty
    /// simplices are dropped. Every vertex must lie in some simplex.
    pub fn new(ground: usize, simplices: &[Vec<usize>]) -> Result<Self, ComplexError> {
        if ground > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(ground));
        }
        for &v in simplices.iter().flatten() {
            if v >= ground {
                return Err(ComplexError::VertexOutOfRange { vertex: v, ground });
            }
        }
        let c = Self::from_masks(ground, simplices.iter().map(|s| mask_of(s)).collect());
        let covered = c.facets.iter().fold(0, |m, f| m | f);
        if let Some(v) = (0..ground).find(|&v| covered >> v & 1 == 0) {
            return Err(ComplexError::UncoveredVertex(v));
        }
        Ok(c)
    }

    /// Keeps only the maximal nonempty masks.
    pub(crate) fn from_masks(ground: usize, mut masks: Vec<u64>) -> Self {
        masks.retain(|&m| m != 0);
        masks.sort_unstable();
        masks.dedup();
        let facets_unsorted: Vec<u64> =
            masks.iter().copied().filter(|&m| !masks.iter().any(|&o| o != m && o & m == m)).collect();
        let mut facets = facets_unsorted;
        facets.sort_by_key(|&m| members(m));
        Self { ground, facets }
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Self {
        Self::new(n + 1, &[(0..=n).collect()]).expect("valid simplex")
    }

    /// The spine `{0,1}, {1,2}, …, {n-1,n}` of `[n]`.
    pub fn spine(n: usize) -> Self {
        if n == 0 {
            return Self::simplex(0);
        }
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, i + 1]).collect();
        Self::new(n + 1, &edges).expect("valid spine")
    }

    /// All subsets of `[n]` avoiding `i` or avoiding `j`.
    pub fn basic_span(n: usize, i: usize, j: usize) -> Result<Self, ComplexError> {
        let without = |x: usize| (0..=n).filter(|&v| v != x).collect::<Vec<_>>();
        Self::new(n + 1, &[without(i), without(j)])
    }

    /// All subsets of the image of `h` or of the image of `k`.
    pub fn span_configuration(n: usize, h: &[usize], k: &[usize]) -> Result<Self, ComplexError> {
        Self::new(n + 1, &[h.to_vec(), k.to_vec()])
    }

    /// Number of vertices.
    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| members(m)).collect()
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub(crate) fn contains_mask(&self, a: u64) -> bool {
        self.facets.iter().any(|&f| f & a == a)
    }

    pub fn membership(&self, simplex: &[usize]) -> bool {
        simplex.iter().all(|&v| v < self.ground) && self.contains_mask(mask_of(simplex))
    }

    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        self.facets()
    }

    pub fn skeleton1(&self) -> Graph {
        let mut adj = vec![0u64; self.ground];
        for &f in &self.facets {
            for v in members(f) {
                adj[v] |= f & !(1 << v);
            }
        }
        Graph::from_adjacency(adj)
    }

    pub fn is_connected(&self) -> bool {
        self.ground > 0 && self.skeleton1().is_connected()
    }

    pub fn is_extremal(&self, v: usize) -> bool {
        self.facets.iter().filter(|&&f| f >> v & 1 == 1).count() == 1
    }

    /// Every edge `{i, i+1}` of the ground order is a simplex.
    pub fn has_spine(&self) -> bool {
        (1..self.ground).all(|v| self.contains_mask(0b11 << (v - 1)))
    }

    /// A vertex set of size at least three whose proper subsets all lie in
    /// the complex but which does not, if there is one.
    pub fn unfilled_sphere(&self) -> Option<Vec<usize>> {
        let adj = self.skeleton1();
        let mut found = None;
        // Every such set is a clique of the 1-skeleton.
        fn grow(c: &Complex, g: &Graph, clique: u64, candidates: u64, found: &mut Option<u64>) {
            if found.is_some() {
                return;
            }
            if clique.count_ones() >= 3 && !c.contains_mask(clique) {
                let boundary_in = members(clique).iter().all(|&v| c.contains_mask(clique & !(1 << v)));
                if boundary_in {
                    *found = Some(clique);
                }
                // Larger cliques contain this non-simplex as a proper subset.
                return;
            }
            for v in members(candidates) {
                let later = candidates & g.neighbours(v) & above(v);
                grow(c, g, clique | 1 << v, later, found);
            }
        }
        for v in 0..self.ground {
            let later = adj.neighbours(v) & above(v);
            grow(self, &adj, 1 << v, later, &mut found);
        }
        found.map(members)
    }

    pub fn spheres_filled(&self) -> bool {
        self.unfilled_sphere().is_none()
    }

    pub fn is_graham_acyclic(&self) -> bool {
        graham_reduce(self).is_acyclic()
    }

    pub fn is_directed_graham_acyclic(&self) -> bool {
        directed_graham_reduce(self).is_acyclic()
    }

    pub fn rip_order(&self) -> Option<RipOrder> {
        rip::rip_order(self)
    }

    pub fn directed_rip_order(&self) -> Option<RipOrder> {
        rip::directed_rip_order(self)
    }

    /// Connected and Graham acyclic.
    pub fn is_acyclic_configuration(&self) -> bool {
        self.is_connected() && self.is_graham_acyclic()
    }

    /// Directed Graham acyclic; this forces the spine and hence connectivity.
    pub fn is_directed_acyclic_configuration(&self) -> bool {
        self.ground > 0 && self.is_directed_graham_acyclic()
    }

    /// The complex on the vertices other than `v`, relabelled to close the
    /// gap.
    pub fn remove_vertex(&self, v: usize) -> Self {
        let low = (1u64 << v) - 1;
        let squeeze = |m: u64| (m & low) | ((m >> 1) & !low);
        Self::from_masks(self.ground - 1, self.facets.iter().map(|&f| squeeze(f & !(1 << v))).collect())
    }
}

/// JSON form `{"ground": n+1, "facets": [[…], …], "directed": bool}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub ground: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default)]
    pub directed: bool,
}

impl ComplexFile {
    pub fn complex(&self) -> Result<Complex, ComplexError> {
        Complex::new(self.ground, &self.facets)
    }

    pub fn of(c: &Complex, directed: bool) -> Self {
        Self { ground: c.ground(), facets: c.facets(), directed }
    }
}
