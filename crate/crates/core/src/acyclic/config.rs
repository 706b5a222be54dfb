use std::collections::BTreeMap;

use thiserror::Error;

use super::{Complex, DirectedComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("a polygon needs at least three vertices, got n = {0}")]
    TooSmall(usize),
    #[error("expected {expected} triangles, got {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("triangle {0:?} does not have three distinct vertices in range")]
    BadTriangle(Vec<usize>),
    #[error("edge {0:?} lies in the wrong number of triangles")]
    EdgeMultiplicity((usize, usize)),
    #[error("diagonals {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
}

/// The edges and triangles of a triangulation of the polygon with vertices
/// `0, …, n` in order.
pub fn polygon_triangulation(n: usize, triangles: &[Vec<usize>]) -> Result<DirectedComplex, TriangulationError> {
    if n < 2 {
        return Err(TriangulationError::TooSmall(n));
    }
    if triangles.len() != n - 1 {
        return Err(TriangulationError::WrongCount { expected: n - 1, found: triangles.len() });
    }
    let mut uses: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for t in triangles {
        let mut t = t.clone();
        t.sort_unstable();
        t.dedup();
        if t.len() != 3 || t[2] > n {
            return Err(TriangulationError::BadTriangle(t));
        }
        for e in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            *uses.entry(e).or_default() += 1;
        }
    }
    let boundary = |(a, b): (usize, usize)| b == a + 1 || (a == 0 && b == n);
    for e in (0..n).map(|i| (i, i + 1)).chain([(0, n)]) {
        if uses.get(&e) != Some(&1) {
            return Err(TriangulationError::EdgeMultiplicity(e));
        }
    }
    let diagonals: Vec<(usize, usize)> = uses.keys().copied().filter(|&e| !boundary(e)).collect();
    for &d in &diagonals {
        if uses[&d] != 2 {
            return Err(TriangulationError::EdgeMultiplicity(d));
        }
    }
    for (x, &(a, b)) in diagonals.iter().enumerate() {
        for &(c, d) in &diagonals[x + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return Err(TriangulationError::Crossing((a, b), (c, d)));
            }
        }
    }
    Ok(Complex::new(n + 1, triangles).expect("vertices checked"))
}
