use std::collections::BTreeSet;

use super::{SSetError, TruncatedSSet};

impl TruncatedSSet {
    /// The constant simplicial set on the given points.
    pub fn discrete(points: &[&str], dim: usize) -> Result<Self, SSetError> {
        let level: Vec<String> = points.iter().map(|p| p.to_string()).collect();
        Self::from_fn(dim, vec![level; dim + 1], String::clone, |_, _, x| x.clone(), |_, _, x| x.clone())
    }

    /// The simplicial set of a simplicial complex on `0..`: `n`-simplices
    /// are nondecreasing vertex sequences of length `n + 1` whose vertex
    /// set lies in some facet. Names join the vertices with `-`.
    pub fn from_ordered_complex(facets: &[Vec<usize>], dim: usize) -> Result<Self, SSetError> {
        let facets: Vec<BTreeSet<usize>> = facets.iter().map(|f| f.iter().copied().collect()).collect();
        let vertices: BTreeSet<usize> = facets.iter().flatten().copied().collect();
        let member = |seq: &[usize]| facets.iter().any(|f| seq.iter().all(|v| f.contains(v)));
        let mut levels: Vec<Vec<Vec<usize>>> = vec![vertices.iter().map(|&v| vec![v]).collect()];
        for n in 1..=dim {
            let next = levels[n - 1]
                .iter()
                .flat_map(|seq| {
                    let last = *seq.last().expect("nonempty");
                    vertices.range(last..).map(move |&v| {
                        let mut s = seq.clone();
                        s.push(v);
                        s
                    })
                })
                .filter(|s| member(s))
                .collect();
            levels.push(next);
        }
        Self::from_fn(
            dim,
            levels,
            |s| s.iter().map(usize::to_string).collect::<Vec<_>>().join("-"),
            |_, i, s| {
                let mut s = s.clone();
                s.remove(i);
                s
            },
            |_, i, s| {
                let mut s = s.clone();
                s.insert(i, s[i]);
                s
            },
        )
    }

    /// The boundary of the 2-simplex: three vertices and three edges with
    /// no 2-simplex filling them.
    pub fn hollow_triangle(dim: usize) -> Result<Self, SSetError> {
        Self::from_ordered_complex(&[vec![0, 1], vec![1, 2], vec![0, 2]], dim)
    }
}
