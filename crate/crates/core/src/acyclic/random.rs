//! Seeded generators of complexes for randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{members, Complex};

/// Up to eight random vertex sets on `vertices` vertices; vertices left
/// uncovered are added to a random set.
pub fn random_complex<R: Rng>(rng: &mut R, vertices: usize) -> Complex {
    assert!(vertices > 0, "need at least one vertex");
    let count = rng.gen_range(1..=8);
    let mut sets: Vec<u64> = (0..count)
        .map(|_| {
            let m = (0..vertices).filter(|_| rng.gen_bool(0.5)).fold(0u64, |m, v| m | 1 << v);
            if m == 0 {
                1 << rng.gen_range(0..vertices)
            } else {
                m
            }
        })
        .collect();
    for v in 0..vertices {
        if sets.iter().all(|s| s >> v & 1 == 0) {
            let pick = rng.gen_range(0..sets.len());
            sets[pick] |= 1 << v;
        }
    }
    Complex::new(vertices, &sets.into_iter().map(members).collect::<Vec<_>>()).expect("all vertices covered")
}

/// A connected acyclic complex: each new facet is a nonempty part of an
/// earlier facet together with fresh vertices, so the construction order
/// is a running intersection order.
pub fn random_acyclic_configuration<R: Rng>(rng: &mut R, vertices: usize) -> Complex {
    assert!(vertices > 0, "need at least one vertex");
    let mut labels: Vec<usize> = (0..vertices).collect();
    labels.shuffle(rng);
    let first = rng.gen_range(1..=vertices);
    let mut facets = vec![labels[..first].to_vec()];
    let mut used = first;
    while used < vertices {
        let base = facets[rng.gen_range(0..facets.len())].clone();
        let mut keep: Vec<usize> = base.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if keep.is_empty() {
            keep.push(*base.choose(rng).expect("facets are nonempty"));
        }
        let fresh = rng.gen_range(1..=vertices - used);
        keep.extend_from_slice(&labels[used..used + fresh]);
        used += fresh;
        facets.push(keep);
    }
    Complex::new(vertices, &facets).expect("all vertices covered")
}

/// A random acyclic configuration that also contains its spine, found by
/// resampling.
pub fn random_directed_configuration<R: Rng>(rng: &mut R, vertices: usize) -> Complex {
    loop {
        let c = random_acyclic_configuration(rng, vertices);
        if c.has_spine() {
            return c;
        }
        // Otherwise add the spine edges and keep the result if it stays
        // acyclic.
        let mut facets = c.facets();
        facets.extend((1..vertices).map(|v| vec![v - 1, v]));
        let with_spine = Complex::new(vertices, &facets).expect("same ground");
        if with_spine.is_directed_acyclic_configuration() {
            return with_spine;
        }
    }
}
