//! Cross-checks of the acyclicity characterizations against brute force.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graham::Reduction;
use super::random::{random_acyclic_configuration, random_complex, random_directed_configuration};
use super::*;
use crate::sset::{Cell, FinCategory, TruncatedSSet};

/// Every complex on `n` vertices: antichains of nonempty sets covering all
/// vertices.
pub(crate) fn all_complexes(n: usize) -> Vec<Complex> {
    let sets: Vec<u64> = (1u64..1 << n).collect();
    let mut out = Vec::new();
    for family in 0u64..1 << sets.len() {
        let chosen: Vec<u64> = sets.iter().enumerate().filter(|(i, _)| family >> i & 1 == 1).map(|(_, &s)| s).collect();
        let antichain = chosen.iter().all(|&a| chosen.iter().all(|&b| a == b || a & b != a));
        let covered = chosen.iter().fold(0, |m, s| m | s);
        if antichain && covered == (1 << n) - 1 {
            out.push(Complex::new(n, &chosen.iter().map(|&s| members(s)).collect::<Vec<_>>()).unwrap());
        }
    }
    out
}

/// Whether some ordering of the facets has the (directed) running
/// intersection property, by search over sets of placed facets.
pub(crate) fn rip_exists(c: &Complex, directed: bool) -> bool {
    let facets = c.facet_masks();
    let m = facets.len();
    let mut seen = HashSet::new();
    fn go(facets: &[u64], placed: u64, directed: bool, seen: &mut HashSet<u64>) -> bool {
        if placed.count_ones() as usize == facets.len() {
            return true;
        }
        if !seen.insert(placed) {
            return false;
        }
        let chosen: Vec<u64> = members(placed).iter().map(|&i| facets[i]).collect();
        let union = chosen.iter().fold(0, |a, b| a | b);
        (0..facets.len()).filter(|&i| placed >> i & 1 == 0).any(|i| {
            let t = facets[i];
            let meet = t & union;
            let anchored = chosen.is_empty() || chosen.iter().any(|&s| meet & !s == 0);
            let consecutive = !directed
                || members(union | t).windows(2).all(|w| {
                    let e = 1u64 << w[0] | 1 << w[1];
                    t & e == e || union & e == e
                });
            anchored && consecutive && go(facets, placed | 1 << i, directed, seen)
        })
    }
    m == 0 || go(facets, 0, directed, &mut seen)
}

/// Whether every sequence of eligible eliminations empties the complex.
fn reduction_never_sticks(r: &Reduction, directed: bool) -> bool {
    if r.is_empty() {
        return true;
    }
    let eligible = r.eligible(directed);
    !eligible.is_empty()
        && eligible.into_iter().all(|v| {
            let mut next = r.clone();
            next.eliminate(v);
            reduction_never_sticks(&next, directed)
        })
}

fn check_equivalences(c: &Complex) {
    let graham = c.is_graham_acyclic();
    let fillers = c.spheres_filled() && is_chordal(&c.skeleton1());
    let rip = c.rip_order();
    assert_eq!(graham, fillers, "{c:?}");
    assert_eq!(graham, rip.is_some(), "{c:?}");
    assert_eq!(graham, rip_exists(c, false), "{c:?}");
    if let Some(r) = &rip {
        assert!(r.verify(c));
        if c.is_connected() {
            assert!(r.intersections_nonempty(), "{c:?}");
        }
    }
    let dgraham = c.is_directed_graham_acyclic();
    let dfillers = fillers && c.has_spine();
    let drip = c.directed_rip_order();
    assert_eq!(dgraham, dfillers, "{c:?}");
    assert_eq!(dgraham, drip.is_some(), "{c:?}");
    assert_eq!(dgraham, rip_exists(c, true), "{c:?}");
    assert!(!dgraham || graham);
}

#[test]
fn equivalences_on_all_small_complexes() {
    let mut total = 0;
    for n in 1..=4 {
        for c in all_complexes(n) {
            check_equivalences(&c);
            total += 1;
        }
    }
    // Antichains covering {0..n-1} for n = 1..4.
    assert_eq!(total, 1 + 2 + 9 + 114);
}

#[test]
fn equivalences_on_random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 5..=7 {
        for _ in 0..300 {
            check_equivalences(&random_complex(&mut rng, n));
            check_equivalences(&random_acyclic_configuration(&mut rng, n));
        }
    }
}

#[test]
fn reduction_order_does_not_matter_on_small_complexes() {
    for n in 1..=4 {
        for c in all_complexes(n) {
            let r = Reduction::new(&c);
            assert_eq!(reduction_never_sticks(&r, false), c.is_graham_acyclic(), "{c:?}");
            assert_eq!(reduction_never_sticks(&r, true), c.is_directed_graham_acyclic(), "{c:?}");
        }
    }
}

#[test]
fn generated_configurations_are_acyclic() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=7 {
        for _ in 0..50 {
            assert!(random_acyclic_configuration(&mut rng, n).is_acyclic_configuration());
            assert!(random_directed_configuration(&mut rng, n).is_directed_acyclic_configuration());
        }
    }
}

/// Restrictions of a random top simplex to the facets.
fn restrictions(x: &TruncatedSSet, c: &Complex, rng: &mut impl Rng) -> (Cell, BTreeMap<Vec<usize>, Cell>) {
    let n = c.ground() - 1;
    let z = Cell { dim: n, idx: rng.gen_range(0..x.level_size(n)) };
    let all = (1u64 << c.ground()) - 1;
    let assignment = c
        .facet_masks()
        .iter()
        .map(|&f| {
            let inc = super::fill::tests_inclusion(f, all);
            (members(f), FillerProvider::face(x, &z, &inc))
        })
        .collect();
    (z, assignment)
}

#[test]
fn span_complete_nerve_fills_every_configuration() {
    let x = TruncatedSSet::nerve(&FinCategory::cyclic_group(3), 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let small: Vec<Complex> = (1..=4).flat_map(all_complexes).collect();
    let large: Vec<Complex> = (0..100).map(|_| random_acyclic_configuration(&mut rng, 5)).collect();
    for c in small.into_iter().chain(large).filter(Complex::is_acyclic_configuration) {
        let (_, assignment) = restrictions(&x, &c, &mut rng);
        let filled = fill_configuration(&x, &c, &assignment, false).unwrap();
        let all = (1u64 << c.ground()) - 1;
        for (f, y) in &assignment {
            assert_eq!(FillerProvider::face(&x, &filled, &super::fill::tests_inclusion(mask_of(f), all)), *y);
        }
    }
}

#[test]
fn quasicategory_fills_directed_configurations() {
    let x = TruncatedSSet::nerve(&FinCategory::linear_order(3), 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 0..=3 {
        for c in all_complexes(n + 1).into_iter().filter(Complex::is_directed_acyclic_configuration) {
            let (_, assignment) = restrictions(&x, &c, &mut rng);
            let filled = fill_configuration(&x, &c, &assignment, true).unwrap();
            assert_eq!(filled.dim, n);
        }
    }
}

#[test]
fn walking_arrow_cannot_invert_its_arrow() {
    // The outer span {0,1} ∪ {0,2} asks for a 2-simplex (u, ?) with
    // composite id: impossible.
    let x = TruncatedSSet::nerve(&FinCategory::walking_arrow(), 3).unwrap();
    let c = Complex::new(3, &[vec![0, 1], vec![0, 2]]).unwrap();
    let cell = |s: &str| x.cell(1, s).unwrap();
    let assignment = [(vec![0, 1], cell("u")), (vec![0, 2], cell("id0"))].into_iter().collect();
    let err = fill_configuration(&x, &c, &assignment, false).unwrap_err();
    assert!(matches!(err, FillError::NoFiller { .. }), "{err:?}");
    assert_eq!(fill_configuration(&x, &c, &assignment, true), Err(FillError::NotAcyclic("directed ")));
}

#[test]
fn incompatible_assignments_are_named() {
    let x = TruncatedSSet::nerve(&FinCategory::walking_arrow(), 3).unwrap();
    let c = Complex::spine(2);
    let cell = |s: &str| x.cell(1, s).unwrap();
    let assignment = [(vec![0, 1], cell("u")), (vec![1, 2], cell("id0"))].into_iter().collect();
    assert_eq!(
        fill_configuration(&x, &c, &assignment, true),
        Err(FillError::IncompatibleAssignment { first: vec![0, 1], second: vec![1, 2], shared: vec![1] })
    );
}
