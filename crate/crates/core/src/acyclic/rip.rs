use serde::Serialize;

use super::graham::reduce;
use super::{mask_of, members, Complex};

/// An ordering `T_1, …, T_m` of the facets with, for each `k >= 2`, the
/// smallest `j < k` such that `T_k` meets the earlier facets inside `T_j`.
/// Indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RipOrder {
    pub facets: Vec<Vec<usize>>,
    pub witnesses: Vec<Option<usize>>,
}

impl RipOrder {
    /// Orders the given facets as listed and finds witnesses, or `None` if
    /// some facet has none.
    pub fn from_facets(facets: Vec<Vec<usize>>) -> Option<Self> {
        let masks: Vec<u64> = facets.iter().map(|f| mask_of(f)).collect();
        let mut union = 0u64;
        let mut witnesses = Vec::with_capacity(masks.len());
        for (k, &t) in masks.iter().enumerate() {
            if k == 0 {
                witnesses.push(None);
            } else {
                let meet = t & union;
                witnesses.push(Some((0..k).find(|&j| meet & !masks[j] == 0)?));
            }
            union |= t;
        }
        Some(Self { facets, witnesses })
    }

    /// `T_k ∩ (T_1 ∪ … ∪ T_{k-1})`.
    pub fn intersection(&self, k: usize) -> Vec<usize> {
        let union = self.facets[..k].iter().fold(0, |m, f| m | mask_of(f));
        members(mask_of(&self.facets[k]) & union)
    }

    /// Whether this is a running intersection order of the facets of `c`.
    pub fn verify(&self, c: &Complex) -> bool {
        let mut mine = self.facets.clone();
        mine.sort();
        let mut theirs = c.facets();
        theirs.sort();
        mine == theirs && Self::from_facets(self.facets.clone()).is_some_and(|o| o.witnesses == self.witnesses)
    }

    /// Every step meets the earlier facets.
    pub fn intersections_nonempty(&self) -> bool {
        (1..self.facets.len()).all(|k| !self.intersection(k).is_empty())
    }

    /// For each `k`, any two vertices consecutive in `T_1 ∪ … ∪ T_k` lie
    /// together in `T_k` or in the earlier union.
    pub fn consecutive_condition(&self) -> bool {
        let mut before = 0u64;
        for f in &self.facets {
            let t = mask_of(f);
            let now = members(before | t);
            let ok = now.windows(2).all(|w| {
                let e = 1u64 << w[0] | 1 << w[1];
                t & e == e || before & e == e
            });
            if !ok {
                return false;
            }
            before |= t;
        }
        true
    }

    /// One line per facet, indented under its witness.
    pub fn tree_lines(&self) -> Vec<String> {
        let mut depth = vec![0usize; self.facets.len()];
        self.facets
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let set = f.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                match self.witnesses[k] {
                    None => format!("T{} = {{{set}}}", k + 1),
                    Some(j) => {
                        depth[k] = depth[j] + 1;
                        let meet = self.intersection(k).iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                        format!("{}T{} = {{{set}}}  meets {{{meet}}} inside T{}", "  ".repeat(depth[k]), k + 1, j + 1)
                    }
                }
            })
            .collect()
    }
}

/// Reduces from the highest vertex down, then rebuilds the order in
/// reverse: each step either enlarges the facet it shrank or appends it.
pub(crate) fn rip_order(c: &Complex) -> Option<RipOrder> {
    let result = reduce(c, false, true);
    if !result.is_acyclic() {
        return None;
    }
    let mut order: Vec<u64> = Vec::new();
    for &(v, t) in result.steps.iter().rev() {
        let smaller = t & !(1 << v);
        match order.iter().position(|&f| f == smaller) {
            Some(pos) if smaller != 0 => order[pos] = t,
            _ => order.push(t),
        }
    }
    let rip = RipOrder::from_facets(order.into_iter().map(members).collect()).expect("reduction yields a valid order");
    debug_assert!(rip.verify(c));
    Some(rip)
}

/// A running intersection order that also satisfies the consecutive-vertex
/// condition, when the complex is acyclic and contains its spine.
pub(crate) fn directed_rip_order(c: &Complex) -> Option<RipOrder> {
    if !c.has_spine() {
        return None;
    }
    rip_order(c).filter(RipOrder::consecutive_condition)
}
