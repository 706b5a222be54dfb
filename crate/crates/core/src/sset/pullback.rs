use std::collections::HashMap;

use serde::Serialize;

use super::SSetError;

/// A commuting square of finite sets `{0..a}`, `{0..b}`, `{0..c}`, `{0..d}`:
///
/// ```text
///   A --top--> B
///   |          |
///  left      right
///   v          v
///   C -bottom-> D
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSquare {
    sizes: [usize; 4],
    top: Vec<usize>,
    left: Vec<usize>,
    right: Vec<usize>,
    bottom: Vec<usize>,
}

/// Why a square fails to be a (weak) pullback, as element indices of `B`
/// and `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PullbackFailure {
    /// No element of `A` lies over the compatible pair.
    NoLift { b: usize, c: usize },
    /// Two distinct elements of `A` lie over the pair.
    ManyLifts { b: usize, c: usize, first: usize, second: usize },
}

impl SetSquare {
    /// `sizes` lists `|A|, |B|, |C|, |D|`.
    pub fn new(
        sizes: [usize; 4],
        top: Vec<usize>,
        left: Vec<usize>,
        right: Vec<usize>,
        bottom: Vec<usize>,
    ) -> Result<Self, SSetError> {
        let [a, b, c, d] = sizes;
        let fits = |m: &[usize], dom: usize, cod: usize| m.len() == dom && m.iter().all(|&y| y < cod);
        if !(fits(&top, a, b) && fits(&left, a, c) && fits(&right, b, d) && fits(&bottom, c, d)) {
            return Err(SSetError::SetShape);
        }
        if (0..a).any(|x| right[top[x]] != bottom[left[x]]) {
            return Err(SSetError::NonCommuting);
        }
        Ok(Self { sizes, top, left, right, bottom })
    }

    pub fn sizes(&self) -> [usize; 4] {
        self.sizes
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn transpose(&self) -> Self {
        let [a, b, c, d] = self.sizes;
        Self {
            sizes: [a, c, b, d],
            top: self.left.clone(),
            left: self.top.clone(),
            right: self.bottom.clone(),
            bottom: self.right.clone(),
        }
    }

    /// `self` pasted to the left of `right`.
    pub fn hcompose(&self, next: &SetSquare) -> Result<Self, SSetError> {
        if self.sizes[1] != next.sizes[0] || self.sizes[3] != next.sizes[2] || self.right != next.left {
            return Err(SSetError::SetShape);
        }
        let top = self.top.iter().map(|&x| next.top[x]).collect();
        let bottom = self.bottom.iter().map(|&x| next.bottom[x]).collect();
        Self::new(
            [self.sizes[0], next.sizes[1], self.sizes[2], next.sizes[3]],
            top,
            self.left.clone(),
            next.right.clone(),
            bottom,
        )
    }

    /// The first failure in the order of `(b, c)`, checking existence only
    /// when `unique` is false.
    pub fn failure(&self, unique: bool) -> Option<PullbackFailure> {
        let mut lifts: HashMap<(usize, usize), usize> = HashMap::new();
        let mut many = None;
        for (a, (&b, &c)) in self.top.iter().zip(&self.left).enumerate() {
            if let Some(&first) = lifts.get(&(b, c)) {
                if unique {
                    let cand = PullbackFailure::ManyLifts { b, c, first, second: a };
                    many = Some(many.map_or(cand.clone(), |m: PullbackFailure| m.min_by_pair(cand)));
                }
            } else {
                lifts.insert((b, c), a);
            }
        }
        let mut over: Vec<Vec<usize>> = vec![Vec::new(); self.sizes[3]];
        self.bottom.iter().enumerate().for_each(|(c, &d)| over[d].push(c));
        let missing = (0..self.sizes[1]).find_map(|b| {
            over[self.right[b]]
                .iter()
                .find(|&&c| !lifts.contains_key(&(b, c)))
                .map(|&c| PullbackFailure::NoLift { b, c })
        });
        match (missing, many) {
            (Some(x), Some(y)) => Some(x.min_by_pair(y)),
            (x, y) => x.or(y),
        }
    }

    pub fn is_weak_pullback(&self) -> bool {
        self.failure(false).is_none()
    }

    pub fn is_strong_pullback(&self) -> bool {
        self.failure(true).is_none()
    }
}

impl PullbackFailure {
    pub fn pair(&self) -> (usize, usize) {
        match *self {
            PullbackFailure::NoLift { b, c } | PullbackFailure::ManyLifts { b, c, .. } => (b, c),
        }
    }

    fn min_by_pair(self, other: Self) -> Self {
        if other.pair() < self.pair() {
            other
        } else {
            self
        }
    }
}
