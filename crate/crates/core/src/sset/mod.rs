//! Finite simplicial sets truncated at a dimension `N`, with the action of
//! arbitrary monotone maps and the weak/strong pullback tests behind the
//! completeness and exactness classifiers.

mod category;
mod classify;
mod fixtures;
mod pullback;

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::acyclic::FillerProvider;
use crate::delta::MonotoneMap;
use crate::squares::{Square, SquareError};

pub use category::{CategoryError, Composite, FinCategory, Morphism};
pub use classify::{
    apply_square, comp_contains, count_fillers, ex_contains, find_filler, forced_discrete, horn_has_filler,
    is_2segal_restricted, is_inner_span_complete, is_kan, is_quasicategory, is_segal_nerve, is_span_complete, is_split,
    is_stiff, Classifier, ForcedDiscrete, Verdict, Witness,
};
pub use pullback::{PullbackFailure, SetSquare};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SSetError {
    #[error("[{n}] lies outside the truncation at dimension {dim}")]
    OutOfTruncation { n: usize, dim: usize },
    #[error("level {0} has no cells")]
    EmptyLevel(usize),
    #[error("level {0} is missing")]
    MissingLevel(usize),
    #[error("duplicate cell {name:?} at level {n}")]
    DuplicateCell { n: usize, name: String },
    #[error("unknown cell {name:?} at level {n}")]
    UnknownCell { n: usize, name: String },
    #[error("{kind} table ({n},{i}) is missing or not total")]
    IncompleteTable { kind: &'static str, n: usize, i: usize },
    #[error("bad table key {0:?}, expected \"n,i\"")]
    BadKey(String),
    #[error("d_{i} x differs from d_{j_minus_1} y")]
    IncompatiblePair { i: usize, j_minus_1: usize },
    #[error("filler indices out of range: n={n}, i={i}, j={j}")]
    BadIndices { n: usize, i: usize, j: usize },
    #[error("cell index {idx} out of range at level {n}")]
    BadCell { n: usize, idx: usize },
    #[error("sets and maps of the set square do not fit together")]
    SetShape,
    #[error("set square does not commute")]
    NonCommuting,
    #[error(transparent)]
    Square(#[from] SquareError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

/// A simplex identified by its level and its position in the canonical
/// (lexicographic) order of that level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub dim: usize,
    pub idx: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSSet {
    dim: usize,
    names: Vec<Vec<String>>,
    /// `faces[n][i][x]` for `1 <= n <= dim`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degens[n][i][x]` for `n < dim`.
    degens: Vec<Vec<Vec<usize>>>,
}

/// One violated simplicial identity, with the first offending cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: Identity,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub cell: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `d_i d_j = d_{j-1} d_i` for `i < j`, on `X_n`.
    FaceFace,
    /// `d_i s_j` against `s_{j-1} d_i`, `id` or `s_j d_{i-1}`, on `X_n`.
    FaceDegeneracy,
    /// `s_i s_j = s_{j+1} s_i` for `i <= j`, on `X_n`.
    DegeneracyDegeneracy,
    /// `s_j` on `X_n` is not injective (`i` unused).
    DegeneracyInjective,
}

impl TruncatedSSet {
    /// Builds a simplicial set from simplices of any ordered type together
    /// with their face and degeneracy operators.
    pub fn from_fn<T: Clone + Eq + Hash>(
        dim: usize,
        levels: Vec<Vec<T>>,
        name: impl Fn(&T) -> String,
        face: impl Fn(usize, usize, &T) -> T,
        degen: impl Fn(usize, usize, &T) -> T,
    ) -> Result<Self, SSetError> {
        if levels.len() != dim + 1 {
            return Err(SSetError::MissingLevel(levels.len()));
        }
        let mut sorted: Vec<Vec<(String, T)>> = Vec::with_capacity(dim + 1);
        for (n, level) in levels.into_iter().enumerate() {
            if level.is_empty() {
                return Err(SSetError::EmptyLevel(n));
            }
            let mut named: Vec<(String, T)> = level.into_iter().map(|t| (name(&t), t)).collect();
            named.sort_by(|a, b| a.0.cmp(&b.0));
            if let Some(w) = named.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(SSetError::DuplicateCell { n, name: w[0].0.clone() });
            }
            sorted.push(named);
        }
        let index: Vec<HashMap<T, usize>> =
            sorted.iter().map(|l| l.iter().enumerate().map(|(i, (_, t))| (t.clone(), i)).collect()).collect();
        let lookup = |n: usize, t: &T| -> Result<usize, SSetError> {
            index[n].get(t).copied().ok_or_else(|| SSetError::UnknownCell { n, name: name(t) })
        };
        let mut faces = vec![Vec::new()];
        for n in 1..=dim {
            let tables = (0..=n)
                .map(|i| sorted[n].iter().map(|(_, t)| lookup(n - 1, &face(n, i, t))).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            faces.push(tables);
        }
        let mut degens = Vec::new();
        for n in 0..dim {
            let tables = (0..=n)
                .map(|i| sorted[n].iter().map(|(_, t)| lookup(n + 1, &degen(n, i, t))).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            degens.push(tables);
        }
        let names = sorted.into_iter().map(|l| l.into_iter().map(|(s, _)| s).collect()).collect();
        Ok(Self { dim, names, faces, degens })
    }

    /// Builds from named tables; `faces[(n, i)]` maps names in `X_n` to
    /// names in `X_{n-1}`, `degeneracies[(n, i)]` maps `X_n` to `X_{n+1}`.
    pub fn from_tables(
        dim: usize,
        cells: Vec<Vec<String>>,
        faces: &BTreeMap<(usize, usize), BTreeMap<String, String>>,
        degeneracies: &BTreeMap<(usize, usize), BTreeMap<String, String>>,
    ) -> Result<Self, SSetError> {
        if cells.len() != dim + 1 {
            return Err(SSetError::MissingLevel(cells.len().min(dim + 1)));
        }
        let levels: Vec<Vec<(usize, String)>> =
            cells.into_iter().enumerate().map(|(n, l)| l.into_iter().map(|s| (n, s)).collect()).collect();
        let table =
            |kind: &'static str, tables: &BTreeMap<(usize, usize), BTreeMap<String, String>>, n, i, x: &String| {
                tables.get(&(n, i)).and_then(|t| t.get(x)).cloned().ok_or(SSetError::IncompleteTable { kind, n, i })
            };
        // Missing entries are reported before the lookup can fail.
        for (n, level) in levels.iter().enumerate() {
            for (_, x) in level {
                for i in 0..=n {
                    if n > 0 {
                        table("face", faces, n, i, x)?;
                    }
                    if n < dim {
                        table("degeneracy", degeneracies, n, i, x)?;
                    }
                }
            }
        }
        Self::from_fn(
            dim,
            levels,
            |(_, s)| s.clone(),
            |n, i, (_, x)| (n - 1, table("face", faces, n, i, x).expect("checked")),
            |n, i, (_, x)| (n + 1, table("degeneracy", degeneracies, n, i, x).expect("checked")),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The levels up to `dim` (or all of them if there are fewer).
    pub fn truncate(&self, dim: usize) -> Self {
        let dim = dim.min(self.dim);
        Self {
            dim,
            names: self.names[..=dim].to_vec(),
            faces: self.faces[..=dim].to_vec(),
            degens: self.degens[..dim].to_vec(),
        }
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.names[n].len()
    }

    pub fn name(&self, c: Cell) -> &str {
        &self.names[c.dim][c.idx]
    }

    pub fn names(&self, n: usize) -> &[String] {
        &self.names[n]
    }

    pub fn cell(&self, n: usize, name: &str) -> Option<Cell> {
        let idx = self.names.get(n)?.binary_search_by(|s| s.as_str().cmp(name)).ok()?;
        Some(Cell { dim: n, idx })
    }

    /// `d_i: X_n -> X_{n-1}`.
    pub fn face(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    /// `s_i: X_n -> X_{n+1}`.
    pub fn degeneracy(&self, n: usize, i: usize) -> &[usize] {
        &self.degens[n][i]
    }

    fn check_level(&self, n: usize) -> Result<(), SSetError> {
        if n > self.dim {
            return Err(SSetError::OutOfTruncation { n, dim: self.dim });
        }
        Ok(())
    }

    /// The function `X_{cod} -> X_{dom}` induced by `f`.
    pub fn evaluate(&self, f: &MonotoneMap) -> Result<Vec<usize>, SSetError> {
        self.check_level(f.cod())?;
        self.check_level(f.dom())?;
        let mut current: Vec<usize> = (0..self.level_size(f.cod())).collect();
        for gen in f.factor_into_generators().iter().rev() {
            let table = if gen.is_coface() {
                let i =
                    (0..=gen.cod()).find(|x| gen.values().binary_search(x).is_err()).expect("coface misses a value");
                self.face(gen.cod(), i)
            } else {
                let i = gen.values().windows(2).position(|w| w[0] == w[1]).expect("codegeneracy repeats a value");
                self.degeneracy(gen.cod(), i)
            };
            current.iter_mut().for_each(|x| *x = table[*x]);
        }
        Ok(current)
    }

    /// Every violated simplicial identity, once per index triple.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut check = |identity, n: usize, i, j, mut bad: Box<dyn FnMut(usize) -> bool + '_>| {
            if let Some(x) = (0..self.level_size(n)).find(|&x| bad(x)) {
                out.push(Violation { identity, n, i, j, cell: self.names[n][x].clone() });
            }
        };
        for n in 2..=self.dim {
            for j in 1..=n {
                for i in 0..j {
                    let bad = move |x: usize| {
                        self.faces[n - 1][i][self.faces[n][j][x]] != self.faces[n - 1][j - 1][self.faces[n][i][x]]
                    };
                    check(Identity::FaceFace, n, i, j, Box::new(bad));
                }
            }
        }
        for n in 0..self.dim {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let bad = move |x: usize| {
                        let lhs = self.faces[n + 1][i][self.degens[n][j][x]];
                        let rhs = if i < j {
                            self.degens[n - 1][j - 1][self.faces[n][i][x]]
                        } else if i == j || i == j + 1 {
                            x
                        } else {
                            self.degens[n - 1][j][self.faces[n][i - 1][x]]
                        };
                        lhs != rhs
                    };
                    check(Identity::FaceDegeneracy, n, i, j, Box::new(bad));
                }
            }
        }
        for n in 0..self.dim.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let bad = move |x: usize| {
                        self.degens[n + 1][i][self.degens[n][j][x]] != self.degens[n + 1][j + 1][self.degens[n][i][x]]
                    };
                    check(Identity::DegeneracyDegeneracy, n, i, j, Box::new(bad));
                }
            }
        }
        for n in 0..self.dim {
            for j in 0..=n {
                let table = &self.degens[n][j];
                let mut seen = vec![false; self.level_size(n + 1)];
                let dup = (0..table.len()).find(|&x| std::mem::replace(&mut seen[table[x]], true));
                if let Some(x) = dup {
                    out.push(Violation {
                        identity: Identity::DegeneracyInjective,
                        n,
                        i: 0,
                        j,
                        cell: self.names[n][x].clone(),
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Whether every structure map between levels `0..=top` is a bijection.
    pub fn structure_maps_bijective(&self, top: usize) -> bool {
        let top = top.min(self.dim);
        let bijective = |t: &[usize], target: usize| {
            let mut seen = vec![false; target];
            t.len() == target && t.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        };
        (1..=top).all(|n| self.faces[n].iter().all(|t| bijective(t, self.level_size(n - 1))))
            && (0..top).all(|n| self.degens[n].iter().all(|t| bijective(t, self.level_size(n + 1))))
    }
}

fn parse_key(key: &str) -> Result<(usize, usize), SSetError> {
    let bad = || SSetError::BadKey(key.to_string());
    let (n, i) = key.split_once(',').ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, i.trim().parse().map_err(|_| bad())?))
}

#[derive(Serialize, Deserialize)]
struct SSetRepr {
    dim: usize,
    cells: BTreeMap<String, Vec<String>>,
    faces: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    degeneracies: BTreeMap<String, BTreeMap<String, String>>,
}

impl Serialize for TruncatedSSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let named = |tables: &Vec<Vec<Vec<usize>>>, offset: isize, skip_first: bool| {
            let mut out = BTreeMap::new();
            for (n, level) in tables.iter().enumerate() {
                if skip_first && n == 0 {
                    continue;
                }
                let target = (n as isize + offset) as usize;
                for (i, t) in level.iter().enumerate() {
                    let m =
                        t.iter().enumerate().map(|(x, &y)| (self.names[n][x].clone(), self.names[target][y].clone()));
                    out.insert(format!("{n},{i}"), m.collect());
                }
            }
            out
        };
        SSetRepr {
            dim: self.dim,
            cells: self.names.iter().enumerate().map(|(n, l)| (n.to_string(), l.clone())).collect(),
            faces: named(&self.faces, -1, true),
            degeneracies: named(&self.degens, 1, false),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = SSetRepr::deserialize(d)?;
        let cells = (0..=repr.dim)
            .map(|n| repr.cells.get(&n.to_string()).cloned().ok_or(SSetError::MissingLevel(n)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        let keyed = |m: BTreeMap<String, BTreeMap<String, String>>| {
            m.into_iter().map(|(k, v)| Ok((parse_key(&k)?, v))).collect::<Result<BTreeMap<_, _>, SSetError>>()
        };
        let faces = keyed(repr.faces).map_err(D::Error::custom)?;
        let degens = keyed(repr.degeneracies).map_err(D::Error::custom)?;
        TruncatedSSet::from_tables(repr.dim, cells, &faces, &degens).map_err(D::Error::custom)
    }
}

impl FillerProvider for TruncatedSSet {
    type Simplex = Cell;

    fn simplex_dim(&self, x: &Cell) -> usize {
        x.dim
    }

    fn face(&self, x: &Cell, f: &MonotoneMap) -> Cell {
        act(self, f, *x).expect("face map fits the truncation")
    }

    fn span_fill(&self, x: &Cell, y: &Cell, i: usize, j: usize, n: usize) -> Option<Cell> {
        if x.dim + 1 != n || y.dim + 1 != n {
            return None;
        }
        find_filler(self, n, i, j, x.idx, y.idx).ok().flatten().map(|idx| Cell { dim: n, idx })
    }
}

/// Index of `x` under `X(f)` for a single simplex.
pub(crate) fn act(x: &TruncatedSSet, f: &MonotoneMap, c: Cell) -> Result<Cell, SSetError> {
    if c.dim != f.cod() || c.idx >= x.level_size(c.dim) {
        return Err(SSetError::BadCell { n: c.dim, idx: c.idx });
    }
    Ok(Cell { dim: f.dom(), idx: x.evaluate(f)?[c.idx] })
}

pub(crate) fn square_levels_ok(x: &TruncatedSSet, q: &Square) -> Result<(), SSetError> {
    q.check()?;
    let (m, p, qq, n) = q.objects();
    for level in [m, p, qq, n] {
        x.check_level(level)?;
    }
    Ok(())
}
