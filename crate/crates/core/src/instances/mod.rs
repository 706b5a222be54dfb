//! Concrete simplicial sets with canonical span fillers: relational tables
//! (natural join), pseudometrics (shortest paths through the overlap) and
//! joint distributions of finitely valued variables (conditional product).
//! None of them is materialized; each simplex carries its own data and the
//! action of `Δ` is computed on demand.

mod distribution;
mod metric;
mod scalar;
mod table;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::acyclic::FillerProvider;
use crate::delta::MonotoneMap;

pub use distribution::{dist_face, dist_fill, missing_face_support, opposite_values_horn, Distribution};
pub use metric::{metric_fill, metric_pullback, MetricViolation, Pseudometric};
pub use scalar::{format_rational, parse_rational};
pub use table::{join, table_face, Table};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("map with codomain [{found}] applied to a simplex with {expected} columns")]
    ArityMismatch { expected: usize, found: usize },
    #[error("row {row:?} does not have {arity} entries")]
    RowLength { row: Vec<String>, arity: usize },
    #[error("overlap maps must be injective with a common domain")]
    BadOverlap,
    #[error("shared columns disagree: {left:?} vs {right:?}")]
    IncompatibleProjections { left: Box<Table>, right: Box<Table> },
    #[error("restrictions to the shared points disagree at ({i}, {j})")]
    IncompatibleRestrictions { i: usize, j: usize },
    #[error("marginals on the shared variables disagree")]
    IncompatibleMarginals { left: Box<Distribution>, right: Box<Distribution> },
    #[error("not a pseudometric: {0}")]
    NotPseudometric(MetricViolation),
    #[error("probabilities must be nonnegative and sum to 1, got total {0}")]
    NotDistribution(String),
    #[error("invalid rational {0:?}")]
    BadRational(String),
    #[error("horn must consist of the faces 0..=3 except one, each on two or more variables")]
    BadHorn,
    #[error("CSV line {line}: {message}")]
    Csv { line: u64, message: String },
}

/// How two simplices sit in a common one: column `c` of the first lands on
/// column `left[c]` of `[n]`, column `c` of the second on `right[c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Glue {
    n: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

/// Where a column of the glued simplex comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Source {
    Left(usize),
    Right(usize),
    Both(usize, usize),
}

impl Glue {
    /// Gluing along `u: [m] -> [p]` and `v: [m] -> [q]`, laid out as the
    /// columns of the first simplex followed by the unshared columns of the
    /// second in their order.
    pub(crate) fn along(u: &MonotoneMap, v: &MonotoneMap) -> Result<Self, InstanceError> {
        if u.dom() != v.dom() || !u.is_coface() || !v.is_coface() {
            return Err(InstanceError::BadOverlap);
        }
        let (p, q, m) = (u.cod(), v.cod(), u.dom());
        let mut right = vec![usize::MAX; q + 1];
        for t in 0..=m {
            right[v.apply(t)] = u.apply(t);
        }
        for (next, slot) in (p + 1..).zip(right.iter_mut().filter(|s| **s == usize::MAX)) {
            *slot = next;
        }
        Ok(Self { n: p + q - m, left: (0..=p).collect(), right })
    }

    /// The basic span `d_j z = x`, `d_i z = y` inside `[n]`, `i < j`.
    pub(crate) fn basic(i: usize, j: usize, n: usize) -> Self {
        Self { n, left: (0..=n).filter(|&c| c != j).collect(), right: (0..=n).filter(|&c| c != i).collect() }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn left(&self) -> &[usize] {
        &self.left
    }

    pub(crate) fn right(&self) -> &[usize] {
        &self.right
    }

    pub(crate) fn sources(&self) -> Vec<Source> {
        (0..=self.n)
            .map(|c| {
                let l = self.left.iter().position(|&x| x == c);
                let r = self.right.iter().position(|&x| x == c);
                match (l, r) {
                    (Some(a), Some(b)) => Source::Both(a, b),
                    (Some(a), None) => Source::Left(a),
                    (None, Some(b)) => Source::Right(b),
                    (None, None) => unreachable!("glued columns cover [n]"),
                }
            })
            .collect()
    }

    /// Column pairs `(left, right)` identified by the gluing, in order.
    pub(crate) fn shared(&self) -> (Vec<usize>, Vec<usize>) {
        self.sources()
            .into_iter()
            .filter_map(|s| match s {
                Source::Both(a, b) => Some((a, b)),
                _ => None,
            })
            .unzip()
    }
}

fn check_basic(i: usize, j: usize, n: usize, dx: usize, dy: usize) -> bool {
    n >= 2 && i < j && j <= n && dx + 1 == n && dy + 1 == n
}

/// Tables over a fixed alphabet, filled by natural join.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tables;

/// Pseudometrics on finite point sets, filled by shortest paths through the
/// shared points.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Metrics;

/// Joint distributions, filled by the conditional product.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Distributions;

impl FillerProvider for Tables {
    type Simplex = Table;

    fn simplex_dim(&self, x: &Table) -> usize {
        x.arity() - 1
    }

    fn face(&self, x: &Table, f: &MonotoneMap) -> Table {
        table_face(x, f).expect("face map fits the table")
    }

    fn span_fill(&self, x: &Table, y: &Table, i: usize, j: usize, n: usize) -> Option<Table> {
        check_basic(i, j, n, self.simplex_dim(x), self.simplex_dim(y))
            .then(|| table::join_glued(x, y, &Glue::basic(i, j, n)).ok())
            .flatten()
    }
}

impl FillerProvider for Metrics {
    type Simplex = Pseudometric;

    fn simplex_dim(&self, x: &Pseudometric) -> usize {
        x.points() - 1
    }

    fn face(&self, x: &Pseudometric, f: &MonotoneMap) -> Pseudometric {
        metric_pullback(x, f).expect("face map fits the metric")
    }

    fn span_fill(&self, x: &Pseudometric, y: &Pseudometric, i: usize, j: usize, n: usize) -> Option<Pseudometric> {
        check_basic(i, j, n, self.simplex_dim(x), self.simplex_dim(y))
            .then(|| metric::fill_glued(x, y, &Glue::basic(i, j, n)).ok())
            .flatten()
    }
}

impl FillerProvider for Distributions {
    type Simplex = Distribution;

    fn simplex_dim(&self, x: &Distribution) -> usize {
        x.arity() - 1
    }

    fn face(&self, x: &Distribution, f: &MonotoneMap) -> Distribution {
        dist_face(x, f).expect("face map fits the distribution")
    }

    fn span_fill(&self, x: &Distribution, y: &Distribution, i: usize, j: usize, n: usize) -> Option<Distribution> {
        check_basic(i, j, n, self.simplex_dim(x), self.simplex_dim(y))
            .then(|| distribution::fill_glued(x, y, &Glue::basic(i, j, n)).ok())
            .flatten()
    }
}

/// Which instance a [`Provider`] wraps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Table,
    Metric,
    Distribution,
}

/// A simplex of any of the three instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceSimplex {
    Table(Table),
    Metric(Pseudometric),
    Distribution(Distribution),
}

impl InstanceSimplex {
    pub fn kind(&self) -> InstanceKind {
        match self {
            InstanceSimplex::Table(_) => InstanceKind::Table,
            InstanceSimplex::Metric(_) => InstanceKind::Metric,
            InstanceSimplex::Distribution(_) => InstanceKind::Distribution,
        }
    }
}

/// One of the instances behind a single simplex type, for callers that
/// pick the instance at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provider(pub InstanceKind);

pub fn provider(kind: InstanceKind) -> Provider {
    Provider(kind)
}

impl FillerProvider for Provider {
    type Simplex = InstanceSimplex;

    fn simplex_dim(&self, x: &InstanceSimplex) -> usize {
        match x {
            InstanceSimplex::Table(t) => Tables.simplex_dim(t),
            InstanceSimplex::Metric(d) => Metrics.simplex_dim(d),
            InstanceSimplex::Distribution(p) => Distributions.simplex_dim(p),
        }
    }

    fn face(&self, x: &InstanceSimplex, f: &MonotoneMap) -> InstanceSimplex {
        match x {
            InstanceSimplex::Table(t) => InstanceSimplex::Table(Tables.face(t, f)),
            InstanceSimplex::Metric(d) => InstanceSimplex::Metric(Metrics.face(d, f)),
            InstanceSimplex::Distribution(p) => InstanceSimplex::Distribution(Distributions.face(p, f)),
        }
    }

    fn span_fill(
        &self,
        x: &InstanceSimplex,
        y: &InstanceSimplex,
        i: usize,
        j: usize,
        n: usize,
    ) -> Option<InstanceSimplex> {
        if x.kind() != self.0 || y.kind() != self.0 {
            return None;
        }
        match (x, y) {
            (InstanceSimplex::Table(a), InstanceSimplex::Table(b)) => {
                Tables.span_fill(a, b, i, j, n).map(InstanceSimplex::Table)
            }
            (InstanceSimplex::Metric(a), InstanceSimplex::Metric(b)) => {
                Metrics.span_fill(a, b, i, j, n).map(InstanceSimplex::Metric)
            }
            (InstanceSimplex::Distribution(a), InstanceSimplex::Distribution(b)) => {
                Distributions.span_fill(a, b, i, j, n).map(InstanceSimplex::Distribution)
            }
            _ => None,
        }
    }
}

/// Groups the entries of `items` by the key `key(item)`.
pub(crate) fn group_by<T, K: Ord>(items: impl IntoIterator<Item = T>, key: impl Fn(&T) -> K) -> BTreeMap<K, Vec<T>> {
    let mut out: BTreeMap<K, Vec<T>> = BTreeMap::new();
    for item in items {
        out.entry(key(&item)).or_default().push(item);
    }
    out
}
