use std::collections::HashSet;

use serde::Serialize;

use super::pullback::{PullbackFailure, SetSquare};
use super::{square_levels_ok, Cell, SSetError, TruncatedSSet};
use crate::squares::{basic_coface, catalog, segal_square, CatalogKind, Family, Square};

/// The image of `q` under `X`: `X_h` on top, `X_k` on the left, `X_f` on
/// the right and `X_g` on the bottom.
pub fn apply_square(x: &TruncatedSSet, q: &Square) -> Result<SetSquare, SSetError> {
    square_levels_ok(x, q)?;
    let (m, p, qq, n) = q.objects();
    let size = |k| x.level_size(k);
    SetSquare::new(
        [size(n), size(p), size(qq), size(m)],
        x.evaluate(&q.h)?,
        x.evaluate(&q.k)?,
        x.evaluate(&q.f)?,
        x.evaluate(&q.g)?,
    )
}

pub fn comp_contains(x: &TruncatedSSet, q: &Square) -> Result<bool, SSetError> {
    Ok(apply_square(x, q)?.is_weak_pullback())
}

pub fn ex_contains(x: &TruncatedSSet, q: &Square) -> Result<bool, SSetError> {
    Ok(apply_square(x, q)?.is_strong_pullback())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A square whose image is not a (weak) pullback, with the offending
    /// pair of simplices in `X_p` and `X_q`.
    Square { family: Family, square: Square, failure: PullbackFailure, b: String, c: String },
    /// A horn with no filler, listing the faces other than `k`.
    Horn { n: usize, k: usize, faces: Vec<String> },
}

/// The outcome of a classifier checked up to dimension `dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub dim: usize,
    pub checked: usize,
    pub witness: Option<Witness>,
}

/// The square families behind each classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classifier {
    /// Basic coface squares, in `Comp`.
    SpanComplete,
    /// Pushouts of two cofaces, in `Comp`.
    InnerSpanComplete,
    /// Gluing squares `[a] ∨ [b]`, in `Ex`.
    Segal,
    /// Pushouts of a coface and a codegeneracy, in `Ex`.
    Split,
    /// The outer mixed coface/codegeneracy pushouts, in `Ex`.
    Stiff,
    /// Pushouts of two cofaces away from the first and last coface, in `Ex`.
    TwoSegalRestricted,
    /// Coface inserted into a collapsed edge, in `Comp`.
    CollapsedEdge,
    /// Basic coface squares with adjacent indices, in `Comp`.
    AdjacentCoface,
}

impl Classifier {
    pub fn strong(self) -> bool {
        matches!(self, Classifier::Segal | Classifier::Split | Classifier::Stiff | Classifier::TwoSegalRestricted)
    }

    /// Every square of the family whose objects are at most `[dim]`.
    pub fn squares(self, dim: usize) -> Vec<(Family, Square)> {
        let fits = |q: &Square| {
            let (m, p, qq, n) = q.objects();
            m.max(p).max(qq).max(n) <= dim
        };
        let basic = |keep: &dyn Fn(usize, &Family) -> bool| -> Vec<(Family, Square)> {
            (0..=dim)
                .flat_map(|n| catalog(CatalogKind::BasicPushout(n)).into_iter().map(move |e| (n, e)))
                .filter(|(n, e)| keep(*n, &e.family) && fits(&e.square))
                .map(|(_, e)| (e.family, e.square))
                .collect()
        };
        match self {
            Classifier::SpanComplete => {
                (2..=dim).flat_map(|n| catalog(CatalogKind::BasicCoface(n))).map(|e| (e.family, e.square)).collect()
            }
            Classifier::InnerSpanComplete => basic(&|_, f| matches!(f, Family::TwoFace { .. })),
            Classifier::Segal => (1..dim)
                .flat_map(|a| (1..=dim - a).map(move |b| (Family::Segal { a, b }, segal_square(a, b))))
                .collect(),
            Classifier::Split => basic(&|_, f| {
                matches!(f, Family::MixedLeft { .. } | Family::MixedMiddle { .. } | Family::MixedRight { .. })
            }),
            Classifier::Stiff => basic(&|_, f| matches!(f, Family::MixedLeft { .. } | Family::MixedRight { .. })),
            Classifier::TwoSegalRestricted => basic(&|n, f| matches!(*f, Family::TwoFace { i, j } if i >= 1 && j < n)),
            Classifier::CollapsedEdge => basic(&|_, f| matches!(f, Family::MixedMiddle { .. })),
            Classifier::AdjacentCoface => (2..=dim)
                .flat_map(|n| (0..n).map(move |i| (Family::Coface { i, j: i + 1 }, basic_coface(n, i, i + 1))))
                .collect(),
        }
    }

    pub fn check(self, x: &TruncatedSSet) -> Verdict {
        check_family(x, self.squares(x.dim()), self.strong())
    }
}

fn check_family(x: &TruncatedSSet, squares: Vec<(Family, Square)>, strong: bool) -> Verdict {
    let checked = squares.len();
    let witness = squares.into_iter().find_map(|(family, square)| {
        let (_, p, q, _) = square.objects();
        let image = apply_square(x, &square).expect("family squares fit the truncation");
        image.failure(strong).map(|failure| {
            let (b, c) = failure.pair();
            Witness::Square {
                family,
                b: x.name(Cell { dim: p, idx: b }).to_string(),
                c: x.name(Cell { dim: q, idx: c }).to_string(),
                failure,
                square,
            }
        })
    });
    Verdict { holds: witness.is_none(), dim: x.dim(), checked, witness }
}

pub fn is_span_complete(x: &TruncatedSSet) -> Verdict {
    Classifier::SpanComplete.check(x)
}

pub fn is_inner_span_complete(x: &TruncatedSSet) -> Verdict {
    Classifier::InnerSpanComplete.check(x)
}

pub fn is_segal_nerve(x: &TruncatedSSet) -> Verdict {
    Classifier::Segal.check(x)
}

pub fn is_split(x: &TruncatedSSet) -> Verdict {
    Classifier::Split.check(x)
}

pub fn is_stiff(x: &TruncatedSSet) -> Verdict {
    Classifier::Stiff.check(x)
}

pub fn is_2segal_restricted(x: &TruncatedSSet) -> Verdict {
    Classifier::TwoSegalRestricted.check(x)
}

/// The two square families that force discreteness, and whether the
/// structure maps are bijections on the levels where that follows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedDiscrete {
    pub collapsed_edge: Verdict,
    pub adjacent_coface: Verdict,
    /// Highest level whose structure maps are forced to be bijections:
    /// the argument needs `[n+2]` to conclude about `X_n -> X_{n+1}`.
    pub forced_through: usize,
    pub bijective: bool,
}

impl ForcedDiscrete {
    pub fn families_pass(&self) -> bool {
        self.collapsed_edge.holds && self.adjacent_coface.holds
    }

    /// Bijectivity holds whenever both families pass.
    pub fn consistent(&self) -> bool {
        !self.families_pass() || self.bijective
    }
}

pub fn forced_discrete(x: &TruncatedSSet) -> ForcedDiscrete {
    let forced_through = x.dim().saturating_sub(1);
    ForcedDiscrete {
        collapsed_edge: Classifier::CollapsedEdge.check(x),
        adjacent_coface: Classifier::AdjacentCoface.check(x),
        forced_through,
        bijective: x.structure_maps_bijective(forced_through),
    }
}

/// All `z` in `X_n` with `d_j z = x` and `d_i z = y`, in canonical order.
fn fillers(
    x: &TruncatedSSet,
    n: usize,
    i: usize,
    j: usize,
    a: usize,
    b: usize,
) -> Result<impl Iterator<Item = usize> + '_, SSetError> {
    if n < 2 || n > x.dim() || i >= j || j > n {
        return Err(SSetError::BadIndices { n, i, j });
    }
    for c in [a, b] {
        if c >= x.level_size(n - 1) {
            return Err(SSetError::BadCell { n: n - 1, idx: c });
        }
    }
    if x.face(n - 1, i)[a] != x.face(n - 1, j - 1)[b] {
        return Err(SSetError::IncompatiblePair { i, j_minus_1: j - 1 });
    }
    let (dj, di) = (x.face(n, j), x.face(n, i));
    Ok((0..x.level_size(n)).filter(move |&z| dj[z] == a && di[z] == b))
}

/// The first `z` in `X_n` with `d_j z = x` and `d_i z = y`.
pub fn find_filler(
    x: &TruncatedSSet,
    n: usize,
    i: usize,
    j: usize,
    a: usize,
    b: usize,
) -> Result<Option<usize>, SSetError> {
    Ok(fillers(x, n, i, j, a, b)?.next())
}

pub fn count_fillers(x: &TruncatedSSet, n: usize, i: usize, j: usize, a: usize, b: usize) -> Result<usize, SSetError> {
    Ok(fillers(x, n, i, j, a, b)?.count())
}

/// Whether the horn given by faces `faces[t]` for the indices `0..=n`
/// other than `k` extends to an `n`-simplex.
pub fn horn_has_filler(x: &TruncatedSSet, n: usize, k: usize, faces: &[usize]) -> Result<bool, SSetError> {
    if n == 0 || n > x.dim() || k > n || faces.len() != n {
        return Err(SSetError::BadIndices { n, i: k, j: faces.len() });
    }
    Ok((0..x.level_size(n)).any(|z| horn_indices(n, k).zip(faces).all(|(i, &y)| x.face(n, i)[z] == y)))
}

fn horn_indices(n: usize, k: usize) -> impl Iterator<Item = usize> + Clone {
    (0..=n).filter(move |&i| i != k)
}

/// The first compatible horn `Λ^n_k` without a filler.
fn unfillable_horn(x: &TruncatedSSet, n: usize, k: usize) -> Option<Vec<usize>> {
    let idx: Vec<usize> = horn_indices(n, k).collect();
    let filled: HashSet<Vec<usize>> =
        (0..x.level_size(n)).map(|z| idx.iter().map(|&i| x.face(n, i)[z]).collect()).collect();
    let mut chosen = Vec::with_capacity(idx.len());
    fn search(
        x: &TruncatedSSet,
        n: usize,
        idx: &[usize],
        filled: &HashSet<Vec<usize>>,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == idx.len() {
            return !filled.contains(chosen);
        }
        let b = idx[chosen.len()];
        for y in 0..x.level_size(n - 1) {
            // d_a y_b = d_{b-1} y_a for every chosen a < b.
            let compatible =
                n < 2 || idx.iter().zip(chosen.iter()).all(|(&a, &ya)| x.face(n - 1, a)[y] == x.face(n - 1, b - 1)[ya]);
            if compatible {
                chosen.push(y);
                if search(x, n, idx, filled, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    search(x, n, &idx, &filled, &mut chosen).then_some(chosen)
}

fn check_horns(x: &TruncatedSSet, inner_only: bool) -> Verdict {
    let mut checked = 0;
    for n in 1..=x.dim() {
        let ks = if inner_only { 1..n } else { 0..n + 1 };
        for k in ks {
            checked += 1;
            if let Some(faces) = unfillable_horn(x, n, k) {
                let faces = faces.into_iter().map(|y| x.name(Cell { dim: n - 1, idx: y }).to_string()).collect();
                return Verdict { holds: false, dim: x.dim(), checked, witness: Some(Witness::Horn { n, k, faces }) };
            }
        }
    }
    Verdict { holds: true, dim: x.dim(), checked, witness: None }
}

/// Every horn `Λ^n_k`, `0 <= k <= n <= dim`, has a filler.
pub fn is_kan(x: &TruncatedSSet) -> Verdict {
    check_horns(x, false)
}

/// Every inner horn `Λ^n_k`, `0 < k < n <= dim`, has a filler.
pub fn is_quasicategory(x: &TruncatedSSet) -> Verdict {
    check_horns(x, true)
}
