use super::{compute_pushout, is_balanced, is_pushout_square, Grid, Span, Square, SquareError, Tiling};
use crate::delta::MonotoneMap;

/// Splits a pushout square along an efficient factorization `f = f1 ∘ f0`
/// of its top edge into two pushout squares.
pub fn factor_pushout_horizontal(
    q: &Square,
    f0: &MonotoneMap,
    f1: &MonotoneMap,
) -> Result<(Square, Square), SquareError> {
    if !is_pushout_square(q)? {
        return Err(SquareError::NotPushout);
    }
    if f1.compose(f0).ok().as_ref() != Some(&q.f) || !f1.is_efficient_with(f0)? {
        return Err(SquareError::InefficientFactorization);
    }
    let left = compute_pushout(&Span { f: f0.clone(), g: q.g.clone() })?;
    let right = compute_pushout(&Span { f: f1.clone(), g: left.h.clone() })?;
    debug_assert_eq!(left.hcompose(&right).as_ref(), Ok(q));
    Ok((left, right))
}

/// Successive pushouts of `left` along the generators of `top`.
fn split_row(top: &MonotoneMap, left: &MonotoneMap) -> Result<Vec<Square>, SquareError> {
    let mut edge = left.clone();
    let mut row = Vec::new();
    for gen in top.factor_into_generators() {
        let cell = compute_pushout(&Span { f: gen, g: edge })?;
        edge = cell.h.clone();
        row.push(cell);
    }
    Ok(row)
}

fn split_column(top: &MonotoneMap, left: &MonotoneMap) -> Result<Vec<Square>, SquareError> {
    Ok(split_row(left, top)?.iter().map(Square::mirror).collect())
}

fn tile(q: Square) -> Result<Tiling, SquareError> {
    let (df, dg) = (q.f.defect(), q.g.defect());
    if df <= 1 && dg <= 1 {
        return Ok(Tiling::Cell(q));
    }
    if dg >= 2 {
        let column = split_column(&q.f, &q.g)?;
        Ok(Tiling::Vertical(column.into_iter().map(tile).collect::<Result<_, _>>()?))
    } else {
        let row = split_row(&q.f, &q.g)?;
        Ok(Tiling::Horizontal(row.into_iter().map(tile).collect::<Result<_, _>>()?))
    }
}

/// Factors a pushout square into cells whose span legs have defect at most
/// one: basic pushouts, or trivial squares on generators and identities.
/// The left edge is split into generators first, then each row's top edge.
pub fn factor_into_basic(q: &Square) -> Result<Tiling, SquareError> {
    if !is_pushout_square(q)? {
        return Err(SquareError::NotPushout);
    }
    Ok(tile(q.clone())?.simplify())
}

/// Order-preserving inclusion of a sorted subset into a sorted superset.
fn inclusion(sub: &[usize], sup: &[usize]) -> MonotoneMap {
    let values = sub.iter().map(|x| sup.binary_search(x).expect("subset")).collect();
    MonotoneMap::from_raw(sup.len() - 1, values)
}

/// Factors a nontrivial balanced square into a grid of basic coface
/// squares. Columns add the points of `[n]` hit only by `h`, rows the
/// points hit only by `k`, both in increasing order.
pub fn factor_balanced(q: &Square) -> Result<Grid, SquareError> {
    if !is_balanced(q)? {
        return Err(SquareError::NotBalanced);
    }
    if q.is_trivial() {
        return Err(SquareError::Trivial);
    }
    let shared = q.h.compose(&q.f)?.image();
    let only = |m: &MonotoneMap| -> Vec<usize> {
        m.values().iter().copied().filter(|x| shared.binary_search(x).is_err()).collect()
    };
    let (across, down) = (only(&q.h), only(&q.k));
    let corner = |r: usize, c: usize| {
        let mut s: Vec<usize> = shared.iter().chain(&down[..r]).chain(&across[..c]).copied().collect();
        s.sort_unstable();
        s
    };
    let cells = (0..down.len())
        .map(|r| {
            (0..across.len())
                .map(|c| {
                    let (tl, tr, bl, br) = (corner(r, c), corner(r, c + 1), corner(r + 1, c), corner(r + 1, c + 1));
                    Square {
                        f: inclusion(&tl, &tr),
                        g: inclusion(&tl, &bl),
                        h: inclusion(&tr, &br),
                        k: inclusion(&bl, &br),
                    }
                })
                .collect()
        })
        .collect();
    Grid::new(cells)
}
