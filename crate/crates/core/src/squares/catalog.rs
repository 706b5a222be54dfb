use serde::Serialize;

use super::Square;
use crate::delta::MonotoneMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    /// Basic pushouts built on `[n]`: faces, mixed and degeneracy families.
    BasicPushout(usize),
    /// Basic coface squares into `[n]`, `0 <= i < j <= n`.
    BasicCoface(usize),
    /// Squares generating all pushouts under ∨ and composition.
    GeneratorsPushout,
    /// Squares generating all balanced squares under ∨ and composition.
    GeneratorsBalanced,
    /// The four minimal pushout shapes of a ∨-component, for `[p]`.
    MinimalVee(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Two cofaces, `0 <= i < j - 1 <= n - 1`.
    TwoFace {
        i: usize,
        j: usize,
    },
    /// Coface `d^i` against codegeneracy `s^{j-1}`, `0 <= i < j <= n`.
    MixedLeft {
        i: usize,
        j: usize,
    },
    /// Coface `d^{i+1}` inserted into the edge collapsed by `s^i`.
    MixedMiddle {
        i: usize,
    },
    /// Coface `d^{i+1}` against codegeneracy `s^j`, `0 <= j < i <= n`.
    MixedRight {
        i: usize,
        j: usize,
    },
    /// Two distinct codegeneracies, `0 <= i <= j <= n`.
    TwoDegeneracy {
        i: usize,
        j: usize,
    },
    /// A codegeneracy against itself.
    SameDegeneracy {
        i: usize,
    },
    /// Basic coface square, `0 <= i < j <= n`.
    Coface {
        i: usize,
        j: usize,
    },
    Generator {
        index: usize,
    },
    Minimal {
        index: usize,
    },
    /// `[0] -> [a]` at `a` against `[0] -> [b]` at `0`, glued into `[a+b]`.
    Segal {
        a: usize,
        b: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    #[serde(flatten)]
    pub family: Family,
    pub square: Square,
    pub self_mirror: bool,
}

fn d(n: usize, i: usize) -> MonotoneMap {
    MonotoneMap::coface(n, i).expect("coface index in range")
}

fn s(n: usize, i: usize) -> MonotoneMap {
    MonotoneMap::codegeneracy(n, i).expect("codegeneracy index in range")
}

fn id(n: usize) -> MonotoneMap {
    MonotoneMap::identity(n)
}

fn constant(dom: usize, cod: usize, v: usize) -> MonotoneMap {
    MonotoneMap::constant(dom, cod, v).expect("constant in range")
}

fn entry(family: Family, f: MonotoneMap, g: MonotoneMap, h: MonotoneMap, k: MonotoneMap) -> CatalogEntry {
    let square = Square::new(f, g, h, k).expect("catalog squares commute");
    let self_mirror = square.mirror() == square;
    CatalogEntry { family, square, self_mirror }
}

/// The basic coface square `d^j d^i = d^i d^{j-1}` into `[n]`.
pub(crate) fn basic_coface(n: usize, i: usize, j: usize) -> Square {
    Square::new(d(n - 1, i), d(n - 1, j - 1), d(n, j), d(n, i)).expect("basic coface squares commute")
}

/// The square gluing `[a]` and `[b]` along the last vertex of `[a]`.
pub fn segal_square(a: usize, b: usize) -> Square {
    let h = MonotoneMap::new(a + b, (0..=a).collect()).expect("in range");
    let k = MonotoneMap::new(a + b, (a..=a + b).collect()).expect("in range");
    Square::new(constant(0, a, a), constant(0, b, 0), h, k).expect("segal squares commute")
}

fn basic_pushouts(n: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    if n >= 2 {
        for j in 2..=n {
            for i in 0..j - 1 {
                out.push(entry(Family::TwoFace { i, j }, d(n - 1, i), d(n - 1, j - 1), d(n, j), d(n, i)));
            }
        }
    }
    if n >= 1 {
        for j in 1..=n {
            for i in 0..j {
                out.push(entry(Family::MixedLeft { i, j }, d(n + 1, i), s(n - 1, j - 1), s(n, j), d(n, i)));
            }
        }
    }
    for i in 0..=n {
        let h = s(n, i).compose(&s(n + 1, i)).expect("composable");
        out.push(entry(Family::MixedMiddle { i }, d(n + 2, i + 1), s(n, i), h, id(n)));
    }
    if n >= 1 {
        for i in 1..=n {
            for j in 0..i {
                out.push(entry(Family::MixedRight { i, j }, d(n + 1, i + 1), s(n - 1, j), s(n, j), d(n, i)));
            }
        }
    }
    for j in 0..=n {
        for i in 0..=j {
            out.push(entry(Family::TwoDegeneracy { i, j }, s(n + 1, i), s(n + 1, j + 1), s(n, j), s(n, i)));
        }
    }
    for i in 0..=n {
        out.push(entry(Family::SameDegeneracy { i }, s(n, i), s(n, i), id(n), id(n)));
    }
    out
}

fn generators_pushout() -> Vec<CatalogEntry> {
    let list = [
        (id(0), id(0), id(0), id(0)),
        (id(1), id(1), id(1), id(1)),
        (d(1, 0), id(0), id(1), d(1, 0)),
        (d(1, 1), id(0), id(1), d(1, 1)),
        (s(0, 0), id(1), id(0), s(0, 0)),
        (d(2, 1), id(1), id(2), d(2, 1)),
        (s(0, 0), s(0, 0), id(0), id(0)),
        (d(2, 1), s(0, 0), constant(2, 0, 0), id(0)),
    ];
    numbered(list)
}

fn generators_balanced() -> Vec<CatalogEntry> {
    let list = [
        (id(0), id(0), id(0), id(0)),
        (id(1), id(1), id(1), id(1)),
        (d(1, 0), id(0), id(1), d(1, 0)),
        (d(1, 1), id(0), id(1), d(1, 1)),
        (d(2, 1), id(1), id(2), d(2, 1)),
        (d(1, 0), d(1, 0), d(2, 0), d(2, 1)),
        (d(1, 1), d(1, 1), d(2, 1), d(2, 2)),
        (d(2, 1), d(2, 1), d(3, 1), d(3, 2)),
    ];
    numbered(list)
}

fn numbered<const N: usize>(list: [(MonotoneMap, MonotoneMap, MonotoneMap, MonotoneMap); N]) -> Vec<CatalogEntry> {
    list.into_iter()
        .enumerate()
        .map(|(index, (f, g, h, k))| entry(Family::Generator { index: index + 1 }, f, g, h, k))
        .collect()
}

fn minimal_vee(p: usize) -> Vec<CatalogEntry> {
    let edge = MonotoneMap::new(p, vec![0, p]).expect("endpoints in range");
    let shapes = [
        Square::trivial_horizontal(constant(0, p, p)),
        Square::trivial_horizontal(edge.clone()),
        Square { f: edge, g: s(0, 0), h: constant(p, 0, 0), k: id(0) },
        Square::trivial_horizontal(constant(0, p, 0)),
    ];
    shapes
        .into_iter()
        .enumerate()
        .map(|(index, q)| entry(Family::Minimal { index: index + 1 }, q.f, q.g, q.h, q.k))
        .collect()
}

pub fn catalog(kind: CatalogKind) -> Vec<CatalogEntry> {
    match kind {
        CatalogKind::BasicPushout(n) => basic_pushouts(n),
        CatalogKind::BasicCoface(n) if n < 2 => Vec::new(),
        CatalogKind::BasicCoface(n) => (1..=n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| {
                let q = basic_coface(n, i, j);
                entry(Family::Coface { i, j }, q.f, q.g, q.h, q.k)
            })
            .collect(),
        CatalogKind::GeneratorsPushout => generators_pushout(),
        CatalogKind::GeneratorsBalanced => generators_balanced(),
        CatalogKind::MinimalVee(p) => minimal_vee(p),
    }
}
