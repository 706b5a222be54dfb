use serde::{Deserialize, Serialize};

use super::{Square, SquareError};

/// A rectangular array of squares pasted along shared edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<Square>>,
}

impl Grid {
    pub fn new(cells: Vec<Vec<Square>>) -> Result<Self, SquareError> {
        let rows = cells.len();
        let cols = cells.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(SquareError::EmptyGrid);
        }
        let grid = Self { rows, cols, cells };
        grid.check()?;
        Ok(grid)
    }

    pub fn check(&self) -> Result<(), SquareError> {
        if self.cells.len() != self.rows || self.cells.iter().any(|r| r.len() != self.cols) {
            return Err(SquareError::Shape);
        }
        for (row, line) in self.cells.iter().enumerate() {
            for (col, cell) in line.iter().enumerate() {
                let right_ok = line.get(col + 1).is_none_or(|next| next.g == cell.h);
                let below_ok = self.cells.get(row + 1).is_none_or(|next| next[col].f == cell.k);
                if !right_ok || !below_ok {
                    return Err(SquareError::GridMismatch { row, col });
                }
            }
        }
        Ok(())
    }

    pub fn composite(&self) -> Result<Square, SquareError> {
        self.check()?;
        let rows = self
            .cells
            .iter()
            .map(|line| line[1..].iter().try_fold(line[0].clone(), |acc, c| acc.hcompose(c)))
            .collect::<Result<Vec<_>, _>>()?;
        rows[1..].iter().try_fold(rows[0].clone(), |acc, r| acc.vcompose(r))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Square> {
        self.cells.iter().flatten()
    }
}

/// A pasting of squares built by nested horizontal and vertical
/// composition. Unlike [`Grid`], neighbouring blocks may be subdivided
/// differently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tiling {
    Cell(Square),
    Horizontal(Vec<Tiling>),
    Vertical(Vec<Tiling>),
}

impl Tiling {
    pub fn composite(&self) -> Result<Square, SquareError> {
        match self {
            Tiling::Cell(q) => Ok(q.clone()),
            Tiling::Horizontal(parts) => fold(parts, Square::hcompose),
            Tiling::Vertical(parts) => fold(parts, Square::vcompose),
        }
    }

    pub fn cells(&self) -> Vec<&Square> {
        match self {
            Tiling::Cell(q) => vec![q],
            Tiling::Horizontal(parts) | Tiling::Vertical(parts) => parts.iter().flat_map(Tiling::cells).collect(),
        }
    }

    /// Flattens nested compositions of the same direction.
    pub fn simplify(self) -> Tiling {
        match self {
            Tiling::Cell(_) => self,
            Tiling::Horizontal(parts) => flatten(parts, true),
            Tiling::Vertical(parts) => flatten(parts, false),
        }
    }

    /// The tiling as a rectangular grid, when it is one.
    pub fn to_grid(&self) -> Option<Grid> {
        let as_line = |t: &Tiling, horizontal: bool| -> Option<Vec<Square>> {
            match t {
                Tiling::Cell(q) => Some(vec![q.clone()]),
                Tiling::Horizontal(ps) if horizontal => ps.iter().map(|p| p.as_cell().cloned()).collect(),
                Tiling::Vertical(ps) if !horizontal => ps.iter().map(|p| p.as_cell().cloned()).collect(),
                _ => None,
            }
        };
        let cells = match self {
            Tiling::Cell(q) => vec![vec![q.clone()]],
            Tiling::Horizontal(ps) => {
                let cols: Vec<Vec<Square>> = ps.iter().map(|p| as_line(p, false)).collect::<Option<_>>()?;
                let height = cols[0].len();
                if cols.iter().any(|c| c.len() != height) {
                    return None;
                }
                (0..height).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
            }
            Tiling::Vertical(ps) => ps.iter().map(|p| as_line(p, true)).collect::<Option<_>>()?,
        };
        Grid::new(cells).ok()
    }

    fn as_cell(&self) -> Option<&Square> {
        match self {
            Tiling::Cell(q) => Some(q),
            _ => None,
        }
    }
}

fn fold(parts: &[Tiling], op: fn(&Square, &Square) -> Result<Square, SquareError>) -> Result<Square, SquareError> {
    let (first, rest) = parts.split_first().ok_or(SquareError::EmptyGrid)?;
    rest.iter().try_fold(first.composite()?, |acc, t| op(&acc, &t.composite()?))
}

fn flatten(parts: Vec<Tiling>, horizontal: bool) -> Tiling {
    let mut out = Vec::new();
    for p in parts.into_iter().map(Tiling::simplify) {
        match p {
            Tiling::Horizontal(inner) if horizontal => out.extend(inner),
            Tiling::Vertical(inner) if !horizontal => out.extend(inner),
            other => out.push(other),
        }
    }
    if out.len() == 1 {
        out.pop().expect("one element")
    } else if horizontal {
        Tiling::Horizontal(out)
    } else {
        Tiling::Vertical(out)
    }
}
