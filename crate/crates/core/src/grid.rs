use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(row, col)`, zero-based.
pub type Coord = (usize, usize);

/// Orthogonal step directions in the fixed expansion order up, down, left, right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dir {
    Up,
    Down,
    Left,
    Right,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::Up, Dir::Down, Dir::Left, Dir::Right];

    pub fn delta(self) -> (isize, isize) {
        match self {
            Dir::Up => (-1, 0),
            Dir::Down => (1, 0),
            Dir::Left => (0, -1),
            Dir::Right => (0, 1),
        }
    }

    pub fn opposite(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Dir::Up => "up",
            Dir::Down => "down",
            Dir::Left => "left",
            Dir::Right => "right",
        }
    }
}

/// Rectangular row-major board.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridBoard<T> {
    rows: usize,
    cols: usize,
    cells: Vec<T>,
}

impl<T: Clone> GridBoard<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        assert!(rows > 0 && cols > 0, "empty board");
        GridBoard {
            rows,
            cols,
            cells: vec![value; rows * cols],
        }
    }
}

impl<T> GridBoard<T> {
    pub fn from_cells(rows: usize, cols: usize, cells: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 || cells.len() != rows * cols {
            return Err(Error::invalid(alloc::format!(
                "{} cells do not fill a {rows}x{cols} board",
                cells.len()
            )));
        }
        Ok(GridBoard { rows, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[T] {
        &self.cells
    }

    pub fn index(&self, (r, c): Coord) -> usize {
        debug_assert!(r < self.rows && c < self.cols);
        r * self.cols + c
    }

    pub fn coord(&self, index: usize) -> Coord {
        (index / self.cols, index % self.cols)
    }

    pub fn contains(&self, (r, c): Coord) -> bool {
        r < self.rows && c < self.cols
    }

    pub fn get(&self, at: Coord) -> &T {
        &self.cells[self.index(at)]
    }

    pub fn set(&mut self, at: Coord, value: T) {
        let i = self.index(at);
        self.cells[i] = value;
    }

    /// Neighbour one step away in `dir`, if on the board.
    pub fn step(&self, (r, c): Coord, dir: Dir) -> Option<Coord> {
        let (dr, dc) = dir.delta();
        let nr = r.checked_add_signed(dr)?;
        let nc = c.checked_add_signed(dc)?;
        self.contains((nr, nc)).then_some((nr, nc))
    }

    pub fn neighbours(&self, at: Coord) -> impl Iterator<Item = (Dir, Coord)> + '_ {
        Dir::ALL
            .into_iter()
            .filter_map(move |d| self.step(at, d).map(|n| (d, n)))
    }

    pub fn iter_coords(&self) -> impl Iterator<Item = Coord> + '_ {
        (0..self.rows).flat_map(move |r| (0..self.cols).map(move |c| (r, c)))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> GridBoard<U> {
        GridBoard {
            rows: self.rows,
            cols: self.cols,
            cells: self.cells.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_indexing() {
        let g = GridBoard::from_cells(2, 3, (0..6).collect()).unwrap();
        assert_eq!(*g.get((1, 2)), 5);
        assert_eq!(g.coord(4), (1, 1));
        assert!(GridBoard::from_cells(2, 3, alloc::vec![0; 5]).is_err());
    }

    #[test]
    fn corner_has_two_neighbours() {
        let g = GridBoard::filled(3, 3, 0u8);
        assert_eq!(g.neighbours((0, 0)).count(), 2);
        assert_eq!(g.neighbours((1, 1)).count(), 4);
    }
}
