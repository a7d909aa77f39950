//! Board Tiling, Colour Hue, N-Queens and Rotting Fruit.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Coord, GridBoard};
use crate::rng::Rng;
use crate::search::backtrack_enumerate;

const MAX_ATTEMPTS: usize = 1000;

// ---------------------------------------------------------------------------
// Board tiling

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingInstance {
    pub rows: usize,
    pub cols: usize,
    pub removed: Vec<Coord>,
}

/// Chequer colour of a cell; `(0, 0)` is dark (0).
pub fn chequer(at: Coord) -> usize {
    (at.0 + at.1) % 2
}

impl TilingInstance {
    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::invalid("empty board"));
        }
        let want = if (self.rows * self.cols).is_multiple_of(2) {
            2
        } else {
            1
        };
        if self.removed.len() != want {
            return Err(Error::invalid("wrong number of removed cells"));
        }
        if self
            .removed
            .iter()
            .any(|&(r, c)| r >= self.rows || c >= self.cols)
        {
            return Err(Error::invalid("removed cell outside the board"));
        }
        if want == 2 && self.removed[0] == self.removed[1] {
            return Err(Error::invalid("removed cells must differ"));
        }
        Ok(())
    }

    pub fn remaining(&self) -> usize {
        self.rows * self.cols - self.removed.len()
    }

    /// The board as a grid of holes (`true` = removed).
    pub fn holes(&self) -> GridBoard<bool> {
        let mut b = GridBoard::filled(self.rows, self.cols, false);
        for &at in &self.removed {
            b.set(at, true);
        }
        b
    }
}

/// Whether the mutilated board can be covered by dominoes.
///
/// Boards at least two cells wide in both directions are tileable exactly
/// when the two chequer colours remain equinumerous. A single row or
/// column is a line of runs, each of which must have even length.
pub fn solve_tiling(inst: &TilingInstance) -> Result<bool> {
    inst.validate()?;
    if inst.rows >= 2 && inst.cols >= 2 {
        let mut count = [0usize; 2];
        for r in 0..inst.rows {
            for c in 0..inst.cols {
                if !inst.removed.contains(&(r, c)) {
                    count[chequer((r, c))] += 1;
                }
            }
        }
        return Ok(count[0] == count[1]);
    }
    let len = inst.rows.max(inst.cols);
    let gone: Vec<usize> = inst.removed.iter().map(|&(r, c)| r.max(c)).collect();
    let mut run = 0usize;
    for i in 0..=len {
        if i == len || gone.contains(&i) {
            if run % 2 == 1 {
                return Ok(false);
            }
            run = 0;
        } else {
            run += 1;
        }
    }
    Ok(true)
}

/// Largest board [`brute_force_tileable`] accepts.
pub const BRUTE_FORCE_MAX_CELLS: usize = 24;

/// Exhaustive domino placement over the non-hole cells.
pub fn brute_force_tileable(holes: &GridBoard<bool>) -> Result<bool> {
    let n = holes.len();
    if n > BRUTE_FORCE_MAX_CELLS {
        return Err(Error::TooLarge {
            cells: n,
            max: BRUTE_FORCE_MAX_CELLS,
        });
    }
    let mut filled = 0u32;
    for (i, &h) in holes.cells().iter().enumerate() {
        if h {
            filled |= 1 << i;
        }
    }
    Ok(tile_from(filled, holes.rows(), holes.cols()))
}

fn tile_from(filled: u32, rows: usize, cols: usize) -> bool {
    let full = (1u32 << (rows * cols)) - 1;
    if filled == full {
        return true;
    }
    // The first empty cell must be the top or left half of some domino.
    let i = (!filled).trailing_zeros() as usize;
    let (r, c) = (i / cols, i % cols);
    if c + 1 < cols && filled & (1 << (i + 1)) == 0 && tile_from(filled | 3 << i, rows, cols) {
        return true;
    }
    r + 1 < rows
        && filled & (1 << (i + cols)) == 0
        && tile_from(filled | 1 << i | 1 << (i + cols), rows, cols)
}

pub fn gen_tiling(rng: &mut Rng) -> TilingInstance {
    let rows = rng.range_usize(4, 9);
    let cols = rng.range_usize(4, 9);
    let k = if (rows * cols).is_multiple_of(2) {
        2
    } else {
        1
    };
    let removed = rng
        .sample_indices(rows * cols, k)
        .into_iter()
        .map(|i| (i / cols, i % cols))
        .collect();
    TilingInstance {
        rows,
        cols,
        removed,
    }
}

// ---------------------------------------------------------------------------
// Colour hue

pub type Rgb = [u8; 3];

/// An ideal gradient board and the shuffled arrangement shown to the solver.
///
/// `shuffled[i]` is the displayed position of the tile whose ideal
/// position is `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HueBoard {
    pub rows: usize,
    pub cols: usize,
    pub ideal: Vec<Rgb>,
    pub shuffled: Vec<usize>,
}

impl HueBoard {
    /// Tile colours in displayed order.
    pub fn displayed(&self) -> Vec<Rgb> {
        let mut out = vec![[0; 3]; self.ideal.len()];
        for (i, &p) in self.shuffled.iter().enumerate() {
            out[p] = self.ideal[i];
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.rows * self.cols;
        if self.ideal.len() != n || self.shuffled.len() != n {
            return Err(Error::invalid("board size mismatch"));
        }
        if self.ideal.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(Error::invalid("tile colours must be distinct"));
        }
        if !is_permutation(&self.shuffled) {
            return Err(Error::invalid("shuffle is not a permutation"));
        }
        Ok(())
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !core::mem::replace(&mut seen[x], true))
}

/// Corner colours are top-left, top-right, bottom-left, bottom-right.
pub fn interpolate_corners(rows: usize, cols: usize, corners: [Rgb; 4]) -> Vec<Rgb> {
    let (h, w) = ((rows - 1).max(1) as u32, (cols - 1).max(1) as u32);
    let den = h * w;
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows as u32 {
        for c in 0..cols as u32 {
            let weights = [(h - r) * (w - c), (h - r) * c, r * (w - c), r * c];
            let mut px = [0u8; 3];
            for (ch, slot) in px.iter_mut().enumerate() {
                let num: u32 = weights
                    .iter()
                    .zip(&corners)
                    .map(|(wt, k)| wt * k[ch] as u32)
                    .sum();
                *slot = ((num + den / 2) / den) as u8;
            }
            out.push(px);
        }
    }
    out
}

/// Minimum swaps back to the ideal order, by running selection sort.
pub fn solve_colour_hue(board: &HueBoard) -> Result<u64> {
    board.validate()?;
    Ok(selection_sort_swaps(&board.shuffled))
}

/// Swaps selection sort makes to put the displayed tiles back in order.
pub fn selection_sort_swaps(shuffled: &[usize]) -> u64 {
    let mut shown = vec![0usize; shuffled.len()];
    for (ideal, &pos) in shuffled.iter().enumerate() {
        shown[pos] = ideal;
    }
    let mut swaps = 0;
    for pos in 0..shown.len() {
        if shown[pos] != pos {
            let j = pos
                + shown[pos..]
                    .iter()
                    .position(|&t| t == pos)
                    .expect("permutation");
            shown.swap(pos, j);
            swaps += 1;
        }
    }
    swaps
}

pub fn gen_colour_hue(rng: &mut Rng) -> Result<HueBoard> {
    let rows = rng.range_usize(3, 6);
    let cols = rng.range_usize(3, 6);
    let n = rows * cols;
    for _ in 0..MAX_ATTEMPTS {
        let mut corners = [[0u8; 3]; 4];
        for k in corners.iter_mut() {
            for ch in k.iter_mut() {
                *ch = rng.range(0, 255) as u8;
            }
        }
        let ideal = interpolate_corners(rows, cols, corners);
        if ideal.iter().collect::<BTreeSet<_>>().len() != n {
            continue;
        }
        let k = rng.range_usize(2, 10.min(n));
        let moved = rng.sample_indices(n, k);
        let mut targets = moved.clone();
        while targets.iter().zip(&moved).any(|(a, b)| a == b) {
            rng.shuffle(&mut targets);
        }
        let mut shuffled: Vec<usize> = (0..n).collect();
        for (&from, &to) in moved.iter().zip(&targets) {
            shuffled[from] = to;
        }
        return Ok(HueBoard {
            rows,
            cols,
            ideal,
            shuffled,
        });
    }
    Err(Error::gave_up(
        MAX_ATTEMPTS,
        "corner colours kept colliding",
    ))
}

// ---------------------------------------------------------------------------
// N-Queens

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueensInstance {
    pub n: usize,
    /// Column of the queen in each row.
    pub full_solution: Vec<usize>,
    pub hidden_rows: [usize; 2],
}

impl QueensInstance {
    /// Queens shown on the board as `(row, col)`.
    pub fn shown(&self) -> Vec<Coord> {
        (0..self.n)
            .filter(|r| !self.hidden_rows.contains(r))
            .map(|r| (r, self.full_solution[r]))
            .collect()
    }
}

fn attacks(a: Coord, b: Coord) -> bool {
    a.0 == b.0 || a.1 == b.1 || a.0.abs_diff(b.0) == a.1.abs_diff(b.1)
}

/// All non-attacking placements of `n` queens, one column per row, in
/// lexicographic order.
pub fn enumerate_nqueens(n: usize) -> Vec<Vec<usize>> {
    backtrack_enumerate(
        n,
        |_, _| (0..n).collect(),
        |p| {
            let r = p.len() - 1;
            (0..r).all(|i| !attacks((i, p[i]), (r, p[r])))
        },
    )
}

/// Every way to place the two missing queens, as pairs of squares.
pub fn queens_completions(inst: &QueensInstance) -> Vec<[Coord; 2]> {
    let shown = inst.shown();
    let [r1, r2] = inst.hidden_rows;
    let free = |sq: Coord| shown.iter().all(|&q| !attacks(q, sq));
    let mut out = Vec::new();
    for c1 in 0..inst.n {
        if !free((r1, c1)) {
            continue;
        }
        for c2 in 0..inst.n {
            if free((r2, c2)) && !attacks((r1, c1), (r2, c2)) {
                out.push([(r1, c1), (r2, c2)]);
            }
        }
    }
    out
}

fn manhattan(a: Coord, b: Coord) -> usize {
    a.0.abs_diff(b.0) + a.1.abs_diff(b.1)
}

/// Manhattan distance between the two missing queens.
pub fn solve_nqueens(inst: &QueensInstance) -> Result<u64> {
    if inst.full_solution.len() != inst.n || inst.hidden_rows[0] == inst.hidden_rows[1] {
        return Err(Error::invalid("malformed queens instance"));
    }
    if inst.hidden_rows.iter().any(|&r| r >= inst.n) {
        return Err(Error::invalid("hidden row outside the board"));
    }
    let completions = queens_completions(inst);
    let distances: BTreeSet<usize> = completions.iter().map(|[a, b]| manhattan(*a, *b)).collect();
    match distances.len() {
        0 => Err(Error::invalid("no way to complete the board")),
        1 => Ok(*distances.first().expect("one distance") as u64),
        _ => Err(Error::AssumptionViolated(String::from(
            "completions disagree on the distance between the missing queens",
        ))),
    }
}

/// Picks a solution from `solutions` and hides two of its rows.
pub fn gen_nqueens(rng: &mut Rng, solutions: &[Vec<usize>]) -> Result<QueensInstance> {
    for _ in 0..MAX_ATTEMPTS {
        let full = rng.choose(solutions).clone();
        let n = full.len();
        let mut rows = rng.sample_indices(n, 2);
        rows.sort_unstable();
        let inst = QueensInstance {
            n,
            full_solution: full,
            hidden_rows: [rows[0], rows[1]],
        };
        match solve_nqueens(&inst) {
            Ok(_) => return Ok(inst),
            Err(Error::AssumptionViolated(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::gave_up(MAX_ATTEMPTS, "ambiguous queen completions"))
}

// ---------------------------------------------------------------------------
// Rotting fruit

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FruitCell {
    Empty,
    Fresh,
    Rotten,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RottingGrid {
    pub grid: GridBoard<FruitCell>,
    pub fruit: String,
}

pub const FRUITS: [&str; 5] = ["kiwi", "orange", "apple", "plum", "lemon"];

/// Minutes until no fresh fruit remains.
pub fn solve_rotting(g: &RottingGrid) -> Result<u64> {
    let grid = &g.grid;
    let sources: Vec<Coord> = grid
        .iter_coords()
        .filter(|&at| *grid.get(at) == FruitCell::Rotten)
        .collect();
    if sources.len() != 1 {
        return Err(Error::invalid("exactly one rotten fruit is required"));
    }
    let mut dist: GridBoard<Option<u64>> = GridBoard::filled(grid.rows(), grid.cols(), None);
    dist.set(sources[0], Some(0));
    let mut queue = VecDeque::from([sources[0]]);
    let mut worst = 0;
    while let Some(at) = queue.pop_front() {
        let d = dist.get(at).expect("queued cells have a distance");
        worst = worst.max(d);
        for (_, next) in grid.neighbours(at) {
            if *grid.get(next) == FruitCell::Fresh && dist.get(next).is_none() {
                dist.set(next, Some(d + 1));
                queue.push_back(next);
            }
        }
    }
    let stranded = grid
        .iter_coords()
        .any(|at| *grid.get(at) == FruitCell::Fresh && dist.get(at).is_none());
    if stranded {
        return Err(Error::invalid("some fresh fruit never rots"));
    }
    Ok(worst)
}

fn fruit_connected(grid: &GridBoard<FruitCell>) -> bool {
    let fruit: Vec<Coord> = grid
        .iter_coords()
        .filter(|&at| *grid.get(at) != FruitCell::Empty)
        .collect();
    let Some(&start) = fruit.first() else {
        return false;
    };
    let mut seen = GridBoard::filled(grid.rows(), grid.cols(), false);
    seen.set(start, true);
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(at) = stack.pop() {
        for (_, next) in grid.neighbours(at) {
            if *grid.get(next) != FruitCell::Empty && !*seen.get(next) {
                seen.set(next, true);
                reached += 1;
                stack.push(next);
            }
        }
    }
    reached == fruit.len()
}

pub fn gen_rotting(rng: &mut Rng) -> Result<RottingGrid> {
    let fruit = String::from(*rng.choose(&FRUITS));
    for _ in 0..MAX_ATTEMPTS {
        let rows = rng.range_usize(3, 6);
        let cols = rng.range_usize(3, 6);
        let n = rows * cols;
        let empties = rng.range_usize(0, n * 2 / 5);
        let mut grid = GridBoard::filled(rows, cols, FruitCell::Fresh);
        for i in rng.sample_indices(n, empties) {
            grid.set(grid.coord(i), FruitCell::Empty);
        }
        if n - empties < 2 || !fruit_connected(&grid) {
            continue;
        }
        let fruit_cells: Vec<Coord> = grid
            .iter_coords()
            .filter(|&at| *grid.get(at) == FruitCell::Fresh)
            .collect();
        grid.set(*rng.choose(&fruit_cells), FruitCell::Rotten);
        return Ok(RottingGrid { grid, fruit });
    }
    Err(Error::gave_up(
        MAX_ATTEMPTS,
        "fruit kept splitting into islands",
    ))
}
