//! Perfect mazes carved by randomized depth-first search.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Coord, Dir, GridBoard};
use crate::rng::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MazeCell {
    Wall,
    Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MazeGrid {
    pub grid: GridBoard<MazeCell>,
    pub entrance: Coord,
    pub exit: Coord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MazeQuestion {
    LeftTurns,
    RightTurns,
    TotalTurns,
    CellsVisited,
}

impl MazeQuestion {
    pub const ALL: [MazeQuestion; 4] = [
        MazeQuestion::LeftTurns,
        MazeQuestion::RightTurns,
        MazeQuestion::TotalTurns,
        MazeQuestion::CellsVisited,
    ];
}

/// Heading of the walker as it steps onto the entrance cell.
pub const ENTRY_HEADING: Dir = Dir::Right;

pub fn right_of(d: Dir) -> Dir {
    match d {
        Dir::Up => Dir::Right,
        Dir::Right => Dir::Down,
        Dir::Down => Dir::Left,
        Dir::Left => Dir::Up,
    }
}

pub fn left_of(d: Dir) -> Dir {
    right_of(d).opposite()
}

impl MazeGrid {
    pub fn is_open(&self, at: Coord) -> bool {
        self.grid.contains(at) && *self.grid.get(at) == MazeCell::Path
    }

    pub fn validate(&self) -> Result<()> {
        for at in [self.entrance, self.exit] {
            if !self.is_open(at) {
                return Err(Error::invalid("entrance and exit must be open cells"));
            }
            let (r, c) = at;
            if r != 0 && c != 0 && r + 1 != self.grid.rows() && c + 1 != self.grid.cols() {
                return Err(Error::invalid("entrance and exit must lie on the boundary"));
            }
        }
        Ok(())
    }

    /// True when some 2×2 window is entirely open.
    pub fn has_open_block(&self) -> bool {
        let g = &self.grid;
        (0..g.rows().saturating_sub(1)).any(|r| {
            (0..g.cols().saturating_sub(1)).any(|c| {
                [(r, c), (r + 1, c), (r, c + 1), (r + 1, c + 1)]
                    .iter()
                    .all(|&at| self.is_open(at))
            })
        })
    }
}

/// Carves a `size × size` maze; `size` is odd, between 9 and 13.
pub fn gen_maze(rng: &mut Rng, size: usize) -> Result<MazeGrid> {
    if size.is_multiple_of(2) || !(9..=13).contains(&size) {
        return Err(Error::invalid("maze size must be 9, 11 or 13"));
    }
    let mut grid = GridBoard::filled(size, size, MazeCell::Wall);
    let start = (1, 1);
    grid.set(start, MazeCell::Path);
    let mut stack = vec![start];
    while let Some(&at) = stack.last() {
        let mut dirs = Dir::ALL;
        rng.shuffle(&mut dirs);
        let next = dirs.iter().find_map(|&d| {
            let (dr, dc) = d.delta();
            let r = at.0 as isize + 2 * dr;
            let c = at.1 as isize + 2 * dc;
            if r <= 0 || c <= 0 || r as usize >= size - 1 || c as usize >= size - 1 {
                return None;
            }
            let target = (r as usize, c as usize);
            (*grid.get(target) == MazeCell::Wall).then_some((
                target,
                ((at.0 as isize + dr) as usize, (at.1 as isize + dc) as usize),
            ))
        });
        match next {
            Some((target, between)) => {
                grid.set(between, MazeCell::Path);
                grid.set(target, MazeCell::Path);
                stack.push(target);
            }
            None => {
                stack.pop();
            }
        }
    }
    let entrance = (1, 0);
    let exit = if rng.coin() {
        (size - 1, size - 2)
    } else {
        (size - 2, size - 1)
    };
    grid.set(entrance, MazeCell::Path);
    grid.set(exit, MazeCell::Path);
    Ok(MazeGrid {
        grid,
        entrance,
        exit,
    })
}

/// Optimal route from entrance to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MazeRoute {
    pub path: Vec<Coord>,
    pub left_turns: u64,
    pub right_turns: u64,
}

impl MazeRoute {
    pub fn answer(&self, q: MazeQuestion) -> u64 {
        match q {
            MazeQuestion::LeftTurns => self.left_turns,
            MazeQuestion::RightTurns => self.right_turns,
            MazeQuestion::TotalTurns => self.left_turns + self.right_turns,
            MazeQuestion::CellsVisited => self.path.len() as u64,
        }
    }
}

fn dir_index(d: Dir) -> usize {
    Dir::ALL
        .iter()
        .position(|&x| x == d)
        .expect("known direction")
}

/// Route through the fewest cells, then the fewest turns.
///
/// States are (cell, heading); stepping straight costs one cell, turning
/// costs one cell and one turn. Reversing in place is not a move.
pub fn route_maze(maze: &MazeGrid) -> Result<MazeRoute> {
    maze.validate()?;
    let g = &maze.grid;
    let state = |at: Coord, d: Dir| g.index(at) * 4 + dir_index(d);
    let n = g.len() * 4;
    let mut best: Vec<Option<(u64, u64)>> = vec![None; n];
    let mut parent: Vec<usize> = vec![usize::MAX; n];
    let start = state(maze.entrance, ENTRY_HEADING);
    best[start] = Some((1, 0));
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(((1u64, 0u64), start)));
    let mut goal = None;
    while let Some(Reverse((cost, s))) = heap.pop() {
        if best[s] != Some(cost) {
            continue;
        }
        let at = g.coord(s / 4);
        let heading = Dir::ALL[s % 4];
        if at == maze.exit {
            goal = Some(s);
            break;
        }
        for d in Dir::ALL {
            if d == heading.opposite() {
                continue;
            }
            let Some(next) = g.step(at, d) else { continue };
            if *g.get(next) != MazeCell::Path {
                continue;
            }
            let c = (cost.0 + 1, cost.1 + (d != heading) as u64);
            let t = state(next, d);
            if best[t].is_none_or(|b| c < b) {
                best[t] = Some(c);
                parent[t] = s;
                heap.push(Reverse((c, t)));
            }
        }
    }
    let goal = goal.ok_or(Error::Unreachable)?;
    let mut chain = vec![goal];
    while *chain.last().expect("nonempty") != start {
        chain.push(parent[*chain.last().expect("nonempty")]);
    }
    chain.reverse();
    let (mut left, mut right) = (0, 0);
    for w in chain.windows(2) {
        let (a, b) = (Dir::ALL[w[0] % 4], Dir::ALL[w[1] % 4]);
        if b == right_of(a) {
            right += 1;
        } else if b == left_of(a) {
            left += 1;
        }
    }
    Ok(MazeRoute {
        path: chain.iter().map(|&s| g.coord(s / 4)).collect(),
        left_turns: left,
        right_turns: right,
    })
}

pub fn solve_maze(maze: &MazeGrid, q: MazeQuestion) -> Result<u64> {
    Ok(route_maze(maze)?.answer(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(rows: &[&str]) -> MazeGrid {
        let cells: Vec<MazeCell> = rows
            .iter()
            .flat_map(|r| {
                r.chars().map(|ch| {
                    if ch == '#' {
                        MazeCell::Wall
                    } else {
                        MazeCell::Path
                    }
                })
            })
            .collect();
        let grid = GridBoard::from_cells(rows.len(), rows[0].len(), cells).unwrap();
        let find = |ch| {
            rows.iter()
                .enumerate()
                .find_map(|(r, row)| row.find(ch).map(|c| (r, c)))
                .unwrap()
        };
        MazeGrid {
            grid,
            entrance: find('S'),
            exit: find('E'),
        }
    }

    #[test]
    fn straight_corridor() {
        let m = parse(&["#####", "S...E", "#####"]);
        assert_eq!(solve_maze(&m, MazeQuestion::TotalTurns).unwrap(), 0);
        assert_eq!(solve_maze(&m, MazeQuestion::CellsVisited).unwrap(), 5);
    }

    #[test]
    fn l_shaped_corridor() {
        let m = parse(&["####", "S..#", "##.#", "##E#"]);
        let r = route_maze(&m).unwrap();
        assert_eq!(r.answer(MazeQuestion::TotalTurns), 1);
        assert_eq!(r.right_turns, 1);
        assert_eq!(r.answer(MazeQuestion::CellsVisited), 5);
    }

    #[test]
    fn loops_prefer_fewer_turns() {
        // Several routes of equal length; the one along the bottom turns least.
        let m = parse(&["#######", "S.#...#", "#...#.#", "#.....E", "#######"]);
        let r = route_maze(&m).unwrap();
        assert_eq!(r.path.len(), 9);
        assert_eq!(r.answer(MazeQuestion::TotalTurns), 2);
    }

    struct Best {
        len: usize,
        turns: u64,
        paths: usize,
    }

    /// Every simple path from the entrance to the exit.
    fn all_paths(
        m: &MazeGrid,
        at: Coord,
        heading: Dir,
        seen: &mut Vec<bool>,
        len: usize,
        turns: u64,
        out: &mut Best,
    ) {
        if at == m.exit {
            out.paths += 1;
            if (len, turns) < (out.len, out.turns) {
                out.len = len;
                out.turns = turns;
            }
            return;
        }
        for d in Dir::ALL {
            if let Some(next) = m.grid.step(at, d) {
                let i = m.grid.index(next);
                if m.is_open(next) && !seen[i] {
                    seen[i] = true;
                    all_paths(
                        m,
                        next,
                        d,
                        seen,
                        len + 1,
                        turns + (d != heading) as u64,
                        out,
                    );
                    seen[i] = false;
                }
            }
        }
    }

    #[test]
    fn generated_mazes_match_exhaustive_paths() {
        let mut rng = Rng::new(31);
        for _ in 0..200 {
            let m = gen_maze(&mut rng, 9).unwrap();
            assert!(!m.has_open_block());
            let r = route_maze(&m).unwrap();
            let mut seen = vec![false; m.grid.len()];
            seen[m.grid.index(m.entrance)] = true;
            let mut best = Best {
                len: usize::MAX,
                turns: u64::MAX,
                paths: 0,
            };
            all_paths(&m, m.entrance, ENTRY_HEADING, &mut seen, 1, 0, &mut best);
            assert_eq!(best.paths, 1);
            assert_eq!(
                (r.path.len(), r.left_turns + r.right_turns),
                (best.len, best.turns)
            );
        }
    }

    #[test]
    fn generated_mazes_are_well_formed() {
        let mut rng = Rng::new(2);
        for size in [9, 11, 13] {
            for _ in 0..50 {
                let m = gen_maze(&mut rng, size).unwrap();
                m.validate().unwrap();
                assert!(!m.has_open_block());
                assert_eq!(m.entrance, (1, 0));
                assert!(m.exit == (size - 1, size - 2) || m.exit == (size - 2, size - 1));
                let r = route_maze(&m).unwrap();
                assert_eq!(r.answer(MazeQuestion::CellsVisited), r.path.len() as u64);
                // Every odd lattice cell is carved.
                assert!((1..size)
                    .step_by(2)
                    .all(|a| (1..size).step_by(2).all(|b| m.is_open((a, b)))));
            }
        }
        assert_eq!(
            gen_maze(&mut Rng::new(9), 11),
            gen_maze(&mut Rng::new(9), 11)
        );
        assert!(gen_maze(&mut Rng::new(9), 10).is_err());
    }
}
