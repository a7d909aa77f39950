use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::MAX_ATTEMPTS;
use crate::error::{Error, Result};
use crate::grid::{Coord, Dir, GridBoard};
use crate::rng::Rng;
use crate::search::{bfs_shortest, SearchLimits, SearchProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tile {
    Wall,
    Floor,
}

/// One box, one player and one target flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Warehouse {
    pub grid: GridBoard<Tile>,
    #[serde(rename = "box")]
    pub box_at: Coord,
    pub player: Coord,
    pub flag: Coord,
}

impl Warehouse {
    pub fn is_floor(&self, at: Coord) -> bool {
        self.grid.contains(at) && *self.grid.get(at) == Tile::Floor
    }

    pub fn validate(&self) -> Result<()> {
        if ![self.box_at, self.player, self.flag]
            .iter()
            .all(|&at| self.is_floor(at))
        {
            return Err(Error::invalid("box, player and flag must stand on floor"));
        }
        if self.box_at == self.player {
            return Err(Error::invalid("the player cannot stand on the box"));
        }
        Ok(())
    }

    /// Floor cells the player can walk to from `from` without crossing `blocked`.
    fn reachable(&self, from: Coord, blocked: Coord) -> Vec<bool> {
        let mut seen = vec![false; self.grid.len()];
        seen[self.grid.index(from)] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(at) = queue.pop_front() {
            for (_, next) in self.grid.neighbours(at) {
                let i = self.grid.index(next);
                if !seen[i] && next != blocked && *self.grid.get(next) == Tile::Floor {
                    seen[i] = true;
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// Smallest reachable cell in row-major order; names the player's region.
    fn region(&self, from: Coord, blocked: Coord) -> Coord {
        let seen = self.reachable(from, blocked);
        self.grid.coord(
            seen.iter()
                .position(|&s| s)
                .expect("start cell is reachable"),
        )
    }
}

/// Box position and player region.
type PushState = (Coord, Coord);

impl SearchProblem for Warehouse {
    type State = PushState;
    type Move = Dir;

    fn initial(&self) -> PushState {
        (self.box_at, self.region(self.player, self.box_at))
    }

    /// Pushes up, down, left, right.
    fn expand(&self, &(b, region): &PushState, out: &mut Vec<(Dir, PushState)>) {
        let reach = self.reachable(region, b);
        for d in Dir::ALL {
            let Some(behind) = self.grid.step(b, d.opposite()) else {
                continue;
            };
            let Some(ahead) = self.grid.step(b, d) else {
                continue;
            };
            if reach[self.grid.index(behind)] && *self.grid.get(ahead) == Tile::Floor {
                out.push((d, (ahead, self.region(b, ahead))));
            }
        }
    }

    fn canonical_key(&self, &(b, r): &PushState) -> Vec<u8> {
        [self.grid.index(b), self.grid.index(r)]
            .iter()
            .flat_map(|i| (*i as u32).to_le_bytes())
            .collect()
    }
}

/// Fewest pushes that bring the box onto the flag.
pub fn solve_move_box(w: &Warehouse) -> Result<u64> {
    w.validate()?;
    match bfs_shortest(w, |&(b, _)| b == w.flag, SearchLimits::default()) {
        Ok(p) => Ok(p.distance as u64),
        Err(Error::Unreachable) => Err(Error::invalid("the box cannot reach the flag")),
        Err(e) => Err(e),
    }
}

/// Fewest pushes by 0-1 BFS over every (box, player) pair, with walking free.
pub fn solve_move_box_full(w: &Warehouse) -> Result<u64> {
    w.validate()?;
    let g = &w.grid;
    let n = g.len();
    let id = |b: Coord, p: Coord| g.index(b) * n + g.index(p);
    let mut dist = vec![u64::MAX; n * n];
    dist[id(w.box_at, w.player)] = 0;
    let mut deque = VecDeque::from([(0u64, w.box_at, w.player)]);
    while let Some((d, b, p)) = deque.pop_front() {
        if d != dist[id(b, p)] {
            continue;
        }
        if b == w.flag {
            return Ok(d);
        }
        for (dir, next) in g.neighbours(p) {
            if *g.get(next) != Tile::Floor {
                continue;
            }
            if next == b {
                let Some(ahead) = g.step(b, dir) else {
                    continue;
                };
                if *g.get(ahead) == Tile::Floor && d + 1 < dist[id(ahead, b)] {
                    dist[id(ahead, b)] = d + 1;
                    deque.push_back((d + 1, ahead, b));
                }
            } else if d < dist[id(b, next)] {
                dist[id(b, next)] = d;
                deque.push_front((d, b, next));
            }
        }
    }
    Err(Error::invalid("the box cannot reach the flag"))
}

/// Square warehouse of side 6 to 8 with a wall border and scattered inner walls.
pub fn gen_move_box(rng: &mut Rng) -> Result<Warehouse> {
    for _ in 0..MAX_ATTEMPTS {
        let size = rng.range_usize(6, 8);
        let mut grid = GridBoard::filled(size, size, Tile::Wall);
        for r in 1..size - 1 {
            for c in 1..size - 1 {
                if !rng.chance(1, 5) {
                    grid.set((r, c), Tile::Floor);
                }
            }
        }
        let floor: Vec<Coord> = grid
            .iter_coords()
            .filter(|&at| *grid.get(at) == Tile::Floor)
            .collect();
        if floor.len() < 3 {
            continue;
        }
        let picks = rng.sample_indices(floor.len(), 3);
        let w = Warehouse {
            grid,
            box_at: floor[picks[0]],
            player: floor[picks[1]],
            flag: floor[picks[2]],
        };
        if solve_move_box(&w).is_ok() {
            return Ok(w);
        }
    }
    Err(Error::gave_up(MAX_ATTEMPTS, "no solvable warehouse drawn"))
}
