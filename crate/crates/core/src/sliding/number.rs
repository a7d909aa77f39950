use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Dir;
use crate::rng::Rng;
use crate::search::{bfs_layer_sets, Layer, SearchLimits, SearchProblem};

/// An `n × n` sliding board; `0` marks the open cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideBoard {
    pub n: usize,
    pub tiles: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    Row,
    Column,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremum {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectedStat {
    Max,
    Min,
    Sum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "style", rename_all = "snake_case")]
pub enum SlideQuestion {
    /// Distinct boards after exactly `moves` moves.
    CountPositions { moves: usize },
    /// Largest or smallest sum of one row or column after exactly `moves` moves.
    ExtremalSum {
        moves: usize,
        axis: Axis,
        index: usize,
        extremum: Extremum,
    },
    /// Statistic of the row or column holding the open cell after the
    /// open cell follows `path`.
    Directed {
        path: Vec<Dir>,
        axis: Axis,
        stat: DirectedStat,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideInstance {
    pub board: SlideBoard,
    pub question: SlideQuestion,
}

impl SlideBoard {
    pub fn validate(&self) -> Result<()> {
        let cells = self.n * self.n;
        if self.tiles.len() != cells {
            return Err(Error::invalid("tile count does not match the board"));
        }
        let mut seen = alloc::vec![false; cells];
        for &t in &self.tiles {
            if t as usize >= cells || core::mem::replace(&mut seen[t as usize], true) {
                return Err(Error::invalid("tiles must be 0..n*n-1, each once"));
            }
        }
        Ok(())
    }

    pub fn open(&self) -> usize {
        self.tiles
            .iter()
            .position(|&t| t == 0)
            .expect("board has an open cell")
    }

    /// Moves the open cell one step; `None` if it would leave the board.
    pub fn slide(&self, d: Dir) -> Option<SlideBoard> {
        slide_tiles(self.n, &self.tiles, d).map(|tiles| SlideBoard { n: self.n, tiles })
    }

    /// Values along a row or column; the open cell reads as 0.
    pub fn line(&self, axis: Axis, index: usize) -> Vec<u8> {
        line_of(self.n, &self.tiles, axis, index)
    }
}

fn slide_tiles(n: usize, tiles: &[u8], d: Dir) -> Option<Vec<u8>> {
    let open = tiles.iter().position(|&t| t == 0)?;
    let (r, c) = (open / n, open % n);
    let (dr, dc) = d.delta();
    let (nr, nc) = (r as isize + dr, c as isize + dc);
    if nr < 0 || nc < 0 || nr as usize >= n || nc as usize >= n {
        return None;
    }
    let mut out = tiles.to_vec();
    out.swap(open, nr as usize * n + nc as usize);
    Some(out)
}

fn line_of(n: usize, tiles: &[u8], axis: Axis, index: usize) -> Vec<u8> {
    (0..n)
        .map(|k| match axis {
            Axis::Row => tiles[index * n + k],
            Axis::Column => tiles[k * n + index],
        })
        .collect()
}

fn line_sum(n: usize, tiles: &[u8], axis: Axis, index: usize) -> u64 {
    line_of(n, tiles, axis, index)
        .iter()
        .map(|&t| t as u64)
        .sum()
}

impl SearchProblem for SlideBoard {
    type State = Vec<u8>;
    type Move = Dir;

    fn initial(&self) -> Vec<u8> {
        self.tiles.clone()
    }

    /// Open cell moves up, down, left, right, in that order.
    fn expand(&self, s: &Vec<u8>, out: &mut Vec<(Dir, Vec<u8>)>) {
        for d in Dir::ALL {
            if let Some(next) = slide_tiles(self.n, s, d) {
                out.push((d, next));
            }
        }
    }

    fn canonical_key(&self, s: &Vec<u8>) -> Vec<u8> {
        s.clone()
    }
}

/// Boards reachable in exactly `0..=moves` moves.
pub fn layer_sets(board: &SlideBoard, moves: usize) -> Result<Vec<Layer<Vec<u8>>>> {
    board.validate()?;
    bfs_layer_sets(board, moves, SearchLimits::default())
}

pub fn solve_number_slide(inst: &SlideInstance) -> Result<u64> {
    let b = &inst.board;
    b.validate()?;
    match &inst.question {
        SlideQuestion::CountPositions { moves } => {
            let layers = layer_sets(b, *moves)?;
            Ok(layers[*moves].len() as u64)
        }
        SlideQuestion::ExtremalSum {
            moves,
            axis,
            index,
            extremum,
        } => {
            if *index >= b.n {
                return Err(Error::invalid("line index outside the board"));
            }
            let layers = layer_sets(b, *moves)?;
            let sums = layers[*moves]
                .values()
                .map(|t| line_sum(b.n, t, *axis, *index));
            let pick = match extremum {
                Extremum::Max => sums.max(),
                Extremum::Min => sums.min(),
            };
            pick.ok_or(Error::Unreachable)
        }
        SlideQuestion::Directed { path, axis, stat } => {
            let mut board = b.clone();
            for &d in path {
                board = board
                    .slide(d)
                    .ok_or_else(|| Error::invalid("the open cell would leave the board"))?;
            }
            let open = board.open();
            let index = match axis {
                Axis::Row => open / b.n,
                Axis::Column => open % b.n,
            };
            let line = board.line(*axis, index);
            let tiles = line.iter().filter(|&&t| t != 0).map(|&t| t as u64);
            Ok(match stat {
                DirectedStat::Sum => tiles.sum(),
                DirectedStat::Max => tiles.max().unwrap_or(0),
                DirectedStat::Min => tiles.min().unwrap_or(0),
            })
        }
    }
}

/// Whether the arrangement can reach the ordered board with the open cell last.
pub fn is_solvable(n: usize, tiles: &[u8]) -> bool {
    let numbered: Vec<u8> = tiles.iter().copied().filter(|&t| t != 0).collect();
    let mut inversions = 0usize;
    for i in 0..numbered.len() {
        inversions += numbered[i + 1..]
            .iter()
            .filter(|&&t| t < numbered[i])
            .count();
    }
    if n % 2 == 1 {
        inversions.is_multiple_of(2)
    } else {
        let open_row_from_bottom = n - tiles.iter().position(|&t| t == 0).expect("open cell") / n;
        (inversions + open_row_from_bottom) % 2 == 1
    }
}

pub fn gen_number_slide(rng: &mut Rng) -> SlideInstance {
    let n = *rng.choose(&[3usize, 4, 5]);
    let mut tiles: Vec<u8> = (0..(n * n) as u8).collect();
    rng.shuffle(&mut tiles);
    if !is_solvable(n, &tiles) {
        let (a, b) = {
            let mut nz = tiles
                .iter()
                .enumerate()
                .filter(|(_, &t)| t != 0)
                .map(|(i, _)| i);
            (nz.next().expect("tile"), nz.next().expect("tile"))
        };
        tiles.swap(a, b);
    }
    let board = SlideBoard { n, tiles };
    let moves = rng.range_usize(1, 4);
    let axis = if rng.coin() { Axis::Row } else { Axis::Column };
    let question = match rng.below(3) {
        0 => SlideQuestion::CountPositions { moves },
        1 => SlideQuestion::ExtremalSum {
            moves,
            axis,
            index: rng.below(n),
            extremum: if rng.coin() {
                Extremum::Max
            } else {
                Extremum::Min
            },
        },
        _ => {
            let mut path = Vec::with_capacity(moves);
            let mut at = board.clone();
            while path.len() < moves {
                let options: Vec<Dir> = Dir::ALL
                    .iter()
                    .copied()
                    .filter(|&d| path.last() != Some(&d.opposite()) && at.slide(d).is_some())
                    .collect();
                let d = *rng.choose(&options);
                at = at.slide(d).expect("legal move");
                path.push(d);
            }
            SlideQuestion::Directed {
                path,
                axis,
                stat: *rng.choose(&[DirectedStat::Max, DirectedStat::Min, DirectedStat::Sum]),
            }
        }
    };
    SlideInstance { board, question }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn corner_board() -> SlideBoard {
        SlideBoard {
            n: 3,
            tiles: vec![0, 1, 2, 3, 4, 5, 6, 7, 8],
        }
    }

    /// Applies every string of `k` open-cell moves and collects the legal endpoints.
    fn by_move_strings(b: &SlideBoard, k: usize) -> BTreeSet<Vec<u8>> {
        let mut out = BTreeSet::new();
        for code in 0..4usize.pow(k as u32) {
            let mut at = Some(b.clone());
            let mut c = code;
            for _ in 0..k {
                at = at.and_then(|x| x.slide(Dir::ALL[c % 4]));
                c /= 4;
            }
            if let Some(x) = at {
                out.insert(x.tiles);
            }
        }
        out
    }

    #[test]
    fn corner_layers() {
        let b = corner_board();
        let layers = layer_sets(&b, 3).unwrap();
        assert_eq!(layers[0].len(), 1);
        assert_eq!(layers[1].len(), 2);
        for (k, layer) in layers.iter().enumerate() {
            let keys: BTreeSet<Vec<u8>> = layer.keys().cloned().collect();
            assert_eq!(keys, by_move_strings(&b, k));
        }
    }

    #[test]
    fn layers_alternate_parity() {
        let mut rng = Rng::new(3);
        for _ in 0..20 {
            let inst = gen_number_slide(&mut rng);
            let layers = layer_sets(&inst.board, 4).unwrap();
            for w in layers.windows(2) {
                assert!(w[0].keys().all(|k| !w[1].contains_key(k)));
                assert!(!w[1].is_empty());
            }
        }
    }

    #[test]
    fn question_styles() {
        // 1 2 3 / 4 0 5 / 6 7 8
        let b = SlideBoard {
            n: 3,
            tiles: vec![1, 2, 3, 4, 0, 5, 6, 7, 8],
        };
        let count = SlideInstance {
            board: b.clone(),
            question: SlideQuestion::CountPositions { moves: 0 },
        };
        assert_eq!(solve_number_slide(&count).unwrap(), 1);
        let count = SlideInstance {
            board: b.clone(),
            question: SlideQuestion::CountPositions { moves: 1 },
        };
        assert_eq!(solve_number_slide(&count).unwrap(), 4);
        // Moving the open cell up pulls 2 down: the top row becomes 1 0 3.
        let min_top = SlideInstance {
            board: b.clone(),
            question: SlideQuestion::ExtremalSum {
                moves: 1,
                axis: Axis::Row,
                index: 0,
                extremum: Extremum::Min,
            },
        };
        assert_eq!(solve_number_slide(&min_top).unwrap(), 4);
        let directed = |path: Vec<Dir>, stat| SlideInstance {
            board: b.clone(),
            question: SlideQuestion::Directed {
                path,
                axis: Axis::Column,
                stat,
            },
        };
        // Open goes up then left and ends at (0,0); column 0 reads 0 4 6.
        assert_eq!(
            solve_number_slide(&directed(vec![Dir::Up, Dir::Left], DirectedStat::Sum)).unwrap(),
            10
        );
        assert_eq!(
            solve_number_slide(&directed(vec![Dir::Up, Dir::Left], DirectedStat::Max)).unwrap(),
            6
        );
        assert_eq!(
            solve_number_slide(&directed(vec![Dir::Up, Dir::Left], DirectedStat::Min)).unwrap(),
            4
        );
        assert!(solve_number_slide(&directed(vec![Dir::Up, Dir::Up], DirectedStat::Sum)).is_err());
    }

    #[test]
    fn generated_boards_are_solvable_and_answerable() {
        let mut rng = Rng::new(10);
        let mut styles = [0; 3];
        for _ in 0..300 {
            let inst = gen_number_slide(&mut rng);
            inst.board.validate().unwrap();
            assert!(is_solvable(inst.board.n, &inst.board.tiles));
            solve_number_slide(&inst).unwrap();
            styles[match inst.question {
                SlideQuestion::CountPositions { .. } => 0,
                SlideQuestion::ExtremalSum { .. } => 1,
                SlideQuestion::Directed { .. } => 2,
            }] += 1;
        }
        assert!(styles.iter().all(|&s| s > 50));
        assert_eq!(
            gen_number_slide(&mut Rng::new(1)),
            gen_number_slide(&mut Rng::new(1))
        );
    }

    #[test]
    fn solvability_parity() {
        assert!(is_solvable(3, &[1, 2, 3, 4, 5, 6, 7, 8, 0]));
        assert!(!is_solvable(3, &[2, 1, 3, 4, 5, 6, 7, 8, 0]));
        let goal: Vec<u8> = (1..16).chain([0]).collect();
        assert!(is_solvable(4, &goal));
        let mut swapped = goal.clone();
        swapped.swap(0, 1);
        assert!(!is_solvable(4, &swapped));
        // One slide keeps solvability.
        let moved = slide_tiles(4, &goal, Dir::Up).unwrap();
        assert!(is_solvable(4, &moved));
    }
}
