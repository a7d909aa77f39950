use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Dir;
use crate::rng::Rng;
use crate::search::{bfs_shortest, SearchLimits, SearchPath, SearchProblem};

pub const ROWS: usize = 5;
pub const COLS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockShape {
    /// 2 rows × 2 columns.
    Big,
    /// 2 rows × 1 column.
    Vertical,
    /// 1 row × 2 columns.
    Horizontal,
    /// 1 row × 1 column.
    Small,
}

impl BlockShape {
    /// (height, width) in cells.
    pub fn size(self) -> (usize, usize) {
        match self {
            BlockShape::Big => (2, 2),
            BlockShape::Vertical => (2, 1),
            BlockShape::Horizontal => (1, 2),
            BlockShape::Small => (1, 1),
        }
    }

    /// Required number of blocks of this shape.
    pub fn census(self) -> usize {
        match self {
            BlockShape::Big => 1,
            BlockShape::Vertical => 2,
            BlockShape::Horizontal => 4,
            BlockShape::Small => 2,
        }
    }

    /// Key code of the first cell; the rest of the footprint follows in
    /// row-major order.
    fn code_base(self) -> u8 {
        match self {
            BlockShape::Small => 1,
            BlockShape::Vertical => 2,
            BlockShape::Horizontal => 4,
            BlockShape::Big => 6,
        }
    }
}

/// A block anchored at its top-left cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub shape: BlockShape,
    pub row: usize,
    pub col: usize,
}

impl Block {
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (h, w) = self.shape.size();
        (0..h).flat_map(move |dr| (0..w).map(move |dc| (self.row + dr, self.col + dc)))
    }
}

/// Blocks on the 5 × 4 tray, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KlotskiBoard {
    pub blocks: Vec<Block>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlotskiMove {
    pub block: Block,
    pub dir: Dir,
}

impl KlotskiBoard {
    pub fn new(mut blocks: Vec<Block>) -> Result<Self> {
        blocks.sort_unstable();
        let b = KlotskiBoard { blocks };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        for shape in [
            BlockShape::Big,
            BlockShape::Vertical,
            BlockShape::Horizontal,
            BlockShape::Small,
        ] {
            if self.blocks.iter().filter(|b| b.shape == shape).count() != shape.census() {
                return Err(Error::invalid("wrong block census"));
            }
        }
        let mut used = [false; ROWS * COLS];
        for b in &self.blocks {
            for (r, c) in b.cells() {
                if r >= ROWS || c >= COLS {
                    return Err(Error::invalid("block outside the tray"));
                }
                if core::mem::replace(&mut used[r * COLS + c], true) {
                    return Err(Error::invalid("blocks overlap"));
                }
            }
        }
        Ok(())
    }

    /// One byte per cell: 0 for empty, otherwise the shape and which part
    /// of the block covers the cell. Same-shape blocks are interchangeable.
    pub fn key(&self) -> [u8; ROWS * COLS] {
        let mut k = [0u8; ROWS * COLS];
        for b in &self.blocks {
            for (part, (r, c)) in b.cells().enumerate() {
                k[r * COLS + c] = b.shape.code_base() + part as u8;
            }
        }
        k
    }

    pub fn big(&self) -> Block {
        *self
            .blocks
            .iter()
            .find(|b| b.shape == BlockShape::Big)
            .expect("one big block")
    }

    /// Every legal one-cell slide, by block then up/down/left/right.
    pub fn moves(&self) -> Vec<(KlotskiMove, KlotskiBoard)> {
        let key = self.key();
        let free = |r: isize, c: isize| {
            r >= 0
                && c >= 0
                && (r as usize) < ROWS
                && (c as usize) < COLS
                && key[r as usize * COLS + c as usize] == 0
        };
        let mut out = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            let (h, w) = b.shape.size();
            let (r, c) = (b.row as isize, b.col as isize);
            for d in Dir::ALL {
                let ok = match d {
                    Dir::Up => (0..w as isize).all(|k| free(r - 1, c + k)),
                    Dir::Down => (0..w as isize).all(|k| free(r + h as isize, c + k)),
                    Dir::Left => (0..h as isize).all(|k| free(r + k, c - 1)),
                    Dir::Right => (0..h as isize).all(|k| free(r + k, c + w as isize)),
                };
                if !ok {
                    continue;
                }
                let (dr, dc) = d.delta();
                let mut blocks = self.blocks.clone();
                blocks[i].row = (r + dr) as usize;
                blocks[i].col = (c + dc) as usize;
                blocks.sort_unstable();
                out.push((KlotskiMove { block: *b, dir: d }, KlotskiBoard { blocks }));
            }
        }
        out
    }
}

impl SearchProblem for KlotskiBoard {
    type State = KlotskiBoard;
    type Move = KlotskiMove;

    fn initial(&self) -> KlotskiBoard {
        self.clone()
    }

    fn expand(&self, s: &KlotskiBoard, out: &mut Vec<(KlotskiMove, KlotskiBoard)>) {
        out.extend(s.moves());
    }

    fn canonical_key(&self, s: &KlotskiBoard) -> Vec<u8> {
        s.key().to_vec()
    }
}

/// The Pennant layout:
///
/// ```text
/// B B h h
/// B B h h
/// s s . .
/// v v h h
/// v v h h
/// ```
pub fn pennant_start() -> KlotskiBoard {
    use BlockShape::*;
    let at = |shape, row, col| Block { shape, row, col };
    KlotskiBoard::new(alloc::vec![
        at(Big, 0, 0),
        at(Horizontal, 0, 2),
        at(Horizontal, 1, 2),
        at(Small, 2, 0),
        at(Small, 2, 1),
        at(Vertical, 3, 0),
        at(Vertical, 3, 1),
        at(Horizontal, 3, 2),
        at(Horizontal, 4, 2),
    ])
    .expect("valid layout")
}

/// Big block in the bottom-left corner.
pub fn pennant_goal_reached(b: &KlotskiBoard) -> bool {
    let big = b.big();
    (big.row, big.col) == (ROWS - 2, 0)
}

/// A shortest solution of the Pennant puzzle.
pub fn pennant_optimal() -> Result<SearchPath<KlotskiMove, KlotskiBoard>> {
    bfs_shortest(
        &pennant_start(),
        pennant_goal_reached,
        SearchLimits::default(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WoodSlideInstance {
    pub start: KlotskiBoard,
    pub end: KlotskiBoard,
}

/// Fewest one-cell slides from `start` to `end`.
pub fn solve_wood_slide(start: &KlotskiBoard, end: &KlotskiBoard) -> Result<u64> {
    start.validate()?;
    end.validate()?;
    let target = end.key();
    match bfs_shortest(start, |s| s.key() == target, SearchLimits::default()) {
        Ok(p) => Ok(p.distance as u64),
        Err(Error::Unreachable) => Err(Error::invalid("ending configuration is unreachable")),
        Err(e) => Err(e),
    }
}

/// Two boards on the Pennant solution, one to five moves apart.
pub fn gen_wood_slide(rng: &mut Rng, path: &[KlotskiBoard]) -> WoodSlideInstance {
    let gap = rng.range_usize(1, 5).min(path.len() - 1);
    let i = rng.below(path.len() - gap);
    let (a, b) = (path[i].clone(), path[i + gap].clone());
    if rng.coin() {
        WoodSlideInstance { start: a, end: b }
    } else {
        WoodSlideInstance { start: b, end: a }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn census_and_overlap_checks() {
        let mut b = pennant_start();
        assert_eq!(b.key().iter().filter(|&&k| k == 0).count(), 2);
        b.blocks[8].row = 0;
        assert!(b.validate().is_err());
        b.blocks.pop();
        assert!(b.validate().is_err());
    }

    #[test]
    fn same_shape_swap_gives_same_key() {
        let a = pennant_start();
        let mut b = a.clone();
        b.blocks.reverse();
        assert_eq!(a.key(), b.key());
        // Swapping two same-shape blocks is invisible to the key.
        let singles: Vec<usize> = (0..b.blocks.len())
            .filter(|&i| b.blocks[i].shape == BlockShape::Small)
            .collect();
        let (p, q) = (b.blocks[singles[0]], b.blocks[singles[1]]);
        b.blocks[singles[0]] = Block {
            shape: p.shape,
            row: q.row,
            col: q.col,
        };
        b.blocks[singles[1]] = Block {
            shape: q.shape,
            row: p.row,
            col: p.col,
        };
        assert_eq!(a.key(), b.key());
    }

    /// Same moves, but blocks keep their identity in the key.
    struct Labelled;

    impl SearchProblem for Labelled {
        type State = Vec<Block>;
        type Move = ();

        fn initial(&self) -> Vec<Block> {
            pennant_start().blocks
        }

        fn expand(&self, s: &Vec<Block>, out: &mut Vec<((), Vec<Block>)>) {
            for (i, b) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(i);
                for d in Dir::ALL {
                    let (dr, dc) = d.delta();
                    let (r, c) = (b.row as isize + dr, b.col as isize + dc);
                    if r < 0 || c < 0 {
                        continue;
                    }
                    let moved = Block {
                        shape: b.shape,
                        row: r as usize,
                        col: c as usize,
                    };
                    let mut next = s.clone();
                    next[i] = moved;
                    let mut sorted = next.clone();
                    sorted.sort_unstable();
                    if (KlotskiBoard { blocks: sorted }).validate().is_ok() {
                        out.push(((), next));
                    }
                }
            }
        }

        fn canonical_key(&self, s: &Vec<Block>) -> Vec<u8> {
            s.iter().flat_map(|b| [b.row as u8, b.col as u8]).collect()
        }
    }

    #[test]
    fn shape_equivalence_never_adds_states() {
        let keyed =
            crate::search::bfs_distances(&pennant_start(), SearchLimits::default()).unwrap();
        let labelled = crate::search::bfs_distances(&Labelled, SearchLimits::default()).unwrap();
        assert!(keyed.len() < labelled.len());
    }

    #[test]
    fn one_slide_apart() {
        let start = pennant_start();
        assert_eq!(solve_wood_slide(&start, &start).unwrap(), 0);
        let (_, next) = start.moves().into_iter().next().unwrap();
        assert_eq!(solve_wood_slide(&start, &next).unwrap(), 1);
    }

    #[test]
    fn pennant_first_moves() {
        // Only the singles and the lower horizontal block can move at first.
        let moved: BTreeSet<BlockShape> = pennant_start()
            .moves()
            .iter()
            .map(|(m, _)| m.block.shape)
            .collect();
        assert_eq!(
            moved,
            [BlockShape::Horizontal, BlockShape::Small]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn pennant_path_is_geodesic() {
        let path = pennant_optimal().unwrap();
        assert_eq!(path.distance, 83);
        assert!(pennant_goal_reached(path.states.last().unwrap()));
        for i in (0..path.states.len()).step_by(7) {
            for j in i + 1..(i + 6).min(path.states.len()) {
                assert_eq!(
                    solve_wood_slide(&path.states[i], &path.states[j]).unwrap(),
                    (j - i) as u64
                );
            }
        }
        let mut rng = Rng::new(8);
        for _ in 0..50 {
            let inst = gen_wood_slide(&mut rng, &path.states);
            let d = solve_wood_slide(&inst.start, &inst.end).unwrap();
            assert!((1..=5).contains(&d));
        }
    }
}
