use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::MAX_ATTEMPTS;
use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::search::{bfs_shortest, SearchLimits, SearchProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Checker {
    Empty,
    /// Moves rightward only.
    Green,
    /// Moves leftward only.
    Red,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CheckerLine {
    pub cells: Vec<Checker>,
}

/// A checker leaving `from` for the empty cell `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerMove {
    pub from: usize,
    pub to: usize,
}

impl CheckerLine {
    pub fn new(cells: Vec<Checker>) -> Result<Self> {
        let l = CheckerLine { cells };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        if self.cells.iter().filter(|&&c| c == Checker::Empty).count() != 1 {
            return Err(Error::invalid("exactly one empty square required"));
        }
        Ok(())
    }

    pub fn count(&self, which: Checker) -> usize {
        self.cells.iter().filter(|&&c| c == which).count()
    }

    pub fn empty(&self) -> usize {
        self.cells
            .iter()
            .position(|&c| c == Checker::Empty)
            .expect("one empty square")
    }

    /// Legal moves in increasing order of the moving checker's position.
    pub fn moves(&self) -> Vec<(CheckerMove, CheckerLine)> {
        let e = self.empty();
        let n = self.cells.len();
        let mut froms = Vec::with_capacity(4);
        if e >= 2 && self.cells[e - 2] == Checker::Green && self.cells[e - 1] == Checker::Red {
            froms.push(e - 2);
        }
        if e >= 1 && self.cells[e - 1] == Checker::Green {
            froms.push(e - 1);
        }
        if e + 1 < n && self.cells[e + 1] == Checker::Red {
            froms.push(e + 1);
        }
        if e + 2 < n && self.cells[e + 2] == Checker::Red && self.cells[e + 1] == Checker::Green {
            froms.push(e + 2);
        }
        froms
            .into_iter()
            .map(|from| {
                let mut cells = self.cells.clone();
                cells.swap(from, e);
                (CheckerMove { from, to: e }, CheckerLine { cells })
            })
            .collect()
    }
}

impl SearchProblem for CheckerLine {
    type State = CheckerLine;
    type Move = CheckerMove;

    fn initial(&self) -> CheckerLine {
        self.clone()
    }

    fn expand(&self, s: &CheckerLine, out: &mut Vec<(CheckerMove, CheckerLine)>) {
        out.extend(s.moves());
    }

    fn canonical_key(&self, s: &CheckerLine) -> Vec<u8> {
        s.cells.iter().map(|&c| c as u8).collect()
    }
}

pub fn solve_checker_move(start: &CheckerLine, end: &CheckerLine) -> Result<u64> {
    start.validate()?;
    end.validate()?;
    if start.cells.len() != end.cells.len() {
        return Err(Error::invalid("lines differ in length"));
    }
    match bfs_shortest(start, |s| s == end, SearchLimits::default()) {
        Ok(p) => Ok(p.distance as u64),
        Err(Error::Unreachable) => Err(Error::invalid("ending arrangement is unreachable")),
        Err(e) => Err(e),
    }
}

/// A shuffled line of 5 to 9 squares and the end of a 4 to 12 move random walk.
pub fn gen_checker_move(rng: &mut Rng) -> Result<(CheckerLine, CheckerLine)> {
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.range_usize(5, 9);
        let greens = rng.range_usize(1, n - 2);
        let mut cells: Vec<Checker> = (0..n - 1)
            .map(|i| {
                if i < greens {
                    Checker::Green
                } else {
                    Checker::Red
                }
            })
            .collect();
        cells.push(Checker::Empty);
        rng.shuffle(&mut cells);
        let start = CheckerLine { cells };
        let mut end = start.clone();
        for _ in 0..rng.range_usize(4, 12) {
            let moves = end.moves();
            if moves.is_empty() {
                break;
            }
            end = rng.choose(&moves).1.clone();
        }
        if end != start {
            return Ok((start, end));
        }
    }
    Err(Error::gave_up(
        MAX_ATTEMPTS,
        "random walks never left the start",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn line(s: &str) -> CheckerLine {
        CheckerLine::new(
            s.chars()
                .map(|ch| match ch {
                    'G' => Checker::Green,
                    'R' => Checker::Red,
                    _ => Checker::Empty,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(solve_checker_move(&line("G.R"), &line("G.R")).unwrap(), 0);
        assert_eq!(solve_checker_move(&line("G.R"), &line("R.G")).unwrap(), 3);
        assert_eq!(
            solve_checker_move(&line("GG.RR"), &line("RR.GG")).unwrap(),
            8
        );
        assert!(solve_checker_move(&line("R.G"), &line("G.R")).is_err());
        assert!(CheckerLine::new(vec![Checker::Green, Checker::Red]).is_err());
    }

    #[test]
    fn full_swap_formula() {
        for g in 1..=4 {
            for r in 1..=4 {
                let s: alloc::string::String = core::iter::repeat_n('G', g)
                    .chain(['.'])
                    .chain(core::iter::repeat_n('R', r))
                    .collect();
                let t: alloc::string::String = core::iter::repeat_n('R', r)
                    .chain(['.'])
                    .chain(core::iter::repeat_n('G', g))
                    .collect();
                assert_eq!(
                    solve_checker_move(&line(&s), &line(&t)).unwrap(),
                    (g * r + g + r) as u64
                );
            }
        }
    }

    /// Distances from `start` by plain relaxation over all lines of its length.
    fn relax(start: &CheckerLine) -> BTreeMap<Vec<Checker>, u64> {
        let mut dist = BTreeMap::new();
        dist.insert(start.cells.clone(), 0u64);
        loop {
            let mut changed = false;
            let snapshot: Vec<_> = dist.iter().map(|(k, &v)| (k.clone(), v)).collect();
            for (cells, d) in snapshot {
                for (_, next) in (CheckerLine { cells }).moves() {
                    let e = dist.entry(next.cells).or_insert(u64::MAX);
                    if d + 1 < *e {
                        *e = d + 1;
                        changed = true;
                    }
                }
            }
            if !changed {
                return dist;
            }
        }
    }

    #[test]
    fn generated_instances_match_relaxation() {
        let mut rng = Rng::new(12);
        for _ in 0..60 {
            let (start, end) = gen_checker_move(&mut rng).unwrap();
            let n = start.cells.len();
            assert!((5..=9).contains(&n));
            assert_eq!(start.count(Checker::Green), end.count(Checker::Green));
            let gold = solve_checker_move(&start, &end).unwrap();
            assert!((1..=12).contains(&gold));
            assert_eq!(relax(&start)[&end.cells], gold);
        }
        assert_eq!(
            gen_checker_move(&mut Rng::new(3)).unwrap(),
            gen_checker_move(&mut Rng::new(3)).unwrap()
        );
    }
}
