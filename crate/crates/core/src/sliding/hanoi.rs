use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::search::{bfs_shortest, SearchLimits, SearchProblem};

pub const RODS: u8 = 3;
const MAX_GAP: usize = 6;

/// Rod of each disk; disk 0 is the smallest. Disks on a rod always stack
/// largest at the bottom, so the rod assignment fixes the whole picture.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HanoiState {
    pub n: usize,
    pub peg_of: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HanoiInstance {
    pub start: HanoiState,
    pub end: HanoiState,
}

impl HanoiState {
    pub fn stacked(n: usize, rod: u8) -> Self {
        HanoiState {
            n,
            peg_of: vec![rod; n],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(3..=6).contains(&self.n) || self.peg_of.len() != self.n {
            return Err(Error::invalid("between 3 and 6 disks required"));
        }
        if self.peg_of.iter().any(|&p| p >= RODS) {
            return Err(Error::invalid("rod index out of range"));
        }
        Ok(())
    }

    /// Smallest disk on `rod`.
    pub fn top(&self, rod: u8) -> Option<usize> {
        self.peg_of.iter().position(|&p| p == rod)
    }

    /// Disks on `rod`, bottom first.
    pub fn stack(&self, rod: u8) -> Vec<usize> {
        (0..self.n)
            .rev()
            .filter(|&d| self.peg_of[d] == rod)
            .collect()
    }

    /// Legal moves as (from, to), ordered by source then target rod.
    pub fn moves(&self) -> Vec<((u8, u8), HanoiState)> {
        let mut out = Vec::new();
        for from in 0..RODS {
            let Some(disk) = self.top(from) else { continue };
            for to in 0..RODS {
                if to != from && self.top(to).is_none_or(|t| t > disk) {
                    let mut next = self.clone();
                    next.peg_of[disk] = to;
                    out.push(((from, to), next));
                }
            }
        }
        out
    }
}

impl SearchProblem for HanoiState {
    type State = HanoiState;
    type Move = (u8, u8);

    fn initial(&self) -> HanoiState {
        self.clone()
    }

    fn expand(&self, s: &HanoiState, out: &mut Vec<((u8, u8), HanoiState)>) {
        out.extend(s.moves());
    }

    fn canonical_key(&self, s: &HanoiState) -> Vec<u8> {
        s.peg_of.clone()
    }
}

/// The recursive solution moving all disks from rod 0 to rod 2.
pub fn hanoi_classic(n: usize) -> Vec<(u8, u8)> {
    fn go(k: usize, from: u8, to: u8, via: u8, out: &mut Vec<(u8, u8)>) {
        if k == 0 {
            return;
        }
        go(k - 1, from, via, to, out);
        out.push((from, to));
        go(k - 1, via, to, from, out);
    }
    let mut out = Vec::with_capacity((1 << n) - 1);
    go(n, 0, 2, 1, &mut out);
    out
}

/// Every configuration along [`hanoi_classic`], start and finish included.
pub fn hanoi_states(n: usize) -> Vec<HanoiState> {
    let mut s = HanoiState::stacked(n, 0);
    let mut out = vec![s.clone()];
    for (from, to) in hanoi_classic(n) {
        let disk = s.top(from).expect("classic moves are legal");
        s.peg_of[disk] = to;
        out.push(s.clone());
    }
    out
}

pub fn solve_hanoi(start: &HanoiState, end: &HanoiState) -> Result<u64> {
    start.validate()?;
    end.validate()?;
    if start.n != end.n {
        return Err(Error::invalid("configurations differ in disk count"));
    }
    Ok(bfs_shortest(start, |s| s == end, SearchLimits::default())?.distance as u64)
}

/// Two configurations on the classic solution, one to six moves apart.
pub fn gen_hanoi(rng: &mut Rng) -> HanoiInstance {
    let n = rng.range_usize(3, 6);
    let path = hanoi_states(n);
    let gap = rng.range_usize(1, MAX_GAP);
    let i = rng.below(path.len() - gap);
    HanoiInstance {
        start: path[i].clone(),
        end: path[i + gap].clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_lengths() {
        for n in 3..=6 {
            assert_eq!(hanoi_classic(n).len(), (1 << n) - 1);
            let states = hanoi_states(n);
            assert_eq!(states.last().unwrap(), &HanoiState::stacked(n, 2));
        }
    }

    #[test]
    fn whole_tower_is_optimal() {
        for n in 3..=6 {
            let d = solve_hanoi(&HanoiState::stacked(n, 0), &HanoiState::stacked(n, 2)).unwrap();
            assert_eq!(d, (1 << n) - 1);
        }
        let s = HanoiState::stacked(4, 1);
        assert_eq!(solve_hanoi(&s, &s).unwrap(), 0);
    }

    #[test]
    fn classic_subpaths_are_geodesics() {
        for n in 3..=5 {
            let path = hanoi_states(n);
            for i in 0..path.len() {
                for j in i..(i + 7).min(path.len()) {
                    assert_eq!(solve_hanoi(&path[i], &path[j]).unwrap(), (j - i) as u64);
                }
            }
        }
    }

    #[test]
    fn stacks_read_bottom_up() {
        let s = HanoiState {
            n: 3,
            peg_of: vec![1, 0, 1],
        };
        assert_eq!(s.stack(1), vec![2, 0]);
        assert_eq!(s.top(1), Some(0));
        assert_eq!(s.moves().len(), 3);
    }

    #[test]
    fn generated_gaps() {
        let mut rng = Rng::new(40);
        for _ in 0..200 {
            let inst = gen_hanoi(&mut rng);
            let d = solve_hanoi(&inst.start, &inst.end).unwrap();
            assert!((1..=6).contains(&d));
        }
        assert_eq!(gen_hanoi(&mut Rng::new(2)), gen_hanoi(&mut Rng::new(2)));
    }
}
