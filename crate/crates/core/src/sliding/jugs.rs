use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::MAX_ATTEMPTS;
use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::search::{bfs_distances, bfs_shortest, SearchLimits, SearchProblem};

/// Farthest goal, in pours, the generator will pick.
const MAX_POURS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JugState {
    pub capacities: Vec<u32>,
    pub amounts: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JugsInstance {
    pub start: JugState,
    pub goal: Vec<u32>,
}

impl JugState {
    pub fn validate(&self) -> Result<()> {
        if !(3..=5).contains(&self.capacities.len()) || self.amounts.len() != self.capacities.len()
        {
            return Err(Error::invalid("between 3 and 5 jugs required"));
        }
        if self.capacities.contains(&0) {
            return Err(Error::invalid("capacities must be positive"));
        }
        if self
            .amounts
            .iter()
            .zip(&self.capacities)
            .any(|(a, c)| a > c)
        {
            return Err(Error::invalid("a jug holds more than its capacity"));
        }
        Ok(())
    }

    /// Pours `from` into `to` until one is empty or the other full.
    pub fn pour(&self, amounts: &[u32], from: usize, to: usize) -> Option<Vec<u32>> {
        let room = self.capacities[to] - amounts[to];
        let moved = amounts[from].min(room);
        if from == to || moved == 0 {
            return None;
        }
        let mut out = amounts.to_vec();
        out[from] -= moved;
        out[to] += moved;
        Some(out)
    }
}

impl SearchProblem for JugState {
    type State = Vec<u32>;
    type Move = (usize, usize);

    fn initial(&self) -> Vec<u32> {
        self.amounts.clone()
    }

    /// Pours ordered by source jug, then target jug.
    fn expand(&self, s: &Vec<u32>, out: &mut Vec<((usize, usize), Vec<u32>)>) {
        for i in 0..s.len() {
            for j in 0..s.len() {
                if let Some(next) = self.pour(s, i, j) {
                    out.push(((i, j), next));
                }
            }
        }
    }

    fn canonical_key(&self, s: &Vec<u32>) -> Vec<u8> {
        s.iter().flat_map(|a| a.to_le_bytes()).collect()
    }
}

pub fn solve_water_jugs(start: &JugState, goal: &[u32]) -> Result<u64> {
    start.validate()?;
    if goal.len() != start.amounts.len() || goal.iter().zip(&start.capacities).any(|(g, c)| g > c) {
        return Err(Error::invalid("goal does not fit the jugs"));
    }
    if goal.iter().sum::<u32>() != start.amounts.iter().sum::<u32>() {
        return Err(Error::invalid("goal changes the total amount of water"));
    }
    match bfs_shortest(start, |s| s.as_slice() == goal, SearchLimits::default()) {
        Ok(p) => Ok(p.distance as u64),
        Err(Error::Unreachable) => Err(Error::invalid("goal is unreachable")),
        Err(e) => Err(e),
    }
}

/// 3 to 5 jugs holding 1 to 14 litres, each with 0 to 6 litres of headroom;
/// the goal is drawn from the states one to five pours away.
pub fn gen_water_jugs(rng: &mut Rng) -> Result<JugsInstance> {
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.range_usize(3, 5);
        let amounts: Vec<u32> = (0..n).map(|_| rng.range(1, 14) as u32).collect();
        let capacities = amounts
            .iter()
            .map(|&a| a + rng.range(0, 6) as u32)
            .collect();
        let start = JugState {
            capacities,
            amounts,
        };
        let dist = bfs_distances(&start, SearchLimits::default())?;
        let pool: Vec<Vec<u32>> = dist
            .iter()
            .filter(|(_, &d)| (1..=MAX_POURS).contains(&d))
            .map(|(k, _)| {
                k.chunks(4)
                    .map(|b| u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
                    .collect()
            })
            .collect();
        if pool.is_empty() {
            continue;
        }
        let goal = rng.choose(&pool).clone();
        return Ok(JugsInstance { start, goal });
    }
    Err(Error::gave_up(MAX_ATTEMPTS, "every jug started full"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn jugs(capacities: &[u32], amounts: &[u32]) -> JugState {
        JugState {
            capacities: capacities.to_vec(),
            amounts: amounts.to_vec(),
        }
    }

    #[test]
    fn single_pour() {
        let s = jugs(&[6, 5, 1], &[4, 2, 1]);
        assert_eq!(solve_water_jugs(&s, &[4, 2, 1]).unwrap(), 0);
        assert_eq!(solve_water_jugs(&s, &[4, 3, 0]).unwrap(), 1);
    }

    #[test]
    fn classic_eight_five_three() {
        let s = jugs(&[8, 5, 3], &[8, 0, 0]);
        assert_eq!(solve_water_jugs(&s, &[4, 4, 0]).unwrap(), 7);
    }

    #[test]
    fn bad_goals() {
        let s = jugs(&[6, 5, 1], &[4, 2, 1]);
        assert!(solve_water_jugs(&s, &[4, 2, 2]).is_err());
        assert!(solve_water_jugs(&s, &[7, 0, 0]).is_err());
        assert!(jugs(&[1, 1], &[1, 1]).validate().is_err());
    }

    #[test]
    fn pours_conserve_water() {
        let s = jugs(&[9, 7, 4, 2], &[5, 3, 4, 1]);
        let total: u32 = s.amounts.iter().sum();
        let mut frontier = vec![s.amounts.clone()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for a in &frontier {
                let mut out = Vec::new();
                s.expand(a, &mut out);
                for (_, b) in out {
                    assert_eq!(b.iter().sum::<u32>(), total);
                    assert!(b.iter().zip(&s.capacities).all(|(x, c)| x <= c));
                    next.push(b);
                }
            }
            frontier = next;
        }
    }

    #[test]
    fn generated_goals_within_five_pours() {
        let mut rng = Rng::new(21);
        for _ in 0..500 {
            let inst = gen_water_jugs(&mut rng).unwrap();
            inst.start.validate().unwrap();
            assert!(inst.start.amounts.iter().all(|a| (1..=14).contains(a)));
            assert!(inst
                .start
                .amounts
                .iter()
                .zip(&inst.start.capacities)
                .all(|(a, c)| c - a <= 6));
            let d = solve_water_jugs(&inst.start, &inst.goal).unwrap();
            assert!((1..=5).contains(&d));
        }
        assert_eq!(
            gen_water_jugs(&mut Rng::new(6)).unwrap(),
            gen_water_jugs(&mut Rng::new(6)).unwrap()
        );
    }
}
