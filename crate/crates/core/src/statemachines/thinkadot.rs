use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;

/// Discs in reading order: top row 0 1 2, middle row 3 4, bottom row 5 6 7.
pub const DISCS: usize = 8;

/// A yellow face (`false`) deflects the ball to this side; blue deflects
/// to the other. The disc routes by the colour it shows before flipping.
pub const YELLOW_DEFLECTS: Side = Side::Left;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hole {
    Left,
    Center,
    Right,
}

impl Hole {
    pub const ALL: [Hole; 3] = [Hole::Left, Hole::Center, Hole::Right];

    pub fn name(self) -> &'static str {
        match self {
            Hole::Left => "left",
            Hole::Center => "center",
            Hole::Right => "right",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscColour {
    Yellow,
    Blue,
}

impl DiscColour {
    pub fn name(self) -> &'static str {
        match self {
            DiscColour::Yellow => "yellow",
            DiscColour::Blue => "blue",
        }
    }

    pub fn of(blue: bool) -> DiscColour {
        if blue {
            DiscColour::Blue
        } else {
            DiscColour::Yellow
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowScope {
    Top,
    Middle,
    Bottom,
    All,
}

impl RowScope {
    pub const ALL: [RowScope; 4] = [
        RowScope::Top,
        RowScope::Middle,
        RowScope::Bottom,
        RowScope::All,
    ];

    pub fn discs(self) -> core::ops::Range<usize> {
        match self {
            RowScope::Top => 0..3,
            RowScope::Middle => 3..5,
            RowScope::Bottom => 5..8,
            RowScope::All => 0..8,
        }
    }
}

/// Disc faces, `true` for blue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TadConfig {
    pub discs: [bool; DISCS],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TadInstance {
    pub config: TadConfig,
    pub drops: Vec<Hole>,
    pub colour: DiscColour,
    pub scope: RowScope,
}

/// Where the ball goes after leaving a disc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Next {
    Disc(usize),
    Exit(Side),
}

/// Wall layout: `ROUTES[disc] = (deflected left, deflected right)`.
const ROUTES: [(Next, Next); DISCS] = [
    (Next::Disc(5), Next::Disc(3)),
    (Next::Disc(3), Next::Disc(4)),
    (Next::Disc(4), Next::Disc(7)),
    (Next::Disc(5), Next::Disc(6)),
    (Next::Disc(6), Next::Disc(7)),
    (Next::Exit(Side::Left), Next::Exit(Side::Right)),
    (Next::Exit(Side::Left), Next::Exit(Side::Right)),
    (Next::Exit(Side::Left), Next::Exit(Side::Right)),
];

fn deflection(blue: bool) -> Side {
    match (blue, YELLOW_DEFLECTS) {
        (false, s) => s,
        (true, Side::Left) => Side::Right,
        (true, Side::Right) => Side::Left,
    }
}

/// Drops one ball; returns the new faces, the discs it passed, and its exit.
pub fn tad_trace(cfg: &TadConfig, hole: Hole) -> (TadConfig, Vec<usize>, Side) {
    let mut out = *cfg;
    let mut path = Vec::with_capacity(3);
    let mut at = hole as usize;
    loop {
        path.push(at);
        let side = deflection(out.discs[at]);
        out.discs[at] = !out.discs[at];
        let (l, r) = ROUTES[at];
        match if side == Side::Left { l } else { r } {
            Next::Disc(d) => at = d,
            Next::Exit(s) => return (out, path, s),
        }
    }
}

pub fn tad_drop(cfg: &TadConfig, hole: Hole) -> (TadConfig, Side) {
    let (c, _, side) = tad_trace(cfg, hole);
    (c, side)
}

pub fn tad_count(cfg: &TadConfig, colour: DiscColour, scope: RowScope) -> u64 {
    scope
        .discs()
        .filter(|&i| DiscColour::of(cfg.discs[i]) == colour)
        .count() as u64
}

pub fn tad_solve(inst: &TadInstance) -> Result<u64> {
    if inst.drops.len() > 4 {
        return Err(Error::invalid("at most four balls are dropped"));
    }
    let cfg = inst
        .drops
        .iter()
        .fold(inst.config, |c, &h| tad_drop(&c, h).0);
    Ok(tad_count(&cfg, inst.colour, inst.scope))
}

pub fn gen_tad(rng: &mut Rng) -> TadInstance {
    let mut discs = [false; DISCS];
    discs.iter_mut().for_each(|d| *d = rng.coin());
    let n = rng.range_usize(1, 4);
    TadInstance {
        config: TadConfig { discs },
        drops: (0..n).map(|_| *rng.choose(&Hole::ALL)).collect(),
        colour: if rng.coin() {
            DiscColour::Yellow
        } else {
            DiscColour::Blue
        },
        scope: *rng.choose(&RowScope::ALL),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const YELLOW: TadConfig = TadConfig {
        discs: [false; DISCS],
    };

    #[test]
    fn all_yellow_center_drop() {
        let (c, path, side) = tad_trace(&YELLOW, Hole::Center);
        assert_eq!(path, vec![1, 3, 5]);
        assert_eq!(side, Side::Left);
        assert_eq!(tad_count(&c, DiscColour::Yellow, RowScope::All), 5);
    }

    #[test]
    fn outer_holes_can_skip_the_middle_row() {
        assert_eq!(tad_trace(&YELLOW, Hole::Left).1, vec![0, 5]);
        let blue = TadConfig {
            discs: [true; DISCS],
        };
        assert_eq!(tad_trace(&blue, Hole::Right).1, vec![2, 7]);
        assert_eq!(tad_trace(&blue, Hole::Left).1, vec![0, 3, 6]);
    }

    #[test]
    fn no_drops_leaves_everything() {
        let inst = TadInstance {
            config: YELLOW,
            drops: vec![],
            colour: DiscColour::Yellow,
            scope: RowScope::All,
        };
        assert_eq!(tad_solve(&inst).unwrap(), 8);
    }

    fn all_configs() -> impl Iterator<Item = TadConfig> {
        (0..256u32).map(|m| {
            let mut discs = [false; DISCS];
            (0..DISCS).for_each(|i| discs[i] = m >> i & 1 == 1);
            TadConfig { discs }
        })
    }

    #[test]
    fn every_drop_flips_two_or_three() {
        for c in all_configs() {
            for h in Hole::ALL {
                let (next, path, _) = tad_trace(&c, h);
                let flipped = (0..DISCS).filter(|&i| next.discs[i] != c.discs[i]).count();
                assert!(flipped == 2 || flipped == 3);
                assert_eq!(flipped, path.len());
                assert_eq!(path.iter().filter(|&&d| d < 3).count(), 1);
                assert_eq!(path.iter().filter(|&&d| d >= 5).count(), 1);
                assert_ne!(next.discs[h as usize], c.discs[h as usize]);
                let (again, _) = tad_drop(&next, h);
                assert_eq!(again.discs[h as usize], c.discs[h as usize]);
            }
        }
    }

    fn mirror_disc(i: usize) -> usize {
        [2, 1, 0, 4, 3, 7, 6, 5][i]
    }

    /// Simulator for the left-right mirrored toy, with blue deflecting to
    /// the side yellow uses here. Mirroring its input and output must give
    /// back the original machine.
    fn mirrored_drop(discs: [bool; DISCS], hole: Hole) -> ([bool; DISCS], Side) {
        let mut d = discs;
        // The walls are symmetric, so the mirrored toy has the same routing.
        let route = |at: usize, right: bool| -> Option<usize> {
            match (at, right) {
                (0, false) => Some(5),
                (0, true) => Some(3),
                (1, false) => Some(3),
                (1, true) => Some(4),
                (2, false) => Some(4),
                (2, true) => Some(7),
                (3, false) => Some(5),
                (3, true) => Some(6),
                (4, false) => Some(6),
                (4, true) => Some(7),
                _ => None,
            }
        };
        let mut at = hole as usize;
        loop {
            // Here blue goes left and yellow goes right.
            let goes_right = !d[at];
            d[at] = !d[at];
            match route(at, goes_right) {
                Some(n) => at = n,
                None => return (d, if goes_right { Side::Right } else { Side::Left }),
            }
        }
    }

    #[test]
    fn mirrored_simulator_agrees() {
        let mut rng = Rng::new(17);
        for _ in 0..1000 {
            let inst = gen_tad(&mut rng);
            let mut here = inst.config;
            let mut there = [false; DISCS];
            (0..DISCS).for_each(|i| there[mirror_disc(i)] = inst.config.discs[i]);
            for &h in &inst.drops {
                let mh = match h {
                    Hole::Left => Hole::Right,
                    Hole::Center => Hole::Center,
                    Hole::Right => Hole::Left,
                };
                let (next, side) = tad_drop(&here, h);
                let (mnext, mside) = mirrored_drop(there, mh);
                assert_ne!(side, mside);
                here = next;
                there = mnext;
            }
            assert!((0..DISCS).all(|i| there[mirror_disc(i)] == here.discs[i]));
            let recount = inst
                .scope
                .discs()
                .filter(|&i| DiscColour::of(there[mirror_disc(i)]) == inst.colour)
                .count() as u64;
            assert_eq!(tad_solve(&inst).unwrap(), recount);
        }
        assert_eq!(gen_tad(&mut Rng::new(4)), gen_tad(&mut Rng::new(4)));
    }
}
