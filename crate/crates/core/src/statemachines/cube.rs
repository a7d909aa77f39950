use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;

pub const SCRAMBLE_TURNS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Face {
    U,
    D,
    L,
    R,
    F,
    B,
}

impl Face {
    pub const ALL: [Face; 6] = [Face::U, Face::D, Face::L, Face::R, Face::F, Face::B];

    pub fn letter(self) -> char {
        match self {
            Face::U => 'U',
            Face::D => 'D',
            Face::L => 'L',
            Face::R => 'R',
            Face::F => 'F',
            Face::B => 'B',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Face::U => "up",
            Face::D => "down",
            Face::L => "left",
            Face::R => "right",
            Face::F => "front",
            Face::B => "back",
        }
    }

    pub fn from_letter(ch: char) -> Option<Face> {
        Face::ALL.into_iter().find(|f| f.letter() == ch)
    }

    /// Colour of this face on the solved cube.
    pub fn home_colour(self) -> CubeColour {
        match self {
            Face::U => CubeColour::Grey,
            Face::D => CubeColour::Yellow,
            Face::L => CubeColour::Green,
            Face::R => CubeColour::Blue,
            Face::F => CubeColour::Red,
            Face::B => CubeColour::Orange,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CubeColour {
    Red,
    Green,
    Blue,
    Yellow,
    Orange,
    Grey,
}

impl CubeColour {
    pub const ALL: [CubeColour; 6] = [
        CubeColour::Red,
        CubeColour::Green,
        CubeColour::Blue,
        CubeColour::Yellow,
        CubeColour::Orange,
        CubeColour::Grey,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CubeColour::Red => "red",
            CubeColour::Green => "green",
            CubeColour::Blue => "blue",
            CubeColour::Yellow => "yellow",
            CubeColour::Orange => "orange",
            CubeColour::Grey => "grey",
        }
    }
}

/// 54 stickers; sticker `face * 9 + row * 3 + col` as the face is seen
/// from outside in the cross net (U above F, D below F, then L F R B).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeState {
    pub stickers: Vec<CubeColour>,
}

/// Sticker cycles of one clockwise quarter turn: the sticker at `c[k]`
/// moves to `c[k + 1]`. Two cycles turn the face itself, three carry the
/// adjacent rows around it.
const TURNS: [[[usize; 4]; 5]; 6] = [
    // U
    [
        [0, 2, 8, 6],
        [1, 5, 7, 3],
        [18, 45, 27, 36],
        [19, 46, 28, 37],
        [20, 47, 29, 38],
    ],
    // D
    [
        [9, 11, 17, 15],
        [10, 14, 16, 12],
        [24, 42, 33, 51],
        [25, 43, 34, 52],
        [26, 44, 35, 53],
    ],
    // L
    [
        [18, 20, 26, 24],
        [19, 23, 25, 21],
        [0, 36, 9, 53],
        [3, 39, 12, 50],
        [6, 42, 15, 47],
    ],
    // R
    [
        [27, 29, 35, 33],
        [28, 32, 34, 30],
        [2, 51, 11, 38],
        [5, 48, 14, 41],
        [8, 45, 17, 44],
    ],
    // F
    [
        [36, 38, 44, 42],
        [37, 41, 43, 39],
        [6, 27, 11, 26],
        [7, 30, 10, 23],
        [8, 33, 9, 20],
    ],
    // B
    [
        [45, 47, 53, 51],
        [46, 50, 52, 48],
        [0, 24, 17, 29],
        [1, 21, 16, 32],
        [2, 18, 15, 35],
    ],
];

/// Where each sticker goes under one clockwise quarter turn of `face`.
pub fn turn_permutation(face: Face) -> [usize; 54] {
    let mut p = [0usize; 54];
    for (i, slot) in p.iter_mut().enumerate() {
        *slot = i;
    }
    for cycle in &TURNS[face as usize] {
        for k in 0..4 {
            p[cycle[k]] = cycle[(k + 1) % 4];
        }
    }
    p
}

impl CubeState {
    pub fn solved() -> Self {
        CubeState {
            stickers: Face::ALL
                .iter()
                .flat_map(|f| [f.home_colour(); 9])
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.stickers.len() != 54 {
            return Err(Error::invalid("a cube has 54 stickers"));
        }
        for c in CubeColour::ALL {
            if self.stickers.iter().filter(|&&s| s == c).count() != 9 {
                return Err(Error::invalid("each colour must appear on 9 stickers"));
            }
        }
        Ok(())
    }

    pub fn face(&self, f: Face) -> &[CubeColour] {
        &self.stickers[f as usize * 9..f as usize * 9 + 9]
    }

    pub fn turn(&mut self, face: Face) {
        let p = turn_permutation(face);
        let old = self.stickers.clone();
        for (i, &to) in p.iter().enumerate() {
            self.stickers[to] = old[i];
        }
    }
}

/// Face turns, each 1 to 3 clockwise quarter turns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSeq(pub Vec<(Face, u8)>);

impl FromStr for MoveSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for token in s.split_whitespace() {
            let mut chars = token.chars();
            let face = chars
                .next()
                .and_then(Face::from_letter)
                .ok_or_else(|| Error::invalid("moves start with one of U D L R F B"))?;
            let turns = match chars.as_str() {
                "" => 1,
                "1" => 1,
                "2" => 2,
                "3" => 3,
                _ => return Err(Error::invalid("turn count must be 1, 2 or 3")),
            };
            out.push((face, turns));
        }
        Ok(MoveSeq(out))
    }
}

impl fmt::Display for MoveSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(face, n)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", face.letter())?;
            if n > 1 {
                write!(f, "{n}")?;
            }
        }
        Ok(())
    }
}

pub fn cube_apply(state: &CubeState, seq: &MoveSeq) -> CubeState {
    let mut s = state.clone();
    for &(face, n) in &seq.0 {
        for _ in 0..n {
            s.turn(face);
        }
    }
    s
}

pub fn cube_count(state: &CubeState, face: Face, colour: CubeColour) -> u64 {
    state.face(face).iter().filter(|&&c| c == colour).count() as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeInstance {
    pub initial: CubeState,
    pub moves: MoveSeq,
    pub face: Face,
    pub colour: CubeColour,
}

pub fn solve_cube(inst: &CubeInstance) -> Result<u64> {
    inst.initial.validate()?;
    if inst.moves.0.iter().any(|&(_, n)| !(1..=3).contains(&n)) {
        return Err(Error::invalid("turn count must be 1, 2 or 3"));
    }
    Ok(cube_count(
        &cube_apply(&inst.initial, &inst.moves),
        inst.face,
        inst.colour,
    ))
}

pub fn gen_cube(rng: &mut Rng) -> CubeInstance {
    let mut initial = CubeState::solved();
    for _ in 0..SCRAMBLE_TURNS {
        initial.turn(*rng.choose(&Face::ALL));
    }
    let len = rng.range_usize(1, 3);
    let moves = MoveSeq(
        (0..len)
            .map(|_| (*rng.choose(&Face::ALL), rng.range(1, 3) as u8))
            .collect(),
    );
    CubeInstance {
        initial,
        moves,
        face: *rng.choose(&Face::ALL),
        colour: *rng.choose(&CubeColour::ALL),
    }
}
