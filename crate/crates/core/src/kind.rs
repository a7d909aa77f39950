//! Puzzle families and their static ontology tags.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PuzzleKind {
    BoardTiling,
    Calendar,
    ChainLink,
    CheckerMove,
    Clock,
    ColourHue,
    MapColour,
    #[serde(rename = "maze_solve")]
    Maze,
    MoveBox,
    NQueens,
    NumberSlide,
    RottingFruit,
    RubiksCube,
    ThinkADot,
    TowerOfHanoi,
    WaterJugs,
    WheelOfFortune,
    WoodSlide,
}

impl PuzzleKind {
    pub const ALL: [PuzzleKind; 18] = [
        PuzzleKind::BoardTiling,
        PuzzleKind::Calendar,
        PuzzleKind::ChainLink,
        PuzzleKind::CheckerMove,
        PuzzleKind::Clock,
        PuzzleKind::ColourHue,
        PuzzleKind::MapColour,
        PuzzleKind::Maze,
        PuzzleKind::MoveBox,
        PuzzleKind::NQueens,
        PuzzleKind::NumberSlide,
        PuzzleKind::RottingFruit,
        PuzzleKind::RubiksCube,
        PuzzleKind::ThinkADot,
        PuzzleKind::TowerOfHanoi,
        PuzzleKind::WaterJugs,
        PuzzleKind::WheelOfFortune,
        PuzzleKind::WoodSlide,
    ];

    /// Position in [`PuzzleKind::ALL`]; folded into instance seeds.
    pub fn ordinal(self) -> usize {
        self as usize
    }

    /// Stable identifier used in file names and records.
    pub fn name(self) -> &'static str {
        match self {
            PuzzleKind::BoardTiling => "board_tiling",
            PuzzleKind::Calendar => "calendar",
            PuzzleKind::ChainLink => "chain_link",
            PuzzleKind::CheckerMove => "checker_move",
            PuzzleKind::Clock => "clock",
            PuzzleKind::ColourHue => "colour_hue",
            PuzzleKind::MapColour => "map_colour",
            PuzzleKind::Maze => "maze_solve",
            PuzzleKind::MoveBox => "move_box",
            PuzzleKind::NQueens => "n_queens",
            PuzzleKind::NumberSlide => "number_slide",
            PuzzleKind::RottingFruit => "rotting_fruit",
            PuzzleKind::RubiksCube => "rubiks_cube",
            PuzzleKind::ThinkADot => "think_a_dot",
            PuzzleKind::TowerOfHanoi => "tower_of_hanoi",
            PuzzleKind::WaterJugs => "water_jugs",
            PuzzleKind::WheelOfFortune => "wheel_of_fortune",
            PuzzleKind::WoodSlide => "wood_slide",
        }
    }

    /// `<kind>_<index padded to 4 digits>`.
    pub fn instance_id(self, index: u32) -> alloc::string::String {
        alloc::format!("{}_{:04}", self.name(), index)
    }
}

impl fmt::Display for PuzzleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PuzzleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PuzzleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown puzzle kind `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VisualFeature {
    Colour,
    Position,
    ShapeSize,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmicFeature {
    Arithmetic,
    BooleanLogic,
    Combinatorics,
    Graphs,
    Optimization,
    Search,
    Sets,
}

/// Visual and algorithmic feature labels of one puzzle family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OntologyTags {
    pub visual: Vec<VisualFeature>,
    pub algorithmic: Vec<AlgorithmicFeature>,
}

impl OntologyTags {
    pub fn has_visual(&self, f: VisualFeature) -> bool {
        self.visual.contains(&f)
    }

    pub fn has_algorithmic(&self, f: AlgorithmicFeature) -> bool {
        self.algorithmic.contains(&f)
    }
}

// Column order: colour, position, shape/size, text | arithmetic, boolean logic,
// combinatorics, graphs, optimization, search, sets.
const ONTOLOGY: [(PuzzleKind, [u8; 4], [u8; 7]); 18] = [
    (PuzzleKind::BoardTiling, [1, 1, 0, 0], [1, 1, 0, 0, 0, 0, 0]),
    (PuzzleKind::Calendar, [0, 1, 0, 1], [1, 0, 0, 0, 0, 0, 0]),
    (PuzzleKind::ChainLink, [0, 1, 1, 0], [1, 0, 0, 0, 1, 0, 1]),
    (PuzzleKind::CheckerMove, [1, 1, 0, 0], [1, 1, 0, 0, 0, 1, 0]),
    (PuzzleKind::Clock, [0, 1, 1, 1], [1, 0, 0, 0, 0, 0, 0]),
    (PuzzleKind::ColourHue, [1, 1, 0, 0], [1, 0, 0, 0, 1, 0, 0]),
    (PuzzleKind::MapColour, [1, 1, 1, 1], [1, 1, 1, 1, 0, 1, 0]),
    (PuzzleKind::Maze, [1, 1, 0, 0], [1, 0, 0, 1, 1, 1, 0]),
    (PuzzleKind::MoveBox, [1, 1, 0, 0], [1, 0, 0, 1, 1, 1, 0]),
    (PuzzleKind::NQueens, [0, 1, 0, 0], [1, 1, 0, 0, 0, 1, 0]),
    (PuzzleKind::NumberSlide, [0, 1, 0, 1], [1, 0, 1, 0, 1, 1, 1]),
    (
        PuzzleKind::RottingFruit,
        [0, 1, 0, 0],
        [1, 1, 0, 1, 1, 1, 0],
    ),
    (PuzzleKind::RubiksCube, [1, 1, 0, 0], [1, 0, 0, 1, 0, 0, 0]),
    (PuzzleKind::ThinkADot, [1, 1, 1, 0], [1, 1, 0, 0, 0, 0, 1]),
    (
        PuzzleKind::TowerOfHanoi,
        [0, 1, 1, 0],
        [1, 1, 0, 0, 1, 1, 0],
    ),
    (PuzzleKind::WaterJugs, [0, 1, 1, 1], [1, 1, 0, 0, 1, 1, 0]),
    (
        PuzzleKind::WheelOfFortune,
        [0, 1, 1, 1],
        [1, 0, 0, 0, 0, 0, 0],
    ),
    (PuzzleKind::WoodSlide, [0, 1, 1, 0], [1, 0, 0, 0, 1, 1, 0]),
];

const VISUAL_COLUMNS: [VisualFeature; 4] = [
    VisualFeature::Colour,
    VisualFeature::Position,
    VisualFeature::ShapeSize,
    VisualFeature::Text,
];

const ALGORITHMIC_COLUMNS: [AlgorithmicFeature; 7] = [
    AlgorithmicFeature::Arithmetic,
    AlgorithmicFeature::BooleanLogic,
    AlgorithmicFeature::Combinatorics,
    AlgorithmicFeature::Graphs,
    AlgorithmicFeature::Optimization,
    AlgorithmicFeature::Search,
    AlgorithmicFeature::Sets,
];

pub fn ontology_for(kind: PuzzleKind) -> OntologyTags {
    let (_, vis, alg) = ONTOLOGY[kind.ordinal()];
    debug_assert_eq!(ONTOLOGY[kind.ordinal()].0, kind);
    OntologyTags {
        visual: VISUAL_COLUMNS
            .iter()
            .zip(vis)
            .filter(|(_, on)| *on == 1)
            .map(|(f, _)| *f)
            .collect(),
        algorithmic: ALGORITHMIC_COLUMNS
            .iter()
            .zip(alg)
            .filter(|(_, on)| *on == 1)
            .map(|(f, _)| *f)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn table_rows_are_in_kind_order() {
        for (i, row) in ONTOLOGY.iter().enumerate() {
            assert_eq!(row.0.ordinal(), i);
        }
    }

    #[test]
    fn board_tiling_row() {
        let t = ontology_for(PuzzleKind::BoardTiling);
        assert_eq!(
            t.visual,
            vec![VisualFeature::Colour, VisualFeature::Position]
        );
        assert_eq!(
            t.algorithmic,
            vec![
                AlgorithmicFeature::Arithmetic,
                AlgorithmicFeature::BooleanLogic
            ]
        );
    }

    #[test]
    fn wheel_of_fortune_row() {
        let t = ontology_for(PuzzleKind::WheelOfFortune);
        assert_eq!(
            t.visual,
            vec![
                VisualFeature::Position,
                VisualFeature::ShapeSize,
                VisualFeature::Text
            ]
        );
        assert_eq!(t.algorithmic, vec![AlgorithmicFeature::Arithmetic]);
    }

    #[test]
    fn every_kind_has_position_and_arithmetic() {
        for k in PuzzleKind::ALL {
            let t = ontology_for(k);
            assert!(t.has_visual(VisualFeature::Position), "{k}");
            assert!(t.has_algorithmic(AlgorithmicFeature::Arithmetic), "{k}");
        }
    }

    #[test]
    fn names_round_trip() {
        for k in PuzzleKind::ALL {
            assert_eq!(k.name().parse::<PuzzleKind>().unwrap(), k);
        }
        assert!("number_path".parse::<PuzzleKind>().is_err());
        assert_eq!(PuzzleKind::BoardTiling.instance_id(3), "board_tiling_0003");
    }
}
