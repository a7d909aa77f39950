//! Generated puzzles: one payload per family, its seed and its gold answer.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::answer::AnswerValue;
use crate::error::{Error, Result};
use crate::gridlogic::{
    enumerate_nqueens, gen_colour_hue, gen_nqueens, gen_rotting, gen_tiling, solve_colour_hue,
    solve_nqueens, solve_rotting, solve_tiling, HueBoard, QueensInstance, RottingGrid,
    TilingInstance,
};
use crate::kind::{ontology_for, OntologyTags, PuzzleKind};
use crate::mapcolour::{count_completions, gen_mapcolour, ColouringInstance};
use crate::maze::{gen_maze, solve_maze, MazeGrid, MazeQuestion};
use crate::mechanics::{
    gen_chain, gen_wheel, solve_chain, solve_wheel, ChainSpec, RotationQuery, WheelSpec,
};
use crate::rng::{Rng, Seed};
use crate::sliding::{
    gen_checker_move, gen_hanoi, gen_move_box, gen_number_slide, gen_water_jugs, gen_wood_slide,
    pennant_optimal, solve_checker_move, solve_hanoi, solve_move_box, solve_number_slide,
    solve_water_jugs, solve_wood_slide, CheckerLine, HanoiInstance, JugsInstance, KlotskiBoard,
    SlideInstance, Warehouse, WoodSlideInstance,
};
use crate::statemachines::{gen_cube, gen_tad, solve_cube, tad_solve, CubeInstance, TadInstance};
use crate::temporal::{
    gen_calendar, gen_clock, solve_calendar, solve_clock, CalendarInstance, ClockInstance,
};
use crate::words;

/// Board sizes offered by the queens generator.
pub const QUEEN_SIZES: [usize; 3] = [8, 9, 10];
/// Maze side lengths offered by the maze generator.
pub const MAZE_SIZES: [usize; 3] = [9, 11, 13];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    BoardTiling(TilingInstance),
    Calendar(CalendarInstance),
    ChainLink(ChainSpec),
    CheckerMove {
        start: CheckerLine,
        end: CheckerLine,
    },
    Clock(ClockInstance),
    ColourHue(HueBoard),
    MapColour(ColouringInstance),
    #[serde(rename = "maze_solve")]
    Maze {
        maze: MazeGrid,
        question: MazeQuestion,
    },
    MoveBox(Warehouse),
    NQueens(QueensInstance),
    NumberSlide(SlideInstance),
    RottingFruit(RottingGrid),
    RubiksCube(CubeInstance),
    ThinkADot(TadInstance),
    TowerOfHanoi(HanoiInstance),
    WaterJugs(JugsInstance),
    WheelOfFortune {
        wheel: WheelSpec,
        query: RotationQuery,
    },
    WoodSlide(WoodSlideInstance),
}

impl Payload {
    pub fn kind(&self) -> PuzzleKind {
        match self {
            Payload::BoardTiling(_) => PuzzleKind::BoardTiling,
            Payload::Calendar(_) => PuzzleKind::Calendar,
            Payload::ChainLink(_) => PuzzleKind::ChainLink,
            Payload::CheckerMove { .. } => PuzzleKind::CheckerMove,
            Payload::Clock(_) => PuzzleKind::Clock,
            Payload::ColourHue(_) => PuzzleKind::ColourHue,
            Payload::MapColour(_) => PuzzleKind::MapColour,
            Payload::Maze { .. } => PuzzleKind::Maze,
            Payload::MoveBox(_) => PuzzleKind::MoveBox,
            Payload::NQueens(_) => PuzzleKind::NQueens,
            Payload::NumberSlide(_) => PuzzleKind::NumberSlide,
            Payload::RottingFruit(_) => PuzzleKind::RottingFruit,
            Payload::RubiksCube(_) => PuzzleKind::RubiksCube,
            Payload::ThinkADot(_) => PuzzleKind::ThinkADot,
            Payload::TowerOfHanoi(_) => PuzzleKind::TowerOfHanoi,
            Payload::WaterJugs(_) => PuzzleKind::WaterJugs,
            Payload::WheelOfFortune { .. } => PuzzleKind::WheelOfFortune,
            Payload::WoodSlide(_) => PuzzleKind::WoodSlide,
        }
    }

    /// Runs the family's solver.
    pub fn solve(&self) -> Result<AnswerValue> {
        let int = |v: u64| AnswerValue::Integer(v as i64);
        Ok(match self {
            Payload::BoardTiling(t) => AnswerValue::YesNo(solve_tiling(t)?),
            Payload::Calendar(c) => AnswerValue::Weekday(solve_calendar(c)?),
            Payload::ChainLink(c) => int(solve_chain(c)?.minutes),
            Payload::CheckerMove { start, end } => int(solve_checker_move(start, end)?),
            Payload::Clock(c) => AnswerValue::ClockTime(solve_clock(c)),
            Payload::ColourHue(h) => int(solve_colour_hue(h)?),
            Payload::MapColour(m) => int(count_completions(m)?),
            Payload::Maze { maze, question } => int(solve_maze(maze, *question)?),
            Payload::MoveBox(w) => int(solve_move_box(w)?),
            Payload::NQueens(q) => int(solve_nqueens(q)?),
            Payload::NumberSlide(s) => int(solve_number_slide(s)?),
            Payload::RottingFruit(g) => int(solve_rotting(g)?),
            Payload::RubiksCube(c) => int(solve_cube(c)?),
            Payload::ThinkADot(t) => int(tad_solve(t)?),
            Payload::TowerOfHanoi(h) => int(solve_hanoi(&h.start, &h.end)?),
            Payload::WaterJugs(j) => int(solve_water_jugs(&j.start, &j.goal)?),
            Payload::WheelOfFortune { wheel, query } => {
                AnswerValue::Label(solve_wheel(wheel, query)?)
            }
            Payload::WoodSlide(w) => int(solve_wood_slide(&w.start, &w.end)?),
        })
    }
}

/// Shared, read-only tables that several generators draw from. Building
/// one costs a Klotski search and three queens enumerations, so callers
/// make it once and share it across threads.
#[derive(Debug, Clone)]
pub struct GenContext {
    pub pennant_path: Vec<KlotskiBoard>,
    pub queens: [Vec<Vec<usize>>; 3],
    pub prizes: Vec<&'static str>,
    pub names: Vec<&'static str>,
}

impl GenContext {
    pub fn new() -> Result<Self> {
        Ok(GenContext {
            pennant_path: pennant_optimal()?.states,
            queens: QUEEN_SIZES.map(enumerate_nqueens),
            prizes: words::prizes(),
            names: words::names(),
        })
    }

    /// Draws a fresh payload of the given family.
    pub fn generate(&self, kind: PuzzleKind, rng: &mut Rng) -> Result<Payload> {
        Ok(match kind {
            PuzzleKind::BoardTiling => Payload::BoardTiling(gen_tiling(rng)),
            PuzzleKind::Calendar => Payload::Calendar(gen_calendar(rng)),
            PuzzleKind::ChainLink => Payload::ChainLink(gen_chain(rng)),
            PuzzleKind::CheckerMove => {
                let (start, end) = gen_checker_move(rng)?;
                Payload::CheckerMove { start, end }
            }
            PuzzleKind::Clock => Payload::Clock(gen_clock(rng, &self.names)),
            PuzzleKind::ColourHue => Payload::ColourHue(gen_colour_hue(rng)?),
            PuzzleKind::MapColour => Payload::MapColour(gen_mapcolour(rng)?),
            PuzzleKind::Maze => {
                let size = *rng.choose(&MAZE_SIZES);
                let question = *rng.choose(&MazeQuestion::ALL);
                Payload::Maze {
                    maze: gen_maze(rng, size)?,
                    question,
                }
            }
            PuzzleKind::MoveBox => Payload::MoveBox(gen_move_box(rng)?),
            PuzzleKind::NQueens => {
                let table = rng.choose(&self.queens);
                Payload::NQueens(gen_nqueens(rng, table)?)
            }
            PuzzleKind::NumberSlide => Payload::NumberSlide(gen_number_slide(rng)),
            PuzzleKind::RottingFruit => Payload::RottingFruit(gen_rotting(rng)?),
            PuzzleKind::RubiksCube => Payload::RubiksCube(gen_cube(rng)),
            PuzzleKind::ThinkADot => Payload::ThinkADot(gen_tad(rng)),
            PuzzleKind::TowerOfHanoi => Payload::TowerOfHanoi(gen_hanoi(rng)),
            PuzzleKind::WaterJugs => Payload::WaterJugs(gen_water_jugs(rng)?),
            PuzzleKind::WheelOfFortune => {
                let (wheel, query, _) = gen_wheel(rng, &self.prizes)?;
                Payload::WheelOfFortune { wheel, query }
            }
            PuzzleKind::WoodSlide => Payload::WoodSlide(gen_wood_slide(rng, &self.pennant_path)),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PuzzleInstance {
    pub id: String,
    pub kind: PuzzleKind,
    pub seed: Seed,
    pub payload: Payload,
    pub gold: AnswerValue,
    pub tags: OntologyTags,
}

impl PuzzleInstance {
    /// Instance `index` of `kind` under `master`; the same triple always
    /// gives the same instance.
    pub fn generate(master: u64, kind: PuzzleKind, index: u32, ctx: &GenContext) -> Result<Self> {
        let seed = Seed::new(master, kind, index);
        let mut rng = Rng::new(seed.derived);
        let payload = ctx.generate(kind, &mut rng)?;
        Self::from_payload(kind.instance_id(index), seed, payload)
    }

    /// Wraps a payload, solving it for the gold answer.
    pub fn from_payload(id: String, seed: Seed, payload: Payload) -> Result<Self> {
        let gold = payload.solve()?;
        let kind = payload.kind();
        Ok(PuzzleInstance {
            id,
            kind,
            seed,
            payload,
            gold,
            tags: ontology_for(kind),
        })
    }

    /// Re-solves the payload and checks it against the stored gold.
    pub fn check(&self) -> Result<()> {
        if self.payload.kind() != self.kind {
            return Err(Error::invalid("payload belongs to another family"));
        }
        let fresh = self.payload.solve()?;
        if fresh != self.gold {
            return Err(Error::AssumptionViolated(format!(
                "{}: stored gold {} but solver gives {}",
                self.id, self.gold, fresh
            )));
        }
        if self.tags != ontology_for(self.kind) {
            return Err(Error::invalid("ontology tags differ from the family table"));
        }
        Ok(())
    }
}
