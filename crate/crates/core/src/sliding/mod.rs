//! State-space puzzles solved by breadth-first search.

mod checker;
mod hanoi;
mod jugs;
mod klotski;
mod movebox;
mod number;

pub use checker::{gen_checker_move, solve_checker_move, Checker, CheckerLine, CheckerMove};
pub use hanoi::{
    gen_hanoi, hanoi_classic, hanoi_states, solve_hanoi, HanoiInstance, HanoiState, RODS,
};
pub use jugs::{gen_water_jugs, solve_water_jugs, JugState, JugsInstance};
pub use klotski::{
    gen_wood_slide, pennant_goal_reached, pennant_optimal, pennant_start, solve_wood_slide, Block,
    BlockShape, KlotskiBoard, KlotskiMove, WoodSlideInstance, COLS as WOOD_COLS, ROWS as WOOD_ROWS,
};
pub use movebox::{gen_move_box, solve_move_box, solve_move_box_full, Tile, Warehouse};
pub use number::{
    gen_number_slide, layer_sets, solve_number_slide, Axis, DirectedStat, Extremum, SlideBoard,
    SlideInstance, SlideQuestion,
};

pub(crate) const MAX_ATTEMPTS: usize = 1000;
