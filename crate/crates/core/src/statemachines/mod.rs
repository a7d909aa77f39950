//! Permutation puzzles driven by a fixed rule table: a 3×3 cube and the
//! Think-a-Dot flip toy.

mod cube;
mod thinkadot;

pub use cube::{
    cube_apply, cube_count, gen_cube, solve_cube, turn_permutation, CubeColour, CubeInstance,
    CubeState, Face, MoveSeq, SCRAMBLE_TURNS,
};
pub use thinkadot::{
    gen_tad, tad_count, tad_drop, tad_solve, tad_trace, DiscColour, Hole, RowScope, Side,
    TadConfig, TadInstance, DISCS, YELLOW_DEFLECTS,
};
