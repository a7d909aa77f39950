//! Question text and multiple-choice options for generated instances.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::answer::{AnswerValue, ClockTime, Weekday};
use crate::error::{Error, Result};
use crate::gridlogic::FruitCell;
use crate::instance::{Payload, PuzzleInstance};
use crate::kind::PuzzleKind;
use crate::maze::MazeQuestion;
use crate::rng::Rng;
use crate::sliding::{Axis, Checker, DirectedStat, Extremum, SlideQuestion};
use crate::temporal::MONTH_NAMES;

/// Option letters in display order.
pub const LETTERS: [char; 4] = ['A', 'B', 'C', 'D'];

/// Stream id used to fork the option-shuffling RNG off an instance seed.
pub const MCQ_STREAM: u64 = 0x006d_6371;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McqItem {
    pub question: String,
    pub options: Vec<(char, String)>,
    pub answer_letter: char,
    pub gold: AnswerValue,
}

impl McqItem {
    pub fn option(&self, letter: char) -> Option<&str> {
        self.options
            .iter()
            .find(|(l, _)| *l == letter)
            .map(|(_, t)| t.as_str())
    }
}

fn number_word(n: usize) -> String {
    const WORDS: [&str; 11] = [
        "Zero", "One", "Two", "Three", "Four", "Five", "Six", "Seven", "Eight", "Nine", "Ten",
    ];
    WORDS
        .get(n)
        .map_or_else(|| n.to_string(), |w| String::from(*w))
}

fn plural(n: impl Into<i64>, one: &str, many: &str) -> String {
    let n = n.into();
    format!("{n} {}", if n == 1 { one } else { many })
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn ordinal(i: usize) -> String {
    let suffix = match (i % 10, i % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{i}{suffix}")
}

fn line_name(axis: Axis, index: usize, n: usize) -> String {
    match (axis, index) {
        (Axis::Row, 0) => String::from("top most row"),
        (Axis::Row, i) if i + 1 == n => String::from("bottom most row"),
        (Axis::Row, i) => format!("{} row from the top", ordinal(i + 1)),
        (Axis::Column, 0) => String::from("left most column"),
        (Axis::Column, i) if i + 1 == n => String::from("right most column"),
        (Axis::Column, i) => format!("{} column from the left", ordinal(i + 1)),
    }
}

fn duration(minutes: u32) -> String {
    let (h, m) = (minutes / 60, minutes % 60);
    match (h, m) {
        (0, m) => plural(m, "minute", "minutes"),
        (h, 0) => plural(h, "hour", "hours"),
        (h, m) => format!(
            "{} and {}",
            plural(h, "hour", "hours"),
            plural(m, "minute", "minutes")
        ),
    }
}

const NUMBER_SLIDE_RULES: &str = "Tiles in the same row or column of the open position can be moved by sliding them \
    horizontally or vertically, respectively. All tiles always stay and move inside the red boundary wall, as shown \
    in the image. A move is defined as moving the open position by one tile unit in any available direction.";

const MAZE_RULES: &str = "The empty cells are coloured white and the obstacle cells are coloured black. From an \
    empty cell, you can only move up, down, left, or right to another adjacent empty cell. You cannot move diagonally \
    between two empty cells and cannot step into a cell with an obstacle. The entry cell of the maze is shown with the \
    green arrow. The exit cell of the maze is shown with the blue arrow. Suppose you have found the most optimal path \
    in the maze between the entrance and exit, where you need to go through the least number of empty cells and you \
    need to make the least number of left and right turns.";

const CUBE_RULES: &str = "A 3 * 3 Rubik's Cube has six different coloured panels: red, green, blue, yellow, orange, \
    and grey. The initial state of the cube in terms of the different colour positions in its six faces is shown in \
    the image. To represent the movements of the cube we use six letters: U for Up, D for Down, L for Left, R for \
    Right, F for Front, B for Back. These letters are used in sequence where you need to perform each letter in the \
    sequence from left to right. Each letter tells you to move that face clockwise by 90 degrees. A number 'n' \
    immediately after a letter denotes that you need to move that face clockwise by 90 * n degrees. For example, \
    `U R3' would mean rotating the up face 90 degrees clockwise and then rotating the right face 270 degrees \
    clockwise.";

const TAD_RULES: &str = "The toy shown in the figure has eight coloured disks on its front, and three holes on its \
    top - left, right, and center - through which a ball bearing could be dropped. Each disk would display either a \
    yellow or blue face. When a ball passes through a disc it tips the disk mechanism which flips the face colour. \
    The tipping of the disc mechanism determines whether the ball would be deflected to the left or to the right. The \
    vertical walls between the discs would then determine the path of motion of the ball. A dropped ball always \
    passes through exactly one disc in each of the top and the bottom row. Depending on the configuration of the top \
    three discs it may or may not pass through the middle row. Finally, when the ball falls to the bottom it would \
    exit either to a hole on the left or the right of the device.";

/// Fills the family's question template with the instance's parameters.
pub fn format_question(inst: &PuzzleInstance) -> String {
    match &inst.payload {
        Payload::BoardTiling(t) => {
            let total = t.rows * t.cols;
            let left = total - t.removed.len();
            let dominoes = left / 2;
            let removed = match t.removed.len() {
                1 => String::from("One of the squares has been removed"),
                k => format!("{} of the squares have been removed", number_word(k)),
            };
            format!(
                "The checkerboard shown in the image was originally of {r} * {c} in dimension having a total of \
                 {total} squares. It uses two colours of squares, one light yellow and one dark yellow, in a \
                 chequered pattern. {removed} from the board in the position of the white coloured cells, as shown \
                 in the image. You have {dominoes} dominoes of size 2 * 1. You can use them as is or you can rotate \
                 them to use as a 1 * 2 domino. Is it possible to place all the {dominoes} dominoes in the \
                 checkerboard to exactly cover all the remaining {left} squares? Answer Yes or No.",
                r = t.rows,
                c = t.cols,
            )
        }
        Payload::Calendar(c) => {
            let leap = |l: bool| if l { "leap" } else { "non-leap" };
            let month = MONTH_NAMES[c.query_month as usize - 1];
            let (which, note) = match c.query_year_offset {
                0 => (String::from("that year"), String::new()),
                o => {
                    let side = if o < 0 { "previous" } else { "next" };
                    (
                        format!("the {side} year"),
                        format!(" The {side} year is a {} year.", leap(c.query_year_leap)),
                    )
                }
            };
            format!(
                "The image shows the calendar of a month of a particular {} year. Which day of the week was on \
                 {month} {} of {which}?{note}",
                leap(c.shown_year_leap),
                c.query_day,
            )
        }
        Payload::ChainLink(c) => {
            let segments = c.closed_segments.len() + c.open_singletons as usize;
            let pieces = c.closed_segments.iter().sum::<u32>() + c.open_singletons;
            let initially = match c.open_singletons {
                0 => String::from("Initially, all the pieces are closed."),
                1 => String::from(
                    "Initially, she has 1 segment with 1 open piece as shown in the image. All the other pieces are \
                     closed.",
                ),
                k => format!(
                    "Initially, she has {k} segments each with 1 open piece as shown in the image. All the other \
                     pieces are closed."
                ),
            };
            format!(
                "Alice has {segments} segments of chains of different lengths as shown in the image. The total \
                 length of all the segments combined is {pieces} pieces. She has a saw machine with which a closed \
                 piece can be cut opened. She also has a welding machine with which an open piece can be closed. \
                 Each cut takes {} and each welding takes {}. {initially} She now wants to make the longest possible \
                 necklace using all the available {pieces} pieces. Each piece in the necklace would be connected to \
                 exactly two other pieces. This would require cutting open some pieces and then joining all the \
                 resulting segments together. What is the minimum time in which she can create the necklace?",
                plural(c.cut_minutes, "minute", "minutes"),
                plural(c.weld_minutes, "minute", "minutes"),
            )
        }
        Payload::CheckerMove { start, .. } => {
            let n = start.cells.len();
            let count = |c| start.cells.iter().filter(|&&x| x == c).count();
            format!(
                "A checker game is being played on a grid of {n} squares with {} green and {} red checkers. \
                 Initially, the checkers are arranged as shown in the starting configuration with the {m} checkers \
                 occupying {m} squares and one unoccupied square. Green checkers only move rightward and red \
                 checkers only move leftward. Every move is either i) a slide to the adjacent empty square, or ii) a \
                 jump over one position to an empty square, provided the checker being jumped over is of a \
                 different colour. Each square can accommodate a maximum of one checker at any time. How many moves \
                 are required to reach the ending configuration from the starting configuration following the \
                 specified rules?",
                count(Checker::Green),
                count(Checker::Red),
                m = n - 1,
            )
        }
        Payload::Clock(c) => {
            let who = &c.subject;
            let span = duration(c.delta_minutes.unsigned_abs());
            let clock = "The current time is shown on the clock. The clock is a standard analog clock without the \
                         seconds hand.";
            if c.delta_minutes < 0 {
                format!("{who} came to an event {span} ago. {clock} What was the time when {who} came to the event?")
            } else {
                format!(
                    "{who} will go to an event {span} from now. {clock} What will be the time when {who} goes to \
                     the event?"
                )
            }
        }
        Payload::ColourHue(h) => format!(
            "A {r} * {c} board consists of {n} different coloured tiles. A random state of the board is shown in \
             (A). The ideal state of the board is shown in (B). A swap consists of selecting any two tiles in the \
             board and switching their positions. What is the minimum number of swaps required to restore the ideal \
             state of the board from (A)?",
            r = h.rows,
            c = h.cols,
            n = h.rows * h.cols,
        ),
        Payload::MapColour(m) => {
            let n = m.fixed.len();
            let k = n - m.masked.len();
            format!(
                "You are given an incomplete map of a country having {n} different regions. The objective is to \
                 colour the regions of the map using only the four available colours: red, green, blue and yellow, \
                 such that no two adjacent regions have the same colour. Adjacent regions are defined as two regions \
                 that share a common boundary of non-zero length. The regions indicated by numbers 1 to {k} have \
                 already been coloured, as shown in the image. The regions indicated by numbers {} to {n} are shown \
                 in white as they are yet to be coloured. You need to assign colours to these regions in a way such \
                 that it doesn't violate the objective. Each unique colour combination of the regions would result \
                 in a unique complete map. How many unique complete maps can be created by colouring all the white \
                 regions starting from the given incomplete map?",
                k + 1,
            )
        }
        Payload::Maze { maze, question } => {
            let ask = match question {
                MazeQuestion::LeftTurns => {
                    "What is the total number of left turns do you need to make in this optimal path?"
                }
                MazeQuestion::RightTurns => {
                    "What is the total number of right turns do you need to make in this optimal path?"
                }
                MazeQuestion::TotalTurns => {
                    "What is the combined number of left and right turns do you need to make in this optimal path?"
                }
                MazeQuestion::CellsVisited => {
                    "How many cells do you need to visit in this optimal path including the entrance and exit cells?"
                }
            };
            format!(
                "This is maze having {} * {} cells. {MAZE_RULES} {ask}",
                maze.grid.rows(),
                maze.grid.cols()
            )
        }
        Payload::MoveBox(w) => format!(
            "A storekeeper is a puzzle in which the player pushes boxes around in a warehouse trying to get them to \
             target locations. The game is represented by a {} x {} grid of characters grid where each element is a \
             wall, floor, or box. Your task is to move the box to the end flag under the following rules: 1. The box \
             can be moved to an adjacent free cell by standing next to the box and then moving in the direction of \
             the box by 1 grid. This is a push. 2. The player cannot walk through the box. What is the minimum \
             number of pushes to move the box to the end flag?",
            w.grid.rows(),
            w.grid.cols()
        ),
        Payload::NQueens(q) => format!(
            "You are given an {n} * {n} chessboard. The Manhattan distance between two squares in a chessboard is \
             equal to the minimal number of orthogonal King moves between these squares on the otherwise empty \
             board. The objective is to place {n} chess queens on this board so that no two queens threaten each \
             other; i.e. no two queens share the same row, column, or diagonal. {} queens have already been placed \
             in some of the squares of the board, as shown in the image. Suppose you pick two squares to place the \
             two remaining queen pieces in a way that fulfills the objective. What is the Manhattan distance between \
             these two squares?",
            q.n - 2,
            n = q.n,
        ),
        Payload::NumberSlide(s) => {
            let n = s.board.n;
            let intro = format!(
                "The board shown in the image is a sliding puzzle of {n} * {n} tile dimensions. It has {} numbered \
                 tiles and one unoccupied (open) position. {NUMBER_SLIDE_RULES}",
                n * n - 1
            );
            let ask = match &s.question {
                SlideQuestion::CountPositions { moves } => format!(
                    "You start from the board position shown in the image. How many unique board positions can be \
                     reached after performing exactly {}?",
                    plural(*moves as i64, "move", "moves")
                ),
                SlideQuestion::ExtremalSum { moves, axis, index, extremum } => format!(
                    "You start from the board position shown in the image and perform exactly {}. What is the {} \
                     sum that you can achieve across the {} in the final board position?",
                    plural(*moves as i64, "move", "moves"),
                    match extremum {
                        Extremum::Max => "maximum",
                        Extremum::Min => "minimum",
                    },
                    line_name(*axis, *index, n),
                ),
                SlideQuestion::Directed { path, axis, stat } => format!(
                    "You start from the board position shown in the image and perform {} where the open position is \
                     seen to be moved in the following way: {}. What is the {} of numbers in the {} that now has the \
                     open position?",
                    plural(path.len() as i64, "move", "moves"),
                    path.iter().map(|d| d.name()).collect::<Vec<_>>().join(", "),
                    match stat {
                        DirectedStat::Max => "maximum",
                        DirectedStat::Min => "minimum",
                        DirectedStat::Sum => "sum",
                    },
                    match axis {
                        Axis::Row => "row",
                        Axis::Column => "column",
                    },
                ),
            };
            format!("{intro} {ask}")
        }
        Payload::RottingFruit(g) => {
            let f = &g.fruit;
            debug_assert!(g.grid.cells().contains(&FruitCell::Rotten));
            format!(
                "You are given a {} x {} grid in which each cell can contain either no {f}, one fresh {f}, or one \
                 rotten {f}. Every minute, any fresh {f} that is 4-directionally adjacent to a rotten {f} also \
                 becomes rotten. What is the minimum number of minutes that must elapse until no cell has a fresh \
                 {f}?",
                g.grid.rows(),
                g.grid.cols()
            )
        }
        Payload::RubiksCube(c) => format!(
            "{CUBE_RULES} You perform the move sequence `{}' starting from the state shown in the image. What would \
             be the number of small 1 * 1 {} squares in the {} face after completing the move sequence?",
            c.moves,
            c.colour.name(),
            c.face.name()
        ),
        Payload::ThinkADot(t) => {
            use crate::statemachines::RowScope;
            let holes = t.drops.iter().map(|h| h.name()).collect::<Vec<_>>().join(", ");
            let drops = match t.drops.len() {
                1 => format!(
                    "One ball is dropped through the following hole: {holes}. Consider the toy configuration after \
                     the ball has been dropped and it has exited from the bottom."
                ),
                k => format!(
                    "{} balls are dropped in sequence through the following holes: {holes}. Consider the toy \
                     configuration after all the balls have been dropped and they have exited from the bottom.",
                    number_word(k)
                ),
            };
            let scope = match t.scope {
                RowScope::Top => "the top row",
                RowScope::Middle => "the middle row",
                RowScope::Bottom => "the bottom row",
                RowScope::All => "all the rows",
            };
            format!(
                "{TAD_RULES} {drops} How many {} faces can be seen in total in {scope} now?",
                t.colour.name()
            )
        }
        Payload::TowerOfHanoi(h) => format!(
            "You are playing a Tower of Hanoi game with 3 rods and {} disks of various diameters, which can slide \
             onto any rod. You are given the starting and ending configuration of the game as shown in the top and \
             the bottom of the image, respectively. The game has the following rules: i) Only one disk may be moved \
             at a time; ii) Each move consists of taking the upper disk from one of the stacks and placing it on top \
             of another stack or on an empty rod; and iii) No disk can be placed on top of a disk that is smaller \
             than it. What is the minimum number of moves required to go from the starting to the ending \
             configuration?",
            h.start.n
        ),
        Payload::WaterJugs(j) => format!(
            "You are given {} jugs of capacities {} litres. Initially, the amount of water that is contained in each \
             jar is shown in the image. A single step of water pouring from one jug to another is constrained by the \
             following rules: i) take a non-empty jug and pour water from it to another non-full jug until the first \
             one becomes empty or the second one becomes full, and ii) no water can be spilt while pouring. The \
             objective is to reach the amounts of {} litres of water in the jugs from left to right, respectively. \
             What is the minimum number of water pouring steps required to achieve the objective?",
            j.start.capacities.len(),
            join(&j.start.capacities),
            join(&j.goal)
        ),
        Payload::WheelOfFortune { wheel, query } => format!(
            "A fortune wheel has {} segments of different colour. The initial position of the wheel is shown in the \
             figure. Each segment is associated with a prize as shown in the embedded text within the segment. The \
             axis of rotation of the wheel passes through its center and is perpendicular to the surface of the \
             wheel. You spin the wheel {} and it rotates {} degrees before stopping. You are going to win the prize \
             for the segment that now falls in front of the brown arrow. What is your prize?",
            wheel.segments.len(),
            query.direction.name(),
            query.degrees
        ),
        Payload::WoodSlide(_) => String::from(
            "Consider a sliding block puzzle of grid size 5 * 4 units. It has 9 wooden blocks of varying sizes: one \
             2 * 2, four 1 * 2, two 2 * 1, and two 1 * 1. The gird also has two empty 1 * 1 spaces. The blocks \
             cannot be removed from the grid, and may only be slid horizontally and vertically within its boundary. \
             A move is defined as selecting a block that is slideable, and moving it by 1 unit either horizontally \
             or vertically, whichever is possible. The image shows the starting and ending configurations of the \
             puzzle grid. The wooden blocks are shown in various shades of brown and the empty spaces are shown in \
             white. What is the minimum number of moves required to reach the ending configuration from the \
             starting configuration?",
        ),
    }
}

/// Inclusive range that numeric distractors for `gold` are drawn from.
pub fn distractor_range(gold: i64) -> (i64, i64) {
    match gold {
        g if g <= 6 => (1, 6),
        g if g <= 10 => (1, 10),
        g if g <= 50 => (1, 50),
        g if g <= 100 => (1, 100),
        g => (g - 50, g + 50),
    }
}

/// Draws until `want` distinct candidates differ from `gold`.
fn sample_distinct<T: Ord + Clone>(
    rng: &mut Rng,
    gold: &T,
    want: usize,
    mut draw: impl FnMut(&mut Rng) -> T,
) -> Vec<T> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(want);
    while out.len() < want {
        let v = draw(rng);
        if v != *gold && seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

/// Wrong options for a question whose answer is `gold`. `labels` lists the
/// candidate labels for label answers (the prizes on the wheel) and is
/// ignored otherwise.
pub fn gen_distractors(
    gold: &AnswerValue,
    kind: PuzzleKind,
    labels: &[String],
    rng: &mut Rng,
) -> Result<Vec<AnswerValue>> {
    let expects = match kind {
        PuzzleKind::BoardTiling => matches!(gold, AnswerValue::YesNo(_)),
        PuzzleKind::Calendar => matches!(gold, AnswerValue::Weekday(_)),
        PuzzleKind::Clock => matches!(gold, AnswerValue::ClockTime(_)),
        PuzzleKind::WheelOfFortune => matches!(gold, AnswerValue::Label(_)),
        _ => matches!(gold, AnswerValue::Integer(_)),
    };
    if !expects {
        return Err(Error::invalid(format!(
            "{kind} cannot have the answer {gold}"
        )));
    }
    Ok(match gold {
        AnswerValue::YesNo(b) => alloc::vec![AnswerValue::YesNo(!b)],
        AnswerValue::Integer(g) => {
            let (lo, hi) = distractor_range(*g);
            sample_distinct(rng, g, 3, |r| r.range(lo, hi))
                .into_iter()
                .map(AnswerValue::Integer)
                .collect()
        }
        AnswerValue::ClockTime(t) => {
            let base = t.minutes_past_twelve() as i64;
            sample_distinct(rng, t, 3, |r| {
                let off = r.range(1, 59) * if r.coin() { 1 } else { -1 };
                ClockTime::from_minutes(base + off)
            })
            .into_iter()
            .map(AnswerValue::ClockTime)
            .collect()
        }
        AnswerValue::Weekday(d) => sample_distinct(rng, d, 3, |r| *r.choose(&Weekday::ALL))
            .into_iter()
            .map(AnswerValue::Weekday)
            .collect(),
        AnswerValue::Label(l) => {
            let pool: BTreeSet<&String> = labels.iter().filter(|x| *x != l).collect();
            if pool.len() < 3 {
                return Err(Error::invalid(
                    "fewer than three other labels to choose from",
                ));
            }
            let pool: Vec<&String> = pool.into_iter().collect();
            rng.sample_indices(pool.len(), 3)
                .into_iter()
                .map(|i| AnswerValue::Label(pool[i].clone()))
                .collect()
        }
    })
}

/// Shuffles gold and distractors together and letters them from A.
pub fn assemble_mcq(
    inst: &PuzzleInstance,
    distractors: &[AnswerValue],
    rng: &mut Rng,
) -> Result<McqItem> {
    let mut values = Vec::with_capacity(distractors.len() + 1);
    values.push(inst.gold.clone());
    values.extend_from_slice(distractors);
    let texts: BTreeSet<String> = values.iter().map(AnswerValue::render).collect();
    if texts.len() != values.len() || values.len() > LETTERS.len() {
        return Err(Error::invalid("options must be distinct and at most four"));
    }
    rng.shuffle(&mut values);
    let gold_at = values
        .iter()
        .position(|v| *v == inst.gold)
        .expect("gold is among the options");
    Ok(McqItem {
        question: format_question(inst),
        options: values
            .iter()
            .zip(LETTERS)
            .map(|(v, l)| (l, v.render()))
            .collect(),
        answer_letter: LETTERS[gold_at],
        gold: inst.gold.clone(),
    })
}

/// Candidate labels for label answers of this payload.
pub fn label_pool(payload: &Payload) -> Vec<String> {
    match payload {
        Payload::WheelOfFortune { wheel, .. } => {
            wheel.segments.iter().map(|s| s.label.clone()).collect()
        }
        _ => Vec::new(),
    }
}

/// The full multiple-choice item, with option randomness forked off the
/// instance seed so it never disturbs the payload stream.
pub fn build_mcq(inst: &PuzzleInstance) -> Result<McqItem> {
    let mut rng = Rng::fork(inst.seed.derived, MCQ_STREAM);
    let distractors = gen_distractors(&inst.gold, inst.kind, &label_pool(&inst.payload), &mut rng)?;
    assemble_mcq(inst, &distractors, &mut rng)
}
