//! SVG pictures for every puzzle family.

mod boards;
mod objects;

use puzzlegen_core::{Payload, PuzzleInstance};

use crate::svg::Svg;

/// Named colours used across the pictures.
#[derive(Debug, Clone, PartialEq)]
pub struct Palette {
    pub ink: String,
    pub light_square: String,
    pub dark_square: String,
    pub removed: String,
    pub chess_light: String,
    pub chess_dark: String,
    pub maze_wall: String,
    pub maze_path: String,
    pub entry_arrow: String,
    pub exit_arrow: String,
    pub slide_tile: String,
    pub slide_boundary: String,
    pub wood: [String; 4],
    pub checker_green: String,
    pub checker_red: String,
    pub warehouse_wall: String,
    pub warehouse_floor: String,
    pub crate_fill: String,
    pub player: String,
    pub flag: String,
    pub rotten: String,
    pub water: String,
    pub disk: String,
    pub rod: String,
    pub wheel_arrow: String,
    pub tad_yellow: String,
    pub tad_blue: String,
    pub chain_closed: String,
    pub chain_open: String,
}

impl Default for Palette {
    fn default() -> Self {
        let s = |v: &str| v.to_string();
        Palette {
            ink: s("#000000"),
            light_square: s("#fbe7a1"),
            dark_square: s("#d9a520"),
            removed: s("#ffffff"),
            chess_light: s("#f0d9b5"),
            chess_dark: s("#b58863"),
            maze_wall: s("#000000"),
            maze_path: s("#ffffff"),
            entry_arrow: s("#1a9b2f"),
            exit_arrow: s("#1f4fd6"),
            slide_tile: s("#f3e2c0"),
            slide_boundary: s("#d62020"),
            wood: [s("#6f4322"), s("#8b5a2b"), s("#b07a45"), s("#d2a679")],
            checker_green: s("#2e9e3f"),
            checker_red: s("#d62d2d"),
            warehouse_wall: s("#5a5a5a"),
            warehouse_floor: s("#eeeeee"),
            crate_fill: s("#c08a3e"),
            player: s("#2a62c9"),
            flag: s("#d62020"),
            rotten: s("#5b4424"),
            water: s("#5aa9e6"),
            disk: s("#c0504d"),
            rod: s("#444444"),
            wheel_arrow: s("#8b4513"),
            tad_yellow: s("#f2d024"),
            tad_blue: s("#2a6fdb"),
            chain_closed: s("#555555"),
            chain_open: s("#d62020"),
        }
    }
}

/// Canvas size, colours and font for a picture.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    pub palette: Palette,
    pub font_family: String,
    pub background: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 640,
            height: 640,
            palette: Palette::default(),
            font_family: "DejaVu Sans, Arial, sans-serif".to_string(),
            background: "#ffffff".to_string(),
        }
    }
}

/// Axis-aligned drawing area.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Area {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl Area {
    pub fn inset(self, m: f64) -> Area {
        Area {
            x: self.x + m,
            y: self.y + m,
            w: (self.w - 2.0 * m).max(1.0),
            h: (self.h - 2.0 * m).max(1.0),
        }
    }

    /// Splits into `n` equal columns.
    pub fn columns(self, n: usize) -> Vec<Area> {
        let w = self.w / n as f64;
        (0..n)
            .map(|i| Area {
                x: self.x + w * i as f64,
                w,
                ..self
            })
            .collect()
    }

    /// Splits into `n` equal rows.
    pub fn rows(self, n: usize) -> Vec<Area> {
        let h = self.h / n as f64;
        (0..n)
            .map(|i| Area {
                y: self.y + h * i as f64,
                h,
                ..self
            })
            .collect()
    }

    /// Top strip of height `h` and the rest.
    pub fn split_top(self, h: f64) -> (Area, Area) {
        let h = h.min(self.h);
        (
            Area { h, ..self },
            Area {
                y: self.y + h,
                h: self.h - h,
                ..self
            },
        )
    }

    /// The largest centred `rows x cols` grid of square cells: origin and cell size.
    pub fn fit_grid(self, rows: usize, cols: usize) -> (f64, f64, f64) {
        let cell = (self.w / cols as f64).min(self.h / rows as f64);
        let x0 = self.x + (self.w - cell * cols as f64) / 2.0;
        let y0 = self.y + (self.h - cell * rows as f64) / 2.0;
        (x0, y0, cell)
    }

    pub fn centre(self) -> (f64, f64) {
        (self.x + self.w / 2.0, self.y + self.h / 2.0)
    }
}

/// Draws the picture for `inst`.
pub fn render_svg(inst: &PuzzleInstance, spec: &RenderSpec) -> String {
    let (w, h) = (spec.width as f64, spec.height as f64);
    let mut s = Svg::new(w, h, &spec.font_family, &spec.background);
    let p = &spec.palette;
    let area = Area {
        x: 0.0,
        y: 0.0,
        w,
        h,
    }
    .inset(w.min(h) * 0.04);
    match &inst.payload {
        Payload::BoardTiling(t) => boards::tiling(&mut s, p, area, t),
        Payload::Calendar(c) => objects::calendar(&mut s, p, area, c),
        Payload::ChainLink(c) => objects::chain(&mut s, p, area, c),
        Payload::CheckerMove { start, end } => boards::checkers(&mut s, p, area, start, end),
        Payload::Clock(c) => objects::clock(&mut s, p, area, c),
        Payload::ColourHue(b) => boards::hue(&mut s, p, area, b),
        Payload::MapColour(m) => objects::map(&mut s, p, area, m),
        Payload::Maze { maze, .. } => boards::maze(&mut s, p, area, maze),
        Payload::MoveBox(wh) => boards::warehouse(&mut s, p, area, wh),
        Payload::NQueens(q) => boards::queens(&mut s, p, area, q),
        Payload::NumberSlide(n) => boards::number_slide(&mut s, p, area, &n.board),
        Payload::RottingFruit(g) => boards::fruit(&mut s, p, area, g),
        Payload::RubiksCube(c) => objects::cube(&mut s, p, area, &c.initial),
        Payload::ThinkADot(t) => objects::think_a_dot(&mut s, p, area, &t.config),
        Payload::TowerOfHanoi(hn) => objects::hanoi(&mut s, p, area, hn),
        Payload::WaterJugs(j) => objects::jugs(&mut s, p, area, &j.start),
        Payload::WheelOfFortune { wheel, .. } => objects::wheel(&mut s, p, area, wheel),
        Payload::WoodSlide(ws) => boards::wood_slide(&mut s, p, area, ws),
    }
    s.finish()
}
