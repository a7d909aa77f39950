use puzzlegen_core::gridlogic::{FruitCell, HueBoard, QueensInstance, RottingGrid, TilingInstance};
use puzzlegen_core::maze::{MazeCell, MazeGrid};
use puzzlegen_core::sliding::{
    BlockShape, Checker, CheckerLine, KlotskiBoard, SlideBoard, Tile, Warehouse, WoodSlideInstance,
    WOOD_COLS, WOOD_ROWS,
};

use super::{Area, Palette};
use crate::svg::{hex_colour, Anchor, Svg};

const LABEL: f64 = 28.0;

pub(super) fn tiling(s: &mut Svg, p: &Palette, area: Area, t: &TilingInstance) {
    let (x0, y0, cell) = area.fit_grid(t.rows, t.cols);
    for r in 0..t.rows {
        for c in 0..t.cols {
            let fill = if t.removed.contains(&(r, c)) {
                &p.removed
            } else if (r + c) % 2 == 0 {
                &p.light_square
            } else {
                &p.dark_square
            };
            let (x, y) = (x0 + c as f64 * cell, y0 + r as f64 * cell);
            s.rect(x, y, cell, cell, fill, Some((&p.ink, 1.0)));
        }
    }
}

pub(super) fn checkers(
    s: &mut Svg,
    p: &Palette,
    area: Area,
    start: &CheckerLine,
    end: &CheckerLine,
) {
    let halves = area.rows(2);
    for (half, (title, line)) in halves.iter().zip([
        ("Starting configuration", start),
        ("Ending configuration", end),
    ]) {
        let (head, body) = half.split_top(LABEL);
        let (cx, cy) = head.centre();
        s.text(cx, cy, 18.0, Anchor::Middle, &p.ink, title);
        let (x0, y0, cell) = body.inset(8.0).fit_grid(1, line.cells.len());
        for (i, c) in line.cells.iter().enumerate() {
            let x = x0 + i as f64 * cell;
            s.rect(x, y0, cell, cell, &p.warehouse_floor, Some((&p.ink, 1.5)));
            let fill = match c {
                Checker::Empty => continue,
                Checker::Green => &p.checker_green,
                Checker::Red => &p.checker_red,
            };
            s.circle(
                x + cell / 2.0,
                y0 + cell / 2.0,
                cell * 0.38,
                fill,
                Some((&p.ink, 1.0)),
            );
        }
    }
}

pub(super) fn hue(s: &mut Svg, p: &Palette, area: Area, b: &HueBoard) {
    let shown = b.displayed();
    for (half, (title, fills)) in area
        .columns(2)
        .iter()
        .zip([("(A)", &shown), ("(B)", &b.ideal)])
    {
        let (head, body) = half.split_top(LABEL);
        let (cx, cy) = head.centre();
        s.text(cx, cy, 18.0, Anchor::Middle, &p.ink, title);
        let (x0, y0, cell) = body.inset(10.0).fit_grid(b.rows, b.cols);
        for (i, rgb) in fills.iter().enumerate() {
            let (r, c) = (i / b.cols, i % b.cols);
            s.rect(
                x0 + c as f64 * cell,
                y0 + r as f64 * cell,
                cell,
                cell,
                &hex_colour(*rgb),
                Some(("#ffffff", 1.0)),
            );
        }
    }
}

pub(super) fn maze(s: &mut Svg, p: &Palette, area: Area, m: &MazeGrid) {
    let (rows, cols) = (m.grid.rows(), m.grid.cols());
    // Leave room for arrows outside the border.
    let (x0, y0, cell) = area.fit_grid(rows + 2, cols + 2);
    let (x0, y0) = (x0 + cell, y0 + cell);
    for r in 0..rows {
        for c in 0..cols {
            let fill = match m.grid.get((r, c)) {
                MazeCell::Wall => &p.maze_wall,
                MazeCell::Path => &p.maze_path,
            };
            s.rect(
                x0 + c as f64 * cell,
                y0 + r as f64 * cell,
                cell,
                cell,
                fill,
                Some(("#999999", 0.5)),
            );
        }
    }
    let centre =
        |(r, c): (usize, usize)| (x0 + (c as f64 + 0.5) * cell, y0 + (r as f64 + 0.5) * cell);
    let width = (cell * 0.18).max(2.0);
    let (ex, ey) = centre(m.entrance);
    s.arrow(
        ex - cell * 1.4,
        ey,
        ex - cell * 0.55,
        ey,
        &p.entry_arrow,
        width,
    );
    let (xx, xy) = centre(m.exit);
    if m.exit.1 + 1 == cols {
        s.arrow(
            xx + cell * 0.55,
            xy,
            xx + cell * 1.4,
            xy,
            &p.exit_arrow,
            width,
        );
    } else {
        s.arrow(
            xx,
            xy + cell * 0.55,
            xx,
            xy + cell * 1.4,
            &p.exit_arrow,
            width,
        );
    }
}

pub(super) fn warehouse(s: &mut Svg, p: &Palette, area: Area, w: &Warehouse) {
    let (rows, cols) = (w.grid.rows(), w.grid.cols());
    let (x0, y0, cell) = area.fit_grid(rows, cols);
    let corner = |(r, c): (usize, usize)| (x0 + c as f64 * cell, y0 + r as f64 * cell);
    for r in 0..rows {
        for c in 0..cols {
            let fill = match w.grid.get((r, c)) {
                Tile::Wall => &p.warehouse_wall,
                Tile::Floor => &p.warehouse_floor,
            };
            let (x, y) = corner((r, c));
            s.rect(x, y, cell, cell, fill, Some(("#bbbbbb", 1.0)));
        }
    }
    let (fx, fy) = corner(w.flag);
    s.line(
        fx + cell * 0.3,
        fy + cell * 0.15,
        fx + cell * 0.3,
        fy + cell * 0.85,
        &p.ink,
        2.0,
    );
    s.polygon(
        &[
            (fx + cell * 0.3, fy + cell * 0.15),
            (fx + cell * 0.8, fy + cell * 0.32),
            (fx + cell * 0.3, fy + cell * 0.5),
        ],
        &p.flag,
        None,
    );
    let (bx, by) = corner(w.box_at);
    let m = cell * 0.12;
    s.rect(
        bx + m,
        by + m,
        cell - 2.0 * m,
        cell - 2.0 * m,
        &p.crate_fill,
        Some((&p.ink, 1.5)),
    );
    s.line(bx + m, by + m, bx + cell - m, by + cell - m, &p.ink, 1.0);
    s.line(bx + cell - m, by + m, bx + m, by + cell - m, &p.ink, 1.0);
    let (px, py) = corner(w.player);
    s.circle(
        px + cell / 2.0,
        py + cell / 2.0,
        cell * 0.3,
        &p.player,
        Some((&p.ink, 1.0)),
    );
}

/// A five-point crown inside the square at `(x, y)`.
fn queen(s: &mut Svg, x: f64, y: f64, cell: f64, fill: &str) {
    let u = cell / 10.0;
    s.polygon(
        &[
            (x + 2.0 * u, y + 7.5 * u),
            (x + 1.5 * u, y + 3.0 * u),
            (x + 3.5 * u, y + 5.0 * u),
            (x + 5.0 * u, y + 2.0 * u),
            (x + 6.5 * u, y + 5.0 * u),
            (x + 8.5 * u, y + 3.0 * u),
            (x + 8.0 * u, y + 7.5 * u),
        ],
        fill,
        Some(("#ffffff", 0.8)),
    );
    s.rect(x + 2.0 * u, y + 7.7 * u, 6.0 * u, 1.0 * u, fill, None);
}

pub(super) fn queens(s: &mut Svg, p: &Palette, area: Area, q: &QueensInstance) {
    let (x0, y0, cell) = area.fit_grid(q.n, q.n);
    for r in 0..q.n {
        for c in 0..q.n {
            let fill = if (r + c) % 2 == 0 {
                &p.chess_light
            } else {
                &p.chess_dark
            };
            s.rect(
                x0 + c as f64 * cell,
                y0 + r as f64 * cell,
                cell,
                cell,
                fill,
                None,
            );
        }
    }
    s.rect(
        x0,
        y0,
        cell * q.n as f64,
        cell * q.n as f64,
        "none",
        Some((&p.ink, 2.0)),
    );
    for (r, c) in q.shown() {
        queen(s, x0 + c as f64 * cell, y0 + r as f64 * cell, cell, &p.ink);
    }
}

pub(super) fn number_slide(s: &mut Svg, p: &Palette, area: Area, b: &SlideBoard) {
    let (x0, y0, cell) = area.inset(10.0).fit_grid(b.n, b.n);
    for (i, &t) in b.tiles.iter().enumerate() {
        let (r, c) = (i / b.n, i % b.n);
        let (x, y) = (x0 + c as f64 * cell, y0 + r as f64 * cell);
        if t == 0 {
            s.rect(x, y, cell, cell, "#ffffff", Some(("#cccccc", 1.0)));
        } else {
            let m = cell * 0.04;
            s.rect(
                x + m,
                y + m,
                cell - 2.0 * m,
                cell - 2.0 * m,
                &p.slide_tile,
                Some((&p.ink, 1.5)),
            );
            s.text(
                x + cell / 2.0,
                y + cell / 2.0,
                cell * 0.4,
                Anchor::Middle,
                &p.ink,
                &t.to_string(),
            );
        }
    }
    let side = cell * b.n as f64;
    s.rect(
        x0 - 4.0,
        y0 - 4.0,
        side + 8.0,
        side + 8.0,
        "none",
        Some((&p.slide_boundary, 6.0)),
    );
}

fn fruit_colour(name: &str) -> &'static str {
    match name {
        "kiwi" => "#8cc43c",
        "orange" => "#f28c1c",
        "apple" => "#d9302c",
        "plum" => "#7d3c98",
        "lemon" => "#f4e04d",
        _ => "#8cc43c",
    }
}

pub(super) fn fruit(s: &mut Svg, p: &Palette, area: Area, g: &RottingGrid) {
    let (board, legend) = area.split_top(area.h - LABEL);
    let (rows, cols) = (g.grid.rows(), g.grid.cols());
    let (x0, y0, cell) = board.fit_grid(rows, cols);
    let fresh = fruit_colour(&g.fruit);
    for r in 0..rows {
        for c in 0..cols {
            let (x, y) = (x0 + c as f64 * cell, y0 + r as f64 * cell);
            s.rect(x, y, cell, cell, "#fafafa", Some(("#999999", 1.0)));
            let fill = match g.grid.get((r, c)) {
                FruitCell::Empty => continue,
                FruitCell::Fresh => fresh,
                FruitCell::Rotten => p.rotten.as_str(),
            };
            s.circle(
                x + cell / 2.0,
                y + cell / 2.0,
                cell * 0.35,
                fill,
                Some((&p.ink, 1.0)),
            );
        }
    }
    let (lx, ly) = (legend.x + legend.w * 0.25, legend.y + LABEL / 2.0);
    s.circle(lx, ly, 8.0, fresh, Some((&p.ink, 1.0)));
    s.text(
        lx + 14.0,
        ly,
        14.0,
        Anchor::Start,
        &p.ink,
        &format!("fresh {}", g.fruit),
    );
    let rx = legend.x + legend.w * 0.6;
    s.circle(rx, ly, 8.0, &p.rotten, Some((&p.ink, 1.0)));
    s.text(
        rx + 14.0,
        ly,
        14.0,
        Anchor::Start,
        &p.ink,
        &format!("rotten {}", g.fruit),
    );
}

fn wood_board(s: &mut Svg, p: &Palette, area: Area, b: &KlotskiBoard) {
    let (x0, y0, cell) = area.fit_grid(WOOD_ROWS, WOOD_COLS);
    s.rect(
        x0,
        y0,
        cell * WOOD_COLS as f64,
        cell * WOOD_ROWS as f64,
        "#ffffff",
        Some((&p.ink, 3.0)),
    );
    for block in &b.blocks {
        let (h, w) = block.shape.size();
        let shade = match block.shape {
            BlockShape::Big => &p.wood[0],
            BlockShape::Vertical => &p.wood[1],
            BlockShape::Horizontal => &p.wood[2],
            BlockShape::Small => &p.wood[3],
        };
        let m = cell * 0.05;
        s.rect(
            x0 + block.col as f64 * cell + m,
            y0 + block.row as f64 * cell + m,
            w as f64 * cell - 2.0 * m,
            h as f64 * cell - 2.0 * m,
            shade,
            Some((&p.ink, 1.0)),
        );
    }
}

pub(super) fn wood_slide(s: &mut Svg, p: &Palette, area: Area, ws: &WoodSlideInstance) {
    for (half, (title, board)) in area
        .columns(2)
        .iter()
        .zip([("Start", &ws.start), ("End", &ws.end)])
    {
        let (head, body) = half.split_top(LABEL);
        let (cx, cy) = head.centre();
        s.text(cx, cy, 18.0, Anchor::Middle, &p.ink, title);
        wood_board(s, p, body.inset(12.0), board);
    }
}
