use std::f64::consts::PI;

use puzzlegen_core::mapcolour::{polygon_centroid, Colour, ColouringInstance};
use puzzlegen_core::mechanics::{ChainSpec, WheelSpec};
use puzzlegen_core::sliding::{HanoiInstance, HanoiState, JugState, RODS};
use puzzlegen_core::statemachines::{CubeColour, CubeState, Face, TadConfig};
use puzzlegen_core::temporal::{CalendarInstance, ClockInstance, MONTH_NAMES};

use super::{Area, Palette};
use crate::svg::{num, Anchor, Svg};

const LABEL: f64 = 28.0;

pub(super) fn calendar(s: &mut Svg, p: &Palette, area: Area, c: &CalendarInstance) {
    let (head, body) = area.split_top(area.h * 0.14);
    let (cx, cy) = head.centre();
    s.text(
        cx,
        cy,
        30.0,
        Anchor::Middle,
        &p.ink,
        MONTH_NAMES[c.shown_month as usize - 1],
    );
    // Sunday-first columns; the instance counts weekdays from Monday.
    let first_col = (c.weekday_of_first as usize + 1) % 7;
    let weeks = (first_col + c.days_in_month as usize).div_ceil(7);
    let (x0, y0, cell) = body.fit_grid(weeks + 1, 7);
    for (i, name) in ["Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"]
        .iter()
        .enumerate()
    {
        let x = x0 + i as f64 * cell;
        s.rect(x, y0, cell, cell, "#e8e8e8", Some((&p.ink, 1.0)));
        s.text(
            x + cell / 2.0,
            y0 + cell / 2.0,
            cell * 0.28,
            Anchor::Middle,
            &p.ink,
            name,
        );
    }
    for slot in 0..weeks * 7 {
        let (r, col) = (slot / 7 + 1, slot % 7);
        let (x, y) = (x0 + col as f64 * cell, y0 + r as f64 * cell);
        s.rect(x, y, cell, cell, "#ffffff", Some((&p.ink, 1.0)));
        let day = slot as i64 - first_col as i64 + 1;
        if (1..=c.days_in_month as i64).contains(&day) {
            s.text(
                x + cell / 2.0,
                y + cell / 2.0,
                cell * 0.35,
                Anchor::Middle,
                &p.ink,
                &day.to_string(),
            );
        }
    }
}

pub(super) fn chain(s: &mut Svg, p: &Palette, area: Area, c: &ChainSpec) {
    let (body, legend) = area.split_top(area.h - LABEL);
    let mut segments: Vec<(u32, bool)> = c.closed_segments.iter().map(|&k| (k, false)).collect();
    segments.extend((0..c.open_singletons).map(|_| (1, true)));
    let longest = segments.iter().map(|s| s.0).max().unwrap_or(1) as f64;
    let rows = segments.len().div_ceil(2).max(1);
    let slots: Vec<Area> = body
        .rows(rows)
        .into_iter()
        .flat_map(|r| r.columns(2))
        .collect();
    for (slot, &(len, open)) in slots.iter().zip(&segments) {
        let inner = slot.inset(6.0);
        let step = (inner.w / (longest + 0.6)).min(inner.h * 1.6);
        let (rx, ry) = (step * 0.6, (step * 0.35).min(inner.h / 2.0));
        let cy = inner.y + inner.h / 2.0;
        for i in 0..len {
            let cx = inner.x + rx + i as f64 * step;
            if open {
                s.ellipse(
                    cx,
                    cy,
                    (rx, ry),
                    "none",
                    Some((&p.chain_open, 3.0)),
                    Some("6 4"),
                );
            } else {
                s.ellipse(cx, cy, (rx, ry), "none", Some((&p.chain_closed, 3.0)), None);
            }
        }
    }
    let ly = legend.y + LABEL / 2.0;
    let lx = legend.x + legend.w * 0.15;
    s.ellipse(
        lx,
        ly,
        (14.0, 8.0),
        "none",
        Some((&p.chain_closed, 3.0)),
        None,
    );
    s.text(lx + 22.0, ly, 14.0, Anchor::Start, &p.ink, "closed piece");
    let ox = legend.x + legend.w * 0.58;
    s.ellipse(
        ox,
        ly,
        (14.0, 8.0),
        "none",
        Some((&p.chain_open, 3.0)),
        Some("6 4"),
    );
    s.text(ox + 22.0, ly, 14.0, Anchor::Start, &p.ink, "open piece");
}

/// Point at `deg` degrees clockwise from 12 o'clock.
fn dial(cx: f64, cy: f64, r: f64, deg: f64) -> (f64, f64) {
    let a = deg.to_radians();
    (cx + r * a.sin(), cy - r * a.cos())
}

pub(super) fn clock(s: &mut Svg, p: &Palette, area: Area, c: &ClockInstance) {
    let (cx, cy) = area.centre();
    let r = area.w.min(area.h) / 2.0 * 0.95;
    s.circle(cx, cy, r, "#ffffff", Some((&p.ink, r * 0.03)));
    for m in 0..60 {
        let deg = m as f64 * 6.0;
        let inner = if m % 5 == 0 { r * 0.86 } else { r * 0.92 };
        let (x1, y1) = dial(cx, cy, inner, deg);
        let (x2, y2) = dial(cx, cy, r * 0.97, deg);
        s.line(
            x1,
            y1,
            x2,
            y2,
            &p.ink,
            if m % 5 == 0 { r * 0.02 } else { r * 0.008 },
        );
    }
    for h in 1..=12 {
        let (x, y) = dial(cx, cy, r * 0.74, h as f64 * 30.0);
        s.text(x, y, r * 0.14, Anchor::Middle, &p.ink, &h.to_string());
    }
    let total = c.current.minutes_past_twelve() as f64;
    let (hx, hy) = dial(cx, cy, r * 0.5, total / 2.0);
    s.line(cx, cy, hx, hy, &p.ink, r * 0.045);
    let (mx, my) = dial(cx, cy, r * 0.8, (total % 60.0) * 6.0);
    s.line(cx, cy, mx, my, &p.ink, r * 0.025);
    s.circle(cx, cy, r * 0.03, &p.ink, None);
}

fn map_fill(c: Colour) -> &'static str {
    match c {
        Colour::Red => "#e53935",
        Colour::Green => "#43a047",
        Colour::Blue => "#1e88e5",
        Colour::Yellow => "#fdd835",
    }
}

pub(super) fn map(s: &mut Svg, p: &Palette, area: Area, m: &ColouringInstance) {
    let (x0, y0, side) = area.fit_grid(1, 1);
    let at = |(x, y): (f64, f64)| (x0 + x * side, y0 + y * side);
    for (i, poly) in m.map.polygons.iter().enumerate() {
        let fill = m.fixed[i].map_or("#ffffff", map_fill);
        let pts: Vec<(f64, f64)> = poly.iter().map(|&q| at(q)).collect();
        s.polygon(&pts, fill, Some((&p.ink, 2.0)));
    }
    for (i, poly) in m.map.polygons.iter().enumerate() {
        let (x, y) = at(polygon_centroid(poly));
        s.circle(x, y, side * 0.028, "#ffffff", Some((&p.ink, 1.0)));
        s.text(
            x,
            y,
            side * 0.03,
            Anchor::Middle,
            &p.ink,
            &(i + 1).to_string(),
        );
    }
}

fn cube_fill(c: CubeColour) -> &'static str {
    match c {
        CubeColour::Red => "#d32f2f",
        CubeColour::Green => "#388e3c",
        CubeColour::Blue => "#1976d2",
        CubeColour::Yellow => "#fbc02d",
        CubeColour::Orange => "#f57c00",
        CubeColour::Grey => "#9e9e9e",
    }
}

pub(super) fn cube(s: &mut Svg, p: &Palette, area: Area, state: &CubeState) {
    let (x0, y0, cell) = area.fit_grid(9, 12);
    let spots = [
        (Face::U, 0, 1),
        (Face::L, 1, 0),
        (Face::F, 1, 1),
        (Face::R, 1, 2),
        (Face::B, 1, 3),
        (Face::D, 2, 1),
    ];
    for (face, br, bc) in spots {
        let (fx, fy) = (x0 + (bc * 3) as f64 * cell, y0 + (br * 3) as f64 * cell);
        for (k, &c) in state.face(face).iter().enumerate() {
            let (r, col) = (k / 3, k % 3);
            s.rect(
                fx + col as f64 * cell,
                fy + r as f64 * cell,
                cell,
                cell,
                cube_fill(c),
                Some((&p.ink, 2.0)),
            );
        }
        let letter = face.letter().to_string();
        s.text(
            fx + 1.5 * cell,
            fy + 1.5 * cell,
            cell * 0.4,
            Anchor::Middle,
            &p.ink,
            &letter,
        );
    }
}

pub(super) fn think_a_dot(s: &mut Svg, p: &Palette, area: Area, cfg: &TadConfig) {
    let (x0, y0, side) = area.fit_grid(1, 1);
    let at = |x: f64, y: f64| (x0 + x * side, y0 + y * side);
    let (bx, by) = at(0.05, 0.12);
    s.rect(
        bx,
        by,
        side * 0.9,
        side * 0.8,
        "#f4f1ea",
        Some((&p.ink, 3.0)),
    );
    for (x, name) in [(0.2, "Left"), (0.5, "Center"), (0.8, "Right")] {
        let (hx, hy) = at(x, 0.12);
        s.rect(
            hx - side * 0.03,
            hy - side * 0.015,
            side * 0.06,
            side * 0.03,
            &p.ink,
            None,
        );
        s.text(
            hx,
            hy - side * 0.05,
            side * 0.035,
            Anchor::Middle,
            &p.ink,
            name,
        );
    }
    // Wall stubs between discs.
    for (x, y1, y2) in [
        (0.35, 0.2, 0.33),
        (0.65, 0.2, 0.33),
        (0.5, 0.45, 0.58),
        (0.35, 0.7, 0.83),
        (0.65, 0.7, 0.83),
    ] {
        let (ax, ay) = at(x, y1);
        let (_, cy) = at(x, y2);
        s.line(ax, ay, ax, cy, "#7a7a7a", side * 0.008);
    }
    let spots = [
        (0.2, 0.27),
        (0.5, 0.27),
        (0.8, 0.27),
        (0.35, 0.5),
        (0.65, 0.5),
        (0.2, 0.73),
        (0.5, 0.73),
        (0.8, 0.73),
    ];
    for (i, &(x, y)) in spots.iter().enumerate() {
        let (cx, cy) = at(x, y);
        let fill = if cfg.discs[i] {
            &p.tad_blue
        } else {
            &p.tad_yellow
        };
        s.circle(cx, cy, side * 0.08, fill, Some((&p.ink, 2.0)));
    }
    for (x, anchor) in [(0.05, Anchor::Start), (0.95, Anchor::End)] {
        let (ex, ey) = at(x, 0.92);
        let off = if anchor == Anchor::Start {
            side * 0.03
        } else {
            -side * 0.03
        };
        s.rect(
            ex - side * 0.02,
            ey - side * 0.02,
            side * 0.04,
            side * 0.04,
            &p.ink,
            None,
        );
        s.text(
            ex + off,
            ey - side * 0.05,
            side * 0.03,
            anchor,
            &p.ink,
            "exit",
        );
    }
}

fn hanoi_panel(s: &mut Svg, p: &Palette, area: Area, state: &HanoiState) {
    let base_y = area.y + area.h * 0.92;
    let spacing = area.w / RODS as f64;
    let disk_h = ((area.h * 0.7) / state.n as f64).min(area.h * 0.12);
    s.rect(area.x, base_y, area.w, area.h * 0.04, &p.rod, None);
    for rod in 0..RODS {
        let cx = area.x + spacing * (rod as f64 + 0.5);
        let top = base_y - disk_h * (state.n as f64 + 1.0);
        s.rect(
            cx - spacing * 0.015,
            top,
            spacing * 0.03,
            base_y - top,
            &p.rod,
            None,
        );
        for (level, &disk) in state.stack(rod).iter().enumerate() {
            let w = spacing * 0.9 * (disk as f64 + 1.0) / state.n as f64;
            let y = base_y - disk_h * (level as f64 + 1.0);
            s.rect(
                cx - w / 2.0,
                y,
                w,
                disk_h * 0.92,
                &p.disk,
                Some((&p.ink, 1.0)),
            );
        }
    }
}

pub(super) fn hanoi(s: &mut Svg, p: &Palette, area: Area, h: &HanoiInstance) {
    for (half, (title, state)) in area
        .rows(2)
        .iter()
        .zip([("Start", &h.start), ("End", &h.end)])
    {
        let (head, body) = half.split_top(LABEL);
        s.text(
            head.x,
            head.y + LABEL / 2.0,
            18.0,
            Anchor::Start,
            &p.ink,
            title,
        );
        hanoi_panel(s, p, body.inset(6.0), state);
    }
}

pub(super) fn jugs(s: &mut Svg, p: &Palette, area: Area, j: &JugState) {
    let biggest = j.capacities.iter().copied().max().unwrap_or(1).max(1) as f64;
    let (body, _) = area.split_top(area.h - LABEL * 2.0);
    let full_h = body.h * 0.9;
    for (col, (&cap, &amount)) in area
        .columns(j.capacities.len())
        .iter()
        .zip(j.capacities.iter().zip(&j.amounts))
    {
        let w = (col.w * 0.5).min(body.h * 0.35);
        let h = full_h * cap as f64 / biggest;
        let x = col.x + (col.w - w) / 2.0;
        let bottom = body.y + body.h;
        let water = h * amount as f64 / cap.max(1) as f64;
        s.rect(x, bottom - water, w, water, &p.water, None);
        s.path(
            &format!(
                "M{} {} L{} {} L{} {} L{} {}",
                num(x),
                num(bottom - h),
                num(x),
                num(bottom),
                num(x + w),
                num(bottom),
                num(x + w),
                num(bottom - h)
            ),
            "none",
            Some((&p.ink, 3.0)),
        );
        for litre in 1..cap {
            let y = bottom - h * litre as f64 / cap as f64;
            s.line(x, y, x + w * 0.2, y, &p.ink, 1.0);
        }
        let cx = x + w / 2.0;
        s.text(
            cx,
            bottom + LABEL * 0.6,
            16.0,
            Anchor::Middle,
            &p.ink,
            &format!("{amount} L"),
        );
        s.text(
            cx,
            bottom + LABEL * 1.5,
            14.0,
            Anchor::Middle,
            "#555555",
            &format!("capacity {cap} L"),
        );
    }
}

/// Point at `deg` degrees counterclockwise from 3 o'clock.
fn polar(cx: f64, cy: f64, r: f64, deg: f64) -> (f64, f64) {
    let a = deg * PI / 180.0;
    (cx + r * a.cos(), cy - r * a.sin())
}

pub(super) fn wheel(s: &mut Svg, p: &Palette, area: Area, w: &WheelSpec) {
    let (cx, cy) = area.centre();
    let r = area.w.min(area.h) / 2.0 * 0.82;
    let mut lead = w.start_offset;
    for seg in &w.segments {
        let trail = lead + seg.span_degrees;
        let (ax, ay) = polar(cx, cy, r, lead);
        let (bx, by) = polar(cx, cy, r, trail);
        let large = if seg.span_degrees > 180.0 { 1 } else { 0 };
        let d = format!(
            "M{} {} L{} {} A{} {} 0 {large} 0 {} {} Z",
            num(cx),
            num(cy),
            num(ax),
            num(ay),
            num(r),
            num(r),
            num(bx),
            num(by)
        );
        s.path(&d, &seg.colour, Some(("#ffffff", 2.0)));
        let (tx, ty) = polar(cx, cy, r * 0.62, lead + seg.span_degrees / 2.0);
        s.text(
            tx,
            ty,
            (r * 0.075).min(18.0),
            Anchor::Middle,
            &p.ink,
            &seg.label,
        );
        lead = trail;
    }
    s.circle(cx, cy, r * 0.04, &p.ink, None);
    let (tip_x, tip_y) = polar(cx, cy, r * 0.97, w.arrow_angle);
    let (tail_x, tail_y) = polar(cx, cy, r * 1.18, w.arrow_angle);
    s.arrow(tail_x, tail_y, tip_x, tip_y, &p.wheel_arrow, r * 0.04);
}
