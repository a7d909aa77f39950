//! A minimal SVG 1.1 writer.
//!
//! Every number goes through [`num`], which prints at most two decimals
//! and trims trailing zeros, so the same drawing always produces the same
//! bytes.

use std::fmt::Write;

/// Formats a coordinate with two decimals, dropping trailing zeros.
pub fn num(v: f64) -> String {
    let v = if v.abs() < 0.005 { 0.0 } else { v };
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

/// Escapes text content and attribute values.
pub fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Start,
    Middle,
    End,
}

impl Anchor {
    fn name(self) -> &'static str {
        match self {
            Anchor::Start => "start",
            Anchor::Middle => "middle",
            Anchor::End => "end",
        }
    }
}

/// Stroke colour and width; `None` draws no outline.
pub type Stroke<'a> = Option<(&'a str, f64)>;

pub struct Svg {
    width: f64,
    height: f64,
    font: String,
    body: String,
}

impl Svg {
    pub fn new(width: f64, height: f64, font: &str, background: &str) -> Self {
        let mut svg = Svg {
            width,
            height,
            font: escape(font),
            body: String::new(),
        };
        svg.rect(0.0, 0.0, width, height, background, None);
        svg
    }

    pub fn rect(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str, stroke: Stroke) {
        let _ = write!(
            self.body,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"{}/>"#,
            num(x),
            num(y),
            num(w),
            num(h),
            escape(fill),
            stroke_attrs(stroke)
        );
        self.body.push('\n');
    }

    pub fn circle(&mut self, cx: f64, cy: f64, r: f64, fill: &str, stroke: Stroke) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{}"{}/>"#,
            num(cx),
            num(cy),
            num(r),
            escape(fill),
            stroke_attrs(stroke)
        );
    }

    /// `radii` is `(rx, ry)`.
    pub fn ellipse(
        &mut self,
        cx: f64,
        cy: f64,
        (rx, ry): (f64, f64),
        fill: &str,
        stroke: Stroke,
        dash: Option<&str>,
    ) {
        let dash = dash.map_or(String::new(), |d| format!(r#" stroke-dasharray="{d}""#));
        let _ = writeln!(
            self.body,
            r#"<ellipse cx="{}" cy="{}" rx="{}" ry="{}" fill="{}"{}{dash}/>"#,
            num(cx),
            num(cy),
            num(rx),
            num(ry),
            escape(fill),
            stroke_attrs(stroke)
        );
    }

    pub fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, colour: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}" stroke-linecap="round"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            escape(colour),
            num(width)
        );
    }

    pub fn polygon(&mut self, points: &[(f64, f64)], fill: &str, stroke: Stroke) {
        let pts: Vec<String> = points
            .iter()
            .map(|&(x, y)| format!("{},{}", num(x), num(y)))
            .collect();
        let _ = writeln!(
            self.body,
            r#"<polygon points="{}" fill="{}"{}/>"#,
            pts.join(" "),
            escape(fill),
            stroke_attrs(stroke)
        );
    }

    pub fn path(&mut self, d: &str, fill: &str, stroke: Stroke) {
        let _ = writeln!(
            self.body,
            r#"<path d="{}" fill="{}"{}/>"#,
            escape(d),
            escape(fill),
            stroke_attrs(stroke)
        );
    }

    pub fn text(&mut self, x: f64, y: f64, size: f64, anchor: Anchor, fill: &str, content: &str) {
        let _ = writeln!(
            self.body,
            r#"<text x="{}" y="{}" font-family="{}" font-size="{}" text-anchor="{}" dominant-baseline="central" fill="{}">{}</text>"#,
            num(x),
            num(y),
            self.font,
            num(size),
            anchor.name(),
            escape(fill),
            escape(content)
        );
    }

    /// Straight arrow from `(x1, y1)` to `(x2, y2)` with a filled head.
    pub fn arrow(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, colour: &str, width: f64) {
        let (dx, dy) = (x2 - x1, y2 - y1);
        let len = dx.hypot(dy).max(1e-9);
        let (ux, uy) = (dx / len, dy / len);
        let head = (width * 3.0).max(6.0);
        let (bx, by) = (x2 - ux * head, y2 - uy * head);
        self.line(x1, y1, bx, by, colour, width);
        self.polygon(
            &[
                (x2, y2),
                (bx - uy * head * 0.6, by + ux * head * 0.6),
                (bx + uy * head * 0.6, by - ux * head * 0.6),
            ],
            colour,
            None,
        );
    }

    pub fn finish(self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n{}</svg>\n",
            self.body,
            w = num(self.width),
            h = num(self.height),
        )
    }
}

fn stroke_attrs(stroke: Stroke) -> String {
    match stroke {
        Some((colour, width)) => format!(
            r#" stroke="{}" stroke-width="{}""#,
            escape(colour),
            num(width)
        ),
        None => String::new(),
    }
}

/// `#rrggbb` for an RGB triple.
pub fn hex_colour(rgb: [u8; 3]) -> String {
    format!("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_are_trimmed() {
        assert_eq!(num(3.0), "3");
        assert_eq!(num(2.5), "2.5");
        assert_eq!(num(1.0 / 3.0), "0.33");
        assert_eq!(num(-0.001), "0");
    }

    #[test]
    fn text_is_escaped() {
        let mut s = Svg::new(10.0, 10.0, "sans", "white");
        s.text(1.0, 1.0, 4.0, Anchor::Start, "black", "a<b & \"c\"");
        let out = s.finish();
        assert!(out.contains("a&lt;b &amp; &quot;c&quot;"));
        assert!(out.ends_with("</svg>\n"));
    }
}
