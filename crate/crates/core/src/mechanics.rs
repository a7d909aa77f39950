//! Wheel of Fortune and Chain Link.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;

/// Angle of the fixed arrow, counterclockwise from 3 o'clock.
pub const ARROW_ANGLE: f64 = 90.0;

/// Fill colours for wheel segments, all distinct.
pub const WHEEL_COLOURS: [&str; 10] = [
    "red", "orange", "gold", "green", "teal", "blue", "purple", "pink", "brown", "grey",
];

const MAX_ATTEMPTS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WheelSegment {
    pub label: String,
    pub colour: String,
    pub span_degrees: f64,
}

/// A wheel with segments laid out counterclockwise from `start_offset`.
///
/// Angles are in degrees, counterclockwise from 3 o'clock.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WheelSpec {
    pub segments: Vec<WheelSegment>,
    pub arrow_angle: f64,
    pub start_offset: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spin {
    Clockwise,
    Counterclockwise,
}

impl Spin {
    pub fn name(self) -> &'static str {
        match self {
            Spin::Clockwise => "clockwise",
            Spin::Counterclockwise => "counterclockwise",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotationQuery {
    pub direction: Spin,
    pub degrees: f64,
}

impl WheelSpec {
    pub fn validate(&self) -> Result<()> {
        if ![6, 8, 10].contains(&self.segments.len()) {
            return Err(Error::invalid("wheel must have 6, 8 or 10 segments"));
        }
        if self
            .segments
            .iter()
            .any(|s| s.span_degrees.is_nan() || s.span_degrees <= 0.0)
        {
            return Err(Error::invalid("segment spans must be positive"));
        }
        let total: f64 = self.segments.iter().map(|s| s.span_degrees).sum();
        if libm::fabs(total - 360.0) > 1e-9 {
            return Err(Error::invalid("segment spans must sum to 360 degrees"));
        }
        for (i, a) in self.segments.iter().enumerate() {
            if self.segments[..i].iter().any(|b| b.label == a.label) {
                return Err(Error::invalid("prize labels must be distinct"));
            }
        }
        Ok(())
    }

    /// Leading edge of segment 0 after the rotation.
    pub fn rotated_offset(&self, q: &RotationQuery) -> f64 {
        let signed = match q.direction {
            Spin::Clockwise => -q.degrees,
            Spin::Counterclockwise => q.degrees,
        };
        wrap_degrees(self.start_offset + signed)
    }

    /// Segment under the arrow when segment 0 starts at `offset`, together
    /// with the arrow's distance to the nearest boundary.
    pub fn segment_at(&self, offset: f64) -> (usize, f64) {
        let rel = wrap_degrees(self.arrow_angle - offset);
        let mut lead = 0.0;
        for (i, s) in self.segments.iter().enumerate() {
            let trail = lead + s.span_degrees;
            if rel < trail || i + 1 == self.segments.len() {
                return (i, libm::fmin(rel - lead, trail - rel));
            }
            lead = trail;
        }
        unreachable!("wheel without segments")
    }
}

fn wrap_degrees(a: f64) -> f64 {
    let r = libm::fmod(a, 360.0);
    if r < 0.0 {
        r + 360.0
    } else {
        r
    }
}

/// Prize under the arrow after the rotation.
pub fn solve_wheel(spec: &WheelSpec, q: &RotationQuery) -> Result<String> {
    spec.validate()?;
    if q.degrees.is_nan() || q.degrees <= 0.0 {
        return Err(Error::invalid("rotation must be positive"));
    }
    let (i, margin) = spec.segment_at(spec.rotated_offset(q));
    if margin < 1e-6 {
        return Err(Error::Degenerate(String::from(
            "arrow lies on a segment boundary",
        )));
    }
    Ok(spec.segments[i].label.clone())
}

/// Integer spans of at least 20 degrees summing to 360.
fn random_spans(rng: &mut Rng, n: usize) -> Vec<u32> {
    if rng.coin() {
        return alloc::vec![360 / n as u32; n];
    }
    let spare = 360 - 20 * n as i64;
    let mut cuts: Vec<i64> = (0..n - 1).map(|_| rng.range(0, spare)).collect();
    cuts.sort_unstable();
    let mut spans = Vec::with_capacity(n);
    let mut prev = 0;
    for c in cuts.into_iter().chain(core::iter::once(spare)) {
        spans.push((20 + c - prev) as u32);
        prev = c;
    }
    spans
}

pub fn gen_wheel(rng: &mut Rng, prizes: &[&str]) -> Result<(WheelSpec, RotationQuery, String)> {
    for _ in 0..MAX_ATTEMPTS {
        let n = *rng.choose(&[6usize, 8, 10]);
        if prizes.len() < n {
            return Err(Error::invalid("not enough prize labels"));
        }
        let labels = rng.sample_indices(prizes.len(), n);
        let colours = rng.sample_indices(WHEEL_COLOURS.len(), n);
        let spans = random_spans(rng, n);
        let spec = WheelSpec {
            segments: (0..n)
                .map(|i| WheelSegment {
                    label: String::from(prizes[labels[i]]),
                    colour: String::from(WHEEL_COLOURS[colours[i]]),
                    span_degrees: spans[i] as f64,
                })
                .collect(),
            arrow_angle: ARROW_ANGLE,
            start_offset: rng.range(0, 359) as f64,
        };
        let degrees = if rng.chance(1, 5) {
            360 * rng.range(1, 5)
        } else {
            rng.range(60, 2000)
        };
        let direction = if rng.coin() {
            Spin::Clockwise
        } else {
            Spin::Counterclockwise
        };
        let q = RotationQuery {
            direction,
            degrees: degrees as f64,
        };
        // The starting picture must be unambiguous too.
        let (_, start_margin) = spec.segment_at(spec.start_offset);
        let (_, end_margin) = spec.segment_at(spec.rotated_offset(&q));
        if start_margin < 1.0 || end_margin < 1.0 {
            continue;
        }
        let gold = solve_wheel(&spec, &q)?;
        return Ok((spec, q, gold));
    }
    Err(Error::gave_up(
        MAX_ATTEMPTS,
        "wheel arrow kept landing on a boundary",
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSpec {
    pub closed_segments: Vec<u32>,
    pub open_singletons: u32,
    pub cut_minutes: u32,
    pub weld_minutes: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainPlan {
    pub minutes: u64,
    pub cuts: u32,
    pub welds: u32,
}

impl ChainSpec {
    pub fn total_pieces(&self) -> u64 {
        self.closed_segments.iter().map(|&l| l as u64).sum::<u64>() + self.open_singletons as u64
    }

    pub fn segment_count(&self) -> usize {
        self.closed_segments.len() + self.open_singletons as usize
    }

    pub fn validate(&self) -> Result<()> {
        if self.closed_segments.contains(&0) {
            return Err(Error::invalid("closed segments need at least one piece"));
        }
        if self.total_pieces() < 3 {
            return Err(Error::invalid("a necklace needs at least three pieces"));
        }
        if self.cut_minutes == 0 || self.weld_minutes == 0 {
            return Err(Error::invalid("cut and weld times must be positive"));
        }
        Ok(())
    }
}

/// Cuts end pieces off the shortest closed segment until there are at
/// least as many open pieces as closed segments, then welds every open
/// piece.
pub fn solve_chain(spec: &ChainSpec) -> Result<ChainPlan> {
    spec.validate()?;
    let mut closed = spec.closed_segments.clone();
    let mut open = spec.open_singletons;
    let mut cuts = 0u32;
    while (open as usize) < closed.len() {
        let mut at = 0;
        for (i, &len) in closed.iter().enumerate() {
            if len < closed[at] {
                at = i;
            }
        }
        if closed[at] == 1 {
            closed.remove(at);
        } else {
            closed[at] -= 1;
        }
        open += 1;
        cuts += 1;
    }
    Ok(ChainPlan {
        minutes: cuts as u64 * spec.cut_minutes as u64 + open as u64 * spec.weld_minutes as u64,
        cuts,
        welds: open,
    })
}

pub fn gen_chain(rng: &mut Rng) -> ChainSpec {
    let segments = rng.range(8, 14) as usize;
    let open = rng.range(0, 3) as usize;
    ChainSpec {
        closed_segments: (0..segments - open)
            .map(|_| rng.range(1, 6) as u32)
            .collect(),
        open_singletons: open as u32,
        cut_minutes: rng.range(3, 6) as u32,
        weld_minutes: rng.range(1, 3) as u32,
    }
}
