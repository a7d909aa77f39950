//! Summary tables over a compiled dataset.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use puzzlegen_core::{GenContext, Payload, PuzzleInstance, PuzzleKind};

use crate::dataset::{read_manifest, DatasetRecord};
use crate::error::Result;
use crate::verify::{parse_id, read_records};

#[derive(Debug, Clone, Default, Serialize)]
pub struct KindStats {
    pub count: u32,
    pub golds: BTreeMap<String, u32>,
    pub letters: BTreeMap<String, u32>,
    pub parameters: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct DatasetStats {
    pub records: u32,
    pub kinds: BTreeMap<PuzzleKind, KindStats>,
    pub letters: BTreeMap<String, u32>,
    /// Letters over records whose gold is an integer.
    pub numeric_letters: BTreeMap<String, u32>,
}

impl DatasetStats {
    /// Share of each letter among records with integer golds.
    pub fn numeric_letter_shares(&self) -> BTreeMap<String, f64> {
        let total: u32 = self.numeric_letters.values().sum();
        self.numeric_letters
            .iter()
            .map(|(l, &n)| (l.clone(), n as f64 / total.max(1) as f64))
            .collect()
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<18} {:>6} {:>7}  {:<28} parameters",
            "puzzle", "count", "golds", "letters A/B/C/D"
        );
        for (kind, k) in &self.kinds {
            let letters: Vec<String> = ["A", "B", "C", "D"]
                .iter()
                .map(|l| k.letters.get(*l).copied().unwrap_or(0).to_string())
                .collect();
            let params: Vec<String> = k
                .parameters
                .iter()
                .map(|(p, n)| format!("{p}: {n}"))
                .collect();
            let _ = writeln!(
                out,
                "{:<18} {:>6} {:>7}  {:<28} {}",
                kind.name(),
                k.count,
                k.golds.len(),
                letters.join("/"),
                params.join("; ")
            );
        }
        let _ = writeln!(out, "records: {}", self.records);
        for (name, dist) in [
            ("all", &self.letters),
            ("integer golds", &self.numeric_letters),
        ] {
            let total: u32 = dist.values().sum();
            let shares: Vec<String> = dist
                .iter()
                .map(|(l, &n)| format!("{l} {:.1}%", 100.0 * n as f64 / total.max(1) as f64))
                .collect();
            let _ = writeln!(
                out,
                "answer letters ({name}, n = {total}): {}",
                shares.join(", ")
            );
        }
        out
    }
}

fn serde_name<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        _ => "other".to_string(),
    }
}

/// A short label for the size or shape parameters of an instance.
pub fn parameter_label(payload: &Payload) -> String {
    match payload {
        Payload::BoardTiling(t) => format!("{}x{} minus {}", t.rows, t.cols, t.removed.len()),
        Payload::Calendar(c) => if c.shown_year_leap {
            "leap year"
        } else {
            "common year"
        }
        .to_string(),
        Payload::ChainLink(c) => format!(
            "{} pieces",
            c.closed_segments.len() as u32 + c.open_singletons
        ),
        Payload::CheckerMove { start, .. } => format!("{} cells", start.cells.len()),
        Payload::Clock(c) => if c.delta_minutes < 0 {
            "past"
        } else {
            "future"
        }
        .to_string(),
        Payload::ColourHue(b) => format!("{}x{}", b.rows, b.cols),
        Payload::MapColour(m) => format!("{} regions", m.map.polygons.len()),
        Payload::Maze { maze, question } => format!(
            "{}x{} {}",
            maze.grid.rows(),
            maze.grid.cols(),
            serde_name(question)
        ),
        Payload::MoveBox(w) => format!("{}x{}", w.grid.rows(), w.grid.cols()),
        Payload::NQueens(q) => format!("n = {}", q.n),
        Payload::NumberSlide(s) => format!("{}x{}", s.board.n, s.board.n),
        Payload::RottingFruit(g) => format!("{}x{}", g.grid.rows(), g.grid.cols()),
        Payload::RubiksCube(c) => format!("{} turns", c.moves.0.len()),
        Payload::ThinkADot(t) => format!("{} balls", t.drops.len()),
        Payload::TowerOfHanoi(h) => format!("{} disks", h.start.n),
        Payload::WaterJugs(j) => format!("{} jugs", j.start.capacities.len()),
        Payload::WheelOfFortune { wheel, .. } => format!("{} segments", wheel.segments.len()),
        Payload::WoodSlide(_) => "5x4".to_string(),
    }
}

/// Tallies `records`; parameters come from regenerating each instance
/// from `master`.
pub fn summarize(master: u64, records: &[DatasetRecord]) -> Result<DatasetStats> {
    let ctx = GenContext::new()?;
    let labels: Vec<Option<String>> = records
        .par_iter()
        .map(|r| {
            let (kind, index) = parse_id(&r.id)?;
            let inst = PuzzleInstance::generate(master, kind, index, &ctx).ok()?;
            Some(parameter_label(&inst.payload))
        })
        .collect();
    let mut stats = DatasetStats::default();
    for (r, label) in records.iter().zip(labels) {
        stats.records += 1;
        let k = stats.kinds.entry(r.puzzle).or_default();
        k.count += 1;
        *k.golds.entry(r.gold_value.clone()).or_default() += 1;
        *k.letters.entry(r.answer.clone()).or_default() += 1;
        *k.parameters
            .entry(label.unwrap_or_else(|| "unknown".to_string()))
            .or_default() += 1;
        *stats.letters.entry(r.answer.clone()).or_default() += 1;
        if r.gold_value.parse::<i64>().is_ok() {
            *stats.numeric_letters.entry(r.answer.clone()).or_default() += 1;
        }
    }
    Ok(stats)
}

pub fn stats(dir: &Path) -> Result<DatasetStats> {
    let manifest = read_manifest(dir)?;
    let (records, _) = read_records(dir)?;
    summarize(manifest.master_seed, &records)
}
