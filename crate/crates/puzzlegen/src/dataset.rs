//! Compiling a dataset directory: `data.jsonl`, `images/` and `manifest.json`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use puzzlegen_core::authoring::{build_mcq, MCQ_STREAM};
use puzzlegen_core::instance::{MAZE_SIZES, QUEEN_SIZES};
use puzzlegen_core::mechanics::ARROW_ANGLE;
use puzzlegen_core::rng::{GAMMA, MIX_MUL_1, MIX_MUL_2, SEED_DOMAIN};
use puzzlegen_core::statemachines::{Face, SCRAMBLE_TURNS};
use puzzlegen_core::{GenContext, OntologyTags, PuzzleInstance, PuzzleKind};

use crate::error::{PipelineError, Result};
use crate::render::{render_svg, RenderSpec};

pub const DATA_FILE: &str = "data.jsonl";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const IMAGE_DIR: &str = "images";
pub const GENERATOR_VERSION: &str = concat!("puzzlegen ", env!("CARGO_PKG_VERSION"));

/// Key order of every line in `data.jsonl`.
pub const RECORD_KEYS: [&str; 9] = [
    "id",
    "puzzle",
    "image",
    "question",
    "options",
    "answer",
    "gold_value",
    "ontology",
    "seed",
];

/// One line of `data.jsonl`. Field order here is the key order on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetRecord {
    pub id: String,
    pub puzzle: PuzzleKind,
    pub image: String,
    pub question: String,
    pub options: BTreeMap<String, String>,
    pub answer: String,
    pub gold_value: String,
    pub ontology: OntologyTags,
    pub seed: String,
}

impl DatasetRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialise")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub generator_version: String,
    pub master_seed: u64,
    pub counts: BTreeMap<PuzzleKind, u32>,
    pub record_count: usize,
    pub image_format: String,
    pub record_keys: Vec<String>,
    pub conventions: Value,
    /// Hex SHA-256 of the `data.jsonl` bytes.
    pub content_hash: String,
}

/// A record together with its picture.
#[derive(Debug, Clone)]
pub struct Compiled {
    pub instance: PuzzleInstance,
    pub record: DatasetRecord,
    pub svg: String,
}

pub fn image_path(id: &str) -> String {
    format!("{IMAGE_DIR}/{id}.svg")
}

pub fn seed_hex(seed: u64) -> String {
    format!("{seed:016x}")
}

/// Generates, solves, renders and letters one instance.
pub fn compile_one(
    master: u64,
    kind: PuzzleKind,
    index: u32,
    ctx: &GenContext,
    spec: &RenderSpec,
) -> Result<Compiled> {
    let generator = |source| PipelineError::Generator {
        kind,
        index,
        seed: puzzlegen_core::derive_seed(master, kind, index),
        source,
    };
    let instance = PuzzleInstance::generate(master, kind, index, ctx).map_err(generator)?;
    let item = build_mcq(&instance).map_err(generator)?;
    let record = DatasetRecord {
        id: instance.id.clone(),
        puzzle: kind,
        image: image_path(&instance.id),
        question: item.question,
        options: item
            .options
            .iter()
            .map(|(l, t)| (l.to_string(), t.clone()))
            .collect(),
        answer: item.answer_letter.to_string(),
        gold_value: instance.gold.render(),
        ontology: instance.tags.clone(),
        seed: seed_hex(instance.seed.derived),
    };
    let svg = render_svg(&instance, spec);
    Ok(Compiled {
        instance,
        record,
        svg,
    })
}

/// Every `(kind, index)` pair in file order: by kind, then by index.
pub fn jobs(counts: &BTreeMap<PuzzleKind, u32>) -> Vec<(PuzzleKind, u32)> {
    counts
        .iter()
        .flat_map(|(&k, &n)| (0..n).map(move |i| (k, i)))
        .collect()
}

/// Builds all records in parallel; the output keeps file order.
pub fn compile_all(
    master: u64,
    counts: &BTreeMap<PuzzleKind, u32>,
    spec: &RenderSpec,
) -> Result<Vec<Compiled>> {
    let ctx = GenContext::new()?;
    jobs(counts)
        .into_par_iter()
        .map(|(kind, index)| compile_one(master, kind, index, &ctx, spec))
        .collect()
}

pub fn jsonl(records: &[DatasetRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_line());
        out.push('\n');
    }
    out
}

pub fn content_hash(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn write(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|source| PipelineError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn manifest_for(master: u64, counts: &BTreeMap<PuzzleKind, u32>, data: &str) -> Manifest {
    Manifest {
        generator_version: GENERATOR_VERSION.to_string(),
        master_seed: master,
        counts: counts.clone(),
        record_count: counts.values().map(|&n| n as usize).sum(),
        image_format: "svg".to_string(),
        record_keys: RECORD_KEYS.iter().map(|k| k.to_string()).collect(),
        conventions: conventions(),
        content_hash: content_hash(data.as_bytes()),
    }
}

/// Writes the dataset into `out` and returns its manifest. Image files
/// get PNG copies when `png` is set.
pub fn compile_dataset(
    master: u64,
    counts: &BTreeMap<PuzzleKind, u32>,
    out: &Path,
    spec: &RenderSpec,
    png: bool,
) -> Result<Manifest> {
    if counts.is_empty() || counts.values().any(|&n| n == 0) {
        return Err(PipelineError::Usage(
            "every requested count must be at least 1".into(),
        ));
    }
    let compiled = compile_all(master, counts, spec)?;
    let images = out.join(IMAGE_DIR);
    fs::create_dir_all(&images).map_err(|source| PipelineError::Io {
        path: images.clone(),
        source,
    })?;
    for c in &compiled {
        let path = out.join(&c.record.image);
        write(&path, c.svg.as_bytes())?;
        if png {
            crate::png::rasterize(&path, &path.with_extension("png"))?;
        }
    }
    let records: Vec<DatasetRecord> = compiled.into_iter().map(|c| c.record).collect();
    let data = jsonl(&records);
    write(&out.join(DATA_FILE), data.as_bytes())?;
    let manifest = manifest_for(master, counts, &data);
    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    write(&out.join(MANIFEST_FILE), text.as_bytes())?;
    Ok(manifest)
}

pub fn read_manifest(dir: &Path) -> Result<Manifest> {
    let path = dir.join(MANIFEST_FILE);
    let text = fs::read_to_string(&path).map_err(|source| PipelineError::Io { path, source })?;
    Ok(serde_json::from_str(&text)?)
}

pub fn data_path(dir: &Path) -> PathBuf {
    dir.join(DATA_FILE)
}

/// Counts of `n` for each listed kind, or for all kinds when none are listed.
pub fn uniform_counts(kinds: &[PuzzleKind], n: u32) -> BTreeMap<PuzzleKind, u32> {
    let kinds: &[PuzzleKind] = if kinds.is_empty() {
        &PuzzleKind::ALL
    } else {
        kinds
    };
    kinds.iter().map(|&k| (k, n)).collect()
}

/// Conventions that change answers or pictures if altered.
pub fn conventions() -> Value {
    let cube_layout: BTreeMap<&str, &str> = Face::ALL
        .iter()
        .map(|f| (f.name(), f.home_colour().name()))
        .collect();
    json!({
        "rng": {
            "algorithm": "splitmix64",
            "gamma": format!("{GAMMA:#018x}"),
            "mix_multipliers": [format!("{MIX_MUL_1:#018x}"), format!("{MIX_MUL_2:#018x}")],
            "seed_domain": format!("{SEED_DOMAIN:#018x}"),
            "derivation": "mix64(mix64(master ^ seed_domain) + mix64(tag * gamma)), tag = (kind ordinal + 1) << 32 | index",
            "ranges": "rejection sampling, inclusive bounds",
            "mcq_stream": MCQ_STREAM,
        },
        "cube": {
            "home_colours": cube_layout,
            "net": "U above F, D below F, middle row L F R B, every face seen from outside",
            "turn": "a letter turns that face 90 degrees clockwise as seen looking at the face",
            "scramble_quarter_turns": SCRAMBLE_TURNS,
        },
        "think_a_dot": {
            "disc_order": "top row 0 1 2, middle row 3 4, bottom row 5 6 7",
            "yellow_deflects": "left",
            "blue_deflects": "right",
            "routing_colour": "the colour shown before the disc flips",
            "routes": {"0": ["5", "3"], "1": ["3", "4"], "2": ["4", "7"], "3": ["5", "6"], "4": ["6", "7"]},
        },
        "maze": {
            "sizes": MAZE_SIZES,
            "entry_heading": "right",
            "optimal_path": "fewest cells, ties broken by fewest turns",
            "turns": "counted at cells where the heading changes",
        },
        "calendar": {"weekday_index": "Monday = 0", "grid": "Sunday-first columns"},
        "wheel": {
            "angles": "degrees counterclockwise from 3 o'clock",
            "arrow_angle": ARROW_ANGLE,
            "boundary_margin_degrees": 1,
        },
        "n_queens": {"sizes": QUEEN_SIZES, "distance": "|row difference| + |column difference|"},
        "number_slide": {"open_cell": "counts as 0 in sums, ignored by maximum and minimum"},
        "wood_slide": {"blocks": "one 2x2, four 1x2 (rows x cols), two 2x1, two 1x1", "move": "one block by one cell"},
        "distractors": {
            "ladder": [[6, [1, 6]], [10, [1, 10]], [50, [1, 50]], [100, [1, 100]]],
            "above_100": "[g - 50, g + 50]",
            "clock": "gold shifted by 1 to 59 minutes either way",
            "weekday": "other weekdays",
            "wheel": "other prizes on the same wheel",
            "yes_no": "the complementary answer",
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Jsonl,
    /// One pretty-printed JSON array.
    Json,
}

/// The records of `dir` re-emitted in the chosen format.
pub fn export(dir: &Path, format: ExportFormat) -> Result<String> {
    let (records, problems) = crate::verify::read_records(dir)?;
    if let Some(first) = problems.first() {
        return Err(PipelineError::Usage(format!(
            "cannot export {}: {first}",
            dir.display()
        )));
    }
    Ok(match format {
        ExportFormat::Jsonl => jsonl(&records),
        ExportFormat::Json => {
            let mut text = serde_json::to_string_pretty(&records)?;
            text.push('\n');
            text
        }
    })
}

/// Rebuilds the picture of one record id under `master`.
pub fn render_record(master: u64, id: &str, spec: &RenderSpec) -> Result<String> {
    let (kind, index) = crate::verify::parse_id(id)
        .ok_or_else(|| PipelineError::Usage(format!("`{id}` is not a record id")))?;
    let ctx = GenContext::new()?;
    Ok(compile_one(master, kind, index, &ctx, spec)?.svg)
}
