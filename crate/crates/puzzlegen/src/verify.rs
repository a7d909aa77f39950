//! Checking a compiled dataset against a fresh regeneration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::Value;

use puzzlegen_core::{ontology_for, GenContext, PuzzleKind};

use crate::dataset::{
    compile_one, content_hash, jobs, jsonl, read_manifest, seed_hex, DatasetRecord, DATA_FILE,
    MANIFEST_FILE, RECORD_KEYS,
};
use crate::error::{PipelineError, Result};
use crate::render::RenderSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingFile {
        path: PathBuf,
    },
    Malformed {
        line: usize,
        reason: String,
    },
    /// The manifest hash does not match the records its own seed and
    /// counts regenerate.
    HashMismatch {
        manifest: String,
        regenerated: String,
    },
    CountMismatch {
        kind: PuzzleKind,
        expected: u32,
        found: u32,
    },
    RecordInvalid {
        id: String,
        reason: String,
    },
    GoldMismatch {
        id: String,
        stored: String,
        solved: String,
    },
    RecordMismatch {
        id: String,
        field: String,
    },
    MissingImage {
        id: String,
    },
    ImageMismatch {
        id: String,
    },
    Regeneration {
        id: String,
        reason: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingFile { path } => write!(f, "missing file {}", path.display()),
            Violation::Malformed { line, reason } => {
                write!(f, "line {line}: malformed record: {reason}")
            }
            Violation::HashMismatch {
                manifest,
                regenerated,
            } => {
                write!(
                    f,
                    "content hash mismatch: manifest {manifest}, regenerated {regenerated}"
                )
            }
            Violation::CountMismatch {
                kind,
                expected,
                found,
            } => {
                write!(
                    f,
                    "{kind}: manifest lists {expected} records, found {found}"
                )
            }
            Violation::RecordInvalid { id, reason } => write!(f, "{id}: {reason}"),
            Violation::GoldMismatch { id, stored, solved } => {
                write!(
                    f,
                    "{id}: stored gold {stored} but the solver gives {solved}"
                )
            }
            Violation::RecordMismatch { id, field } => {
                write!(f, "{id}: field `{field}` differs from regeneration")
            }
            Violation::MissingImage { id } => write!(f, "{id}: image file missing"),
            Violation::ImageMismatch { id } => write!(f, "{id}: image differs from regeneration"),
            Violation::Regeneration { id, reason } => {
                write!(f, "{id}: could not regenerate: {reason}")
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub records_checked: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Splits `<kind>_<index>` ids.
pub fn parse_id(id: &str) -> Option<(PuzzleKind, u32)> {
    let (kind, index) = id.rsplit_once('_')?;
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((kind.parse().ok()?, index.parse().ok()?))
}

/// Checks that need nothing but the record itself.
fn record_invariants(r: &DatasetRecord, dir: &Path) -> Option<Violation> {
    let invalid = |reason: String| {
        Some(Violation::RecordInvalid {
            id: r.id.clone(),
            reason,
        })
    };
    match parse_id(&r.id) {
        Some((kind, _)) if kind == r.puzzle => {}
        _ => return invalid(format!("id does not name a {} instance", r.puzzle)),
    }
    let Some(chosen) = r.options.get(&r.answer) else {
        return invalid(format!(
            "answer letter {} is not among the options",
            r.answer
        ));
    };
    if *chosen != r.gold_value {
        return invalid(format!(
            "option {} reads {chosen}, gold is {}",
            r.answer, r.gold_value
        ));
    }
    let letters: Vec<&str> = r.options.keys().map(String::as_str).collect();
    let expected: &[&str] = if r.puzzle == PuzzleKind::BoardTiling {
        &["A", "B"]
    } else {
        &["A", "B", "C", "D"]
    };
    if letters != expected {
        return invalid(format!("option letters {letters:?}"));
    }
    if r.options.values().collect::<BTreeSet<_>>().len() != r.options.len() {
        return invalid("options repeat".to_string());
    }
    if r.ontology != ontology_for(r.puzzle) {
        return invalid("ontology tags differ from the family table".to_string());
    }
    if !dir.join(&r.image).is_file() {
        return Some(Violation::MissingImage { id: r.id.clone() });
    }
    None
}

fn first_difference(a: &DatasetRecord, b: &DatasetRecord) -> String {
    let (va, vb) = (serde_json::to_value(a).ok(), serde_json::to_value(b).ok());
    if let (Some(Value::Object(ma)), Some(Value::Object(mb))) = (va, vb) {
        for key in RECORD_KEYS {
            if ma.get(key) != mb.get(key) {
                return key.to_string();
            }
        }
    }
    "record".to_string()
}

/// Parses `data.jsonl`, enforcing the fixed key order on every line.
pub fn read_records(dir: &Path) -> Result<(Vec<DatasetRecord>, Vec<Violation>)> {
    let path = dir.join(DATA_FILE);
    let text = fs::read_to_string(&path).map_err(|source| PipelineError::Io { path, source })?;
    let mut records = Vec::new();
    let mut problems = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match serde_json::from_str::<DatasetRecord>(line) {
            Ok(r) if r.to_line() == line => records.push(r),
            Ok(_) => problems.push(Violation::Malformed {
                line: i + 1,
                reason: "keys or formatting differ from the canonical layout".to_string(),
            }),
            Err(e) => problems.push(Violation::Malformed {
                line: i + 1,
                reason: e.to_string(),
            }),
        }
    }
    if !text.is_empty() && !text.ends_with('\n') {
        problems.push(Violation::Malformed {
            line: text.lines().count(),
            reason: "missing trailing newline".to_string(),
        });
    }
    Ok((records, problems))
}

/// Re-derives every instance from the manifest's master seed and counts,
/// re-solves it and compares the result with what is on disk.
pub fn verify_dataset(dir: &Path, spec: &RenderSpec) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for name in [MANIFEST_FILE, DATA_FILE] {
        let path = dir.join(name);
        if !path.is_file() {
            report.violations.push(Violation::MissingFile { path });
        }
    }
    if !report.is_clean() {
        return Ok(report);
    }
    let manifest = read_manifest(dir)?;
    let (records, malformed) = read_records(dir)?;
    report.violations.extend(malformed);
    report.records_checked = records.len();

    let ctx = GenContext::new()?;
    let master = manifest.master_seed;
    let regenerated: Vec<_> = jobs(&manifest.counts)
        .into_par_iter()
        .map(|(kind, index)| ((kind, index), compile_one(master, kind, index, &ctx, spec)))
        .collect();
    let fresh_records: Vec<DatasetRecord> = regenerated
        .iter()
        .filter_map(|(_, c)| c.as_ref().ok().map(|c| c.record.clone()))
        .collect();
    let fresh_hash = content_hash(jsonl(&fresh_records).as_bytes());
    if fresh_records.len() == regenerated.len() && fresh_hash != manifest.content_hash {
        report.violations.push(Violation::HashMismatch {
            manifest: manifest.content_hash.clone(),
            regenerated: fresh_hash,
        });
    }
    let fresh: BTreeMap<(PuzzleKind, u32), _> = regenerated.into_iter().collect();

    let mut found: BTreeMap<PuzzleKind, u32> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    let checks: Vec<Option<Violation>> = records
        .par_iter()
        .map(|r| {
            if let Some(v) = record_invariants(r, dir) {
                return Some(v);
            }
            let key = parse_id(&r.id).expect("id checked above");
            let Some(regen) = fresh.get(&key) else {
                return Some(Violation::RecordInvalid {
                    id: r.id.clone(),
                    reason: "not listed in the manifest counts".to_string(),
                });
            };
            let c = match regen {
                Ok(c) => c,
                Err(e) => {
                    return Some(Violation::Regeneration {
                        id: r.id.clone(),
                        reason: e.to_string(),
                    })
                }
            };
            if r.seed != seed_hex(c.instance.seed.derived) {
                return Some(Violation::RecordMismatch {
                    id: r.id.clone(),
                    field: "seed".to_string(),
                });
            }
            if r.gold_value != c.record.gold_value {
                return Some(Violation::GoldMismatch {
                    id: r.id.clone(),
                    stored: r.gold_value.clone(),
                    solved: c.record.gold_value.clone(),
                });
            }
            if *r != c.record {
                return Some(Violation::RecordMismatch {
                    id: r.id.clone(),
                    field: first_difference(r, &c.record),
                });
            }
            match fs::read_to_string(dir.join(&r.image)) {
                Ok(svg) if svg == c.svg => None,
                _ => Some(Violation::ImageMismatch { id: r.id.clone() }),
            }
        })
        .collect();
    report.violations.extend(checks.into_iter().flatten());

    for r in &records {
        if let Some(key) = parse_id(&r.id) {
            if seen.insert(key) {
                *found.entry(key.0).or_default() += 1;
            } else {
                report.violations.push(Violation::RecordInvalid {
                    id: r.id.clone(),
                    reason: "duplicate id".to_string(),
                });
            }
        }
    }
    for (&kind, &expected) in &manifest.counts {
        let got = found.get(&kind).copied().unwrap_or(0);
        if got != expected {
            report.violations.push(Violation::CountMismatch {
                kind,
                expected,
                found: got,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse() {
        assert_eq!(parse_id("maze_solve_0012"), Some((PuzzleKind::Maze, 12)));
        assert_eq!(parse_id("n_queens_0000"), Some((PuzzleKind::NQueens, 0)));
        assert_eq!(parse_id("n_queens_"), None);
        assert_eq!(parse_id("unknown_0001"), None);
    }
}
