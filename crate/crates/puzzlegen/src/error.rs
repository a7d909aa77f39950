use std::path::PathBuf;

use puzzlegen_core::PuzzleKind;

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("generator failed for {kind} #{index} (seed {seed:016x}): {source}")]
    Generator {
        kind: PuzzleKind,
        index: u32,
        seed: u64,
        source: puzzlegen_core::Error,
    },
    #[error(transparent)]
    Core(#[from] puzzlegen_core::Error),
    #[error("rasterizer failed: {0}")]
    Rasterizer(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = PipelineError> = std::result::Result<T, E>;
