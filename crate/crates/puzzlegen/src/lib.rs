//! Pictures, dataset files and checks built on `puzzlegen-core`.
//!
//! [`compile_dataset`] writes `data.jsonl`, `images/` and `manifest.json`;
//! [`verify_dataset`] regenerates everything from the manifest and reports
//! each disagreement.

pub mod dataset;
pub mod error;
pub mod png;
pub mod render;
pub mod stats;
pub mod svg;
pub mod verify;

pub use dataset::{
    compile_all, compile_dataset, export, render_record, DatasetRecord, ExportFormat, Manifest,
};
pub use error::{PipelineError, Result};
pub use render::{render_svg, Palette, RenderSpec};
pub use stats::{stats, DatasetStats};
pub use verify::{verify_dataset, VerifyReport, Violation};
