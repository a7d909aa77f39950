//! PNG copies of SVG pictures through an external `rsvg-convert`.

use std::path::Path;
use std::process::Command;

use crate::error::{PipelineError, Result};

pub const RASTERIZER: &str = "rsvg-convert";

pub fn rasterize(svg: &Path, png: &Path) -> Result<()> {
    let status = Command::new(RASTERIZER)
        .arg("--format=png")
        .arg("--output")
        .arg(png)
        .arg(svg)
        .status()
        .map_err(|e| PipelineError::Rasterizer(format!("could not run {RASTERIZER}: {e}")))?;
    if !status.success() {
        return Err(PipelineError::Rasterizer(format!(
            "{RASTERIZER} exited with {status} on {}",
            svg.display()
        )));
    }
    Ok(())
}
