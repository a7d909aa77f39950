use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use puzzlegen::dataset::{read_manifest, uniform_counts};
use puzzlegen::{
    compile_dataset, export, render_record, stats, verify_dataset, ExportFormat, PipelineError,
    RenderSpec, Result,
};
use puzzlegen_core::{Payload, PuzzleKind};

#[derive(Parser)]
#[command(
    name = "puzzlegen",
    version,
    about = "Generate, solve and check visual algorithmic puzzles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a dataset directory.
    Gen {
        #[arg(long)]
        seed: u64,
        /// Instances per puzzle kind.
        #[arg(long)]
        count: u32,
        /// Restrict to these kinds; repeat the flag for several.
        #[arg(long = "puzzle")]
        puzzles: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        /// Also write PNG copies via rsvg-convert.
        #[arg(long)]
        png: bool,
    },
    /// Solve one payload given as JSON, printing the gold answer.
    Solve {
        #[arg(long)]
        puzzle: String,
        /// Payload file, or `-` for standard input.
        #[arg(long, default_value = "-")]
        instance: String,
    },
    /// Draw the picture of one record.
    Render {
        #[arg(long)]
        record: String,
        #[arg(long)]
        out: PathBuf,
        /// Master seed; defaults to the one in `--dataset`.
        #[arg(long, conflicts_with = "dataset")]
        seed: Option<u64>,
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
    /// Regenerate a dataset from its manifest and report disagreements.
    Verify { dir: PathBuf },
    /// Per-kind counts and distributions.
    Stats { dir: PathBuf },
    /// Print the records of a dataset.
    Export {
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Json,
}

fn kind(name: &str) -> Result<PuzzleKind> {
    name.parse()
        .map_err(|e: puzzlegen_core::Error| PipelineError::Usage(e.to_string()))
}

fn read_input(source: &str) -> Result<String> {
    let mut text = String::new();
    if source == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| PipelineError::Io {
                path: PathBuf::from("<stdin>"),
                source: e,
            })?;
    } else {
        text = fs::read_to_string(source).map_err(|e| PipelineError::Io {
            path: PathBuf::from(source),
            source: e,
        })?;
    }
    Ok(text)
}

/// Accepts either a bare payload body or one already wrapped as `{"<kind>": ...}`.
fn parse_payload(kind: PuzzleKind, text: &str) -> Result<Payload> {
    let value: Value = serde_json::from_str(text)?;
    let wrapped = match &value {
        Value::Object(map) if map.len() == 1 && map.contains_key(kind.name()) => value,
        _ => serde_json::json!({ kind.name(): value }),
    };
    Ok(serde_json::from_value(wrapped)?)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| PipelineError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let spec = RenderSpec::default();
    match cli.command {
        Command::Gen {
            seed,
            count,
            puzzles,
            out,
            png,
        } => {
            let kinds = puzzles
                .iter()
                .map(|p| kind(p))
                .collect::<Result<Vec<_>>>()?;
            let manifest = compile_dataset(seed, &uniform_counts(&kinds, count), &out, &spec, png)?;
            println!(
                "wrote {} records to {}",
                manifest.record_count,
                out.display()
            );
            println!("content hash {}", manifest.content_hash);
        }
        Command::Solve { puzzle, instance } => {
            let payload = parse_payload(kind(&puzzle)?, &read_input(&instance)?)?;
            println!("{}", payload.solve()?.render());
        }
        Command::Render {
            record,
            out,
            seed,
            dataset,
        } => {
            let master = match (seed, dataset) {
                (Some(s), _) => s,
                (None, Some(dir)) => read_manifest(&dir)?.master_seed,
                (None, None) => {
                    return Err(PipelineError::Usage(
                        "render needs --seed or --dataset".into(),
                    ))
                }
            };
            write_file(&out, &render_record(master, &record, &spec)?)?;
        }
        Command::Verify { dir } => {
            let report = verify_dataset(&dir, &spec)?;
            for v in &report.violations {
                println!("{v}");
            }
            println!(
                "{} records checked, {} violations",
                report.records_checked,
                report.violations.len()
            );
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Stats { dir } => print!("{}", stats(&dir)?.table()),
        Command::Export { format, dir } => {
            let format = match format {
                Format::Jsonl => ExportFormat::Jsonl,
                Format::Json => ExportFormat::Json,
            };
            print!("{}", export(&dir, format)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                PipelineError::Usage(_) => 2,
                PipelineError::Generator { .. } => 3,
                _ => 1,
            })
        }
    }
}
