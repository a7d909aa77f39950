//! Procedural generators and exact solvers for eighteen families of visual
//! algorithmic puzzles.
//!
//! Everything in this crate is deterministic and allocation-only: no IO, no
//! clocks, no platform randomness. Each puzzle family pairs a seeded
//! generator with an exact solver, and the [`instance`] module ties them
//! together into replayable [`instance::PuzzleInstance`] values. Rendering,
//! file formats and the command line live in the `puzzlegen` crate.

#![no_std]

extern crate alloc;

pub mod answer;
pub mod authoring;
pub mod error;
pub mod grid;
pub mod gridlogic;
pub mod instance;
pub mod kind;
pub mod mapcolour;
pub mod maze;
pub mod mechanics;
pub mod rng;
pub mod search;
pub mod sliding;
pub mod statemachines;
pub mod temporal;
pub mod words;

pub use answer::{AnswerValue, ClockTime, Weekday};
pub use authoring::{build_mcq, McqItem};
pub use error::{Error, Result};
pub use grid::{Coord, GridBoard};
pub use instance::{GenContext, Payload, PuzzleInstance};
pub use kind::{ontology_for, AlgorithmicFeature, OntologyTags, PuzzleKind, VisualFeature};
pub use rng::{derive_seed, rng_next, Rng, Seed};
