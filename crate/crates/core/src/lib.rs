//! Readability analytics: surface statistics, formula metrics, rank
//! correlation against human judgments, LLM-as-a-judge adapters, and
//! rationale feature analysis.
//!
//! The numeric kernels are generic over [`num::Real`] (`f32`/`f64`); the
//! aliases below fix `f64`, which is what the CLI and benchmark harness use.

pub mod num;
pub mod stats;
pub mod corpus;
pub mod judge;
pub mod metrics;
pub mod textcore;

pub use num::Real;
pub use textcore::{Lexicon, TextStats};
