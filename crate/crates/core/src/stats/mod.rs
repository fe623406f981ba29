//! Ordinal encoding, Kendall Tau-b with tie correction, significance, and
//! cross-dataset rank aggregation.

mod csv_io;
mod kendall;
mod rank;
mod scale;

use thiserror::Error;

pub use csv_io::{read_tau_matrix, write_rank_table, write_tau_matrix};
pub use kendall::{kendall_tau_b, tau_p_value, CorrelationResult};
pub use rank::{rank_metrics, RankTable, TauMatrix, TieRule};
pub use scale::{encode_labels, OrdinalScale};

/// Errors from correlation and ranking.
#[derive(Debug, Error)]
pub enum StatsError {
    #[error("vector lengths differ: {x} vs {y}")]
    LengthMismatch { x: usize, y: usize },
    #[error("need at least {min} observations, got {n}")]
    TooShort { n: usize, min: usize },
    #[error("input contains non-finite values")]
    NonFinite,
    #[error("correlation undefined: a vector is constant")]
    ConstantInput,
    #[error("label {label:?} is not on the scale")]
    UnknownLabel { label: String },
    #[error("scale labels must be unique, {label:?} repeats")]
    DuplicateLabel { label: String },
    #[error("ordinal scale needs at least one label")]
    EmptyScale,
    #[error("matrix has no metrics or no datasets")]
    EmptyMatrix,
    #[error("matrix shape {rows}x{cols} does not match names {expected_rows}x{expected_cols}")]
    ShapeMismatch {
        rows: usize,
        expected_rows: usize,
        cols: usize,
        expected_cols: usize,
    },
    #[error("row {row}: missing metric_id")]
    MissingMetricId { row: usize },
    #[error("row {row}: cell {value:?} is not a number")]
    BadCell { row: usize, value: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
