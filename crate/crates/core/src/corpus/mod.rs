//! Dataset ingestion, label schemas, deterministic sampling, and corpus
//! statistics.
//!
//! Corpora arrive as JSONL (one object per line) or CSV with a header.
//! Loading applies an ordered composition template (`prefix` + field) so
//! multi-field records collapse into one text; fields missing from a
//! record are omitted together with their prefixes.

mod load;
mod presets;
mod sample;
mod summary;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::stats::OrdinalScale;

pub use load::load_corpus;
pub use presets::{preset, preset_names};
pub use sample::{sample, SampleStrategy};
pub use summary::{corpus_stats, CorpusSummary, LabelLengthStats, Quartiles};

/// Gold readability judgment attached to a document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GoldLabel {
    /// Label name on the corpus ordinal scale.
    Ordinal(String),
    /// Raw easiness/difficulty score.
    Continuous(f64),
}

/// One text unit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gold: Option<GoldLabel>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

/// An immutable, loaded corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub name: String,
    pub docs: Vec<Document>,
    /// Present for categorical corpora; continuous corpora leave it unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<OrdinalScale>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }
}

/// On-disk record format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusFormat {
    Jsonl,
    Csv,
}

/// One entry of the composition template: `prefix` is prepended to the
/// field value when the field is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateField {
    #[serde(default)]
    pub prefix: String,
    pub field: String,
}

impl TemplateField {
    pub fn bare(field: impl Into<String>) -> Self {
        Self {
            prefix: String::new(),
            field: field.into(),
        }
    }

    pub fn prefixed(prefix: impl Into<String>, field: impl Into<String>) -> Self {
        Self {
            prefix: prefix.into(),
            field: field.into(),
        }
    }
}

/// Everything needed to load one corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub path: std::path::PathBuf,
    pub format: CorpusFormat,
    /// Field holding the document id; row numbers are used when unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id_field: Option<String>,
    /// Ordered composition template; at least one field must be present in
    /// every record.
    pub text_fields: Vec<TemplateField>,
    /// Field holding the gold label; documents are unlabeled when unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label_field: Option<String>,
    /// Ordinal scale for categorical corpora; continuous corpora parse the
    /// label as a number instead.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<OrdinalScale>,
}

/// Errors from loading and sampling corpora.
#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("failed to read corpus {path}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: malformed record: {reason}")]
    MalformedRecord {
        path: String,
        line: usize,
        reason: String,
    },
    #[error("{path}:{line}: duplicate document id {id:?}")]
    DuplicateId {
        path: String,
        line: usize,
        id: String,
    },
    #[error("corpus {name:?} is empty")]
    EmptyCorpus { name: String },
    #[error("per-class sampling needs ordinal labels on every document")]
    OrdinalRequired,
    #[error("unknown corpus preset {name:?}")]
    UnknownPreset { name: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
