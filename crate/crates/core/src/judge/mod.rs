//! LLM-as-a-judge adapters: prompt construction, chat-endpoint client with
//! retry and caching, completion parsing, and document-level aggregation of
//! external per-sentence scores.

mod aggregate;
mod cache;
mod client;
mod parse;
mod prompt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use aggregate::{
    aggregate_sentence_scores, load_external_scores, AggregateMode, ExternalScores,
};
pub use cache::JudgmentCache;
pub use client::{ChatClient, JudgeEndpoint, JudgeRecord, JudgeRunner, RetryPolicy};
pub use parse::parse_judgment;
pub use prompt::{build_prompt, LabeledExample, PromptTemplates, CATEGORICAL_LABELS};

/// Environment variable holding the bearer token for the chat endpoint.
pub const API_KEY_ENV: &str = "READBENCH_API_KEY";

/// The three judge strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JudgeKind {
    Categorical0Shot,
    Categorical5Shot,
    Continuous0To100,
}

impl JudgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            JudgeKind::Categorical0Shot => "categorical-0shot",
            JudgeKind::Categorical5Shot => "categorical-5shot",
            JudgeKind::Continuous0To100 => "continuous-0-100",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "categorical-0shot" => Some(JudgeKind::Categorical0Shot),
            "categorical-5shot" => Some(JudgeKind::Categorical5Shot),
            "continuous-0-100" => Some(JudgeKind::Continuous0To100),
            _ => None,
        }
    }
}

impl std::fmt::Display for JudgeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A judge strategy plus its fixed decoding contract: greedy decoding
/// (temperature 0) with 3 output tokens for the continuous score and 20
/// for the categorical labels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JudgeVariant {
    pub kind: JudgeKind,
    pub max_output_tokens: u32,
    pub temperature: f64,
}

impl JudgeVariant {
    pub fn new(kind: JudgeKind) -> Self {
        let max_output_tokens = match kind {
            JudgeKind::Continuous0To100 => 3,
            JudgeKind::Categorical0Shot | JudgeKind::Categorical5Shot => 20,
        };
        Self {
            kind,
            max_output_tokens,
            temperature: 0.0,
        }
    }
}

/// Chat message role; only `system` and `user` are emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    System,
    User,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChatMessage {
    pub role: Role,
    pub content: String,
}

/// Wire request for `POST {base_url}/v1/chat/completions`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChatRequest {
    pub model: String,
    pub messages: Vec<ChatMessage>,
    pub temperature: f64,
    pub max_tokens: u32,
}

/// Parsed judge output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JudgmentPayload {
    /// Index on the Elementary < High School < Graduate scale.
    Ordinal(usize),
    /// Integer readability score in 1..=100.
    Score(u32),
}

impl JudgmentPayload {
    pub fn numeric(self) -> f64 {
        match self {
            JudgmentPayload::Ordinal(i) => i as f64,
            JudgmentPayload::Score(s) => s as f64,
        }
    }
}

/// One judged document; the raw completion is retained for audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Judgment {
    pub payload: JudgmentPayload,
    pub raw_completion: String,
}

/// Errors from the judge pipeline.
#[derive(Debug, Error)]
pub enum JudgeError {
    #[error("{API_KEY_ENV} is not set")]
    MissingApiKey,
    #[error("5-shot prompt needs exactly 5 exemplars, got {got}")]
    ShotCount { got: usize },
    #[error("5-shot exemplars must be two Elementary, one High School, two Graduate; got {got}")]
    ShotComposition { got: String },
    #[error("exemplar label {label:?} is not one of the categorical labels")]
    BadShotLabel { label: String },
    #[error("completion has no parseable payload: {completion:?}")]
    Unparseable { completion: String },
    #[error("endpoint returned status {status} after {attempts} attempts")]
    Upstream { status: u16, attempts: u32 },
    #[error("transport failure after {attempts} attempts: {detail}")]
    Transport { detail: String, attempts: u32 },
    #[error("malformed endpoint response: {detail}")]
    BadResponse { detail: String },
    #[error("cannot aggregate an empty score list")]
    EmptyScores,
    #[error("external scores {path}:{line}: {reason}")]
    BadExternalScores {
        path: String,
        line: usize,
        reason: String,
    },
    #[error("{failed_count} of {total} documents failed judging: {failed:?}")]
    PartialFailure {
        records: Vec<JudgeRecord>,
        failed: Vec<String>,
        failed_count: usize,
        total: usize,
    },
    #[error("cache io at {path}")]
    CacheIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("prompt template io at {path}")]
    TemplateIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("prompt template {path} is malformed: {detail}")]
    TemplateFormat { path: String, detail: String },
}
