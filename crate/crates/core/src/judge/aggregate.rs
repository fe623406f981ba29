//! Document-level aggregation of external per-sentence scores.
//!
//! Fine-tuned sentence scorers run elsewhere; their outputs arrive as JSONL
//! records `{"id": ..., "sentence_scores": [...]}` and are reduced to one
//! value per document here.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::JudgeError;
use crate::num::Real;

/// Reduction from sentence scores to a document score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AggregateMode {
    /// Arithmetic mean over sentences.
    Mean,
    /// Maximum over sentences (hardest sentence dominates).
    Max,
}

/// Aggregate a non-empty list of per-sentence scores.
pub fn aggregate_sentence_scores<R: Real>(
    scores: &[R],
    mode: AggregateMode,
) -> Result<R, JudgeError> {
    if scores.is_empty() {
        return Err(JudgeError::EmptyScores);
    }
    Ok(match mode {
        AggregateMode::Mean => {
            scores.iter().copied().sum::<R>() / R::from_count(scores.len())
        }
        AggregateMode::Max => scores
            .iter()
            .copied()
            .fold(scores[0], |acc, v| if v > acc { v } else { acc }),
    })
}

#[derive(Debug, Deserialize)]
struct ScoreRecord {
    id: String,
    sentence_scores: Vec<f64>,
}

/// Per-document sentence scores from an external scorer.
#[derive(Debug, Clone, Default)]
pub struct ExternalScores {
    scores: HashMap<String, Vec<f64>>,
}

impl ExternalScores {
    /// Document-level score for `doc_id` under `mode`.
    pub fn document_score(&self, doc_id: &str, mode: AggregateMode) -> Option<f64> {
        let scores = self.scores.get(doc_id)?;
        aggregate_sentence_scores(scores, mode).ok()
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// Load external sentence scores from a JSONL file.
pub fn load_external_scores(path: &Path) -> Result<ExternalScores, JudgeError> {
    let display = path.display().to_string();
    let contents = fs::read_to_string(path).map_err(|e| JudgeError::BadExternalScores {
        path: display.clone(),
        line: 0,
        reason: e.to_string(),
    })?;
    let mut scores = HashMap::new();
    for (idx, line) in contents.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: ScoreRecord =
            serde_json::from_str(line).map_err(|e| JudgeError::BadExternalScores {
                path: display.clone(),
                line: idx + 1,
                reason: e.to_string(),
            })?;
        if record.sentence_scores.is_empty() {
            return Err(JudgeError::BadExternalScores {
                path: display.clone(),
                line: idx + 1,
                reason: "empty sentence_scores".to_string(),
            });
        }
        scores.insert(record.id, record.sentence_scores);
    }
    Ok(ExternalScores { scores })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn mean_and_max() {
        let scores = [1.0, 2.0, 3.0];
        assert_eq!(
            aggregate_sentence_scores(&scores, AggregateMode::Mean).unwrap(),
            2.0
        );
        assert_eq!(
            aggregate_sentence_scores(&scores, AggregateMode::Max).unwrap(),
            3.0
        );
    }

    #[test]
    fn singleton_is_identity_under_both_modes() {
        for mode in [AggregateMode::Mean, AggregateMode::Max] {
            assert_eq!(aggregate_sentence_scores(&[5.0], mode).unwrap(), 5.0);
        }
    }

    #[test]
    fn empty_list_errors() {
        assert!(matches!(
            aggregate_sentence_scores::<f64>(&[], AggregateMode::Mean),
            Err(JudgeError::EmptyScores)
        ));
    }

    #[test]
    fn loads_jsonl_and_aggregates() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, r#"{{"id": "a", "sentence_scores": [1.0, 3.0]}}"#).unwrap();
        writeln!(f, r#"{{"id": "b", "sentence_scores": [4.0]}}"#).unwrap();
        let scores = load_external_scores(f.path()).unwrap();
        assert_eq!(scores.document_score("a", AggregateMode::Mean), Some(2.0));
        assert_eq!(scores.document_score("a", AggregateMode::Max), Some(3.0));
        assert_eq!(scores.document_score("b", AggregateMode::Max), Some(4.0));
        assert_eq!(scores.document_score("missing", AggregateMode::Max), None);
    }

    #[test]
    fn malformed_line_reports_position() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, r#"{{"id": "a", "sentence_scores": [1.0]}}"#).unwrap();
        writeln!(f, "not json").unwrap();
        let err = load_external_scores(f.path()).unwrap_err();
        assert!(matches!(err, JudgeError::BadExternalScores { line: 2, .. }));
    }
}
