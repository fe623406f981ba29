//! Ordinal label scales and their numeric encoding.

use serde::{Deserialize, Serialize};

use super::StatsError;
use crate::num::Real;

/// An ordered set of label names mapped to indices `0..k-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrdinalScale {
    labels: Vec<String>,
}

impl OrdinalScale {
    /// Build a scale from labels listed in increasing order.
    ///
    /// Errors when the list is empty or contains duplicates (the order must
    /// be strict and total).
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, StatsError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(StatsError::EmptyScale);
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(StatsError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(Self { labels })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Index of `label`, or `None` when it is not on the scale.
    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Map labels to their order-preserving integer encoding on `scale`.
pub fn encode_labels<R: Real>(
    labels: &[impl AsRef<str>],
    scale: &OrdinalScale,
) -> Result<Vec<R>, StatsError> {
    labels
        .iter()
        .map(|label| {
            let label = label.as_ref();
            scale
                .index(label)
                .map(R::from_count)
                .ok_or_else(|| StatsError::UnknownLabel {
                    label: label.to_string(),
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_level() -> OrdinalScale {
        OrdinalScale::new(["Elementary", "High School", "Graduate"]).unwrap()
    }

    #[test]
    fn encoding_preserves_order() {
        let encoded: Vec<f64> =
            encode_labels(&["Elementary", "Graduate", "High School"], &three_level()).unwrap();
        assert_eq!(encoded, vec![0.0, 2.0, 1.0]);
    }

    #[test]
    fn empty_input_encodes_to_empty() {
        let encoded: Vec<f64> = encode_labels(&[] as &[&str], &three_level()).unwrap();
        assert!(encoded.is_empty());
    }

    #[test]
    fn unknown_label_errors() {
        let err = encode_labels::<f64>(&["PhD"], &three_level()).unwrap_err();
        assert!(matches!(err, StatsError::UnknownLabel { label } if label == "PhD"));
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(OrdinalScale::new(["A", "B", "A"]).is_err());
        assert!(OrdinalScale::new(Vec::<String>::new()).is_err());
    }
}
