//! Completion parsing via regular expressions.

use std::sync::OnceLock;

use regex::Regex;

use super::{JudgeError, JudgeKind, JudgeVariant, Judgment, JudgmentPayload, CATEGORICAL_LABELS};

fn integer_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"\d+").unwrap())
}

fn label_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    // Case-insensitive; interior whitespace in "High School" is flexible.
    RE.get_or_init(|| Regex::new(r"(?i)(elementary|high\s+school|graduate)").unwrap())
}

/// Extract the judgment from a raw completion.
///
/// Continuous: the first integer in 1..=100. Categorical: the earliest
/// case-insensitive occurrence of a label name, mapped to its scale index.
pub fn parse_judgment(variant: &JudgeVariant, completion: &str) -> Result<Judgment, JudgeError> {
    let unparseable = || JudgeError::Unparseable {
        completion: completion.to_string(),
    };
    let payload = match variant.kind {
        JudgeKind::Continuous0To100 => integer_re()
            .find_iter(completion)
            .filter_map(|m| m.as_str().parse::<u32>().ok())
            .find(|v| (1..=100).contains(v))
            .map(JudgmentPayload::Score)
            .ok_or_else(unparseable)?,
        JudgeKind::Categorical0Shot | JudgeKind::Categorical5Shot => {
            let m = label_re().find(completion).ok_or_else(unparseable)?;
            let normalized = m.as_str().to_lowercase();
            let index = CATEGORICAL_LABELS
                .iter()
                .position(|l| {
                    let l = l.to_lowercase();
                    normalized == l || normalized.split_whitespace().eq(l.split_whitespace())
                })
                .ok_or_else(unparseable)?;
            JudgmentPayload::Ordinal(index)
        }
    };
    Ok(Judgment {
        payload,
        raw_completion: completion.to_string(),
    })
}
