//! Prompt construction.
//!
//! Templates are versioned assets (JSON with `system` and `user` strings),
//! not code: the embedded defaults can be swapped for files on disk. The
//! only mutation applied at build time is placeholder substitution, so two
//! calls with equal inputs produce identical bytes.

use std::path::Path;

use serde::Deserialize;

use super::{ChatMessage, ChatRequest, JudgeError, JudgeKind, JudgeVariant, Role};

/// Categorical label names in scale order.
pub const CATEGORICAL_LABELS: [&str; 3] = ["Elementary", "High School", "Graduate"];

const CONTINUOUS_TEMPLATE: &str = include_str!("../../assets/prompts/continuous_0_100.json");
const CATEGORICAL_0SHOT_TEMPLATE: &str =
    include_str!("../../assets/prompts/categorical_0shot.json");
const CATEGORICAL_5SHOT_TEMPLATE: &str =
    include_str!("../../assets/prompts/categorical_5shot.json");

#[derive(Debug, Clone, Deserialize, PartialEq)]
struct Template {
    system: String,
    user: String,
}

/// The three prompt templates, one per [`JudgeKind`].
#[derive(Debug, Clone, PartialEq)]
pub struct PromptTemplates {
    continuous: Template,
    categorical_0shot: Template,
    categorical_5shot: Template,
}

impl Default for PromptTemplates {
    fn default() -> Self {
        Self::builtin()
    }
}

impl PromptTemplates {
    /// The embedded default templates.
    pub fn builtin() -> Self {
        let parse = |s: &str| -> Template {
            serde_json::from_str(s).expect("embedded template parses")
        };
        Self {
            continuous: parse(CONTINUOUS_TEMPLATE),
            categorical_0shot: parse(CATEGORICAL_0SHOT_TEMPLATE),
            categorical_5shot: parse(CATEGORICAL_5SHOT_TEMPLATE),
        }
    }

    /// Replace one template from a JSON file with `system`/`user` fields.
    pub fn with_template_file(mut self, kind: JudgeKind, path: &Path) -> Result<Self, JudgeError> {
        let contents =
            std::fs::read_to_string(path).map_err(|source| JudgeError::TemplateIo {
                path: path.display().to_string(),
                source,
            })?;
        let template: Template =
            serde_json::from_str(&contents).map_err(|e| JudgeError::TemplateFormat {
                path: path.display().to_string(),
                detail: e.to_string(),
            })?;
        match kind {
            JudgeKind::Continuous0To100 => self.continuous = template,
            JudgeKind::Categorical0Shot => self.categorical_0shot = template,
            JudgeKind::Categorical5Shot => self.categorical_5shot = template,
        }
        Ok(self)
    }

    fn for_kind(&self, kind: JudgeKind) -> &Template {
        match kind {
            JudgeKind::Continuous0To100 => &self.continuous,
            JudgeKind::Categorical0Shot => &self.categorical_0shot,
            JudgeKind::Categorical5Shot => &self.categorical_5shot,
        }
    }
}

/// A labeled exemplar for the few-shot prompt.
#[derive(Debug, Clone, PartialEq, serde::Serialize, Deserialize)]
pub struct LabeledExample {
    pub text: String,
    pub label: String,
}

fn validate_shots(shots: &[LabeledExample]) -> Result<(), JudgeError> {
    if shots.len() != 5 {
        return Err(JudgeError::ShotCount { got: shots.len() });
    }
    let mut counts = [0usize; 3];
    for shot in shots {
        let idx = CATEGORICAL_LABELS
            .iter()
            .position(|l| *l == shot.label)
            .ok_or_else(|| JudgeError::BadShotLabel {
                label: shot.label.clone(),
            })?;
        counts[idx] += 1;
    }
    if counts != [2, 1, 2] {
        return Err(JudgeError::ShotComposition {
            got: format!(
                "{} Elementary, {} High School, {} Graduate",
                counts[0], counts[1], counts[2]
            ),
        });
    }
    Ok(())
}

fn render_examples(shots: &[LabeledExample]) -> String {
    shots
        .iter()
        .map(|s| format!("<Text>{}</Text>\nLabel: {}", s.text, s.label))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Instantiate the template for `variant` with `text` (and exemplars for
/// the 5-shot variant: exactly five, two Elementary, one High School, two
/// Graduate).
pub fn build_prompt(
    variant: &JudgeVariant,
    text: &str,
    shots: Option<&[LabeledExample]>,
    templates: &PromptTemplates,
    model: &str,
) -> Result<ChatRequest, JudgeError> {
    let template = templates.for_kind(variant.kind);
    let user = match variant.kind {
        JudgeKind::Categorical5Shot => {
            let shots = shots.unwrap_or(&[]);
            validate_shots(shots)?;
            template
                .user
                .replace("{{examples}}", &render_examples(shots))
                .replace("{{text}}", text)
        }
        _ => template.user.replace("{{text}}", text),
    };
    Ok(ChatRequest {
        model: model.to_string(),
        messages: vec![
            ChatMessage {
                role: Role::System,
                content: template.system.clone(),
            },
            ChatMessage {
                role: Role::User,
                content: user,
            },
        ],
        temperature: variant.temperature,
        max_tokens: variant.max_output_tokens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shots_ok() -> Vec<LabeledExample> {
        [
            ("a", "Elementary"),
            ("b", "Elementary"),
            ("c", "High School"),
            ("d", "Graduate"),
            ("e", "Graduate"),
        ]
        .map(|(t, l)| LabeledExample {
            text: t.into(),
            label: l.into(),
        })
        .to_vec()
    }

    #[test]
    fn continuous_prompt_wraps_text() {
        let variant = JudgeVariant::new(JudgeKind::Continuous0To100);
        let req = build_prompt(&variant, "Hi", None, &PromptTemplates::builtin(), "m").unwrap();
        assert_eq!(req.messages.len(), 2);
        assert_eq!(req.messages[0].role, Role::System);
        assert!(req.messages[1].content.contains("<Text>Hi</Text>"));
        assert!(req.messages[1]
            .content
            .contains("extremely challenging to understand"));
        assert_eq!(req.temperature, 0.0);
        assert_eq!(req.max_tokens, 3);
    }

    #[test]
    fn zero_shot_prompt_has_format_instructions() {
        let variant = JudgeVariant::new(JudgeKind::Categorical0Shot);
        let req = build_prompt(&variant, "X", None, &PromptTemplates::builtin(), "m").unwrap();
        assert!(req.messages[1].content.contains("<Text>X</Text>"));
        assert!(req.messages[1].content.contains("Elementary"));
        assert_eq!(req.max_tokens, 20);
    }

    #[test]
    fn prompt_construction_is_deterministic() {
        let variant = JudgeVariant::new(JudgeKind::Categorical5Shot);
        let templates = PromptTemplates::builtin();
        let shots = shots_ok();
        let a = build_prompt(&variant, "T", Some(&shots), &templates, "m").unwrap();
        let b = build_prompt(&variant, "T", Some(&shots), &templates, "m").unwrap();
        assert_eq!(
            serde_json::to_vec(&a).unwrap(),
            serde_json::to_vec(&b).unwrap()
        );
    }

    #[test]
    fn five_shot_enforces_count_and_composition() {
        let variant = JudgeVariant::new(JudgeKind::Categorical5Shot);
        let templates = PromptTemplates::builtin();
        let four = &shots_ok()[..4];
        assert!(matches!(
            build_prompt(&variant, "T", Some(four), &templates, "m"),
            Err(JudgeError::ShotCount { got: 4 })
        ));
        let mut wrong = shots_ok();
        wrong[0].label = "Graduate".into();
        assert!(matches!(
            build_prompt(&variant, "T", Some(&wrong), &templates, "m"),
            Err(JudgeError::ShotComposition { .. })
        ));
        let mut bad = shots_ok();
        bad[0].label = "Preschool".into();
        assert!(matches!(
            build_prompt(&variant, "T", Some(&bad), &templates, "m"),
            Err(JudgeError::BadShotLabel { .. })
        ));
    }

    #[test]
    fn five_shot_renders_all_examples() {
        let variant = JudgeVariant::new(JudgeKind::Categorical5Shot);
        let shots = shots_ok();
        let req =
            build_prompt(&variant, "T", Some(&shots), &PromptTemplates::builtin(), "m").unwrap();
        for shot in &shots {
            assert!(req.messages[1]
                .content
                .contains(&format!("<Text>{}</Text>\nLabel: {}", shot.text, shot.label)));
        }
    }
}
