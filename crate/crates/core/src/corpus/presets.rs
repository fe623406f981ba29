//! Built-in corpus layout presets.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::OnceLock;

use serde::Deserialize;

use super::{CorpusError, CorpusFormat, CorpusSpec, TemplateField};
use crate::stats::OrdinalScale;

const PRESETS_TOML: &str = include_str!("../../assets/corpus_presets.toml");

#[derive(Debug, Deserialize)]
struct PresetEntry {
    format: CorpusFormat,
    #[serde(default)]
    id_field: Option<String>,
    text_fields: Vec<TemplateField>,
    #[serde(default)]
    label_field: Option<String>,
    #[serde(default)]
    scale: Option<Vec<String>>,
}

fn registry() -> &'static BTreeMap<String, PresetEntry> {
    static REGISTRY: OnceLock<BTreeMap<String, PresetEntry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        toml::from_str(PRESETS_TOML).expect("embedded presets parse")
    })
}

/// Names of the available presets.
pub fn preset_names() -> Vec<&'static str> {
    registry().keys().map(String::as_str).collect()
}

/// Instantiate the preset `name` against a data file.
pub fn preset(name: &str, path: PathBuf) -> Result<CorpusSpec, CorpusError> {
    let entry = registry().get(name).ok_or_else(|| CorpusError::UnknownPreset {
        name: name.to_string(),
    })?;
    Ok(CorpusSpec {
        path,
        format: entry.format,
        id_field: entry.id_field.clone(),
        text_fields: entry.text_fields.clone(),
        label_field: entry.label_field.clone(),
        scale: entry
            .scale
            .as_ref()
            .map(|labels| OrdinalScale::new(labels.clone()).expect("preset scale is valid")),
    })
}
