//! Corpus loading from JSONL and CSV.

use std::collections::{BTreeMap, HashSet};
use std::fs;

use serde_json::Value;

use super::{Corpus, CorpusError, CorpusFormat, CorpusSpec, Document, GoldLabel};

/// Load the corpus described by `spec`, naming it `name`.
pub fn load_corpus(name: &str, spec: &CorpusSpec) -> Result<Corpus, CorpusError> {
    let path_str = spec.path.display().to_string();
    let contents = fs::read_to_string(&spec.path).map_err(|source| CorpusError::Io {
        path: path_str.clone(),
        source,
    })?;
    let records = match spec.format {
        CorpusFormat::Jsonl => parse_jsonl(&contents, &path_str)?,
        CorpusFormat::Csv => parse_csv(&contents, &path_str)?,
    };

    let mut docs = Vec::with_capacity(records.len());
    let mut seen = HashSet::new();
    for (line, record) in records {
        let doc = build_document(&record, spec, line, &path_str)?;
        if !seen.insert(doc.id.clone()) {
            return Err(CorpusError::DuplicateId {
                path: path_str,
                line,
                id: doc.id,
            });
        }
        docs.push(doc);
    }
    if docs.is_empty() {
        return Err(CorpusError::EmptyCorpus {
            name: name.to_string(),
        });
    }
    Ok(Corpus {
        name: name.to_string(),
        docs,
        scale: spec.scale.clone(),
    })
}

type Record = BTreeMap<String, String>;

fn scalar_to_string(value: &Value) -> Option<String> {
    match value {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        _ => None,
    }
}

fn parse_jsonl(contents: &str, path: &str) -> Result<Vec<(usize, Record)>, CorpusError> {
    let mut records = Vec::new();
    for (idx, line) in contents.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let value: Value =
            serde_json::from_str(line).map_err(|e| CorpusError::MalformedRecord {
                path: path.to_string(),
                line: line_no,
                reason: e.to_string(),
            })?;
        let object = value.as_object().ok_or_else(|| CorpusError::MalformedRecord {
            path: path.to_string(),
            line: line_no,
            reason: "expected a JSON object".to_string(),
        })?;
        let record = object
            .iter()
            .filter_map(|(k, v)| scalar_to_string(v).map(|s| (k.clone(), s)))
            .collect();
        records.push((line_no, record));
    }
    Ok(records)
}

fn parse_csv(contents: &str, path: &str) -> Result<Vec<(usize, Record)>, CorpusError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(contents.as_bytes());
    let headers = reader.headers()?.clone();
    let mut records = Vec::new();
    for (idx, result) in reader.records().enumerate() {
        let line_no = idx + 2; // header is line 1
        let row = result.map_err(|e| CorpusError::MalformedRecord {
            path: path.to_string(),
            line: line_no,
            reason: e.to_string(),
        })?;
        let record = headers
            .iter()
            .zip(row.iter())
            .map(|(h, v)| (h.to_string(), v.to_string()))
            .collect();
        records.push((line_no, record));
    }
    Ok(records)
}

fn build_document(
    record: &Record,
    spec: &CorpusSpec,
    line: usize,
    path: &str,
) -> Result<Document, CorpusError> {
    let malformed = |reason: String| CorpusError::MalformedRecord {
        path: path.to_string(),
        line,
        reason,
    };

    // Composition: present fields keep their prefixes, absent ones vanish.
    let mut parts = Vec::new();
    for tf in &spec.text_fields {
        if let Some(value) = record.get(&tf.field) {
            if !value.trim().is_empty() {
                parts.push(format!("{}{}", tf.prefix, value));
            }
        }
    }
    if parts.is_empty() {
        let wanted: Vec<&str> = spec.text_fields.iter().map(|t| t.field.as_str()).collect();
        return Err(malformed(format!("no text in any of {wanted:?}")));
    }
    let text = parts.join("\n");

    let id = match &spec.id_field {
        Some(field) => record
            .get(field)
            .filter(|v| !v.is_empty())
            .cloned()
            .ok_or_else(|| malformed(format!("missing id field {field:?}")))?,
        None => (line - 1).to_string(),
    };

    let gold = match &spec.label_field {
        Some(field) => {
            let raw = record
                .get(field)
                .filter(|v| !v.is_empty())
                .ok_or_else(|| malformed(format!("missing label field {field:?}")))?;
            match &spec.scale {
                Some(scale) => {
                    if scale.index(raw).is_none() {
                        return Err(malformed(format!(
                            "label {raw:?} is not on the corpus scale"
                        )));
                    }
                    Some(GoldLabel::Ordinal(raw.clone()))
                }
                None => {
                    let value: f64 = raw.parse().map_err(|_| {
                        malformed(format!("label {raw:?} is not a number"))
                    })?;
                    Some(GoldLabel::Continuous(value))
                }
            }
        }
        None => None,
    };

    let consumed: HashSet<&str> = spec
        .text_fields
        .iter()
        .map(|t| t.field.as_str())
        .chain(spec.id_field.as_deref())
        .chain(spec.label_field.as_deref())
        .collect();
    let metadata = record
        .iter()
        .filter(|(k, _)| !consumed.contains(k.as_str()))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();

    Ok(Document {
        id,
        text,
        gold,
        metadata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::TemplateField;
    use crate::stats::OrdinalScale;
    use std::io::Write;

    fn write_temp(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    fn lecture_spec(path: std::path::PathBuf) -> CorpusSpec {
        CorpusSpec {
            path,
            format: CorpusFormat::Jsonl,
            id_field: None,
            text_fields: vec![
                TemplateField::prefixed("Lecture: ", "lecture"),
                TemplateField::prefixed("Explanation: ", "explanation"),
            ],
            label_field: None,
            scale: None,
        }
    }

    #[test]
    fn composition_template_joins_present_fields() {
        let f = write_temp(r#"{"lecture": "L", "explanation": "E"}"#);
        let corpus = load_corpus("t", &lecture_spec(f.path().to_path_buf())).unwrap();
        assert_eq!(corpus.docs[0].text, "Lecture: L\nExplanation: E");
    }

    #[test]
    fn missing_optional_field_drops_its_prefix() {
        let f = write_temp(r#"{"explanation": "E"}"#);
        let corpus = load_corpus("t", &lecture_spec(f.path().to_path_buf())).unwrap();
        assert_eq!(corpus.docs[0].text, "Explanation: E");
    }

    #[test]
    fn record_without_any_text_field_errors_with_line() {
        let f = write_temp("{\"lecture\": \"ok\"}\n{\"other\": 1}\n");
        let err = load_corpus("t", &lecture_spec(f.path().to_path_buf())).unwrap_err();
        assert!(matches!(err, CorpusError::MalformedRecord { line: 2, .. }));
    }

    #[test]
    fn missing_label_field_errors() {
        let f = write_temp(r#"{"text": "hello", "label": "A"}"#);
        let spec = CorpusSpec {
            path: f.path().to_path_buf(),
            format: CorpusFormat::Jsonl,
            id_field: None,
            text_fields: vec![TemplateField::bare("text")],
            label_field: Some("gold".to_string()),
            scale: None,
        };
        let err = load_corpus("t", &spec).unwrap_err();
        assert!(matches!(err, CorpusError::MalformedRecord { line: 1, .. }));
    }

    #[test]
    fn ordinal_labels_validated_against_scale() {
        let f = write_temp("{\"text\": \"a\", \"label\": \"Low\"}\n{\"text\": \"b\", \"label\": \"Bogus\"}\n");
        let spec = CorpusSpec {
            path: f.path().to_path_buf(),
            format: CorpusFormat::Jsonl,
            id_field: None,
            text_fields: vec![TemplateField::bare("text")],
            label_field: Some("label".to_string()),
            scale: Some(OrdinalScale::new(["Low", "Medium", "High"]).unwrap()),
        };
        let err = load_corpus("t", &spec).unwrap_err();
        assert!(matches!(err, CorpusError::MalformedRecord { line: 2, .. }));
    }

    #[test]
    fn continuous_labels_parse_numbers() {
        let f = write_temp("id,text,score\na,hello there,-0.97\nb,more text,1.5\n");
        let spec = CorpusSpec {
            path: f.path().to_path_buf(),
            format: CorpusFormat::Csv,
            id_field: Some("id".to_string()),
            text_fields: vec![TemplateField::bare("text")],
            label_field: Some("score".to_string()),
            scale: None,
        };
        let corpus = load_corpus("t", &spec).unwrap();
        assert_eq!(corpus.docs[0].gold, Some(GoldLabel::Continuous(-0.97)));
        assert_eq!(corpus.docs[0].id, "a");
    }

    #[test]
    fn duplicate_ids_rejected() {
        let f = write_temp("{\"id\": \"x\", \"text\": \"a\"}\n{\"id\": \"x\", \"text\": \"b\"}\n");
        let spec = CorpusSpec {
            path: f.path().to_path_buf(),
            format: CorpusFormat::Jsonl,
            id_field: Some("id".to_string()),
            text_fields: vec![TemplateField::bare("text")],
            label_field: None,
            scale: None,
        };
        assert!(matches!(
            load_corpus("t", &spec).unwrap_err(),
            CorpusError::DuplicateId { .. }
        ));
    }

    #[test]
    fn empty_corpus_errors() {
        let f = write_temp("");
        let err = load_corpus("t", &lecture_spec(f.path().to_path_buf())).unwrap_err();
        assert!(matches!(err, CorpusError::EmptyCorpus { .. }));
    }

    #[test]
    fn load_serialize_load_is_identity() {
        let f = write_temp(
            "{\"id\": \"a\", \"text\": \"one two\", \"label\": \"Low\", \"topic\": \"x\"}\n{\"id\": \"b\", \"text\": \"three\", \"label\": \"High\"}\n",
        );
        let spec = CorpusSpec {
            path: f.path().to_path_buf(),
            format: CorpusFormat::Jsonl,
            id_field: Some("id".to_string()),
            text_fields: vec![TemplateField::bare("text")],
            label_field: Some("label".to_string()),
            scale: Some(OrdinalScale::new(["Low", "High"]).unwrap()),
        };
        let corpus = load_corpus("t", &spec).unwrap();
        let json = serde_json::to_string(&corpus.docs).unwrap();
        let back: Vec<Document> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, corpus.docs);
    }
}
