//! Corpus-level length statistics and the per-label length-bias report.

use std::io::Write;

use serde::{Deserialize, Serialize};

use super::{Corpus, CorpusError, GoldLabel};
use crate::textcore::{compute_stats, Lexicon};

/// Five-number summary with linearly interpolated quartiles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quartiles {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

impl Quartiles {
    /// Compute from unsorted values; `None` when empty.
    pub fn from_values(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let at = |q: f64| -> f64 {
            let pos = q * (sorted.len() - 1) as f64;
            let lo = pos.floor() as usize;
            let hi = pos.ceil() as usize;
            let frac = pos - lo as f64;
            sorted[lo] + (sorted[hi] - sorted[lo]) * frac
        };
        Some(Self {
            min: sorted[0],
            q1: at(0.25),
            median: at(0.5),
            q3: at(0.75),
            max: *sorted.last().unwrap(),
        })
    }
}

/// Word/sentence length distribution for one label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelLengthStats {
    pub label: String,
    pub count: usize,
    pub words: Quartiles,
    pub sentences: Quartiles,
}

/// Corpus size and length statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub name: String,
    pub size: usize,
    pub avg_words: f64,
    pub avg_sentences: f64,
    /// Present for ordinal corpora, ordered by the scale.
    pub per_label: Vec<LabelLengthStats>,
}

/// Compute size, mean lengths, and per-label quartiles for `corpus`.
pub fn corpus_stats(corpus: &Corpus, lexicon: &Lexicon) -> Result<CorpusSummary, CorpusError> {
    if corpus.docs.is_empty() {
        return Err(CorpusError::EmptyCorpus {
            name: corpus.name.clone(),
        });
    }
    let lengths: Vec<(f64, f64)> = corpus
        .docs
        .iter()
        .map(|d| {
            let stats = compute_stats(&d.text, lexicon);
            (stats.n_words as f64, stats.n_sentences as f64)
        })
        .collect();
    let n = lengths.len() as f64;
    let avg_words = lengths.iter().map(|(w, _)| w).sum::<f64>() / n;
    let avg_sentences = lengths.iter().map(|(_, s)| s).sum::<f64>() / n;

    let mut per_label = Vec::new();
    if let Some(scale) = &corpus.scale {
        for label in scale.labels() {
            let (words, sentences): (Vec<f64>, Vec<f64>) = corpus
                .docs
                .iter()
                .zip(&lengths)
                .filter(|(d, _)| d.gold == Some(GoldLabel::Ordinal(label.clone())))
                .map(|(_, &(w, s))| (w, s))
                .unzip();
            if let (Some(w), Some(s)) = (
                Quartiles::from_values(&words),
                Quartiles::from_values(&sentences),
            ) {
                per_label.push(LabelLengthStats {
                    label: label.clone(),
                    count: words.len(),
                    words: w,
                    sentences: s,
                });
            }
        }
    }

    Ok(CorpusSummary {
        name: corpus.name.clone(),
        size: corpus.docs.len(),
        avg_words,
        avg_sentences,
        per_label,
    })
}

impl CorpusSummary {
    /// CSV emission: one `corpus` row plus one row per label.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "scope", "label", "count", "avg_words", "avg_sentences", "words_min", "words_q1",
            "words_median", "words_q3", "words_max", "sents_min", "sents_q1", "sents_median",
            "sents_q3", "sents_max",
        ])?;
        w.write_record([
            "corpus".to_string(),
            String::new(),
            self.size.to_string(),
            format!("{:.2}", self.avg_words),
            format!("{:.2}", self.avg_sentences),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
        ])?;
        for row in &self.per_label {
            w.write_record([
                "label".to_string(),
                row.label.clone(),
                row.count.to_string(),
                String::new(),
                String::new(),
                format!("{}", row.words.min),
                format!("{}", row.words.q1),
                format!("{}", row.words.median),
                format!("{}", row.words.q3),
                format!("{}", row.words.max),
                format!("{}", row.sentences.min),
                format!("{}", row.sentences.q1),
                format!("{}", row.sentences.median),
                format!("{}", row.sentences.q3),
                format!("{}", row.sentences.max),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Markdown emission: a summary line and a quartile table per label.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "### Corpus `{}`\n\n{} documents, {:.2} words and {:.2} sentences on average.\n",
            self.name, self.size, self.avg_words, self.avg_sentences
        ));
        if !self.per_label.is_empty() {
            out.push_str(
                "\n| Label | Docs | Words min/q1/med/q3/max | Sentences min/q1/med/q3/max |\n|---|---|---|---|\n",
            );
            for row in &self.per_label {
                out.push_str(&format!(
                    "| {} | {} | {}/{}/{}/{}/{} | {}/{}/{}/{}/{} |\n",
                    row.label,
                    row.count,
                    row.words.min,
                    row.words.q1,
                    row.words.median,
                    row.words.q3,
                    row.words.max,
                    row.sentences.min,
                    row.sentences.q1,
                    row.sentences.median,
                    row.sentences.q3,
                    row.sentences.max,
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Document;
    use crate::stats::OrdinalScale;

    fn doc(id: &str, text: &str, label: Option<&str>) -> Document {
        Document {
            id: id.into(),
            text: text.into(),
            gold: label.map(|l| GoldLabel::Ordinal(l.into())),
            metadata: Default::default(),
        }
    }

    #[test]
    fn averages_are_means_over_documents() {
        let corpus = Corpus {
            name: "t".into(),
            docs: vec![
                doc("a", "one two three", None),
                doc("b", "one two three four five", None),
            ],
            scale: None,
        };
        let summary = corpus_stats(&corpus, &Lexicon::builtin()).unwrap();
        assert_eq!(summary.avg_words, 4.0);
        assert_eq!(summary.avg_sentences, 1.0);
    }

    #[test]
    fn per_label_rows_follow_scale_order() {
        let corpus = Corpus {
            name: "t".into(),
            docs: vec![
                doc("a", "one two. Three four.", Some("Hard")),
                doc("b", "one", Some("Easy")),
                doc("c", "one two three", Some("Easy")),
            ],
            scale: Some(OrdinalScale::new(["Easy", "Hard"]).unwrap()),
        };
        let summary = corpus_stats(&corpus, &Lexicon::builtin()).unwrap();
        assert_eq!(summary.per_label.len(), 2);
        assert_eq!(summary.per_label[0].label, "Easy");
        assert_eq!(summary.per_label[0].count, 2);
        assert_eq!(summary.per_label[0].words.median, 2.0);
        assert_eq!(summary.per_label[1].sentences.max, 2.0);
    }

    #[test]
    fn empty_corpus_errors() {
        let corpus = Corpus {
            name: "t".into(),
            docs: vec![],
            scale: None,
        };
        assert!(corpus_stats(&corpus, &Lexicon::builtin()).is_err());
    }

    #[test]
    fn quartiles_interpolate() {
        let q = Quartiles::from_values(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(q.q1, 1.75);
        assert_eq!(q.median, 2.5);
        assert_eq!(q.q3, 3.25);
        assert!(Quartiles::from_values(&[]).is_none());
    }
}
