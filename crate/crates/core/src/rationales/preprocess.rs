//! Text preprocessing for the rationale analytics: lowercase, stop-word
//! removal, and deterministic suffix-rule lemmatization.
//!
//! The lemmatizer is a fixed rule table (plural, -ing, -ed, comparative
//! endings) with an exceptions file consulted first. It approximates a
//! dictionary lemmatizer; tail divergence is expected and acceptable.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;

use super::RationalesError;
use crate::textcore::tokenize;

const DEFAULT_STOPWORDS: &str = include_str!("../../assets/stopwords_en.txt");
const DEFAULT_EXCEPTIONS: &str = include_str!("../../assets/lemmatizer_exceptions.txt");

/// Stop-word set, lowercased.
#[derive(Debug, Clone)]
pub struct Stopwords {
    words: HashSet<String>,
}

impl Stopwords {
    pub fn builtin() -> Self {
        Self::parse(DEFAULT_STOPWORDS)
    }

    pub fn parse(contents: &str) -> Self {
        let words = contents
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::to_lowercase)
            .collect();
        Self { words }
    }

    pub fn from_file(path: &Path) -> Result<Self, RationalesError> {
        let contents = fs::read_to_string(path).map_err(|source| RationalesError::AssetIo {
            path: path.display().to_string(),
            source,
        })?;
        Ok(Self::parse(&contents))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Suffix-rule lemmatizer with an exceptions table.
#[derive(Debug, Clone)]
pub struct Lemmatizer {
    exceptions: HashMap<String, String>,
}

impl Lemmatizer {
    pub fn builtin() -> Self {
        Self::parse(DEFAULT_EXCEPTIONS)
    }

    pub fn parse(exceptions: &str) -> Self {
        let mut map = HashMap::new();
        for line in exceptions.lines() {
            let line = line.split('#').next().unwrap_or("");
            let mut parts = line.split_whitespace();
            if let (Some(form), Some(lemma)) = (parts.next(), parts.next()) {
                map.insert(form.to_lowercase(), lemma.to_lowercase());
            }
        }
        Self { exceptions: map }
    }

    pub fn from_file(path: &Path) -> Result<Self, RationalesError> {
        let contents = fs::read_to_string(path).map_err(|source| RationalesError::AssetIo {
            path: path.display().to_string(),
            source,
        })?;
        Ok(Self::parse(&contents))
    }

    /// Lemmatize one lowercase word: exceptions first, then the first
    /// matching suffix rule. Single pass.
    pub fn lemma(&self, word: &str) -> String {
        if let Some(lemma) = self.exceptions.get(word) {
            return lemma.clone();
        }
        let chars: Vec<char> = word.chars().collect();
        if !chars.iter().all(|c| c.is_ascii_alphabetic()) {
            return word.to_string();
        }

        // Plurals.
        if let Some(stem) = word.strip_suffix("ies") {
            if stem.len() >= 2 {
                return format!("{stem}y");
            }
        }
        if let Some(stem) = word.strip_suffix("sses") {
            return format!("{stem}ss");
        }
        for suffix in ["ches", "shes", "xes", "zes"] {
            if let Some(stem) = word.strip_suffix("es") {
                if word.ends_with(suffix) {
                    return stem.to_string();
                }
            }
        }
        if let Some(stem) = word.strip_suffix("ses") {
            return format!("{stem}se");
        }
        if word.ends_with('s')
            && !word.ends_with("ss")
            && !word.ends_with("us")
            && !word.ends_with("is")
            && word.len() > 3
        {
            return word[..word.len() - 1].to_string();
        }

        // Past and progressive forms.
        if let Some(stem) = word.strip_suffix("ied") {
            if stem.len() >= 2 {
                return format!("{stem}y");
            }
        }
        if word.ends_with("eed") {
            return word[..word.len() - 1].to_string();
        }
        if let Some(stem) = word.strip_suffix("ing") {
            if stem.len() >= 3 {
                return undouble(stem);
            }
        }
        if let Some(stem) = word.strip_suffix("ed") {
            if stem.len() >= 3 {
                return undouble(stem);
            }
        }

        // Comparatives and superlatives.
        if let Some(stem) = word.strip_suffix("iest") {
            if stem.len() >= 3 {
                return format!("{stem}y");
            }
        }
        if let Some(stem) = word.strip_suffix("ier") {
            if stem.len() >= 3 {
                return format!("{stem}y");
            }
        }
        if let Some(stem) = word.strip_suffix("est") {
            if stem.len() >= 4 {
                return undouble(stem);
            }
        }
        if let Some(stem) = word.strip_suffix("er") {
            if stem.len() >= 4 {
                return undouble(stem);
            }
        }
        word.to_string()
    }
}

// stopp -> stop, runn -> run; ll/ss/zz stay doubled (fall, press, buzz).
fn undouble(stem: &str) -> String {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    if n >= 2
        && chars[n - 1] == chars[n - 2]
        && !matches!(chars[n - 1], 'l' | 's' | 'z')
        && !"aeiou".contains(chars[n - 1])
    {
        return stem[..stem.len() - 1].to_string();
    }
    stem.to_string()
}

/// Lowercase, tokenize, drop stop words, lemmatize.
pub fn preprocess(text: &str, stopwords: &Stopwords, lemmatizer: &Lemmatizer) -> Vec<String> {
    tokenize(text)
        .into_iter()
        .filter(|t| t.is_word)
        .map(|t| t.surface.to_lowercase())
        .filter(|w| !stopwords.contains(w))
        .map(|w| lemmatizer.lemma(&w))
        .collect()
}
