//! Word lists backing difficult-word detection, function-word counting,
//! and abbreviation-aware sentence splitting.
//!
//! Each list is a plain UTF-8 file, one entry per line, `#` starting a
//! comment. Entries are lowercased on load. Built-in defaults are embedded
//! in the binary; any list can be replaced by pointing at another file.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use super::TextError;

const DEFAULT_EASY_WORDS: &str = include_str!("../../assets/easy_words.txt");
const DEFAULT_FUNCTION_WORDS: &str = include_str!("../../assets/function_words.txt");
const DEFAULT_ABBREVIATIONS: &str = include_str!("../../assets/abbreviations.txt");

/// Immutable word lists shared by all text analysis.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    /// Words familiar to young readers; membership exempts a word from
    /// being counted as difficult.
    pub easy_words: HashSet<String>,
    /// Determiners, prepositions, pronouns, auxiliaries, conjunctions.
    pub function_words: HashSet<String>,
    /// Tokens whose trailing period does not end a sentence (`dr`, `etc`).
    pub abbreviations: HashSet<String>,
}

fn parse_word_list(contents: &str) -> HashSet<String> {
    contents
        .lines()
        .map(|line| match line.find('#') {
            Some(idx) => &line[..idx],
            None => line,
        })
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(str::to_lowercase)
        .collect()
}

impl Lexicon {
    /// Lexicon with the embedded default lists.
    pub fn builtin() -> Self {
        Self {
            easy_words: parse_word_list(DEFAULT_EASY_WORDS),
            function_words: parse_word_list(DEFAULT_FUNCTION_WORDS),
            abbreviations: parse_word_list(DEFAULT_ABBREVIATIONS),
        }
    }

    /// Empty lexicon; useful for tests that control membership explicitly.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Replace the easy-word list from a file.
    pub fn with_easy_words_file(mut self, path: &Path) -> Result<Self, TextError> {
        self.easy_words = load_word_list(path)?;
        Ok(self)
    }

    /// Replace the function-word list from a file.
    pub fn with_function_words_file(mut self, path: &Path) -> Result<Self, TextError> {
        self.function_words = load_word_list(path)?;
        Ok(self)
    }

    /// Replace the abbreviation list from a file.
    pub fn with_abbreviations_file(mut self, path: &Path) -> Result<Self, TextError> {
        self.abbreviations = load_word_list(path)?;
        Ok(self)
    }
}

/// Load a one-word-per-line list (UTF-8, `#` comments).
pub fn load_word_list(path: &Path) -> Result<HashSet<String>, TextError> {
    let contents = fs::read_to_string(path).map_err(|source| TextError::WordListIo {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_word_list(&contents))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let set = parse_word_list("# header\ncat\n\n  Dog  # inline\n#only comment\n");
        assert_eq!(set.len(), 2);
        assert!(set.contains("cat"));
        assert!(set.contains("dog"));
    }

    #[test]
    fn builtin_lists_are_nonempty_and_lowercase() {
        let lex = Lexicon::builtin();
        assert!(lex.easy_words.len() > 500);
        assert!(lex.function_words.len() > 100);
        assert!(lex.abbreviations.contains("dr"));
        for set in [&lex.easy_words, &lex.function_words, &lex.abbreviations] {
            assert!(set.iter().all(|w| *w == w.to_lowercase()));
        }
    }
}
