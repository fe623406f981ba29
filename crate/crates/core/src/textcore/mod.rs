//! Deterministic lexical analysis: tokenization, sentence segmentation,
//! syllable estimation, and the word lists feeding every metric.
//!
//! Everything here is pure after lexicon load; a [`Lexicon`] is immutable
//! shared data and all functions are safe to call concurrently.

mod lexicon;
mod sentences;
mod stats;
mod syllables;
mod tokenize;

use thiserror::Error;

pub use lexicon::{load_word_list, Lexicon};
pub use sentences::{sentences, split_sentences};
pub use stats::{compute_stats, compute_stats_with, TextStats, WORD_SAMPLE_WINDOW};
pub use syllables::{count_syllables, count_syllables_with, SyllableExceptions};
pub use tokenize::{tokenize, tokenize_with, Token, TokenizerConfig};

/// Errors from lexical analysis.
#[derive(Debug, Error)]
pub enum TextError {
    /// Input to a word-level operation was not a word token.
    #[error("not a word token: {token:?}")]
    NotAWord { token: String },
    /// A word-list file could not be read.
    #[error("failed to read word list {path}")]
    WordListIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[cfg(test)]
mod invariant_tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn syllables_at_least_one(word in "[a-zA-Z]{1,12}") {
            prop_assert!(count_syllables(&word).unwrap() >= 1);
        }

        #[test]
        fn tokenize_is_idempotent(text in "[ -~]{0,80}") {
            let once: Vec<String> = tokenize(&text).into_iter().map(|t| t.surface).collect();
            let rejoined = once.join(" ");
            let twice: Vec<String> = tokenize(&rejoined).into_iter().map(|t| t.surface).collect();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn stats_totals_are_consistent(text in "[a-zA-Z .!?,']{0,200}") {
            let lex = Lexicon::builtin();
            let stats = compute_stats(&text, &lex);
            let words: usize = sentences(&text, &lex.abbreviations)
                .iter()
                .map(|s| tokenize(s).iter().filter(|t| t.is_word).count())
                .sum();
            prop_assert_eq!(stats.n_words, words);
            prop_assert!(stats.n_monosyllables + stats.n_polysyllables <= stats.n_words);
            if stats.n_words > 0 {
                prop_assert!(stats.n_syllables >= stats.n_words);
                prop_assert!(stats.n_sentences >= 1);
            }
            let mono = sentences(&text, &lex.abbreviations)
                .iter()
                .flat_map(|s| tokenize(s))
                .filter(|t| t.is_word)
                .filter(|t| count_syllables(&t.surface).unwrap_or(1) == 1)
                .count();
            prop_assert_eq!(stats.n_monosyllables, mono);
        }
    }

    #[test]
    fn sentence_splitting_is_pure() {
        let lex = Lexicon::builtin();
        let text = "Dr. Smith arrived. It rained! We stayed in.";
        let first = sentences(text, &lex.abbreviations);
        let second = sentences(text, &lex.abbreviations);
        assert_eq!(first, second);
        assert_eq!(first.len(), 3);
    }
}
