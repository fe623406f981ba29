//! Aggregation of all surface counts for one document.

use serde::{Deserialize, Serialize};

use super::lexicon::Lexicon;
use super::sentences::split_sentences;
use super::syllables::{count_syllables_with, SyllableExceptions};
use super::tokenize::{tokenize_with, TokenizerConfig};

/// Number of words in the sample window used by the easy/hard word split.
pub const WORD_SAMPLE_WINDOW: usize = 100;

/// Surface counts for one text, as consumed by every formula metric.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TextStats {
    /// Characters across word tokens (letters, digits, internal marks).
    pub n_chars: usize,
    /// Alphabetic characters across word tokens.
    pub n_letters: usize,
    pub n_words: usize,
    pub n_sentences: usize,
    pub n_syllables: usize,
    /// Words of exactly one syllable.
    pub n_monosyllables: usize,
    /// Words of three or more syllables.
    pub n_polysyllables: usize,
    /// Words of two or more syllables absent from the easy-word list.
    pub n_difficult_words: usize,
    /// Words of three or more syllables that are neither capitalized
    /// mid-sentence (proper-noun heuristic) nor on the easy-word list.
    pub n_complex_words: usize,
    /// Words of fewer than three syllables in the first
    /// [`WORD_SAMPLE_WINDOW`] words.
    pub n_easy_words_linsear: usize,
    /// Words of three or more syllables in the first
    /// [`WORD_SAMPLE_WINDOW`] words.
    pub n_hard_words_linsear: usize,
    /// Sentences overlapping the first [`WORD_SAMPLE_WINDOW`] words.
    pub n_sentences_linsear: usize,
    /// Words on the function-word list.
    pub n_function_words: usize,
}

/// Compute [`TextStats`] for `text` with default tokenizer settings and the
/// built-in syllable exceptions.
pub fn compute_stats(text: &str, lexicon: &Lexicon) -> TextStats {
    compute_stats_with(
        text,
        lexicon,
        &TokenizerConfig::default(),
        SyllableExceptions::builtin(),
    )
}

/// [`compute_stats`] with explicit tokenizer and syllable configuration.
pub fn compute_stats_with(
    text: &str,
    lexicon: &Lexicon,
    tokenizer: &TokenizerConfig,
    exceptions: &SyllableExceptions,
) -> TextStats {
    let (normalized, spans) = split_sentences(text, &lexicon.abbreviations);
    let mut stats = TextStats {
        n_sentences: spans.len(),
        ..TextStats::default()
    };

    let mut words_seen = 0usize;
    for span in spans {
        let tokens = tokenize_with(&normalized[span], tokenizer);
        let mut sentence_in_window = false;
        for (pos, token) in tokens.iter().enumerate() {
            if !token.is_word {
                continue;
            }
            stats.n_words += 1;
            stats.n_chars += token.char_count;
            stats.n_letters += token.letter_count;

            let syllables = count_syllables_with(&token.surface, exceptions).unwrap_or(1);
            stats.n_syllables += syllables;
            if syllables == 1 {
                stats.n_monosyllables += 1;
            }
            if syllables >= 3 {
                stats.n_polysyllables += 1;
            }

            let lower = token.surface.to_lowercase();
            let in_easy_list = lexicon.easy_words.contains(&lower);
            if syllables >= 2 && !in_easy_list {
                stats.n_difficult_words += 1;
            }
            let capitalized_mid_sentence = pos > 0
                && token
                    .surface
                    .chars()
                    .next()
                    .is_some_and(char::is_uppercase);
            if syllables >= 3 && !capitalized_mid_sentence && !in_easy_list {
                stats.n_complex_words += 1;
            }
            if lexicon.function_words.contains(&lower) {
                stats.n_function_words += 1;
            }

            if words_seen < WORD_SAMPLE_WINDOW {
                if syllables >= 3 {
                    stats.n_hard_words_linsear += 1;
                } else {
                    stats.n_easy_words_linsear += 1;
                }
                sentence_in_window = true;
            }
            words_seen += 1;
        }
        if sentence_in_window {
            stats.n_sentences_linsear += 1;
        }
    }
    stats
}
