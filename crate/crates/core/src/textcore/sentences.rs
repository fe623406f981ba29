//! Sentence segmentation.
//!
//! A boundary is a `.`, `!`, or `?` (plus any immediately following closing
//! quotes/brackets) that is followed by whitespace and an uppercase letter,
//! or by end of input. A period is suppressed when the preceding token is a
//! known abbreviation. Text holding at least one word but no terminator is
//! a single sentence.

use std::collections::HashSet;
use std::ops::Range;

use unicode_normalization::UnicodeNormalization;

use super::tokenize::tokenize;

fn is_terminator(c: char) -> bool {
    matches!(c, '.' | '!' | '?')
}

fn is_closing(c: char) -> bool {
    matches!(c, '"' | '\'' | '\u{201d}' | '\u{2019}' | ')' | ']' | '\u{00bb}')
}

/// Split `text` into sentence spans over its NFC-normalized form.
///
/// Returns the normalized text alongside byte ranges so callers can slice
/// without re-normalizing.
pub fn split_sentences(text: &str, abbreviations: &HashSet<String>) -> (String, Vec<Range<usize>>) {
    let normalized: String = text.nfc().collect();
    let chars: Vec<(usize, char)> = normalized.char_indices().collect();
    let mut spans = Vec::new();
    let mut start = 0usize;

    let mut i = 0usize;
    while i < chars.len() {
        let (_, c) = chars[i];
        if is_terminator(c) {
            // Collapse a terminator run (`?!`, `...`) into one candidate.
            let mut j = i;
            while j + 1 < chars.len() && is_terminator(chars[j + 1].1) {
                j += 1;
            }
            let mut k = j;
            while k + 1 < chars.len() && is_closing(chars[k + 1].1) {
                k += 1;
            }
            let suppressed = c == '.' && i == j && preceding_is_abbreviation(&chars, i, abbreviations);
            if !suppressed && boundary_follows(&chars, k) {
                let end = if k + 1 < chars.len() {
                    chars[k + 1].0
                } else {
                    normalized.len()
                };
                push_span(&normalized, start..end, &mut spans);
                start = end;
                i = k + 1;
                continue;
            }
            i = j + 1;
            continue;
        }
        i += 1;
    }
    push_span(&normalized, start..normalized.len(), &mut spans);
    (normalized, spans)
}

/// Sentence texts for `text`; convenience over [`split_sentences`].
pub fn sentences(text: &str, abbreviations: &HashSet<String>) -> Vec<String> {
    let (normalized, spans) = split_sentences(text, abbreviations);
    spans
        .into_iter()
        .map(|span| normalized[span].trim().to_string())
        .collect()
}

fn push_span(normalized: &str, span: Range<usize>, spans: &mut Vec<Range<usize>>) {
    // A fragment only counts when it contains a word.
    if !tokenize(&normalized[span.clone()]).is_empty() {
        spans.push(span);
    }
}

fn boundary_follows(chars: &[(usize, char)], term_idx: usize) -> bool {
    let mut i = term_idx + 1;
    if i >= chars.len() {
        return true;
    }
    if !chars[i].1.is_whitespace() {
        return false;
    }
    while i < chars.len() && chars[i].1.is_whitespace() {
        i += 1;
    }
    if i >= chars.len() {
        return true;
    }
    chars[i].1.is_uppercase()
}

fn preceding_is_abbreviation(
    chars: &[(usize, char)],
    term_idx: usize,
    abbreviations: &HashSet<String>,
) -> bool {
    let mut word = String::new();
    let mut i = term_idx;
    while i > 0 {
        let c = chars[i - 1].1;
        // Allow internal periods so `e.g.` matches the listed `e.g`.
        if c.is_alphanumeric() || c == '.' {
            word.push(c);
            i -= 1;
        } else {
            break;
        }
    }
    if word.is_empty() {
        return false;
    }
    let word: String = word.chars().rev().collect();
    let word = word.trim_matches('.').to_lowercase();
    !word.is_empty() && abbreviations.contains(&word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textcore::Lexicon;

    fn count(text: &str) -> usize {
        sentences(text, &Lexicon::builtin().abbreviations).len()
    }

    #[test]
    fn empty_has_no_sentences() {
        assert_eq!(count(""), 0);
        assert_eq!(count("   \n "), 0);
    }

    #[test]
    fn terminator_free_clause_is_one_sentence() {
        assert_eq!(count("Hello"), 1);
    }

    #[test]
    fn abbreviation_suppresses_boundary() {
        assert_eq!(count("Dr. Smith arrived. It rained!"), 2);
    }

    #[test]
    fn lowercase_continuation_is_not_a_boundary() {
        assert_eq!(count("She waited... then left."), 1);
        assert_eq!(count("Version 2.5 shipped today."), 1);
    }

    #[test]
    fn exclamation_and_question_split() {
        assert_eq!(count("Stop! Who goes there? Nobody."), 3);
    }

    #[test]
    fn closing_quote_after_terminator() {
        assert_eq!(count("He said \"Go.\" Then he left."), 2);
    }

    #[test]
    fn trailing_punctuation_fragment_is_not_a_sentence() {
        assert_eq!(count("It works. !!!"), 1);
    }

    #[test]
    fn spans_cover_words_in_order() {
        let (normalized, spans) =
            split_sentences("One two. Three four.", &Lexicon::builtin().abbreviations);
        assert_eq!(spans.len(), 2);
        assert!(normalized[spans[0].clone()].contains("two"));
        assert!(normalized[spans[1].clone()].contains("Three"));
    }

    #[test]
    fn multi_abbreviation_sentence_stays_whole() {
        assert_eq!(count("See fig. 3 in sec. 2 for details."), 1);
    }
}
