//! Word tokenization.
//!
//! A word is a maximal run of letters, digits, apostrophes, or hyphens,
//! with leading/trailing apostrophes and hyphens stripped so only internal
//! ones survive (`it's`, `state-of-the-art`). Everything else (punctuation,
//! whitespace, symbols) separates tokens and is never emitted.

use unicode_normalization::UnicodeNormalization;

/// One word-level token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Surface form as it appears in the (NFC-normalized) input.
    pub surface: String,
    /// Whether the token counts as a word. Number-only tokens are words
    /// unless [`TokenizerConfig::numbers_are_words`] is off.
    pub is_word: bool,
    /// Characters in `surface`.
    pub char_count: usize,
    /// Alphabetic characters in `surface` (digits and punctuation excluded).
    pub letter_count: usize,
}

/// Tokenizer knobs.
#[derive(Debug, Clone)]
pub struct TokenizerConfig {
    /// Treat tokens made only of digits as words (default true).
    pub numbers_are_words: bool,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        Self {
            numbers_are_words: true,
        }
    }
}

fn is_token_char(c: char) -> bool {
    c.is_alphanumeric() || c == '\'' || c == '\u{2019}' || c == '-'
}

fn make_token(raw: &str, config: &TokenizerConfig) -> Option<Token> {
    let surface = raw.trim_matches(|c: char| c == '\'' || c == '\u{2019}' || c == '-');
    if surface.is_empty() {
        return None;
    }
    let char_count = surface.chars().count();
    let letter_count = surface.chars().filter(|c| c.is_alphabetic()).count();
    let has_alnum = surface.chars().any(|c| c.is_alphanumeric());
    if !has_alnum {
        return None;
    }
    let is_word = letter_count > 0 || config.numbers_are_words;
    Some(Token {
        surface: surface.to_string(),
        is_word,
        char_count,
        letter_count,
    })
}

/// Split `text` into word tokens, in input order.
///
/// The input is NFC-normalized first; empty input yields an empty vector.
pub fn tokenize(text: &str) -> Vec<Token> {
    tokenize_with(text, &TokenizerConfig::default())
}

/// [`tokenize`] with explicit configuration.
pub fn tokenize_with(text: &str, config: &TokenizerConfig) -> Vec<Token> {
    let normalized: String = text.nfc().collect();
    let mut tokens = Vec::new();
    let mut run = String::new();
    for c in normalized.chars() {
        if is_token_char(c) {
            run.push(c);
        } else if !run.is_empty() {
            if let Some(tok) = make_token(&run, config) {
                tokens.push(tok);
            }
            run.clear();
        }
    }
    if let Some(tok) = make_token(&run, config) {
        tokens.push(tok);
    }
    tokens
}
