//! Formula metrics over [`TextStats`]: raw surface counts and the eight
//! classic readability tests.
//!
//! All functions are pure. Values are generic over [`Real`]; callers that
//! just want `f64` can use the crate-root aliases.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::num::Real;
use crate::textcore::TextStats;

/// Identifier for every metric the harness can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricId {
    Words,
    Sentences,
    AvgSentenceLength,
    AvgReadingTime,
    Syllables,
    Monosyllables,
    Polysyllables,
    DifficultWords,
    FunctionWordFraction,
    Ari,
    ColemanLiau,
    DaleChall,
    Fkgl,
    Fkre,
    GunningFog,
    LinsearWrite,
    Smog,
    LlmJudge0Shot,
    LlmJudge5Shot,
    LlmJudgeContinuous,
    ExternalAvg,
    ExternalMax,
}

/// Report grouping, mirroring the usual metric taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricGroup {
    SurfaceForm,
    Psycholinguistic,
    ModelBased,
}

/// Whether larger values mean harder or easier text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    HarderIsLarger,
    EasierIsLarger,
}

impl MetricId {
    /// Stable lowercase identifier used in CSV output.
    pub fn as_str(self) -> &'static str {
        match self {
            MetricId::Words => "n_words",
            MetricId::Sentences => "n_sentences",
            MetricId::AvgSentenceLength => "avg_sentence_length",
            MetricId::AvgReadingTime => "avg_reading_time_s",
            MetricId::Syllables => "n_syllables",
            MetricId::Monosyllables => "n_monosyllables",
            MetricId::Polysyllables => "n_polysyllables",
            MetricId::DifficultWords => "n_difficult_words",
            MetricId::FunctionWordFraction => "function_word_fraction",
            MetricId::Ari => "ari",
            MetricId::ColemanLiau => "coleman_liau",
            MetricId::DaleChall => "dale_chall",
            MetricId::Fkgl => "fkgl",
            MetricId::Fkre => "fkre",
            MetricId::GunningFog => "gunning_fog",
            MetricId::LinsearWrite => "linsear_write",
            MetricId::Smog => "smog",
            MetricId::LlmJudge0Shot => "llm_judge_0shot",
            MetricId::LlmJudge5Shot => "llm_judge_5shot",
            MetricId::LlmJudgeContinuous => "llm_judge_continuous",
            MetricId::ExternalAvg => "external_avg",
            MetricId::ExternalMax => "external_max",
        }
    }

    /// Parse the identifier produced by [`MetricId::as_str`].
    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|id| id.as_str() == s)
    }

    /// Human-facing name for reports.
    pub fn display_name(self) -> &'static str {
        match self {
            MetricId::Words => "# Words",
            MetricId::Sentences => "# Sentences",
            MetricId::AvgSentenceLength => "Avg. Sentence Length",
            MetricId::AvgReadingTime => "Avg. Reading Time (s)",
            MetricId::Syllables => "# Syllables",
            MetricId::Monosyllables => "# Monosyllables",
            MetricId::Polysyllables => "# Polysyllables",
            MetricId::DifficultWords => "# Difficult Words",
            MetricId::FunctionWordFraction => "Function Word Fraction",
            MetricId::Ari => "Automatic Readability Index",
            MetricId::ColemanLiau => "Coleman Liau Index",
            MetricId::DaleChall => "Dale-Chall Readability Score",
            MetricId::Fkgl => "Flesch-Kincaid Grade Level",
            MetricId::Fkre => "Flesch-Kincaid Reading Ease",
            MetricId::GunningFog => "Gunning Fog",
            MetricId::LinsearWrite => "Linsear Write Formula",
            MetricId::Smog => "SMOG Index",
            MetricId::LlmJudge0Shot => "LLM-as-a-judge (0-shot)",
            MetricId::LlmJudge5Shot => "LLM-as-a-judge (5-shot)",
            MetricId::LlmJudgeContinuous => "LLM-as-a-judge (continuous 0-100)",
            MetricId::ExternalAvg => "External Scorer (Avg)",
            MetricId::ExternalMax => "External Scorer (Max)",
        }
    }

    pub fn group(self) -> MetricGroup {
        match self {
            MetricId::Words
            | MetricId::Sentences
            | MetricId::AvgSentenceLength
            | MetricId::AvgReadingTime
            | MetricId::Syllables
            | MetricId::Monosyllables
            | MetricId::Polysyllables
            | MetricId::DifficultWords
            | MetricId::FunctionWordFraction => MetricGroup::SurfaceForm,
            MetricId::Ari
            | MetricId::ColemanLiau
            | MetricId::DaleChall
            | MetricId::Fkgl
            | MetricId::Fkre
            | MetricId::GunningFog
            | MetricId::LinsearWrite
            | MetricId::Smog => MetricGroup::Psycholinguistic,
            MetricId::LlmJudge0Shot
            | MetricId::LlmJudge5Shot
            | MetricId::LlmJudgeContinuous
            | MetricId::ExternalAvg
            | MetricId::ExternalMax => MetricGroup::ModelBased,
        }
    }

    /// Larger FKRE and continuous judge scores mean easier text; every
    /// other metric grows with difficulty.
    pub fn orientation(self) -> Orientation {
        match self {
            MetricId::Fkre | MetricId::LlmJudgeContinuous => Orientation::EasierIsLarger,
            _ => Orientation::HarderIsLarger,
        }
    }

    /// The nine surface-form metrics.
    pub const SURFACE: [MetricId; 9] = [
        MetricId::Words,
        MetricId::Sentences,
        MetricId::AvgSentenceLength,
        MetricId::AvgReadingTime,
        MetricId::Syllables,
        MetricId::Monosyllables,
        MetricId::Polysyllables,
        MetricId::DifficultWords,
        MetricId::FunctionWordFraction,
    ];

    /// The eight readability tests.
    pub const PSYCHOLINGUISTIC: [MetricId; 8] = [
        MetricId::Ari,
        MetricId::ColemanLiau,
        MetricId::DaleChall,
        MetricId::Fkgl,
        MetricId::Fkre,
        MetricId::GunningFog,
        MetricId::LinsearWrite,
        MetricId::Smog,
    ];

    /// Every metric id, in canonical report order.
    pub const ALL: [MetricId; 22] = [
        MetricId::Words,
        MetricId::Sentences,
        MetricId::AvgSentenceLength,
        MetricId::AvgReadingTime,
        MetricId::Syllables,
        MetricId::Monosyllables,
        MetricId::Polysyllables,
        MetricId::DifficultWords,
        MetricId::FunctionWordFraction,
        MetricId::Ari,
        MetricId::ColemanLiau,
        MetricId::DaleChall,
        MetricId::Fkgl,
        MetricId::Fkre,
        MetricId::GunningFog,
        MetricId::LinsearWrite,
        MetricId::Smog,
        MetricId::LlmJudge0Shot,
        MetricId::LlmJudge5Shot,
        MetricId::LlmJudgeContinuous,
        MetricId::ExternalAvg,
        MetricId::ExternalMax,
    ];
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One computed metric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricValue<R> {
    pub id: MetricId,
    pub value: R,
    pub orientation: Orientation,
}

impl<R: Real> MetricValue<R> {
    fn new(id: MetricId, value: R) -> Self {
        Self {
            id,
            value,
            orientation: id.orientation(),
        }
    }
}

/// Denominator used by the Linsear Write ratio.
///
/// `SampleSentences` is the classical formula. `SampleWords` divides by the
/// word count of the sample instead, kept behind this switch for
/// compatibility with sources that print it that way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinsearDenominator {
    SampleSentences,
    SampleWords,
}

/// Tuning knobs shared by the metric functions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricConfig {
    /// Milliseconds of reading time attributed to each character.
    pub reading_ms_per_char: f64,
    /// See [`LinsearDenominator`].
    pub linsear_denominator: LinsearDenominator,
    /// Feed the Dale-Chall difficult-word term as a percentage (the usual
    /// reading). Off means the raw fraction enters the formula literally.
    pub dale_chall_percent: bool,
}

impl Default for MetricConfig {
    fn default() -> Self {
        Self {
            reading_ms_per_char: 14.69,
            linsear_denominator: LinsearDenominator::SampleSentences,
            dale_chall_percent: true,
        }
    }
}

/// Metric evaluation failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    /// A ratio had a zero denominator (empty text, no sentences, ...).
    #[error("{metric}: degenerate input, {requirement}")]
    DegenerateInput {
        metric: MetricId,
        requirement: &'static str,
    },
}

fn require(
    metric: MetricId,
    ok: bool,
    requirement: &'static str,
) -> Result<(), MetricError> {
    if ok {
        Ok(())
    } else {
        Err(MetricError::DegenerateInput {
            metric,
            requirement,
        })
    }
}

fn ratio<R: Real>(num: usize, den: usize) -> R {
    R::from_count(num) / R::from_count(den)
}

/// `ceil(4.71 chars/words + 0.5 words/sentences - 21.43)`.
pub fn ari<R: Real>(stats: &TextStats) -> Result<MetricValue<R>, MetricError> {
    require(MetricId::Ari, stats.n_words > 0, "needs words > 0")?;
    require(MetricId::Ari, stats.n_sentences > 0, "needs sentences > 0")?;
    let value = R::from_f64(4.71).unwrap() * ratio::<R>(stats.n_chars, stats.n_words)
        + R::from_f64(0.5).unwrap() * ratio::<R>(stats.n_words, stats.n_sentences)
        - R::from_f64(21.43).unwrap();
    Ok(MetricValue::new(MetricId::Ari, value.ceil()))
}

/// `0.0588 L - 0.296 S - 15.8` with L/S letters and sentences per 100 words.
pub fn coleman_liau<R: Real>(stats: &TextStats) -> Result<MetricValue<R>, MetricError> {
    require(MetricId::ColemanLiau, stats.n_words > 0, "needs words > 0")?;
    let hundred = R::from_f64(100.0).unwrap();
    let l = ratio::<R>(stats.n_letters, stats.n_words) * hundred;
    let s = ratio::<R>(stats.n_sentences, stats.n_words) * hundred;
    let value = R::from_f64(0.0588).unwrap() * l - R::from_f64(0.296).unwrap() * s
        - R::from_f64(15.8).unwrap();
    Ok(MetricValue::new(MetricId::ColemanLiau, value))
}

/// `floor(64 - 0.95 (difficult share) - 0.69 words/sentences)`.
///
/// With [`MetricConfig::dale_chall_percent`] set (the default) the difficult
/// share enters as a percentage of words.
pub fn dale_chall<R: Real>(
    stats: &TextStats,
    config: &MetricConfig,
) -> Result<MetricValue<R>, MetricError> {
    require(MetricId::DaleChall, stats.n_words > 0, "needs words > 0")?;
    require(
        MetricId::DaleChall,
        stats.n_sentences > 0,
        "needs sentences > 0",
    )?;
    let mut share = ratio::<R>(stats.n_difficult_words, stats.n_words);
    if config.dale_chall_percent {
        share = share * R::from_f64(100.0).unwrap();
    }
    let value = R::from_f64(64.0).unwrap()
        - R::from_f64(0.95).unwrap() * share
        - R::from_f64(0.69).unwrap() * ratio::<R>(stats.n_words, stats.n_sentences);
    Ok(MetricValue::new(MetricId::DaleChall, value.floor()))
}

/// `206.835 - 1.015 words/sentences - 84.6 syllables/words`; easier is larger.
pub fn fkre<R: Real>(stats: &TextStats) -> Result<MetricValue<R>, MetricError> {
    require(MetricId::Fkre, stats.n_words > 0, "needs words > 0")?;
    require(MetricId::Fkre, stats.n_sentences > 0, "needs sentences > 0")?;
    let value = R::from_f64(206.835).unwrap()
        - R::from_f64(1.015).unwrap() * ratio::<R>(stats.n_words, stats.n_sentences)
        - R::from_f64(84.6).unwrap() * ratio::<R>(stats.n_syllables, stats.n_words);
    Ok(MetricValue::new(MetricId::Fkre, value))
}

/// `0.39 words/sentences + 11.8 syllables/words - 15.59`.
pub fn fkgl<R: Real>(stats: &TextStats) -> Result<MetricValue<R>, MetricError> {
    require(MetricId::Fkgl, stats.n_words > 0, "needs words > 0")?;
    require(MetricId::Fkgl, stats.n_sentences > 0, "needs sentences > 0")?;
    let value = R::from_f64(0.39).unwrap() * ratio::<R>(stats.n_words, stats.n_sentences)
        + R::from_f64(11.8).unwrap() * ratio::<R>(stats.n_syllables, stats.n_words)
        - R::from_f64(15.59).unwrap();
    Ok(MetricValue::new(MetricId::Fkgl, value))
}

/// `0.4 (words/sentences + 100 complex/words)`.
pub fn gunning_fog<R: Real>(stats: &TextStats) -> Result<MetricValue<R>, MetricError> {
    require(MetricId::GunningFog, stats.n_words > 0, "needs words > 0")?;
    require(
        MetricId::GunningFog,
        stats.n_sentences > 0,
        "needs sentences > 0",
    )?;
    let value = R::from_f64(0.4).unwrap()
        * (ratio::<R>(stats.n_words, stats.n_sentences)
            + R::from_f64(100.0).unwrap() * ratio::<R>(stats.n_complex_words, stats.n_words));
    Ok(MetricValue::new(MetricId::GunningFog, value))
}

/// Easy/hard weighted ratio over the first 100-word sample:
/// `r = (3 hard + easy) / sentences`, score `r/2` when `r > 20` else `r/2 - 1`.
pub fn linsear_write<R: Real>(
    stats: &TextStats,
    config: &MetricConfig,
) -> Result<MetricValue<R>, MetricError> {
    let sample_words = stats.n_easy_words_linsear + stats.n_hard_words_linsear;
    let denominator = match config.linsear_denominator {
        LinsearDenominator::SampleSentences => stats.n_sentences_linsear,
        LinsearDenominator::SampleWords => sample_words,
    };
    require(
        MetricId::LinsearWrite,
        denominator > 0,
        "needs a non-empty word sample",
    )?;
    let points = R::from_f64(3.0).unwrap() * R::from_count(stats.n_hard_words_linsear)
        + R::from_count(stats.n_easy_words_linsear);
    let r = points / R::from_count(denominator);
    let two = R::from_f64(2.0).unwrap();
    let value = if r > R::from_f64(20.0).unwrap() {
        r / two
    } else {
        r / two - R::one()
    };
    Ok(MetricValue::new(MetricId::LinsearWrite, value))
}

/// `1.043 sqrt(polysyllables * 30/sentences) + 3.1291`.
pub fn smog<R: Real>(stats: &TextStats) -> Result<MetricValue<R>, MetricError> {
    require(MetricId::Smog, stats.n_sentences > 0, "needs sentences > 0")?;
    let value = R::from_f64(1.043).unwrap()
        * (R::from_count(stats.n_polysyllables) * R::from_f64(30.0).unwrap()
            / R::from_count(stats.n_sentences))
        .sqrt()
        + R::from_f64(3.1291).unwrap();
    Ok(MetricValue::new(MetricId::Smog, value))
}

/// Compute one surface-form metric.
pub fn surface_metric<R: Real>(
    id: MetricId,
    stats: &TextStats,
    config: &MetricConfig,
) -> Result<MetricValue<R>, MetricError> {
    let value = match id {
        MetricId::Words => R::from_count(stats.n_words),
        MetricId::Sentences => R::from_count(stats.n_sentences),
        MetricId::Syllables => R::from_count(stats.n_syllables),
        MetricId::Monosyllables => R::from_count(stats.n_monosyllables),
        MetricId::Polysyllables => R::from_count(stats.n_polysyllables),
        MetricId::DifficultWords => R::from_count(stats.n_difficult_words),
        MetricId::AvgReadingTime => {
            R::from_count(stats.n_chars) * R::from_f64(config.reading_ms_per_char).unwrap()
                / R::from_f64(1000.0).unwrap()
        }
        MetricId::AvgSentenceLength => {
            require(id, stats.n_sentences > 0, "needs sentences > 0")?;
            ratio::<R>(stats.n_words, stats.n_sentences)
        }
        MetricId::FunctionWordFraction => {
            require(id, stats.n_words > 0, "needs words > 0")?;
            ratio::<R>(stats.n_function_words, stats.n_words)
        }
        other => panic!("{other} is not a surface metric"),
    };
    Ok(MetricValue::new(id, value))
}

/// Compute any formula metric (surface or readability test) by id.
///
/// Model-based ids are produced by the judge and external-score adapters,
/// not from [`TextStats`].
pub fn compute_metric<R: Real>(
    id: MetricId,
    stats: &TextStats,
    config: &MetricConfig,
) -> Result<MetricValue<R>, MetricError> {
    match id {
        MetricId::Ari => ari(stats),
        MetricId::ColemanLiau => coleman_liau(stats),
        MetricId::DaleChall => dale_chall(stats, config),
        MetricId::Fkgl => fkgl(stats),
        MetricId::Fkre => fkre(stats),
        MetricId::GunningFog => gunning_fog(stats),
        MetricId::LinsearWrite => linsear_write(stats, config),
        MetricId::Smog => smog(stats),
        id if id.group() == MetricGroup::SurfaceForm => surface_metric(id, stats, config),
        other => panic!("{other} is not computable from TextStats"),
    }
}

/// All nine surface metrics; ratio metrics carry their degenerate-input
/// errors while raw counts are always emitted.
pub fn surface_metrics<R: Real>(
    stats: &TextStats,
    config: &MetricConfig,
) -> Vec<(MetricId, Result<MetricValue<R>, MetricError>)> {
    MetricId::SURFACE
        .iter()
        .map(|&id| (id, surface_metric(id, stats, config)))
        .collect()
}

/// All eight readability tests.
pub fn psycholinguistic_metrics<R: Real>(
    stats: &TextStats,
    config: &MetricConfig,
) -> Vec<(MetricId, Result<MetricValue<R>, MetricError>)> {
    MetricId::PSYCHOLINGUISTIC
        .iter()
        .map(|&id| (id, compute_metric(id, stats, config)))
        .collect()
}
