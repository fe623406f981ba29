//! Seeded subsampling without replacement.
//!
//! Portability contract: randomness comes from `ChaCha20` seeded with
//! `seed_from_u64`, indices are drawn with the rejection sampler below, and
//! selection is a partial Fisher-Yates over document positions. Any
//! implementation following the same recipe reproduces the same sample.

use std::collections::BTreeMap;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::{Corpus, CorpusError, GoldLabel};

/// Subsampling strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleStrategy {
    /// `n` documents over the whole corpus.
    Uniform { n: usize },
    /// `n` documents per ordinal label.
    PerClass { n: usize },
}

// Unbiased draw from [0, bound): reject the low zone so every residue is
// equally likely.
fn uniform_below(rng: &mut ChaCha20Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let threshold = bound.wrapping_neg() % bound; // 2^64 mod bound
    loop {
        let r = rng.next_u64();
        if r >= threshold {
            return r % bound;
        }
    }
}

// First `n` elements of a Fisher-Yates shuffle of `pool`.
fn draw(pool: &mut Vec<usize>, n: usize, rng: &mut ChaCha20Rng) -> Vec<usize> {
    let take = n.min(pool.len());
    for i in 0..take {
        let j = i + uniform_below(rng, (pool.len() - i) as u64) as usize;
        pool.swap(i, j);
    }
    pool[..take].to_vec()
}

/// Sample `corpus` without replacement. Identical seeds produce identical
/// samples; document order follows the source corpus.
///
/// When a stratum holds fewer than `n` documents, all of them are taken and
/// a warning is logged.
pub fn sample(
    corpus: &Corpus,
    strategy: SampleStrategy,
    seed: u64,
) -> Result<Corpus, CorpusError> {
    if corpus.docs.is_empty() {
        return Err(CorpusError::EmptyCorpus {
            name: corpus.name.clone(),
        });
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut selected: Vec<usize> = match strategy {
        SampleStrategy::Uniform { n } => {
            if n < corpus.docs.len() {
                let mut pool: Vec<usize> = (0..corpus.docs.len()).collect();
                draw(&mut pool, n, &mut rng)
            } else {
                if n > corpus.docs.len() {
                    log::warn!(
                        "{}: requested {n} documents, only {} available",
                        corpus.name,
                        corpus.docs.len()
                    );
                }
                (0..corpus.docs.len()).collect()
            }
        }
        SampleStrategy::PerClass { n } => {
            // Strata keyed by label; iteration order is the scale order when
            // available, else lexicographic (BTreeMap), so draws are stable.
            let mut strata: BTreeMap<String, Vec<usize>> = BTreeMap::new();
            for (idx, doc) in corpus.docs.iter().enumerate() {
                match &doc.gold {
                    Some(GoldLabel::Ordinal(label)) => {
                        strata.entry(label.clone()).or_default().push(idx)
                    }
                    _ => return Err(CorpusError::OrdinalRequired),
                }
            }
            let order: Vec<String> = match &corpus.scale {
                Some(scale) => scale
                    .labels()
                    .iter()
                    .filter(|l| strata.contains_key(*l))
                    .cloned()
                    .collect(),
                None => strata.keys().cloned().collect(),
            };
            let mut all = Vec::new();
            for label in order {
                let pool = strata.get_mut(&label).expect("stratum exists");
                if pool.len() < n {
                    log::warn!(
                        "{}: class {label:?} has only {} documents, requested {n}",
                        corpus.name,
                        pool.len()
                    );
                }
                all.extend(draw(pool, n, &mut rng));
            }
            all
        }
    };
    selected.sort_unstable();
    Ok(Corpus {
        name: corpus.name.clone(),
        docs: selected.iter().map(|&i| corpus.docs[i].clone()).collect(),
        scale: corpus.scale.clone(),
    })
}
