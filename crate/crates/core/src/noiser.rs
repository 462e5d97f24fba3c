//! Replaces a fraction of rationale (or non-rationale) tokens with tokens
//! drawn uniformly from a vocabulary.
//!
//! Each document gets its own ChaCha8 stream seeded by
//! `mix(spec.seed, fnv1a(doc.id))`. The stream first chooses which
//! positions to replace, then draws the replacement tokens, so results are
//! independent of document order and of how a corpus is split across
//! threads.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::corpus::{Corpus, Document, Vocabulary};
use crate::error::{Error, Result};
use crate::rng::{fnv1a, mix, stream, StreamRng};

/// Absorbs representation error in `fraction * count` (for example
/// `0.35 * 10 = 3.4999999999999996`) before rounding half up.
const ROUNDING_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NoiseTarget {
    Rationale,
    NonRationale,
}

impl NoiseTarget {
    pub fn name(self) -> &'static str {
        match self {
            Self::Rationale => "rationale",
            Self::NonRationale => "non-rationale",
        }
    }

    fn selects(self, in_rationale: bool) -> bool {
        match self {
            Self::Rationale => in_rationale,
            Self::NonRationale => !in_rationale,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub target: NoiseTarget,
    pub fraction: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn new(target: NoiseTarget, fraction: f64, seed: u64) -> Result<Self> {
        let s = Self { target, fraction, seed };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.fraction) {
            return Err(Error::param(
                "fraction",
                format!("must lie in [0, 1], got {}", self.fraction),
            ));
        }
        Ok(())
    }
}

/// `floor(fraction * count + 1/2)`, capped at `count`.
pub fn replacement_count(fraction: f64, count: usize) -> usize {
    let x = fraction * count as f64 + 0.5 + ROUNDING_SLACK;
    (libm::floor(x) as usize).min(count)
}

fn plan_with_stream(d: &Document, spec: &NoiseSpec) -> Result<(Vec<usize>, StreamRng)> {
    spec.validate()?;
    let targets: Vec<usize> = d
        .rationale_mask
        .iter()
        .enumerate()
        .filter(|(_, m)| spec.target.selects(**m))
        .map(|(i, _)| i)
        .collect();
    let k = replacement_count(spec.fraction, targets.len());
    let mut rng = stream(mix(spec.seed, fnv1a(&d.id)));
    let mut chosen: Vec<usize> = rand::seq::index::sample(&mut rng, targets.len(), k)
        .into_iter()
        .map(|i| targets[i])
        .collect();
    chosen.sort_unstable();
    Ok((chosen, rng))
}

/// Positions (ascending) that [`inject`] will overwrite.
pub fn plan_replacements(d: &Document, spec: &NoiseSpec) -> Result<Vec<usize>> {
    plan_with_stream(d, spec).map(|(p, _)| p)
}

/// Copy of `d` with the planned positions overwritten by independent
/// uniform draws from `vocab`. A draw may equal the original token.
pub fn inject(d: &Document, spec: &NoiseSpec, vocab: &Vocabulary) -> Result<Document> {
    if vocab.is_empty() {
        return Err(Error::EmptyVocabulary);
    }
    let (plan, mut rng) = plan_with_stream(d, spec)?;
    let mut out = d.clone();
    for i in plan {
        let t = rng.random_range(0..vocab.len());
        out.tokens[i] = String::from(vocab.token(t));
    }
    Ok(out)
}

/// Applies [`inject`] to every document, preserving order.
pub fn corrupt_corpus(c: &Corpus, spec: &NoiseSpec, vocab: &Vocabulary) -> Result<Corpus> {
    let docs = c
        .docs()
        .iter()
        .map(|d| inject(d, spec, vocab))
        .collect::<Result<Vec<_>>>()?;
    Corpus::new(docs)
}
