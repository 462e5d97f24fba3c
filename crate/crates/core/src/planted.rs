//! Synthetic corpora with a planted confounder.
//!
//! Every document carries three kinds of tokens:
//!
//! * causal tokens, which agree with the label with probability
//!   `causal_strength` in every split and are marked as rationales;
//! * spurious tokens, which agree with the label with probability
//!   `confound_strength` in the training and in-domain test splits but with
//!   probability one half in the out-of-domain split;
//! * filler tokens drawn uniformly from a label-independent vocabulary.
//!
//! Causal and spurious groups each have [`GROUP_WORDS`] words per polarity,
//! so the group a token belongs to is visible from its spelling
//! (`causal+2`, `spurious-0`, `filler017`). Token positions are shuffled
//! within each document.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::corpus::{Corpus, Document};
use crate::error::{Error, Result};
use crate::rng::{mix, stream, StreamRng};

/// Distinct words per polarity in the causal and spurious groups.
pub const GROUP_WORDS: usize = 4;

pub const POSITIVE: &str = "pos";
pub const NEGATIVE: &str = "neg";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlantedCorpusSpec {
    pub n_train: usize,
    pub n_id_test: usize,
    pub n_ood_test: usize,
    /// Causal token slots per document.
    pub n_causal_tokens: usize,
    /// Spurious token slots per document.
    pub n_spurious_tokens: usize,
    /// Size of the filler vocabulary.
    pub n_filler_tokens: usize,
    pub causal_strength: f64,
    pub confound_strength: f64,
    /// Total tokens per document; the slots not taken by causal and
    /// spurious tokens are filler.
    pub doc_length: usize,
    pub seed: u64,
}

impl PlantedCorpusSpec {
    /// The configuration the directional noise experiments are calibrated on.
    pub const fn calibration() -> Self {
        Self {
            n_train: 2000,
            n_id_test: 1000,
            n_ood_test: 1000,
            n_causal_tokens: 6,
            n_spurious_tokens: 6,
            n_filler_tokens: 200,
            causal_strength: 0.9,
            confound_strength: 0.9,
            doc_length: 30,
            seed: 20_211_019,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, n) in [
            ("n_train", self.n_train),
            ("n_id_test", self.n_id_test),
            ("n_ood_test", self.n_ood_test),
            ("n_causal_tokens", self.n_causal_tokens),
            ("n_spurious_tokens", self.n_spurious_tokens),
            ("n_filler_tokens", self.n_filler_tokens),
            ("doc_length", self.doc_length),
        ] {
            if n == 0 {
                return Err(Error::param(name, "must be positive"));
            }
        }
        for (name, p) in [
            ("causal_strength", self.causal_strength),
            ("confound_strength", self.confound_strength),
        ] {
            if !(p > 0.5 && p <= 1.0) {
                return Err(Error::param(name, format!("must lie in (0.5, 1], got {p}")));
            }
        }
        if self.n_causal_tokens + self.n_spurious_tokens > self.doc_length {
            return Err(Error::param(
                "doc_length",
                format!(
                    "{} cannot hold {} causal and {} spurious tokens",
                    self.doc_length, self.n_causal_tokens, self.n_spurious_tokens
                ),
            ));
        }
        Ok(())
    }
}

/// Training, in-domain test and out-of-domain test corpora.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedCorpora {
    pub train: Corpus,
    pub id_test: Corpus,
    pub ood_test: Corpus,
}

/// Token group encoded in a planted token's spelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenGroup {
    Causal { positive: bool },
    Spurious { positive: bool },
    Filler,
}

pub fn token_group(token: &str) -> Option<TokenGroup> {
    let polarity = |rest: &str| match rest.as_bytes().first() {
        Some(b'+') => Some(true),
        Some(b'-') => Some(false),
        _ => None,
    };
    if let Some(rest) = token.strip_prefix("causal") {
        polarity(rest).map(|positive| TokenGroup::Causal { positive })
    } else if let Some(rest) = token.strip_prefix("spurious") {
        polarity(rest).map(|positive| TokenGroup::Spurious { positive })
    } else if token.starts_with("filler") {
        Some(TokenGroup::Filler)
    } else {
        None
    }
}

fn polar_word(rng: &mut StreamRng, group: &str, positive: bool) -> String {
    let sign = if positive { '+' } else { '-' };
    format!("{group}{sign}{}", rng.random_range(0..GROUP_WORDS))
}

fn generate_split(spec: &PlantedCorpusSpec, prefix: &str, n: usize, spurious_agree: f64, seed: u64) -> Result<Corpus> {
    let mut rng = stream(seed);
    let width = format!("{}", spec.n_filler_tokens - 1).len();
    let mut docs = Vec::with_capacity(n);
    for i in 0..n {
        let positive = rng.random_bool(0.5);
        let mut slots: Vec<(String, bool)> = Vec::with_capacity(spec.doc_length);
        for _ in 0..spec.n_causal_tokens {
            let agree = rng.random_bool(spec.causal_strength);
            slots.push((polar_word(&mut rng, "causal", positive == agree), true));
        }
        for _ in 0..spec.n_spurious_tokens {
            let agree = rng.random_bool(spurious_agree);
            slots.push((polar_word(&mut rng, "spurious", positive == agree), false));
        }
        while slots.len() < spec.doc_length {
            let w = rng.random_range(0..spec.n_filler_tokens);
            slots.push((format!("filler{w:0width$}"), false));
        }
        slots.shuffle(&mut rng);
        let (tokens, mask) = slots.into_iter().unzip();
        let label = if positive { POSITIVE } else { NEGATIVE };
        docs.push(Document::new(format!("{prefix}-{i:06}"), label, tokens, mask)?);
    }
    Corpus::new(docs)
}

/// Generates the three splits; each split draws from its own stream
/// `mix(spec.seed, split_index)`.
pub fn generate_planted_corpus(spec: &PlantedCorpusSpec) -> Result<PlantedCorpora> {
    spec.validate()?;
    Ok(PlantedCorpora {
        train: generate_split(spec, "train", spec.n_train, spec.confound_strength, mix(spec.seed, 0))?,
        id_test: generate_split(spec, "id", spec.n_id_test, spec.confound_strength, mix(spec.seed, 1))?,
        ood_test: generate_split(spec, "ood", spec.n_ood_test, 0.5, mix(spec.seed, 2))?,
    })
}
