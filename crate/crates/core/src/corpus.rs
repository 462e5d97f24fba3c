//! Tokenized, labeled documents with per-token rationale masks.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rng::stream;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub label: String,
    pub tokens: Vec<String>,
    /// `true` where a token lies inside a human-marked rationale.
    pub rationale_mask: Vec<bool>,
}

impl Document {
    pub fn new(
        id: impl Into<String>,
        label: impl Into<String>,
        tokens: Vec<String>,
        rationale_mask: Vec<bool>,
    ) -> Result<Self> {
        let d = Self {
            id: id.into(),
            label: label.into(),
            tokens,
            rationale_mask,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rationale_mask.len() != self.tokens.len() {
            return Err(Error::InvalidCorpus(format!(
                "document `{}`: rationale_mask has {} entries but there are {} tokens",
                self.id,
                self.rationale_mask.len(),
                self.tokens.len()
            )));
        }
        if let Some(i) = self.tokens.iter().position(String::is_empty) {
            return Err(Error::InvalidCorpus(format!(
                "document `{}`: token {i} is empty",
                self.id
            )));
        }
        Ok(())
    }

    /// `(rationale, non-rationale)` token counts.
    pub fn mass(&self) -> (usize, usize) {
        let r = self.rationale_mask.iter().filter(|m| **m).count();
        (r, self.tokens.len() - r)
    }
}

/// A nonempty collection of documents with unique ids and at most two labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    docs: Vec<Document>,
    labels: BTreeSet<String>,
}

impl Corpus {
    pub fn new(docs: Vec<Document>) -> Result<Self> {
        if docs.is_empty() {
            return Err(Error::InvalidCorpus("corpus is empty".into()));
        }
        let mut ids = BTreeSet::new();
        let mut labels = BTreeSet::new();
        for d in &docs {
            d.validate()?;
            if !ids.insert(d.id.as_str()) {
                return Err(Error::InvalidCorpus(format!("duplicate document id `{}`", d.id)));
            }
            labels.insert(d.label.clone());
        }
        if labels.len() > 2 {
            return Err(Error::InvalidCorpus(format!(
                "expected at most two labels, found {}: {:?}",
                labels.len(),
                labels
            )));
        }
        Ok(Self { docs, labels })
    }

    pub fn docs(&self) -> &[Document] {
        &self.docs
    }

    pub fn labels(&self) -> &BTreeSet<String> {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    pub fn into_docs(self) -> Vec<Document> {
        self.docs
    }

    /// Number of documents per label.
    pub fn label_counts(&self) -> BTreeMap<&str, usize> {
        let mut counts = BTreeMap::new();
        for d in &self.docs {
            *counts.entry(d.label.as_str()).or_insert(0) += 1;
        }
        counts
    }

    /// Fails unless the corpus has exactly two labels.
    pub fn require_binary(&self) -> Result<()> {
        if self.labels.len() != 2 {
            return Err(Error::InvalidCorpus(format!(
                "binary classification needs exactly two labels, found {}",
                self.labels.len()
            )));
        }
        Ok(())
    }
}

/// Token index with document frequencies. Index order is document frequency
/// descending, ties broken by the token's byte order ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    index: BTreeMap<String, usize>,
    tokens: Vec<String>,
    doc_freq: Vec<usize>,
}

impl Vocabulary {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.index.get(token).copied()
    }

    pub fn token(&self, index: usize) -> &str {
        &self.tokens[index]
    }

    pub fn doc_freq(&self, index: usize) -> usize {
        self.doc_freq[index]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    /// `(token, index, document frequency)` in index order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, usize, usize)> + '_ {
        self.tokens
            .iter()
            .zip(&self.doc_freq)
            .enumerate()
            .map(|(i, (t, &df))| (t.as_str(), i, df))
    }
}

/// Builds a vocabulary ranked by document frequency, optionally keeping only
/// the `max_size` highest-ranked tokens.
pub fn build_vocabulary(corpus: &Corpus, max_size: Option<usize>) -> Result<Vocabulary> {
    if max_size == Some(0) {
        return Err(Error::param("max_size", "must be positive"));
    }
    let mut df: BTreeMap<&str, usize> = BTreeMap::new();
    for d in corpus.docs() {
        let seen: BTreeSet<&str> = d.tokens.iter().map(String::as_str).collect();
        for t in seen {
            *df.entry(t).or_insert(0) += 1;
        }
    }
    // BTreeMap iteration is already lexicographic, and the sort is stable.
    let mut ranked: Vec<(&str, usize)> = df.into_iter().collect();
    ranked.sort_by_key(|&(_, f)| core::cmp::Reverse(f));
    if let Some(cap) = max_size {
        ranked.truncate(cap);
    }
    let mut vocab = Vocabulary {
        index: BTreeMap::new(),
        tokens: Vec::with_capacity(ranked.len()),
        doc_freq: Vec::with_capacity(ranked.len()),
    };
    for (i, (t, f)) in ranked.into_iter().enumerate() {
        vocab.index.insert(t.into(), i);
        vocab.tokens.push(t.into());
        vocab.doc_freq.push(f);
    }
    Ok(vocab)
}

fn median(values: &mut [usize]) -> f64 {
    values.sort_unstable();
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2] as f64
    } else {
        (values[n / 2 - 1] + values[n / 2]) as f64 / 2.0
    }
}

/// Median rationale length over median non-rationale length, clamped to 1.
///
/// Noising this fraction of non-rationale tokens corrupts about as many
/// tokens per document as noising every rationale token.
pub fn equal_mass_fraction(corpus: &Corpus) -> Result<f64> {
    if !corpus.docs().iter().any(|d| {
        let (r, n) = d.mass();
        r > 0 && n > 0
    }) {
        return Err(Error::UndefinedFraction(
            "no document has both rationale and non-rationale tokens".into(),
        ));
    }
    let (mut rat, mut non): (Vec<usize>, Vec<usize>) = corpus.docs().iter().map(Document::mass).unzip();
    let (mr, mn) = (median(&mut rat), median(&mut non));
    if mn == 0.0 {
        return Err(Error::UndefinedFraction("median non-rationale length is zero".into()));
    }
    Ok((mr / mn).min(1.0))
}

/// Downsamples the majority label uniformly at random so both labels have
/// the same count. Kept documents stay in their original order.
pub fn enforce_balanced_split(corpus: &Corpus, seed: u64) -> Result<Corpus> {
    corpus.require_binary()?;
    let counts = corpus.label_counts();
    let (&minor, &keep) = counts.iter().min_by_key(|(_, c)| **c).expect("two labels");
    let (&major, &have) = counts.iter().find(|(l, _)| **l != minor).expect("two labels");
    if keep == have {
        return Ok(corpus.clone());
    }
    let majority: Vec<usize> = corpus
        .docs()
        .iter()
        .enumerate()
        .filter(|(_, d)| d.label == major)
        .map(|(i, _)| i)
        .collect();
    let mut rng = stream(seed);
    let kept: BTreeSet<usize> = rand::seq::index::sample(&mut rng, majority.len(), keep)
        .into_iter()
        .map(|k| majority[k])
        .collect();
    let docs = corpus
        .docs()
        .iter()
        .enumerate()
        .filter(|(i, d)| d.label != major || kept.contains(i))
        .map(|(_, d)| d.clone())
        .collect();
    Corpus::new(docs)
}
