use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::corpus::{Corpus, Document, Vocabulary};
use crate::error::{Error, Result};

/// Sparse vector with strictly increasing indices and nonzero values.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SparseVector {
    entries: Vec<(usize, f64)>,
}

impl SparseVector {
    /// Builds from `(index, value)` pairs; zero values are dropped. Fails on
    /// unsorted or repeated indices and non-finite values.
    pub fn new(entries: Vec<(usize, f64)>) -> Result<Self> {
        if entries.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::param("entries", "indices must be strictly increasing"));
        }
        if entries.iter().any(|(_, v)| !v.is_finite()) {
            return Err(Error::param("entries", "values must be finite"));
        }
        Ok(Self {
            entries: entries.into_iter().filter(|(_, v)| *v != 0.0).collect(),
        })
    }

    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.entries.iter().map(|(_, v)| v * v).sum())
    }

    /// Dot product with a dense vector; indices past its end contribute 0.
    pub fn dot(&self, dense: &[f64]) -> f64 {
        self.entries
            .iter()
            .filter_map(|&(i, v)| dense.get(i).map(|w| w * v))
            .sum()
    }
}

/// Inverse document frequencies over a fixed vocabulary, using
/// `idf(t) = ln((1 + N) / (1 + df(t))) + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TfidfModel {
    pub vocab: Vocabulary,
    pub idf: Vec<f64>,
    pub doc_count: usize,
}

pub fn fit_tfidf(corpus: &Corpus, vocab: &Vocabulary) -> Result<TfidfModel> {
    let mut df = vec![0usize; vocab.len()];
    for d in corpus.docs() {
        let seen: BTreeSet<usize> = d.tokens.iter().filter_map(|t| vocab.index_of(t)).collect();
        for i in seen {
            df[i] += 1;
        }
    }
    let n = corpus.len() as f64;
    let idf = df
        .iter()
        .map(|&f| libm::log((1.0 + n) / (1.0 + f as f64)) + 1.0)
        .collect();
    Ok(TfidfModel {
        vocab: vocab.clone(),
        idf,
        doc_count: corpus.len(),
    })
}

/// Raw counts times idf, L2-normalized. Out-of-vocabulary tokens are
/// ignored; a document with none in vocabulary maps to the zero vector.
pub fn transform(model: &TfidfModel, d: &Document) -> SparseVector {
    let mut counts: BTreeMap<usize, f64> = BTreeMap::new();
    for t in &d.tokens {
        if let Some(i) = model.vocab.index_of(t) {
            *counts.entry(i).or_insert(0.0) += 1.0;
        }
    }
    let mut entries: Vec<(usize, f64)> = counts.into_iter().map(|(i, c)| (i, c * model.idf[i])).collect();
    let norm = libm::sqrt(entries.iter().map(|(_, v)| v * v).sum());
    if norm > 0.0 {
        for e in &mut entries {
            e.1 /= norm;
        }
    }
    SparseVector { entries }
}
