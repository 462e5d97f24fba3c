//! Multinomial Naive Bayes with additive (Laplace) smoothing.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::eval::{Classifier, LabelMap};
use super::tfidf::TfidfModel;
use crate::corpus::{Corpus, Document, Vocabulary};
use crate::error::{Error, Result};

/// Index 0 holds the positive class, index 1 the negative class.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveBayesModel {
    pub labels: LabelMap,
    pub alpha: f64,
    pub vocab: Vocabulary,
    pub log_prior: [f64; 2],
    /// `log_likelihood[k][t] = ln((count_k(t) + alpha) / (total_k + alpha |V|))`
    pub log_likelihood: [Vec<f64>; 2],
}

pub fn train_naive_bayes(c: &Corpus, vocab: &Vocabulary, labels: &LabelMap, alpha: f64) -> Result<NaiveBayesModel> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::param("alpha", format!("must be positive, got {alpha}")));
    }
    if vocab.is_empty() {
        return Err(Error::EmptyVocabulary);
    }
    let mut docs = [0usize; 2];
    let mut counts = [vec![0.0f64; vocab.len()], vec![0.0f64; vocab.len()]];
    for d in c.docs() {
        let k = usize::from(labels.sign(&d.label)? < 0);
        docs[k] += 1;
        for t in &d.tokens {
            if let Some(i) = vocab.index_of(t) {
                counts[k][i] += 1.0;
            }
        }
    }
    if docs.contains(&0) {
        return Err(Error::InvalidCorpus(
            "Naive Bayes needs at least one document per class".into(),
        ));
    }
    let n = c.len() as f64;
    let v = vocab.len() as f64;
    let log_likelihood = counts.map(|row| {
        let total: f64 = row.iter().sum();
        let denom = libm::log(total + alpha * v);
        row.iter().map(|&x| libm::log(x + alpha) - denom).collect()
    });
    Ok(NaiveBayesModel {
        labels: labels.clone(),
        alpha,
        vocab: vocab.clone(),
        log_prior: docs.map(|k| libm::log(k as f64 / n)),
        log_likelihood,
    })
}

impl NaiveBayesModel {
    /// Unnormalized class log posteriors `[positive, negative]`.
    pub fn joint_log_likelihood(&self, doc: &Document) -> [f64; 2] {
        let mut out = self.log_prior;
        for t in &doc.tokens {
            if let Some(i) = self.vocab.index_of(t) {
                out[0] += self.log_likelihood[0][i];
                out[1] += self.log_likelihood[1][i];
            }
        }
        out
    }
}

impl Classifier for NaiveBayesModel {
    /// Log posterior odds of the positive class; the TF-IDF model is unused.
    fn decision_value(&self, _features: &TfidfModel, doc: &Document) -> f64 {
        let [p, n] = self.joint_log_likelihood(doc);
        p - n
    }
}
