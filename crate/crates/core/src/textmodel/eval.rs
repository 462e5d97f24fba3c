use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::tfidf::TfidfModel;
use crate::corpus::{Corpus, Document};
use crate::error::{Error, Result};

/// Assignment of the two class names to the `+1` and `-1` sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    pub positive: String,
    pub negative: String,
}

impl LabelMap {
    /// The lexicographically larger label is positive (`pos` over `neg`).
    pub fn from_corpus(c: &Corpus) -> Result<Self> {
        c.require_binary()?;
        let mut it = c.labels().iter();
        let negative = it.next().expect("two labels").clone();
        let positive = it.next().expect("two labels").clone();
        Ok(Self { positive, negative })
    }

    pub fn new(positive: impl Into<String>, negative: impl Into<String>) -> Result<Self> {
        let (positive, negative) = (positive.into(), negative.into());
        if positive == negative {
            return Err(Error::param("labels", "positive and negative labels coincide"));
        }
        Ok(Self { positive, negative })
    }

    /// `+1` or `-1`; unknown labels are an error.
    pub fn sign(&self, label: &str) -> Result<i8> {
        if label == self.positive {
            Ok(1)
        } else if label == self.negative {
            Ok(-1)
        } else {
            Err(Error::InvalidCorpus(format!("unknown label `{label}`")))
        }
    }

    pub fn name(&self, sign: i8) -> &str {
        if sign >= 0 {
            &self.positive
        } else {
            &self.negative
        }
    }
}

/// A binary scorer: positive decision values favor the positive label.
pub trait Classifier {
    fn decision_value(&self, features: &TfidfModel, doc: &Document) -> f64;

    /// Ties at zero go to the positive class.
    fn predict(&self, features: &TfidfModel, doc: &Document) -> i8 {
        if self.decision_value(features, doc) >= 0.0 {
            1
        } else {
            -1
        }
    }
}

pub fn predictions<C: Classifier + ?Sized>(model: &C, features: &TfidfModel, c: &Corpus) -> Vec<i8> {
    c.docs().iter().map(|d| model.predict(features, d)).collect()
}

/// Fraction of documents whose predicted label matches the gold label.
/// Documents whose label is neither side of `labels` count as errors.
pub fn evaluate<C: Classifier + ?Sized>(
    model: &C,
    features: &TfidfModel,
    labels: &LabelMap,
    c: &Corpus,
) -> Result<f64> {
    if c.is_empty() {
        return Err(Error::InvalidCorpus("cannot evaluate on an empty corpus".into()));
    }
    let correct = c
        .docs()
        .iter()
        .filter(|d| labels.name(model.predict(features, d)) == d.label)
        .count();
    Ok(correct as f64 / c.len() as f64)
}
