//! Linear SVM trained in the primal by stochastic subgradient descent.
//!
//! Objective, for `n` examples and `lambda = 1 / (C n)`:
//!
//! ```text
//! lambda/2 (|w|^2 + b^2) + 1/n sum_i max(0, 1 - y_i (w.x_i + b))
//! ```
//!
//! which is `(1/C) 1/2 |w|^2 + sum hinge` scaled by `1/n`. The bias is handled
//! as a weight on a constant feature and is regularized with the rest. Step
//! `t` (counted from 1 across all epochs) uses `eta_t = 1 / (lambda t)`.
//! Each epoch visits every example once in an order drawn from a ChaCha8
//! stream seeded with `hyper.seed`. The weight vector is stored as
//! `scale * v` so the shrink step costs O(1).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;

use super::eval::Classifier;
use super::tfidf::{transform, SparseVector, TfidfModel};
use crate::corpus::Document;
use crate::error::{Error, Result};
use crate::rng::stream;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearHyper {
    /// Inverse regularization strength.
    pub c: f64,
    pub epochs: usize,
    pub seed: u64,
}

impl Default for LinearHyper {
    fn default() -> Self {
        Self {
            c: 1.0,
            epochs: 10,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearModel {
    pub weights: Vec<f64>,
    pub bias: f64,
    pub hyper: LinearHyper,
}

impl LinearModel {
    pub fn score(&self, x: &SparseVector) -> f64 {
        x.dot(&self.weights) + self.bias
    }
}

impl Classifier for LinearModel {
    fn decision_value(&self, features: &TfidfModel, doc: &Document) -> f64 {
        self.score(&transform(features, doc))
    }
}

/// Trains on `features` with labels in `{-1, +1}` over a `dim`-dimensional
/// feature space.
pub fn train_linear(features: &[SparseVector], labels: &[i8], dim: usize, hyper: &LinearHyper) -> Result<LinearModel> {
    if features.len() != labels.len() {
        return Err(Error::param(
            "labels",
            format!("{} labels for {} examples", labels.len(), features.len()),
        ));
    }
    if let Some(bad) = labels.iter().find(|y| **y != 1 && **y != -1) {
        return Err(Error::param("labels", format!("label {bad} is not -1 or +1")));
    }
    if !labels.contains(&1) || !labels.contains(&-1) {
        return Err(Error::param("labels", "need at least one example of each class"));
    }
    if !(hyper.c.is_finite() && hyper.c > 0.0) || hyper.epochs == 0 {
        return Err(Error::param("hyper", "C must be positive and epochs at least 1"));
    }
    if let Some(x) = features.iter().find(|x| x.entries().last().is_some_and(|e| e.0 >= dim)) {
        return Err(Error::param(
            "features",
            format!("index {} outside dimension {dim}", x.entries().last().unwrap().0),
        ));
    }

    let n = features.len();
    let lambda = 1.0 / (hyper.c * n as f64);
    // weights = scale * v, bias = scale * vb
    let mut v = vec![0.0; dim];
    let mut vb = 0.0;
    let mut scale = 1.0;
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = stream(hyper.seed);
    let mut t = 0u64;

    for _ in 0..hyper.epochs {
        order.shuffle(&mut rng);
        for &i in &order {
            t += 1;
            let eta = 1.0 / (lambda * t as f64);
            let y = f64::from(labels[i]);
            let margin = y * scale * (features[i].dot(&v) + vb);

            let shrink = 1.0 - eta * lambda;
            if shrink <= 0.0 {
                v.iter_mut().for_each(|w| *w = 0.0);
                vb = 0.0;
                scale = 1.0;
            } else {
                scale *= shrink;
            }
            if margin < 1.0 {
                let step = eta * y / scale;
                for &(j, x) in features[i].entries() {
                    v[j] += step * x;
                }
                vb += step;
            }
            if scale < 1e-9 {
                v.iter_mut().for_each(|w| *w *= scale);
                vb *= scale;
                scale = 1.0;
            }
        }
    }

    Ok(LinearModel {
        weights: v.into_iter().map(|w| w * scale).collect(),
        bias: vb * scale,
        hyper: *hyper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> SparseVector {
        SparseVector::new(vec![(i, 1.0)]).unwrap()
    }

    #[test]
    fn separable_pair() {
        let hyper = LinearHyper {
            c: 100.0,
            epochs: 50,
            seed: 1,
        };
        let xs = [e(0), e(1)];
        let m = train_linear(&xs, &[1, -1], 2, &hyper).unwrap();
        assert!(m.score(&xs[0]) > 0.0 && m.score(&xs[1]) < 0.0);

        let flipped = train_linear(&xs, &[-1, 1], 2, &hyper).unwrap();
        assert!(flipped.score(&xs[0]) < 0.0 && flipped.score(&xs[1]) > 0.0);
        for (a, b) in m.weights.iter().zip(&flipped.weights) {
            assert!((a + b).abs() < 1e-12);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let xs: Vec<_> = (0..30).map(|i| e(i % 5)).collect();
        let ys: Vec<i8> = (0..30).map(|i| if i % 5 < 2 { 1 } else { -1 }).collect();
        let h = LinearHyper::default();
        let a = train_linear(&xs, &ys, 5, &h).unwrap();
        let b = train_linear(&xs, &ys, 5, &h).unwrap();
        assert_eq!(a, b);
        assert!(a.weights.iter().all(|w| w.is_finite()));
    }

    #[test]
    fn rejects_bad_input() {
        let xs = [e(0), e(1)];
        let h = LinearHyper::default();
        assert!(train_linear(&xs, &[1, 1], 2, &h).is_err());
        assert!(train_linear(&xs, &[1, 0], 2, &h).is_err());
        assert!(train_linear(&xs, &[1], 2, &h).is_err());
        assert!(train_linear(&xs, &[1, -1], 1, &h).is_err());
        let bad = LinearHyper { c: 0.0, ..h };
        assert!(train_linear(&xs, &[1, -1], 2, &bad).is_err());
    }
}
