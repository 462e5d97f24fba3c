//! Bag-of-words text classifiers: TF-IDF features with a linear SVM, and
//! multinomial Naive Bayes over raw token counts.

mod bayes;
mod eval;
mod linear;
mod tfidf;

pub use bayes::{train_naive_bayes, NaiveBayesModel};
pub use eval::{evaluate, predictions, Classifier, LabelMap};
pub use linear::{train_linear, LinearHyper, LinearModel};
pub use tfidf::{fit_tfidf, transform, SparseVector, TfidfModel};
