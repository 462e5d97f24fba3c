//! Core algorithms for studying how measurement noise on causal and
//! spurious features shifts what a linear model learns.
//!
//! Two halves live here:
//!
//! * [`scm`]: the causal and anticausal linear Gaussian structural models,
//!   their observed second moments, every closed-form OLS coefficient under
//!   noisy measurement of one covariate, the infinite-noise limits, a seeded
//!   sampler, and an empirical OLS fit used as an independent check.
//! * [`corpus`], [`noiser`], [`textmodel`] and [`planted`]: token-level
//!   documents with rationale masks, the rationale-targeted random token
//!   replacement, TF-IDF features with a linear SVM and multinomial Naive
//!   Bayes, and a synthetic corpus with a planted confounder.
//!
//! The crate is `no_std` and only needs `alloc`; file formats, parallel
//! sweeps and the command line live in the `spurious-lab` crate.
#![no_std]

extern crate alloc;

pub mod corpus;
pub mod error;
pub mod noiser;
pub mod planted;
pub mod rng;
pub mod scm;
pub mod textmodel;

pub use error::{Error, Result};
