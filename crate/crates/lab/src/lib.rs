//! File formats, parallel sweeps and reports on top of `spurious-core`.
//!
//! * [`jsonl`]: corpus files with per-token rationale masks.
//! * [`noise_sweep`]: retrain-and-evaluate sweeps over rationale /
//!   non-rationale noise fractions.
//! * [`scm_sweep`]: analytic and Monte Carlo OLS estimates along a grid of
//!   measurement noise variances.
//! * [`report`]: the CSV formats both sweeps emit.
//! * [`dump`]: flat text dump of linear model weights.
//! * [`synth`]: writes planted-confounder corpora to disk.

pub mod dump;
pub mod error;
pub mod jsonl;
pub mod noise_sweep;
pub mod parallel;
pub mod report;
pub mod scm_sweep;
pub mod synth;

pub use error::{LabError, Result};
