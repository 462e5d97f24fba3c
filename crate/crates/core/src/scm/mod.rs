//! Linear Gaussian structural causal models observed through noisy
//! measurements, and the OLS coefficients they induce.
//!
//! Causal graph: `z -> x1 -> y`, `z -> x2`. Anticausal graph: `z -> q -> x2`,
//! `z -> y -> x1`. In both, `x1` is the causal (or label-generated) feature and
//! `x2` is the spurious correlate reachable from `y` only through `z`. All
//! variables are zero mean. Measurement noise `eps_x1` / `eps_x2` is added
//! to the observed covariates only.

mod closed_form;
mod ols;
mod params;
mod sample;
mod sweep;

pub use closed_form::{
    anticausal_analytic, anticausal_asymptote, anticausal_covariances, causal_analytic, causal_asymptote,
    causal_covariances, ols_from_covariances,
};
pub use ols::{fit_ols, fit_ols_full, OlsFit};
pub use params::{AnticausalParams, CausalParams, CovarianceSummary, NoisyFeature, OlsEstimate, ScmParams};
pub use sample::{sample_anticausal, sample_causal, Latent, Observation, SampleBatch};
pub use sweep::{check_grid, sweep_noise, sweep_point, MonteCarlo, NoiseSetting, SweepRow};
