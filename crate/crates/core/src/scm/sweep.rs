use alloc::format;
use alloc::vec::Vec;

use super::closed_form::{anticausal_analytic, causal_analytic};
use super::ols::fit_ols;
use super::params::{OlsEstimate, ScmParams};
use super::sample::{sample_anticausal, sample_causal};
use crate::error::{Error, Result};
use crate::rng::mix;

/// Which model and which noisy covariate a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NoiseSetting {
    CausalX1,
    AnticausalX1,
    AnticausalX2,
}

impl NoiseSetting {
    pub const ALL: [NoiseSetting; 3] = [Self::CausalX1, Self::AnticausalX1, Self::AnticausalX2];

    pub fn name(self) -> &'static str {
        match self {
            Self::CausalX1 => "causal-x1",
            Self::AnticausalX1 => "anticausal-x1",
            Self::AnticausalX2 => "anticausal-x2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Monte Carlo companion to the analytic column of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonteCarlo {
    pub n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub eps: f64,
    pub analytic: OlsEstimate,
    pub empirical: Option<OlsEstimate>,
}

/// Evaluates one grid point. The Monte Carlo seed is `mix(mc.seed, index)`,
/// so a point's result does not depend on which other points are computed.
pub fn sweep_point(
    setting: NoiseSetting,
    params: &ScmParams,
    eps: f64,
    index: usize,
    mc: Option<MonteCarlo>,
) -> Result<SweepRow> {
    let seed = |m: MonteCarlo| mix(m.seed, index as u64);
    let (analytic, empirical) = match (setting, params) {
        (NoiseSetting::CausalX1, ScmParams::Causal(p)) => {
            let p = p.with_eps_x1(eps);
            let mc = mc
                .map(|m| sample_causal(&p, m.n, seed(m)).and_then(|b| fit_ols(&b)))
                .transpose()?;
            (causal_analytic(&p)?, mc)
        }
        (NoiseSetting::AnticausalX1 | NoiseSetting::AnticausalX2, ScmParams::Anticausal(p)) => {
            let p = if setting == NoiseSetting::AnticausalX1 {
                p.with_eps_x1(eps)
            } else {
                p.with_eps_x2(eps)
            };
            let mc = mc
                .map(|m| sample_anticausal(&p, m.n, seed(m)).and_then(|b| fit_ols(&b)))
                .transpose()?;
            (anticausal_analytic(&p)?, mc)
        }
        _ => {
            return Err(Error::param(
                "setting",
                format!("{} does not match the supplied model parameters", setting.name()),
            ))
        }
    };
    Ok(SweepRow {
        eps,
        analytic,
        empirical,
    })
}

/// Validates a noise grid: nonempty, finite, nonnegative, ascending.
pub fn check_grid(eps_grid: &[f64]) -> Result<()> {
    if eps_grid.is_empty() {
        return Err(Error::param("eps_grid", "grid is empty"));
    }
    if let Some(bad) = eps_grid.iter().find(|e| !e.is_finite() || **e < 0.0) {
        return Err(Error::param("eps_grid", format!("invalid noise variance {bad}")));
    }
    if eps_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::param("eps_grid", "grid must be sorted ascending"));
    }
    Ok(())
}

/// Analytic (and optionally Monte Carlo) estimates along a grid of noise
/// variances for the covariate named by `setting`. The other covariate's
/// noise stays as given in `params`.
pub fn sweep_noise(
    setting: NoiseSetting,
    params: &ScmParams,
    eps_grid: &[f64],
    mc: Option<MonteCarlo>,
) -> Result<Vec<SweepRow>> {
    check_grid(eps_grid)?;
    eps_grid
        .iter()
        .enumerate()
        .map(|(i, &eps)| sweep_point(setting, params, eps, i, mc))
        .collect()
}
