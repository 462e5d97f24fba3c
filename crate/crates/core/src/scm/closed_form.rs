//! Observed second moments and closed-form OLS coefficients.
//!
//! The noisy formulas follow from the clean ones by substitution: measurement
//! noise on a covariate enters the observed moments exactly like extra
//! variance on that covariate's own structural noise term.

use alloc::format;

use super::params::{AnticausalParams, CausalParams, CovarianceSummary, NoisyFeature, OlsEstimate};
use crate::error::{Error, Result};

pub fn causal_covariances(p: &CausalParams) -> Result<CovarianceSummary> {
    p.validate()?;
    let clean_x1 = p.b * p.b * p.var_uz + p.var_ux1;
    CovarianceSummary::new(
        clean_x1 + p.var_eps_x1,
        p.c * p.c * p.var_uz + p.var_ux2 + p.var_eps_x2,
        p.b * p.c * p.var_uz,
        p.a * clean_x1,
        p.a * p.b * p.c * p.var_uz,
    )
}

pub fn anticausal_covariances(p: &AnticausalParams) -> Result<CovarianceSummary> {
    p.validate()?;
    let var_y = p.b * p.b * p.var_uz + p.var_uy;
    CovarianceSummary::new(
        p.d * p.d * var_y + p.var_ux1 + p.var_eps_x1,
        p.c * p.c * (p.a * p.a * p.var_uz + p.var_uq) + p.var_ux2 + p.var_eps_x2,
        p.a * p.b * p.c * p.d * p.var_uz,
        p.d * var_y,
        p.a * p.b * p.c * p.var_uz,
    )
}

/// Solves the two-covariate normal equations in closed form.
pub fn ols_from_covariances(c: &CovarianceSummary) -> Result<OlsEstimate> {
    c.validate()?;
    let det = c.determinant();
    if det <= f64::EPSILON * c.var_x1 * c.var_x2 {
        return Err(Error::Singular(format!("determinant {det} is numerically zero")));
    }
    let beta1 = (c.var_x2 * c.cov_x1y - c.cov_x1x2 * c.cov_x2y) / det;
    let beta2 = (c.var_x1 * c.cov_x2y - c.cov_x1x2 * c.cov_x1y) / det;
    Ok(OlsEstimate::new(beta1, beta2))
}

/// Clean causal determinant with `x2`'s noise folded into its own variance:
/// `var_uz (b^2 var_ux2 + c^2 var_ux1) + var_ux1 var_ux2`.
fn causal_det(p: &CausalParams, var_ux2: f64) -> f64 {
    p.var_uz * (p.b * p.b * var_ux2 + p.c * p.c * p.var_ux1) + p.var_ux1 * var_ux2
}

/// OLS coefficients of the causal model with `x1` measured under noise.
///
/// `beta1 = a / (1 + lambda)` and
/// `beta2 = a b c eps var_uz / (det + eps (c^2 var_uz + var_ux2))`, where
/// `lambda = eps (c^2 var_uz + var_ux2) / det` is linear in the noise
/// variance. Noise on `x2` only widens `x2`'s own variance, so it is folded
/// into `var_ux2` before evaluating.
pub fn causal_analytic(p: &CausalParams) -> Result<OlsEstimate> {
    p.validate()?;
    let var_ux2 = p.var_ux2 + p.var_eps_x2;
    let det = causal_det(p, var_ux2);
    let x2_var = p.c * p.c * p.var_uz + var_ux2;
    let lambda = p.var_eps_x1 * x2_var / det;
    let beta1 = p.a / (1.0 + lambda);
    let beta2 = p.a * p.c * p.b * p.var_eps_x1 * p.var_uz / (det + p.var_eps_x1 * x2_var);
    Ok(OlsEstimate::new(beta1, beta2).with_lambda(lambda))
}

/// Limit of [`causal_analytic`] as the noise on `x1` grows without bound.
pub fn causal_asymptote(p: &CausalParams) -> Result<OlsEstimate> {
    p.validate()?;
    let x2_var = p.c * p.c * p.var_uz + p.var_ux2 + p.var_eps_x2;
    Ok(OlsEstimate::new(0.0, p.a * p.c * p.b * p.var_uz / x2_var))
}

/// Clean anticausal coefficients as functions of the two covariate noise
/// variances. Returns `(beta1, beta2, delta)`.
fn anticausal_clean(p: &AnticausalParams, var_ux1: f64, var_ux2: f64) -> (f64, f64, f64) {
    let (a2, b2, c2, d2) = (p.a * p.a, p.b * p.b, p.c * p.c, p.d * p.d);
    let var_y = b2 * p.var_uz + p.var_uy;
    let delta = (d2 * b2 * p.var_uz + var_ux1 + d2 * p.var_uy) * (var_ux2 + c2 * p.var_uq)
        + (var_ux1 + d2 * p.var_uy) * c2 * a2 * p.var_uz;
    let beta1 = p.d * (a2 * c2 * p.var_uz * p.var_uy + (c2 * p.var_uq + var_ux2) * var_y) / delta;
    let beta2 = p.a * p.b * p.c * p.var_uz * var_ux1 / delta;
    (beta1, beta2, delta)
}

/// OLS coefficients of the anticausal model.
///
/// With noise on one covariate the clean expressions are evaluated with that
/// covariate's structural variance widened by the noise variance, and the
/// attenuation factor is populated:
///
/// * noise on `x1`: `lambda = eps1 (c^2 a^2 var_uz + c^2 var_uq + var_ux2) / delta`,
///   `beta1 = beta1_clean / (1 + lambda)`;
/// * noise on `x2`: `lambda = eps2 (d^2 b^2 var_uz + var_ux1 + d^2 var_uy) / delta`,
///   `beta2 = beta2_clean / (1 + lambda)`.
///
/// With noise on both covariates the coefficients come from the observed
/// moments and `lambda` is left empty.
pub fn anticausal_analytic(p: &AnticausalParams) -> Result<OlsEstimate> {
    p.validate()?;
    let (eps1, eps2) = (p.var_eps_x1, p.var_eps_x2);
    if eps1 > 0.0 && eps2 > 0.0 {
        return ols_from_covariances(&anticausal_covariances(p)?);
    }
    let (a2, b2, c2, d2) = (p.a * p.a, p.b * p.b, p.c * p.c, p.d * p.d);
    let (_, _, delta) = anticausal_clean(p, p.var_ux1, p.var_ux2);
    let lambda = if eps1 > 0.0 {
        eps1 * (c2 * a2 * p.var_uz + c2 * p.var_uq + p.var_ux2) / delta
    } else {
        eps2 * (d2 * b2 * p.var_uz + p.var_ux1 + d2 * p.var_uy) / delta
    };
    let (beta1, beta2, _) = anticausal_clean(p, p.var_ux1 + eps1, p.var_ux2 + eps2);
    Ok(OlsEstimate::new(beta1, beta2).with_lambda(lambda))
}

/// Limit of [`anticausal_analytic`] as the noise on `noisy` grows without
/// bound. Any noise already present on the other covariate is kept.
pub fn anticausal_asymptote(p: &AnticausalParams, noisy: NoisyFeature) -> Result<OlsEstimate> {
    p.validate()?;
    let (a2, b2, c2, d2) = (p.a * p.a, p.b * p.b, p.c * p.c, p.d * p.d);
    Ok(match noisy {
        NoisyFeature::X1 => {
            let var_x2 = c2 * a2 * p.var_uz + c2 * p.var_uq + p.var_ux2 + p.var_eps_x2;
            OlsEstimate::new(0.0, p.a * p.b * p.c * p.var_uz / var_x2)
        }
        NoisyFeature::X2 => {
            let var_y = b2 * p.var_uz + p.var_uy;
            let var_x1 = d2 * var_y + p.var_ux1 + p.var_eps_x1;
            OlsEstimate::new(p.d * var_y / var_x1, 0.0)
        }
    })
}
