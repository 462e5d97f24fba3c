use alloc::format;

use super::params::OlsEstimate;
use super::sample::SampleBatch;
use crate::error::{Error, Result};

/// A column counts as degenerate when its centred sum of squares is below
/// this fraction of the other column's.
const DEGENERATE_COLUMN: f64 = 1e-12;
/// Squared sample correlation of the covariates above `1 - COLLINEAR` is
/// treated as collinear.
const COLLINEAR: f64 = 1e-10;

/// Full output of [`fit_ols_full`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OlsFit {
    pub estimate: OlsEstimate,
    pub intercept: f64,
    /// `RSS / (n - 3)`.
    pub residual_variance: f64,
}

/// Regresses `y` on `(1, x1_obs, x2_obs)` and reports homoskedastic
/// standard errors for the two slopes.
pub fn fit_ols(batch: &SampleBatch) -> Result<OlsEstimate> {
    fit_ols_full(batch).map(|f| f.estimate)
}

pub fn fit_ols_full(batch: &SampleBatch) -> Result<OlsFit> {
    let n = batch.len();
    if n < 4 {
        // n - 3 residual degrees of freedom must be positive
        return Err(Error::param("n", format!("need at least 4 rows, got {n}")));
    }
    let nf = n as f64;
    let (mut m1, mut m2, mut my) = (0.0, 0.0, 0.0);
    for r in &batch.rows {
        if !(r.x1_obs.is_finite() && r.x2_obs.is_finite() && r.y.is_finite()) {
            return Err(Error::param("batch", "non-finite value"));
        }
        m1 += r.x1_obs;
        m2 += r.x2_obs;
        my += r.y;
    }
    m1 /= nf;
    m2 /= nf;
    my /= nf;

    // Centred cross products. With an intercept in the design the slope
    // block of (X'X)^-1 is exactly the inverse of this 2x2 matrix.
    let (mut s11, mut s22, mut s12, mut s1y, mut s2y) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for r in &batch.rows {
        let (u, v, w) = (r.x1_obs - m1, r.x2_obs - m2, r.y - my);
        s11 += u * u;
        s22 += v * v;
        s12 += u * v;
        s1y += u * w;
        s2y += v * w;
    }
    if s11 <= DEGENERATE_COLUMN * s22 || s22 <= DEGENERATE_COLUMN * s11 || s11 == 0.0 {
        return Err(Error::Singular(format!(
            "degenerate covariate column (ss1 = {s11}, ss2 = {s22})"
        )));
    }
    let det = s11 * s22 - s12 * s12;
    if det <= COLLINEAR * s11 * s22 {
        return Err(Error::Singular("covariates are collinear".into()));
    }
    let beta1 = (s22 * s1y - s12 * s2y) / det;
    let beta2 = (s11 * s2y - s12 * s1y) / det;
    let intercept = my - beta1 * m1 - beta2 * m2;

    let rss: f64 = batch
        .rows
        .iter()
        .map(|r| {
            let e = r.y - intercept - beta1 * r.x1_obs - beta2 * r.x2_obs;
            e * e
        })
        .sum();
    let sigma2 = rss / (nf - 3.0);
    let estimate = OlsEstimate {
        beta1,
        beta2,
        lambda: None,
        se1: Some(libm::sqrt(sigma2 * s22 / det)),
        se2: Some(libm::sqrt(sigma2 * s11 / det)),
    };
    Ok(OlsFit {
        estimate,
        intercept,
        residual_variance: sigma2,
    })
}
