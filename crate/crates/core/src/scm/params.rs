use alloc::format;

use crate::error::{Error, Result};

fn check_structural(name: &'static str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::param(name, format!("must be finite and > 0, got {v}")));
    }
    Ok(())
}

fn check_measurement(name: &'static str, v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::param(name, format!("must be finite and >= 0, got {v}")));
    }
    Ok(())
}

fn check_coefficient(name: &'static str, v: f64) -> Result<()> {
    if !v.is_finite() {
        return Err(Error::param(name, format!("must be finite, got {v}")));
    }
    Ok(())
}

/// Parameters of the causal model
/// `z = u_z, x1 = b z + u_x1, x2 = c z + u_x2, y = a x1 + u_y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CausalParams {
    /// Effect of `x1` on `y`.
    pub a: f64,
    /// Effect of `z` on `x1`.
    pub b: f64,
    /// Effect of `z` on `x2`.
    pub c: f64,
    pub var_uz: f64,
    pub var_ux1: f64,
    pub var_ux2: f64,
    pub var_uy: f64,
    /// Measurement noise on the observed `x1`.
    pub var_eps_x1: f64,
    /// Measurement noise on the observed `x2`.
    pub var_eps_x2: f64,
}

impl CausalParams {
    /// All coefficients and structural variances equal to one, no
    /// measurement noise.
    pub const fn unit() -> Self {
        Self {
            a: 1.0,
            b: 1.0,
            c: 1.0,
            var_uz: 1.0,
            var_ux1: 1.0,
            var_ux2: 1.0,
            var_uy: 1.0,
            var_eps_x1: 0.0,
            var_eps_x2: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_coefficient("a", self.a)?;
        check_coefficient("b", self.b)?;
        check_coefficient("c", self.c)?;
        check_structural("var_uz", self.var_uz)?;
        check_structural("var_ux1", self.var_ux1)?;
        check_structural("var_ux2", self.var_ux2)?;
        check_structural("var_uy", self.var_uy)?;
        check_measurement("var_eps_x1", self.var_eps_x1)?;
        check_measurement("var_eps_x2", self.var_eps_x2)
    }

    pub fn with_eps_x1(self, var_eps_x1: f64) -> Self {
        Self { var_eps_x1, ..self }
    }

    pub fn with_eps_x2(self, var_eps_x2: f64) -> Self {
        Self { var_eps_x2, ..self }
    }
}

/// Parameters of the anticausal model
/// `z = u_z, q = a z + u_q, y = b z + u_y, x2 = c q + u_x2, x1 = d y + u_x1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnticausalParams {
    /// Effect of `z` on `q`.
    pub a: f64,
    /// Effect of `z` on `y`.
    pub b: f64,
    /// Effect of `q` on `x2`.
    pub c: f64,
    /// Effect of `y` on `x1`.
    pub d: f64,
    pub var_uz: f64,
    pub var_uq: f64,
    pub var_uy: f64,
    pub var_ux1: f64,
    pub var_ux2: f64,
    pub var_eps_x1: f64,
    pub var_eps_x2: f64,
}

impl AnticausalParams {
    pub const fn unit() -> Self {
        Self {
            a: 1.0,
            b: 1.0,
            c: 1.0,
            d: 1.0,
            var_uz: 1.0,
            var_uq: 1.0,
            var_uy: 1.0,
            var_ux1: 1.0,
            var_ux2: 1.0,
            var_eps_x1: 0.0,
            var_eps_x2: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_coefficient("a", self.a)?;
        check_coefficient("b", self.b)?;
        check_coefficient("c", self.c)?;
        check_coefficient("d", self.d)?;
        check_structural("var_uz", self.var_uz)?;
        check_structural("var_uq", self.var_uq)?;
        check_structural("var_uy", self.var_uy)?;
        check_structural("var_ux1", self.var_ux1)?;
        check_structural("var_ux2", self.var_ux2)?;
        check_measurement("var_eps_x1", self.var_eps_x1)?;
        check_measurement("var_eps_x2", self.var_eps_x2)
    }

    pub fn with_eps_x1(self, var_eps_x1: f64) -> Self {
        Self { var_eps_x1, ..self }
    }

    pub fn with_eps_x2(self, var_eps_x2: f64) -> Self {
        Self { var_eps_x2, ..self }
    }
}

/// Either model, for code that sweeps over both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScmParams {
    Causal(CausalParams),
    Anticausal(AnticausalParams),
}

/// Which observed covariate carries measurement noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NoisyFeature {
    X1,
    X2,
}

/// Second moments of the observed `(x1, x2, y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceSummary {
    pub var_x1: f64,
    pub var_x2: f64,
    pub cov_x1x2: f64,
    pub cov_x1y: f64,
    pub cov_x2y: f64,
}

impl CovarianceSummary {
    /// Builds a summary, rejecting non-finite entries and covariate
    /// covariance matrices that are not positive definite.
    pub fn new(var_x1: f64, var_x2: f64, cov_x1x2: f64, cov_x1y: f64, cov_x2y: f64) -> Result<Self> {
        let s = Self {
            var_x1,
            var_x2,
            cov_x1x2,
            cov_x1y,
            cov_x2y,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("var_x1", self.var_x1),
            ("var_x2", self.var_x2),
            ("cov_x1x2", self.cov_x1x2),
            ("cov_x1y", self.cov_x1y),
            ("cov_x2y", self.cov_x2y),
        ] {
            check_coefficient(name, v)?;
        }
        check_structural("var_x1", self.var_x1)?;
        check_structural("var_x2", self.var_x2)?;
        if self.determinant() <= 0.0 {
            return Err(Error::Singular(format!(
                "covariate covariance not positive definite (det = {})",
                self.determinant()
            )));
        }
        Ok(())
    }

    /// `var_x1 * var_x2 - cov_x1x2^2`.
    pub fn determinant(&self) -> f64 {
        self.var_x1 * self.var_x2 - self.cov_x1x2 * self.cov_x1x2
    }
}

/// A pair of regression coefficients for `(x1, x2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OlsEstimate {
    pub beta1: f64,
    pub beta2: f64,
    /// Attenuation factor, when the estimate comes from a noisy closed form.
    pub lambda: Option<f64>,
    /// Standard errors, when the estimate comes from data.
    pub se1: Option<f64>,
    pub se2: Option<f64>,
}

impl OlsEstimate {
    pub const fn new(beta1: f64, beta2: f64) -> Self {
        Self {
            beta1,
            beta2,
            lambda: None,
            se1: None,
            se2: None,
        }
    }

    pub const fn with_lambda(self, lambda: f64) -> Self {
        Self {
            lambda: Some(lambda),
            ..self
        }
    }
}
