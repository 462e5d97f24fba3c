//! Noise-variance sweeps over the two structural models, emitted as CSV.

use rayon::prelude::*;
use serde::Deserialize;
use spurious_core::scm::{
    check_grid, sweep_point, AnticausalParams, CausalParams, MonteCarlo, NoiseSetting, ScmParams, SweepRow,
};

use crate::error::{LabError, Result};
use crate::report::write_scm_csv;

/// Structural parameters as they appear in a config file or on the command
/// line. Unset values default to 1 (coefficients and structural variances)
/// or 0 (measurement noise). `d` and `var_uq` only apply to the anticausal
/// model.
#[derive(Debug, Clone, Copy, PartialEq, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamOverrides {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub d: Option<f64>,
    pub var_uz: Option<f64>,
    pub var_uq: Option<f64>,
    pub var_uy: Option<f64>,
    pub var_ux1: Option<f64>,
    pub var_ux2: Option<f64>,
    pub var_eps_x1: Option<f64>,
    pub var_eps_x2: Option<f64>,
}

impl ParamOverrides {
    /// Values set in `other` win.
    pub fn merged(self, other: ParamOverrides) -> Self {
        Self {
            a: other.a.or(self.a),
            b: other.b.or(self.b),
            c: other.c.or(self.c),
            d: other.d.or(self.d),
            var_uz: other.var_uz.or(self.var_uz),
            var_uq: other.var_uq.or(self.var_uq),
            var_uy: other.var_uy.or(self.var_uy),
            var_ux1: other.var_ux1.or(self.var_ux1),
            var_ux2: other.var_ux2.or(self.var_ux2),
            var_eps_x1: other.var_eps_x1.or(self.var_eps_x1),
            var_eps_x2: other.var_eps_x2.or(self.var_eps_x2),
        }
    }

    pub fn resolve(&self, setting: NoiseSetting) -> Result<ScmParams> {
        Ok(match setting {
            NoiseSetting::CausalX1 => {
                if self.d.is_some() || self.var_uq.is_some() {
                    return Err(LabError::Validation(
                        "`d` and `var_uq` only apply to the anticausal model".into(),
                    ));
                }
                let u = CausalParams::unit();
                let p = CausalParams {
                    a: self.a.unwrap_or(u.a),
                    b: self.b.unwrap_or(u.b),
                    c: self.c.unwrap_or(u.c),
                    var_uz: self.var_uz.unwrap_or(u.var_uz),
                    var_ux1: self.var_ux1.unwrap_or(u.var_ux1),
                    var_ux2: self.var_ux2.unwrap_or(u.var_ux2),
                    var_uy: self.var_uy.unwrap_or(u.var_uy),
                    var_eps_x1: self.var_eps_x1.unwrap_or(u.var_eps_x1),
                    var_eps_x2: self.var_eps_x2.unwrap_or(u.var_eps_x2),
                };
                p.validate()?;
                ScmParams::Causal(p)
            }
            NoiseSetting::AnticausalX1 | NoiseSetting::AnticausalX2 => {
                let u = AnticausalParams::unit();
                let p = AnticausalParams {
                    a: self.a.unwrap_or(u.a),
                    b: self.b.unwrap_or(u.b),
                    c: self.c.unwrap_or(u.c),
                    d: self.d.unwrap_or(u.d),
                    var_uz: self.var_uz.unwrap_or(u.var_uz),
                    var_uq: self.var_uq.unwrap_or(u.var_uq),
                    var_uy: self.var_uy.unwrap_or(u.var_uy),
                    var_ux1: self.var_ux1.unwrap_or(u.var_ux1),
                    var_ux2: self.var_ux2.unwrap_or(u.var_ux2),
                    var_eps_x1: self.var_eps_x1.unwrap_or(u.var_eps_x1),
                    var_eps_x2: self.var_eps_x2.unwrap_or(u.var_eps_x2),
                };
                p.validate()?;
                ScmParams::Anticausal(p)
            }
        })
    }
}

/// Config-file form of an SCM sweep.
#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScmSweepConfig {
    pub setting: Option<String>,
    pub eps_grid: Option<Vec<f64>>,
    #[serde(default)]
    pub params: ParamOverrides,
    pub mc_n: Option<usize>,
    pub mc_seed: Option<u64>,
}

impl ScmSweepConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| LabError::Validation(format!("config: {e}")))
    }
}

pub fn parse_setting(s: &str) -> Result<NoiseSetting> {
    NoiseSetting::parse(s).ok_or_else(|| {
        LabError::Validation(format!(
            "unknown setting `{s}` (expected causal-x1, anticausal-x1 or anticausal-x2)"
        ))
    })
}

/// Evaluates every grid point in parallel; rows come back in grid order.
pub fn sweep_rows(
    setting: NoiseSetting,
    params: &ScmParams,
    eps_grid: &[f64],
    mc: Option<MonteCarlo>,
) -> Result<Vec<SweepRow>> {
    check_grid(eps_grid)?;
    if let Some(m) = mc {
        if m.n < 4 {
            return Err(LabError::Validation(format!(
                "Monte Carlo n must be at least 4, got {}",
                m.n
            )));
        }
    }
    eps_grid
        .par_iter()
        .enumerate()
        .map(|(i, &eps)| sweep_point(setting, params, eps, i, mc).map_err(LabError::from))
        .collect()
}

/// Runs a sweep and returns the CSV text.
pub fn run_scm_sweep(
    setting: NoiseSetting,
    params: &ScmParams,
    eps_grid: &[f64],
    mc: Option<MonteCarlo>,
) -> Result<String> {
    let rows = sweep_rows(setting, params, eps_grid, mc)?;
    let mut buf = Vec::new();
    write_scm_csv(setting, &rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}
