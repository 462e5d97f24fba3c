use alloc::vec::Vec;

use super::params::{AnticausalParams, CausalParams};
use crate::error::{Error, Result};
use crate::rng::{stream, Gaussian};

/// One observed record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    pub x1_obs: f64,
    pub x2_obs: f64,
    pub y: f64,
}

/// Unobserved quantities behind an [`Observation`]. `q` is only present for
/// the anticausal model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Latent {
    pub z: f64,
    pub q: Option<f64>,
    /// `x1` before measurement noise.
    pub x1: f64,
    /// `x2` before measurement noise.
    pub x2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    pub rows: Vec<Observation>,
    pub latents: Option<Vec<Latent>>,
}

impl SampleBatch {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Latents are dropped.
    pub fn from_rows(rows: Vec<Observation>) -> Self {
        Self { rows, latents: None }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::param("n", "sample size must be at least 1"));
    }
    Ok(())
}

/// Draws `n` iid records from the causal model.
///
/// Per row the standard normals are consumed in the order
/// `u_z, u_x1, u_x2, u_y, eps_x1, eps_x2` from one ChaCha8 stream seeded
/// with `seed`, so a batch is a pure function of `(p, n, seed)`.
pub fn sample_causal(p: &CausalParams, n: usize, seed: u64) -> Result<SampleBatch> {
    p.validate()?;
    check_n(n)?;
    let mut g = Gaussian::new(stream(seed));
    let mut rows = Vec::with_capacity(n);
    let mut latents = Vec::with_capacity(n);
    for _ in 0..n {
        let z = g.with_variance(p.var_uz);
        let x1 = p.b * z + g.with_variance(p.var_ux1);
        let x2 = p.c * z + g.with_variance(p.var_ux2);
        let y = p.a * x1 + g.with_variance(p.var_uy);
        let x1_obs = x1 + g.with_variance(p.var_eps_x1);
        let x2_obs = x2 + g.with_variance(p.var_eps_x2);
        rows.push(Observation { x1_obs, x2_obs, y });
        latents.push(Latent { z, q: None, x1, x2 });
    }
    Ok(SampleBatch {
        rows,
        latents: Some(latents),
    })
}

/// Draws `n` iid records from the anticausal model; draw order per row is
/// `u_z, u_q, u_y, u_x2, u_x1, eps_x1, eps_x2`.
pub fn sample_anticausal(p: &AnticausalParams, n: usize, seed: u64) -> Result<SampleBatch> {
    p.validate()?;
    check_n(n)?;
    let mut g = Gaussian::new(stream(seed));
    let mut rows = Vec::with_capacity(n);
    let mut latents = Vec::with_capacity(n);
    for _ in 0..n {
        let z = g.with_variance(p.var_uz);
        let q = p.a * z + g.with_variance(p.var_uq);
        let y = p.b * z + g.with_variance(p.var_uy);
        let x2 = p.c * q + g.with_variance(p.var_ux2);
        let x1 = p.d * y + g.with_variance(p.var_ux1);
        let x1_obs = x1 + g.with_variance(p.var_eps_x1);
        let x2_obs = x2 + g.with_variance(p.var_eps_x2);
        rows.push(Observation { x1_obs, x2_obs, y });
        latents.push(Latent { z, q: Some(q), x1, x2 });
    }
    Ok(SampleBatch {
        rows,
        latents: Some(latents),
    })
}
