//! Seed derivation and Gaussian variates.
//!
//! Every random stream in the crate is a ChaCha8 generator seeded through
//! [`mix`], so a stream depends only on its logical coordinates (base seed,
//! grid index, document id, ...) and never on scheduling.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator used for all sampling.
pub type StreamRng = ChaCha8Rng;

/// SplitMix64 finalizer.
#[inline]
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Combines a base seed with a coordinate into a new, well-spread seed.
#[inline]
pub fn mix(seed: u64, coordinate: u64) -> u64 {
    splitmix64(seed ^ splitmix64(coordinate))
}

/// Folds several coordinates into `seed`, in order.
pub fn mix_all(seed: u64, coordinates: &[u64]) -> u64 {
    coordinates.iter().fold(seed, |s, &c| mix(s, c))
}

/// 64-bit FNV-1a over the UTF-8 bytes of `s`.
pub fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in s.as_bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

pub fn stream(seed: u64) -> StreamRng {
    StreamRng::seed_from_u64(seed)
}

/// Uniform in the open interval (0, 1), built from the top 53 bits.
#[inline]
fn open01<R: RngCore>(rng: &mut R) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

/// Standard normal variates by the Box-Muller transform.
///
/// Each pair of uniforms yields two variates; the second is cached.
#[derive(Debug, Clone)]
pub struct Gaussian<R> {
    rng: R,
    spare: Option<f64>,
}

impl<R: RngCore> Gaussian<R> {
    pub fn new(rng: R) -> Self {
        Self { rng, spare: None }
    }

    pub fn standard(&mut self) -> f64 {
        if let Some(v) = self.spare.take() {
            return v;
        }
        let u1 = open01(&mut self.rng);
        let u2 = open01(&mut self.rng);
        let r = libm::sqrt(-2.0 * libm::log(u1));
        let theta = core::f64::consts::TAU * u2;
        self.spare = Some(r * libm::sin(theta));
        r * libm::cos(theta)
    }

    /// A draw from N(0, variance); zero variance yields exactly 0.
    pub fn with_variance(&mut self, variance: f64) -> f64 {
        if variance == 0.0 {
            return 0.0;
        }
        libm::sqrt(variance) * self.standard()
    }
}
