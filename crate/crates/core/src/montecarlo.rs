//! Hit-or-miss Monte Carlo estimates of ball volumes, plus exact checks of
//! the cube/sphere circumscription geometry.
//!
//! Sample `i` draws its `n` coordinates from a ChaCha8 keystream positioned
//! at word `2·n·i`, so every sample is a pure function of `(seed, i)`. Work is
//! split into chunks across threads and hit counts are summed as integers;
//! the result does not depend on the thread count or chunk size.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Dimension, Radius};

pub const MIN_SAMPLES: u64 = 1_000;
pub const MAX_MC_DIMENSION: u64 = 12;
pub const MAX_VERTEX_DIMENSION: u64 = 20;
pub const MAX_CONTAINMENT_DIMENSION: u64 = 50;

const CHUNK: u64 = 1 << 14;

/// Result of a hit-or-miss volume estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    /// `(hits / samples) · (2r)^n`
    pub volume_estimate: f64,
    /// `(2r)^n · sqrt(p (1 − p) / samples)` with `p = hits / samples`
    pub std_error: f64,
    pub samples: u64,
    pub hits: u64,
    pub seed: u64,
}

impl McEstimate {
    fn from_counts(hits: u64, samples: u64, seed: u64, box_volume: f64) -> Self {
        let p = hits as f64 / samples as f64;
        Self {
            volume_estimate: p * box_volume,
            std_error: box_volume * (p * (1.0 - p) / samples as f64).sqrt(),
            samples,
            hits,
            seed,
        }
    }

    /// Whether `value` lies within `k` standard errors of the estimate.
    pub fn covers(&self, value: f64, k: f64) -> bool {
        (self.volume_estimate - value).abs() <= k * self.std_error
    }
}

/// Uniform points in `[−h, h)^n`, addressed by sample index.
struct PointStream {
    seed: u64,
    dim: usize,
    half_width: f64,
}

impl PointStream {
    /// Counts samples in `range` whose squared norm is `≤ bound`.
    fn count_within(&self, range: std::ops::Range<u64>, bound: f64) -> u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_word_pos(u128::from(range.start) * 2 * self.dim as u128);
        let mut hits = 0;
        for _ in range {
            let mut sq = 0.0;
            for _ in 0..self.dim {
                let x = (2.0 * unit_f64(rng.next_u64()) - 1.0) * self.half_width;
                sq += x * x;
            }
            if sq <= bound {
                hits += 1;
            }
        }
        hits
    }

    fn count_within_par(&self, samples: u64, bound: f64) -> u64 {
        let chunks = samples.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let start = c * CHUNK;
                self.count_within(start..(start + CHUNK).min(samples), bound)
            })
            .sum()
    }
}

/// Maps 53 random bits to `[0, 1)`.
#[inline]
fn unit_f64(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn check_samples(samples: u64, op: &'static str) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            op,
            got: samples,
            min: MIN_SAMPLES,
        });
    }
    Ok(())
}

/// Estimates `V_n(r)` by sampling the bounding cube `[−r, r]^n`.
pub fn mc_ball_volume(n: Dimension, r: Radius, samples: u64, seed: u64) -> Result<McEstimate> {
    let n = n.require_within(1, MAX_MC_DIMENSION, "mc_ball_volume")?;
    check_samples(samples, "mc_ball_volume")?;
    let r = r.get();
    let stream = PointStream {
        seed,
        dim: n.get() as usize,
        half_width: r,
    };
    let hits = stream.count_within_par(samples, r * r);
    let box_volume = (2.0 * r).powi(n.get() as i32);
    Ok(McEstimate::from_counts(hits, samples, seed, box_volume))
}

/// Same estimate computed on the calling thread only.
pub fn mc_ball_volume_sequential(
    n: Dimension,
    r: Radius,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    let n = n.require_within(1, MAX_MC_DIMENSION, "mc_ball_volume")?;
    check_samples(samples, "mc_ball_volume")?;
    let r = r.get();
    let stream = PointStream {
        seed,
        dim: n.get() as usize,
        half_width: r,
    };
    let hits = stream.count_within(0..samples, r * r);
    let box_volume = (2.0 * r).powi(n.get() as i32);
    Ok(McEstimate::from_counts(hits, samples, seed, box_volume))
}

/// Largest deviation `|‖v‖ − √n/2|` over the `2^n` vertices `v ∈ {±1/2}^n`.
pub fn vertex_on_sphere_check(n: Dimension) -> Result<f64> {
    let n = n.require_within(1, MAX_VERTEX_DIMENSION, "vertex_on_sphere_check")?;
    let dim = n.get() as u32;
    let radius = n.as_f64().sqrt() / 2.0;
    let worst = (0u64..1 << dim)
        .into_par_iter()
        .map(|mask| {
            let sq: f64 = (0..dim)
                .map(|bit| if mask >> bit & 1 == 1 { 0.5 } else { -0.5 })
                .map(|c: f64| c * c)
                .sum();
            (sq.sqrt() - radius).abs()
        })
        .reduce(|| 0.0, f64::max);
    Ok(worst)
}

/// Fraction of uniform points of the centered unit cube that lie inside the
/// circumscribed ball of radius `√n/2`.
pub fn cube_inside_ball_check(n: Dimension, samples: u64, seed: u64) -> Result<f64> {
    let n = n.require_within(1, MAX_CONTAINMENT_DIMENSION, "cube_inside_ball_check")?;
    check_samples(samples, "cube_inside_ball_check")?;
    let stream = PointStream {
        seed,
        dim: n.get() as usize,
        half_width: 0.5,
    };
    // ‖x‖ ≤ √n/2  ⇔  ‖x‖² ≤ n/4, and n/4 is exact.
    let inside = stream.count_within_par(samples, n.as_f64() / 4.0);
    Ok(inside as f64 / samples as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{circumscribed_radius, log_ball_volume};
    use std::f64::consts::PI;

    fn dim(n: u64) -> Dimension {
        Dimension::new(n).unwrap()
    }

    fn rad(r: f64) -> Radius {
        Radius::new(r).unwrap()
    }

    #[test]
    fn one_ball_fills_its_interval() {
        for seed in [0, 1, 99] {
            let est = mc_ball_volume(dim(1), rad(0.5), 5_000, seed).unwrap();
            assert_eq!(est.hits, est.samples);
            assert_eq!(est.volume_estimate, 1.0);
            assert_eq!(est.std_error, 0.0);
        }
    }

    #[test]
    fn disk_area() {
        let est = mc_ball_volume(dim(2), rad(1.0), 1_000_000, 42).unwrap();
        assert!(est.covers(PI, 3.0), "{est:?}");
        assert_eq!(est.seed, 42);
    }

    #[test]
    fn circumscribed_three_ball() {
        let r = circumscribed_radius(dim(3));
        let exact = log_ball_volume(dim(3), r).to_linear().unwrap();
        assert!((exact - PI * 3f64.sqrt() / 2.0).abs() < 1e-14);
        let est = mc_ball_volume(dim(3), r, 1_000_000, 7).unwrap();
        assert!(est.covers(exact, 3.0), "{est:?} vs {exact}");
    }

    #[test]
    fn parallel_equals_sequential() {
        for (n, samples) in [(2, 1_000), (4, 50_001), (7, 100_000)] {
            let a = mc_ball_volume(dim(n), rad(1.0), samples, 123).unwrap();
            let b = mc_ball_volume_sequential(dim(n), rad(1.0), samples, 123).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn count_independent_of_partition() {
        let stream = PointStream {
            seed: 5,
            dim: 3,
            half_width: 1.0,
        };
        let whole = stream.count_within(0..10_000, 1.0);
        let split: u64 = [0..1, 1..777, 777..5000, 5000..10_000]
            .into_iter()
            .map(|r| stream.count_within(r, 1.0))
            .sum();
        assert_eq!(whole, split);
    }

    #[test]
    fn coverage_calibration() {
        let exact = PI * PI / 2.0;
        let covered = (0..20)
            .filter(|&seed| {
                mc_ball_volume(dim(4), rad(1.0), 100_000, seed)
                    .unwrap()
                    .covers(exact, 2.0)
            })
            .count();
        assert!(covered >= 17, "{covered}/20");
    }

    #[test]
    fn std_error_scales_with_inverse_sqrt_samples() {
        for seed in 0..5 {
            let a = mc_ball_volume(dim(3), rad(1.0), 25_000, seed).unwrap();
            let b = mc_ball_volume(dim(3), rad(1.0), 100_000, seed + 100).unwrap();
            let ratio = a.std_error / b.std_error;
            assert!((ratio - 2.0).abs() <= 0.4, "seed {seed}: {ratio}");
        }
    }

    #[test]
    fn mc_domain_errors() {
        assert!(mc_ball_volume(dim(13), rad(1.0), 1_000, 0).is_err());
        assert!(matches!(
            mc_ball_volume(dim(2), rad(1.0), 999, 0),
            Err(Error::TooFewSamples { got: 999, .. })
        ));
        assert!(vertex_on_sphere_check(dim(21)).is_err());
        assert!(cube_inside_ball_check(dim(51), 1_000, 0).is_err());
        assert!(cube_inside_ball_check(dim(3), 10, 0).is_err());
    }

    #[test]
    fn vertices_on_sphere() {
        for n in [1, 2, 4, 9, 20] {
            assert!(vertex_on_sphere_check(dim(n)).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn cube_inside_ball() {
        assert_eq!(cube_inside_ball_check(dim(3), 100_000, 1).unwrap(), 1.0);
        assert_eq!(cube_inside_ball_check(dim(10), 100_000, 2).unwrap(), 1.0);
        assert_eq!(cube_inside_ball_check(dim(50), 10_000, 3).unwrap(), 1.0);
    }

    #[test]
    fn unit_interval_mapping() {
        assert_eq!(unit_f64(0), 0.0);
        assert!(unit_f64(u64::MAX) < 1.0);
    }
}
