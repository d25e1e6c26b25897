//! Convergence of the circumscribed growth ratio to its limit, and the
//! dimension at which a fixed-radius ball volume peaks.

use crate::error::{Error, Result};
use crate::geometry::{growth_limit, growth_ratio, log_ball_volume, Dimension, Radius};

/// One row of a convergence scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub n: u64,
    pub g: f64,
    /// `|g − √(πe/2)|`
    pub abs_error: f64,
}

/// Growth ratios over a set of dimensions with a power-law fit of the error.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    /// Sorted by strictly increasing `n`.
    pub rows: Vec<ConvergenceRow>,
    /// Least-squares slope of `ln abs_error` against `ln n`.
    pub fitted_order: f64,
    /// `n · (limit − g_n)` at the largest `n`.
    pub fitted_constant: f64,
}

/// Evaluates the growth ratio at each dimension and fits the decay rate of
/// its distance to the limit.
///
/// Dimensions are sorted and deduplicated first; at least three distinct
/// values, each `≥ 3`, are required.
pub fn convergence_scan(dims: &[Dimension]) -> Result<ConvergenceReport> {
    let mut dims = dims.to_vec();
    dims.sort_unstable();
    dims.dedup();
    if dims.len() < 3 {
        return Err(Error::TooFewDimensions(dims.len()));
    }
    for &d in &dims {
        d.require_at_least(3, "convergence_scan")?;
    }

    let limit = growth_limit().get();
    let rows: Vec<ConvergenceRow> = dims
        .iter()
        .map(|&d| {
            let g = growth_ratio(d).get();
            ConvergenceRow {
                n: d.get(),
                g,
                abs_error: (g - limit).abs(),
            }
        })
        .collect();

    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), r.abs_error.ln()))
        .collect();
    let fitted_order = least_squares_slope(&points);

    let last = rows.last().expect("at least three rows");
    let fitted_constant = last.n as f64 * (limit - last.g);

    Ok(ConvergenceReport {
        rows,
        fitted_order,
        fitted_constant,
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let (sxy, sxx) = points.iter().fold((0.0, 0.0), |(sxy, sxx), &(x, y)| {
        let dx = x - mean_x;
        (sxy + dx * (y - mean_y), sxx + dx * dx)
    });
    sxy / sxx
}

/// Dimension of maximal ball volume at a fixed radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakResult {
    pub r: Radius,
    pub peak_n: u64,
    pub log_v_peak: f64,
    /// The maximum sits at the end of the scanned window, so the true peak
    /// may lie beyond it.
    pub at_window_edge: bool,
}

/// Scans `n = 1..=n_max` and returns the smallest `n` with maximal `ln V_n(r)`.
pub fn peak_dimension(r: Radius, n_max: Dimension) -> Result<PeakResult> {
    let n_max = n_max.require_at_least(2, "peak_dimension")?;
    let mut best_n = 1;
    let mut best = f64::NEG_INFINITY;
    for n in 1..=n_max.get() {
        let lv = log_ball_volume(Dimension::new(n)?, r).get();
        if lv > best {
            best = lv;
            best_n = n;
        }
    }
    Ok(PeakResult {
        r,
        peak_n: best_n,
        log_v_peak: best,
        at_window_edge: best_n == n_max.get(),
    })
}
