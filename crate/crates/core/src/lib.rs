//! Volumes of hyperspheres circumscribing unit hypercubes.
//!
//! A sphere through every vertex of the unit `n`-cube has radius `√n/2`.
//! Its volume ratio between consecutive dimensions tends to `√(πe/2)`.
//! This crate evaluates those volumes and ratios in log-space so they stay
//! finite at any dimension, measures the approach to the limit, and checks
//! the closed forms against Monte Carlo estimates.

pub mod asymptotics;
pub mod error;
pub mod geometry;
pub mod montecarlo;
pub mod specfun;

pub use asymptotics::{
    convergence_scan, peak_dimension, ConvergenceReport, ConvergenceRow, PeakResult,
};
pub use error::{Error, Result};
pub use geometry::{
    circumscribed_radius, continuous_ratio, cube_volume, eq3_ratio, growth_limit, growth_ratio,
    log_ball_volume, log_ball_volume_product, Dimension, GrowthRatio, LogVolume, Radius,
    RealDimension,
};
pub use montecarlo::{
    cube_inside_ball_check, mc_ball_volume, mc_ball_volume_sequential, vertex_on_sphere_check,
    McEstimate,
};
pub use specfun::{log_gamma, log_gamma_half_ratio, log_gamma_half_step, RealArg};
