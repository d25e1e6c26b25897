use circumsphere_core::{
    circumscribed_radius, continuous_ratio, convergence_scan, eq3_ratio, growth_ratio,
    log_ball_volume, mc_ball_volume, peak_dimension, Dimension, Error, LogVolume, Radius,
    RealDimension,
};

use crate::args::{ConvergeArgs, FigureArgs, McArgs, PeakArgs, RatioArgs, VolumeArgs};
use crate::output::{Cell, OutputRecord};

pub const UNDERFLOW_SENTINEL: &str = "0 (underflow)";
pub const OVERFLOW_SENTINEL: &str = "inf (overflow)";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

type CmdResult = Result<OutputRecord, CliError>;

fn linear_cell(log_v: LogVolume) -> Result<Cell, CliError> {
    match log_v.to_linear() {
        Ok(v) => Ok(Cell::Real(v)),
        Err(Error::Underflow(_)) => Ok(UNDERFLOW_SENTINEL.into()),
        Err(Error::Overflow(_)) => Ok(OVERFLOW_SENTINEL.into()),
        Err(e) => Err(e.into()),
    }
}

fn radius_for(n: Dimension, radius: Option<f64>, circumscribe: bool) -> Result<Radius, CliError> {
    match (radius, circumscribe) {
        (Some(r), false) => Ok(Radius::new(r)?),
        (None, true) => Ok(circumscribed_radius(n)),
        _ => Err(CliError::Usage(
            "exactly one of --radius and --circumscribe is required".into(),
        )),
    }
}

pub fn volume(args: &VolumeArgs) -> CmdResult {
    let n = Dimension::new(args.dim)?;
    let r = radius_for(n, args.radius, args.circumscribe)?;
    let log_v = log_ball_volume(n, r);
    let mut rec = if args.log {
        OutputRecord::new(["n", "r", "log_volume"])
    } else {
        OutputRecord::new(["n", "r", "log_volume", "volume"])
    };
    let mut row = vec![n.get().into(), r.get().into(), log_v.get().into()];
    if !args.log {
        row.push(linear_cell(log_v)?);
    }
    rec.push_row(row);
    Ok(rec)
}

pub fn ratio(args: &RatioArgs) -> CmdResult {
    let n = Dimension::new(args.dim)?;
    let g = if args.literal_eq3 {
        eq3_ratio(n)?
    } else {
        growth_ratio(n)
    };
    let mut rec = OutputRecord::new(["n", "g"]);
    rec.push_row(vec![n.get().into(), g.get().into()]);
    Ok(rec)
}

pub fn figure(args: &FigureArgs) -> CmdResult {
    let (lo, hi, points) = (args.min, args.max, args.points);
    if !(lo.is_finite() && lo > 2.0) {
        return Err(CliError::Usage(format!(
            "--min must be finite and > 2, got {lo}"
        )));
    }
    if !(hi.is_finite() && hi > lo) {
        return Err(CliError::Usage(format!(
            "--max must be finite and > --min, got {hi}"
        )));
    }
    if points < 2 {
        return Err(CliError::Usage(format!(
            "--points must be at least 2, got {points}"
        )));
    }
    let mut rec = OutputRecord::new(["nu", "g"]);
    let last = (points - 1) as f64;
    for i in 0..points {
        let t = i as f64 / last;
        let nu = lo * (1.0 - t) + hi * t;
        let g = continuous_ratio(RealDimension::new(nu)?);
        rec.push_row(vec![nu.into(), g.get().into()]);
    }
    Ok(rec)
}

pub fn converge(args: &ConvergeArgs) -> CmdResult {
    let dims = args
        .dims
        .iter()
        .map(|&n| Dimension::new(n))
        .collect::<Result<Vec<_>, _>>()?;
    let report = convergence_scan(&dims)?;
    let mut rec = OutputRecord::new(["n", "g", "abs_error"]);
    for row in &report.rows {
        rec.push_row(vec![row.n.into(), row.g.into(), row.abs_error.into()]);
    }
    rec.push_footer("fitted_order", report.fitted_order);
    rec.push_footer("fitted_constant", report.fitted_constant);
    Ok(rec)
}

/// Returns the table and, when the peak sits at the end of the scan, a
/// warning for standard error.
pub fn peak(args: &PeakArgs) -> Result<(OutputRecord, Option<String>), CliError> {
    let r = Radius::new(args.radius)?;
    let result = peak_dimension(r, Dimension::new(args.n_max)?)?;
    let mut rec = OutputRecord::new(["r", "peak_n", "log_v_peak", "at_window_edge"]);
    rec.push_row(vec![
        r.get().into(),
        result.peak_n.into(),
        result.log_v_peak.into(),
        result.at_window_edge.into(),
    ]);
    let warning = result.at_window_edge.then(|| {
        format!(
            "warning: maximum at n_max = {}; the peak may lie beyond the scan (raise --n-max)",
            args.n_max
        )
    });
    Ok((rec, warning))
}

pub fn mc(args: &McArgs) -> CmdResult {
    let n = Dimension::new(args.dim)?;
    let r = radius_for(n, args.radius, args.circumscribe)?;
    let est = mc_ball_volume(n, r, args.samples, args.seed)?;
    let exact = linear_cell(log_ball_volume(n, r))?;
    let mut rec = OutputRecord::new([
        "n",
        "r",
        "samples",
        "seed",
        "hits",
        "volume_estimate",
        "std_error",
        "exact_volume",
    ]);
    rec.push_row(vec![
        n.get().into(),
        r.get().into(),
        est.samples.into(),
        est.seed.into(),
        est.hits.into(),
        est.volume_estimate.into(),
        est.std_error.into(),
        exact,
    ]);
    Ok(rec)
}
