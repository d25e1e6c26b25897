//! Hypersphere volumes, the circumscribed radius `√n/2`, and the volume
//! growth ratio of the circumscribed family.
//!
//! Volumes are carried as natural logs. A linear value is produced only by
//! [`LogVolume::to_linear`], which reports underflow and overflow instead of
//! returning `0` or `inf`.

use std::f64::consts::{E, LN_2, PI};
use std::fmt;

use crate::error::{Error, Result};
use crate::specfun::{self, log_gamma, log_gamma_half_step, RealArg};

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Spatial dimension, `n ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dimension(u64);

impl Dimension {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionOutOfRange {
                op: "Dimension::new",
                n,
                min: 1,
                max: u64::MAX,
            });
        }
        Ok(Self(n))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn as_f64(self) -> f64 {
        self.0 as f64
    }

    pub(crate) fn require_at_least(self, min: u64, op: &'static str) -> Result<Self> {
        self.require_within(min, u64::MAX, op)
    }

    pub(crate) fn require_within(self, min: u64, max: u64, op: &'static str) -> Result<Self> {
        if (min..=max).contains(&self.0) {
            Ok(self)
        } else {
            Err(Error::DimensionOutOfRange {
                op,
                n: self.0,
                min,
                max,
            })
        }
    }
}

impl TryFrom<u64> for Dimension {
    type Error = Error;

    fn try_from(n: u64) -> Result<Self> {
        Self::new(n)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Real-valued dimension `ν > 2` for sweeping the growth formula continuously.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RealDimension(f64);

impl RealDimension {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() && nu > 2.0 {
            Ok(Self(nu))
        } else {
            Err(Error::InvalidArgument {
                name: "real dimension",
                value: nu,
                expected: "finite and > 2",
            })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Sphere radius in length units, finite and `> 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Radius(f64);

impl Radius {
    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() && r > 0.0 {
            Ok(Self(r))
        } else {
            Err(Error::InvalidArgument {
                name: "radius",
                value: r,
                expected: "finite and > 0",
            })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Natural log of an n-ball volume.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LogVolume(f64);

impl LogVolume {
    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// Materializes `exp(ln V)`.
    ///
    /// Values below the smallest normal `f64` are reported as
    /// [`Error::Underflow`]; values beyond `f64::MAX` as [`Error::Overflow`].
    pub fn to_linear(self) -> Result<f64> {
        let v = self.0.exp();
        if v.is_infinite() {
            Err(Error::Overflow(self.0))
        } else if v < f64::MIN_POSITIVE {
            Err(Error::Underflow(self.0))
        } else {
            Ok(v)
        }
    }
}

/// Dimensionless ratio of consecutive volumes, `> 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GrowthRatio(f64);

impl GrowthRatio {
    fn from_log(ln_g: f64) -> Self {
        debug_assert!(ln_g.is_finite());
        Self(ln_g.exp())
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Radius of the sphere through every vertex of the centered unit `n`-cube.
pub fn circumscribed_radius(n: Dimension) -> Radius {
    Radius(n.as_f64().sqrt() / 2.0)
}

/// `ln V_n(r)` from the closed form `π^{n/2} r^n / Γ(n/2 + 1)`.
pub fn log_ball_volume(n: Dimension, r: Radius) -> LogVolume {
    let nf = n.as_f64();
    let lg = log_gamma(RealArg::new(nf / 2.0 + 1.0).expect("n/2 + 1 > 0"));
    LogVolume(0.5 * nf * LN_PI + nf * r.get().ln() - lg)
}

/// `ln V_n(r)` from the product form
/// `V_n = (2π r^n / n) ∏_{k=1}^{n−2} √π Γ((k+1)/2) / Γ(1 + k/2)`,
/// defined for `n ≥ 3`.
///
/// Each factor is summed in log-space with compensated summation, so the
/// cost is linear in `n`.
pub fn log_ball_volume_product(n: Dimension, r: Radius) -> Result<LogVolume> {
    let n = n.require_at_least(3, "log_ball_volume_product")?;
    let nf = n.as_f64();
    let half_ln_pi = 0.5 * LN_PI;
    let mut sum = NeumaierSum::default();
    sum.add((2.0 * PI).ln());
    sum.add(nf * r.get().ln());
    sum.add(-nf.ln());
    for k in 1..=n.get() - 2 {
        // Γ(1 + k/2) = Γ((k+1)/2 + 1/2)
        let arg = RealArg::new((k as f64 + 1.0) / 2.0).expect("positive");
        sum.add(half_ln_pi - log_gamma_half_step(arg));
    }
    Ok(LogVolume(sum.total()))
}

/// Volume of the unit `n`-cube.
pub fn cube_volume(_n: Dimension) -> f64 {
    1.0
}

/// `V_{n+1}(√(n+1)/2) / V_n(√n/2)`: how much the circumscribed sphere grows
/// when one dimension is added.
///
/// Mathematically this is `exp(ln V_{n+1} − ln V_n)`. Both logs are of size
/// `O(n ln n)`, so the difference is formed analytically to keep the ratio
/// accurate to a few ulps at any `n`.
pub fn growth_ratio(n: Dimension) -> GrowthRatio {
    let nf = n.as_f64();
    // (n+1) ln(√(n+1)/2) − n ln(√n/2)
    let radius_part = 0.5 * nf * (1.0 / nf).ln_1p() + 0.5 * (nf + 1.0).ln() - LN_2;
    // ln Γ(n/2 + 1) − ln Γ((n+1)/2 + 1)
    let gamma_part = -log_gamma_half_step(RealArg::new(nf / 2.0 + 1.0).expect("positive"));
    GrowthRatio::from_log(0.5 * LN_PI + radius_part + gamma_part)
}

/// The printed growth formula
/// `n^{n/2−1}/2 · (n−1)^{(3−n)/2} · √π Γ((n−1)/2) / Γ(n/2)`, for `n ≥ 3`.
///
/// The expression evaluates to `V_n / V_{n−1}`, i.e. `growth_ratio(n − 1)`.
pub fn eq3_ratio(n: Dimension) -> Result<GrowthRatio> {
    let n = n.require_at_least(3, "eq3_ratio")?;
    Ok(GrowthRatio::from_log(log_eq3(n.as_f64())))
}

/// The printed growth formula evaluated at real `ν > 2`.
pub fn continuous_ratio(nu: RealDimension) -> GrowthRatio {
    GrowthRatio::from_log(log_eq3(nu.get()))
}

/// `√(πe/2)`, the large-`n` limit of [`growth_ratio`].
pub fn growth_limit() -> GrowthRatio {
    GrowthRatio((PI * E / 2.0).sqrt())
}

fn log_eq3(nu: f64) -> f64 {
    // (ν/2 − 1) ln ν + ((3 − ν)/2) ln(ν − 1), regrouped around ln(1 − 1/ν)
    // so the two O(ν ln ν) terms cancel exactly.
    let power_part = 0.5 * nu.ln() + 0.5 * (3.0 - nu) * (-1.0 / nu).ln_1p();
    power_part + 0.5 * LN_PI + specfun::half_ratio_real(nu) - LN_2
}

#[derive(Default)]
struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dim(n: u64) -> Dimension {
        Dimension::new(n).unwrap()
    }

    fn rad(r: f64) -> Radius {
        Radius::new(r).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    /// V_n(r) by V_n = V_{n−2} · 2πr²/n from V_1 = 2r, V_2 = πr².
    fn recurrence_volume(n: u64, r: f64) -> f64 {
        let (mut lo, mut hi) = (2.0 * r, PI * r * r);
        if n == 1 {
            return lo;
        }
        for k in 3..=n {
            let next = lo * 2.0 * PI * r * r / k as f64;
            lo = hi;
            hi = next;
        }
        hi
    }

    #[test]
    fn type_invariants() {
        assert!(Dimension::new(0).is_err());
        assert!(RealDimension::new(2.0).is_err());
        assert!(RealDimension::new(f64::NAN).is_err());
        assert!(RealDimension::new(2.0001).is_ok());
        for r in [0.0, -1.0, f64::INFINITY, f64::NAN] {
            assert!(Radius::new(r).is_err());
        }
    }

    #[test]
    fn circumscribed_radius_examples() {
        assert_eq!(circumscribed_radius(dim(1)).get(), 0.5);
        assert_eq!(circumscribed_radius(dim(4)).get(), 1.0);
        assert!((circumscribed_radius(dim(3)).get() - 0.866_025_403_784_438_6).abs() < 1e-16);
    }

    #[test]
    fn closed_form_examples() {
        assert!((log_ball_volume(dim(2), rad(1.0)).get() - PI.ln()).abs() < 1e-14);
        assert!((log_ball_volume(dim(3), rad(1.0)).get() - (4.0 * PI / 3.0).ln()).abs() < 1e-14);
        let v5 = 8.0 * PI * PI / 15.0;
        assert!((log_ball_volume(dim(5), rad(1.0)).get() - v5.ln()).abs() < 1e-14);
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for n in 1..=60 {
            for r in [0.5, 1.0, 1.3] {
                let want = recurrence_volume(n, r).ln();
                let got = log_ball_volume(dim(n), rad(r)).get();
                assert!((got - want).abs() < 1e-12, "n={n} r={r}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn product_form_examples() {
        let v3 = log_ball_volume_product(dim(3), rad(1.0)).unwrap().get();
        assert!((v3 - (4.0 * PI / 3.0).ln()).abs() < 1e-14);
        let v4 = log_ball_volume_product(dim(4), rad(1.0)).unwrap().get();
        assert!((v4 - (PI * PI / 2.0).ln()).abs() < 1e-14);
        assert!(log_ball_volume_product(dim(2), rad(1.0)).is_err());
        assert!(log_ball_volume_product(dim(1), rad(1.0)).is_err());
    }

    #[test]
    fn product_and_closed_forms_agree_on_sparse_grid() {
        for n in (3..=10_000).step_by(97) {
            let circ = circumscribed_radius(dim(n)).get();
            for r in [0.5, circ, 1.0, 2.0] {
                let a = log_ball_volume_product(dim(n), rad(r)).unwrap().get();
                let b = log_ball_volume(dim(n), rad(r)).get();
                assert!((a - b).abs() <= 1e-10, "n={n} r={r}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn cube_volume_is_one() {
        for n in [1, 7, 1_000_000] {
            assert_eq!(cube_volume(dim(n)), 1.0);
        }
    }

    #[test]
    fn growth_ratio_anchors() {
        assert!(rel(growth_ratio(dim(2)).get(), 3f64.sqrt()) <= 1e-12);
        assert!(rel(growth_ratio(dim(3)).get(), PI / 3f64.sqrt()) <= 1e-12);
        let g = growth_ratio(dim(1_000_000)).get();
        assert!((g - 2.066_365_6).abs() <= 2e-6);
    }

    #[test]
    fn growth_ratio_matches_log_volume_difference() {
        for n in 1..=2000 {
            let hi = log_ball_volume(dim(n + 1), circumscribed_radius(dim(n + 1))).get();
            let lo = log_ball_volume(dim(n), circumscribed_radius(dim(n))).get();
            let direct = (hi - lo).exp();
            assert!(rel(growth_ratio(dim(n)).get(), direct) < 1e-11, "n={n}");
        }
    }

    #[test]
    fn growth_ratio_low_dimension_bounds() {
        // n = 1: V_2(√2/2) / V_1(1/2) = π/2
        assert!(rel(growth_ratio(dim(1)).get(), PI / 2.0) < 1e-14);
        for n in 3..5000 {
            let g = growth_ratio(dim(n)).get();
            assert!((1.7..2.066_365_7).contains(&g), "n={n}: {g}");
        }
    }

    #[test]
    fn eq3_examples() {
        assert!(rel(eq3_ratio(dim(3)).unwrap().get(), 3f64.sqrt()) < 1e-14);
        assert!(rel(eq3_ratio(dim(4)).unwrap().get(), PI / 3f64.sqrt()) < 1e-14);
        let shifted = growth_ratio(dim(99)).get();
        assert!(rel(eq3_ratio(dim(100)).unwrap().get(), shifted) <= 1e-9);
        assert!(eq3_ratio(dim(2)).is_err());
    }

    #[test]
    fn continuous_ratio_examples() {
        let at = |nu: f64| continuous_ratio(RealDimension::new(nu).unwrap()).get();
        assert!(rel(at(3.0), 3f64.sqrt()) < 1e-14);
        assert!(rel(at(4.0), PI / 3f64.sqrt()) < 1e-14);
        // 50-digit reference 2.02517870988398354668...
        assert!((at(25.0) - 2.025_178_709_883_983_5).abs() < 1e-14);
        assert!((at(25.0) - 2.0254).abs() <= 0.002);
        for n in 3..500 {
            let e = eq3_ratio(dim(n)).unwrap().get();
            assert!(rel(at(n as f64), e) <= 1e-12);
        }
        assert!(at(2.0 + 1e-9).is_finite());
    }

    #[test]
    fn limit_constant() {
        let l = growth_limit().get();
        assert_eq!(format!("{l:.7}"), "2.0663657");
        assert!(l.to_string().starts_with("2.0663656"));
        assert!(rel(l * l, PI * E / 2.0) <= 1e-15);
        assert!(l > eq3_ratio(dim(1_000_000)).unwrap().get());
    }

    #[test]
    fn fixed_radius_decay() {
        let lv = |n| log_ball_volume(dim(n), rad(1.0)).get();
        for n in 6..2000 {
            assert!(lv(n + 1) < lv(n), "not decreasing at {n}");
        }
        // 50 ln π − ln Γ(51) = −91.2412726593030...
        assert!((lv(100) + 91.241_272_659_303_02).abs() < 1e-11);
    }

    #[test]
    fn to_linear_reports_range_errors() {
        assert!((log_ball_volume(dim(2), rad(1.0)).to_linear().unwrap() - PI).abs() < 1e-15);
        let tiny = log_ball_volume(dim(1000), rad(1.0));
        assert!(tiny.get() < -700.0 && tiny.get().is_finite());
        assert!(matches!(tiny.to_linear(), Err(Error::Underflow(_))));
        let huge = log_ball_volume(dim(1000), rad(100.0));
        assert!(matches!(huge.to_linear(), Err(Error::Overflow(_))));
    }

    #[test]
    fn log_volume_finite_at_huge_dimension() {
        let n = dim(100_000_000);
        assert!(log_ball_volume(n, circumscribed_radius(n))
            .get()
            .is_finite());
        assert!(growth_ratio(n).get() < growth_limit().get());
    }

    proptest! {
        #[test]
        fn scaling_law(n in 1u64..5000, r in 0.01f64..50.0, lambda in 0.05f64..20.0) {
            let a = log_ball_volume(dim(n), rad(lambda * r)).get();
            let b = log_ball_volume(dim(n), rad(r)).get();
            let expect = n as f64 * lambda.ln();
            prop_assert!((a - b - expect).abs() <= 1e-11, "{} vs {}", a - b, expect);
        }

        #[test]
        fn shift_identity(n in 3u64..1_000_000) {
            let lit = eq3_ratio(dim(n)).unwrap().get();
            let shifted = growth_ratio(dim(n - 1)).get();
            prop_assert!(rel(lit, shifted) <= 1e-9);
        }
    }
}
