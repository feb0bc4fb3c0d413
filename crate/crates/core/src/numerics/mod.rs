//! The Lobachevsky function
//!
//! ```text
//! Λ(x) = -∫₀ˣ log|2 sin t| dt
//! ```
//!
//! and the ideal polyhedron constants `v3 = 3Λ(π/3)` and `v8 = 8Λ(π/4)`.
//!
//! `Λ` is odd and π-periodic. After reducing the argument to `(-π/2, π/2]`
//! it is evaluated from the expansion around zero,
//!
//! ```text
//! Λ(θ) = θ - θ log|2θ| + θ Σ_{k≥1} ζ(2k) / (k (2k+1)) · (θ/π)^{2k},
//! ```
//!
//! whose terms decay at least like `4^{-k}` on the reduced range. The
//! [`oracle`] module holds two independent evaluators (adaptive quadrature
//! of the defining integral, and the Fourier sine series) for cross-checks.

pub mod oracle;
mod zeta;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

pub use zeta::zeta;

use crate::error::{domain, Error, Result};

/// A finite angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Result<Self> {
        if radians.is_finite() {
            Ok(Angle(radians))
        } else {
            Err(domain(format!("angle must be finite, got {radians}")))
        }
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Accuracy controls for the Lobachevsky evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Absolute error the result must be certified to.
    pub target_abs_error: f64,
    /// Upper limit on series terms (or quadrature subdivisions / 32 for the
    /// oracle) before giving up.
    pub max_series_terms: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            target_abs_error: 1e-13,
            max_series_terms: 60,
        }
    }
}

impl EvalConfig {
    pub fn with_target(target_abs_error: f64) -> Result<Self> {
        let cfg = EvalConfig {
            target_abs_error,
            ..EvalConfig::default()
        };
        cfg.check()?;
        Ok(cfg)
    }

    pub(crate) fn check(&self) -> Result<()> {
        if !(self.target_abs_error > 0.0 && self.target_abs_error.is_finite()) {
            return Err(domain(format!(
                "target_abs_error must be positive and finite, got {}",
                self.target_abs_error
            )));
        }
        if self.max_series_terms == 0 {
            return Err(domain("max_series_terms must be positive"));
        }
        Ok(())
    }
}

/// A value together with a certified bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub abs_error: f64,
}

/// Reduces `x` modulo π into `(-π/2, π/2]`.
pub fn reduce_angle(x: Angle) -> Angle {
    let mut r = x.0.rem_euclid(PI);
    if r > FRAC_PI_2 {
        r -= PI;
    }
    Angle(r)
}

/// `Λ(x)` to within `cfg.target_abs_error`.
pub fn lobachevsky(x: Angle, cfg: &EvalConfig) -> Result<f64> {
    lobachevsky_estimate(x, cfg).map(|e| e.value)
}

/// `Λ(x)` with the certified absolute error bound of the evaluation.
pub fn lobachevsky_estimate(x: Angle, cfg: &EvalConfig) -> Result<Estimate> {
    cfg.check()?;
    let r = reduce_angle(x).0;
    if r == 0.0 {
        return Ok(Estimate {
            value: 0.0,
            abs_error: 0.0,
        });
    }
    let theta = r.abs();
    let (value, mut abs_error) = series_positive(theta, cfg)?;

    // Error inherited from reducing a large argument: one ulp of x times
    // the derivative magnitude |log|2 sin r||.
    if r != x.0 {
        let ulp = x.0.abs() * f64::EPSILON;
        abs_error += ulp * (1.0 + (2.0 * theta.sin()).ln().abs());
        if abs_error > cfg.target_abs_error {
            return Err(Error::Accuracy {
                target: cfg.target_abs_error,
                reason: format!("argument reduction of {} loses too much precision", x.0),
            });
        }
    }
    Ok(Estimate {
        value: value.copysign(r),
        abs_error,
    })
}

/// Series evaluation for `0 < θ ≤ π/2`; returns the value and error bound.
fn series_positive(theta: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    let coeffs = zeta::series_coefficients();
    let ratio = (theta / PI).powi(2);
    let max_terms = cfg.max_series_terms.min(coeffs.len() - 1);
    let half_target = 0.5 * cfg.target_abs_error;
    // Terms are cheap, so keep going to full precision even when the target
    // is looser; the target only decides failure.
    let stop = half_target.min(0.25 * f64::EPSILON * theta);

    let lead = theta - theta * (2.0 * theta).ln();
    let mut power = 1.0;
    let mut terms = Vec::with_capacity(max_terms);
    let mut tail = f64::INFINITY;
    for c in coeffs.iter().take(max_terms) {
        power *= ratio;
        terms.push(c * power);
        // Coefficients decrease, so the remainder is dominated by a
        // geometric series starting at the next coefficient.
        let next = coeffs[terms.len()];
        tail = theta * next * power * ratio / (1.0 - ratio);
        if tail <= stop {
            break;
        }
    }
    if tail > half_target {
        return Err(Error::Accuracy {
            target: cfg.target_abs_error,
            reason: format!(
                "series tail {tail:e} after {} terms at theta = {theta}",
                terms.len()
            ),
        });
    }
    let series: f64 = terms.iter().rev().sum();
    let value = lead + theta * series;
    let rounding =
        16.0 * f64::EPSILON * (lead.abs() + theta * (2.0 * theta).ln().abs() + theta * series);
    let abs_error = tail + rounding;
    if abs_error > cfg.target_abs_error {
        return Err(Error::Accuracy {
            target: cfg.target_abs_error,
            reason: format!("rounding floor {rounding:e} exceeds target"),
        });
    }
    Ok((value, abs_error))
}

fn lobachevsky_default(x: f64) -> f64 {
    // Finite argument and default target: cannot fail.
    lobachevsky(Angle(x), &EvalConfig::default()).expect("default Lobachevsky evaluation")
}

/// Volume of the regular ideal tetrahedron, `3Λ(π/3)`.
pub fn constant_v3() -> f64 {
    3.0 * lobachevsky_default(FRAC_PI_3)
}

/// Volume of the regular ideal octahedron, `8Λ(π/4)`.
pub fn constant_v8() -> f64 {
    8.0 * lobachevsky_default(FRAC_PI_4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_6;

    fn lob(x: f64) -> f64 {
        lobachevsky(Angle::new(x).unwrap(), &EvalConfig::default()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let r = |x: f64| reduce_angle(Angle::new(x).unwrap()).radians();
        assert_eq!(r(0.0), 0.0);
        assert_eq!(r(PI), 0.0);
        assert_abs_diff_eq!(r(3.0 * PI / 4.0), -PI / 4.0, epsilon = 1e-15);
        assert_eq!(r(FRAC_PI_2), FRAC_PI_2);
        assert_abs_diff_eq!(r(-FRAC_PI_2), FRAC_PI_2, epsilon = 1e-15);
        assert!(r(-FRAC_PI_2) > 0.0);
    }

    #[test]
    fn non_finite_angle_rejected() {
        assert!(matches!(Angle::new(f64::NAN), Err(Error::Domain(_))));
        assert!(matches!(Angle::new(f64::INFINITY), Err(Error::Domain(_))));
    }

    #[test]
    fn special_values() {
        assert_eq!(lob(0.0), 0.0);
        assert_abs_diff_eq!(lob(FRAC_PI_2), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(lob(FRAC_PI_3), 1.0149416064096535 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(lob(FRAC_PI_6), 1.0149416064096535 / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn constants() {
        assert_abs_diff_eq!(constant_v3(), 1.0149416064096535, epsilon = 1e-15);
        assert_abs_diff_eq!(constant_v8(), 3.663862376708876, epsilon = 1e-15);
        assert_abs_diff_eq!(constant_v3(), 2.0 * lob(FRAC_PI_6), epsilon = 1e-15);
    }

    #[test]
    fn bad_config_rejected() {
        let x = Angle::new(1.0).unwrap();
        let cfg = EvalConfig {
            target_abs_error: 0.0,
            ..EvalConfig::default()
        };
        assert!(matches!(lobachevsky(x, &cfg), Err(Error::Domain(_))));
        assert!(EvalConfig::with_target(-1.0).is_err());
    }

    #[test]
    fn too_few_terms_is_an_error() {
        let cfg = EvalConfig {
            target_abs_error: 1e-13,
            max_series_terms: 3,
        };
        let err = lobachevsky(Angle::new(1.2).unwrap(), &cfg).unwrap_err();
        assert!(matches!(err, Error::Accuracy { .. }));
    }

    #[test]
    fn unreachable_target_is_an_error() {
        let cfg = EvalConfig::with_target(1e-19).unwrap();
        let err = lobachevsky(Angle::new(0.7).unwrap(), &cfg).unwrap_err();
        assert!(matches!(err, Error::Accuracy { .. }));
    }

    #[test]
    fn loose_target_uses_fewer_terms() {
        let loose = EvalConfig::with_target(1e-4).unwrap();
        let v = lobachevsky(Angle::new(1.0).unwrap(), &loose).unwrap();
        assert_abs_diff_eq!(v, lob(1.0), epsilon = 1e-4);
    }

    #[test]
    fn error_bound_reported() {
        let e = lobachevsky_estimate(Angle::new(1.3).unwrap(), &EvalConfig::default()).unwrap();
        assert!(e.abs_error > 0.0 && e.abs_error <= 1e-13);
    }
}
