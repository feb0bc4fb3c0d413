//! Hyperbolic volumes of Löbell polyhedra `R(n)` and towers `R_k(n)`.
//!
//! ```text
//! vol R(n) = n/2 · (2Λ(θ) + Λ(θ + π/n) + Λ(θ - π/n) + Λ(π/2 - 2θ))
//! θ = θ_n  = π/2 - arccos(1 / (2 cos(π/n)))
//! ```
//!
//! and `vol R_k(n) = k · vol R(n)`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, Result};
use crate::numerics::{lobachevsky_estimate, Angle, EvalConfig};
use crate::polyhedra::TowerDescriptor;

/// A computed volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeResult {
    pub value: f64,
    /// The auxiliary angle `θ_n`, radians.
    pub theta: f64,
    pub abs_error_bound: f64,
}

fn check_n(n: u64) -> Result<()> {
    if n < 5 {
        return Err(domain(format!(
            "n = {n} is outside the Löbell family (n >= 5 required)"
        )));
    }
    Ok(())
}

/// `θ_n`, computed as `arcsin(1 / (2 cos(π/n)))`, which equals the
/// `π/2 - arccos(..)` form without the cancellation near π/6.
pub fn theta(n: u64) -> Result<f64> {
    check_n(n)?;
    let arg = 1.0 / (2.0 * (PI / n as f64).cos());
    Ok(arg.asin())
}

/// The four Lobachevsky arguments `[θ, θ + π/n, θ - π/n, π/2 - 2θ]`.
///
/// For `n >= 5` all four already lie in `(0, π/2)`, so angle reduction is
/// the identity on them.
pub fn lobell_arguments(n: u64) -> Result<[f64; 4]> {
    let t = theta(n)?;
    let step = PI / n as f64;
    Ok([t, t + step, t - step, FRAC_PI_2 - 2.0 * t])
}

/// `vol R(n)`.
pub fn lobell_volume(n: u64, cfg: &EvalConfig) -> Result<VolumeResult> {
    let args = lobell_arguments(n)?;
    let weights = [2.0, 1.0, 1.0, 1.0];
    let mut sum = 0.0;
    let mut err = 0.0;
    for (w, a) in weights.iter().zip(args) {
        let e = lobachevsky_estimate(Angle::new(a)?, cfg)?;
        sum += w * e.value;
        err += w * e.abs_error;
    }
    let half_n = 0.5 * n as f64;
    let value = half_n * sum;
    Ok(VolumeResult {
        value,
        theta: args[0],
        abs_error_bound: half_n * err + 4.0 * f64::EPSILON * value,
    })
}

/// `vol R_k(n) = k · vol R(n)`.
pub fn tower_volume(d: TowerDescriptor, cfg: &EvalConfig) -> Result<VolumeResult> {
    let base = lobell_volume(d.n(), cfg)?;
    Ok(scale_to_tower(base, d.k()))
}

/// Scales a precomputed `vol R(n)` to `vol R_k(n)`.
pub fn scale_to_tower(base: VolumeResult, k: u64) -> VolumeResult {
    let k = k as f64;
    VolumeResult {
        value: k * base.value,
        theta: base.theta,
        abs_error_bound: k * base.abs_error_bound,
    }
}

/// `vol R_k(n) / vert R_k(n)`, where `vert R_k(n) = (2k + 2) n`.
pub fn volume_per_vertex(d: TowerDescriptor, cfg: &EvalConfig) -> Result<f64> {
    let v = tower_volume(d, cfg)?;
    Ok(v.value / d.vertex_count() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{constant_v3, reduce_angle};
    use crate::Error;
    use approx::assert_abs_diff_eq;

    fn vol(n: u64) -> f64 {
        lobell_volume(n, &EvalConfig::default()).unwrap().value
    }

    fn tower(k: u64, n: u64) -> TowerDescriptor {
        TowerDescriptor::new(k, n).unwrap()
    }

    #[test]
    fn theta_values() {
        // 2cos(π/6) = √3 and 2cos(π/5) = φ.
        let phi = 0.5 * (1.0 + 5f64.sqrt());
        assert_abs_diff_eq!(
            theta(6).unwrap(),
            FRAC_PI_2 - (1.0 / 3f64.sqrt()).acos(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(theta(6).unwrap(), 0.6154797087, epsilon = 1e-10);
        assert_abs_diff_eq!(
            theta(5).unwrap(),
            FRAC_PI_2 - (1.0 / phi).acos(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(theta(5).unwrap(), 0.6662394325, epsilon = 1e-10);
        assert_abs_diff_eq!(theta(1_000_000).unwrap(), PI / 6.0, epsilon = 1e-11);
    }

    #[test]
    fn theta_decreasing_to_pi_over_6() {
        let mut prev = theta(5).unwrap();
        for n in 6..2000 {
            let t = theta(n).unwrap();
            assert!(t < prev && t > PI / 6.0, "n = {n}");
            prev = t;
        }
    }

    #[test]
    fn out_of_family() {
        for n in [0, 3, 4] {
            assert!(matches!(theta(n), Err(Error::Domain(_))));
            assert!(lobell_volume(n, &EvalConfig::default()).is_err());
        }
    }

    #[test]
    fn printed_volumes() {
        assert_abs_diff_eq!(vol(5), 4.306, epsilon = 1e-3);
        assert_abs_diff_eq!(vol(6), 6.023, epsilon = 1e-3);
        assert_abs_diff_eq!(vol(7), 7.563, epsilon = 1e-3);
    }

    #[test]
    fn arguments_need_no_reduction() {
        for n in 5..500 {
            for a in lobell_arguments(n).unwrap() {
                let r = reduce_angle(Angle::new(a).unwrap()).radians();
                assert_eq!(r.to_bits(), a.to_bits(), "n = {n}");
                assert!(a > 0.0 && a < FRAC_PI_2);
            }
        }
    }

    #[test]
    fn tower_scaling() {
        let cfg = EvalConfig::default();
        let one = tower_volume(tower(1, 6), &cfg).unwrap();
        assert_eq!(one, lobell_volume(6, &cfg).unwrap());
        assert_abs_diff_eq!(
            tower_volume(tower(3, 6), &cfg).unwrap().value,
            18.070,
            epsilon = 3e-3
        );
        assert_abs_diff_eq!(
            tower_volume(tower(2, 5), &cfg).unwrap().value,
            8.612,
            epsilon = 2e-3
        );
        assert_eq!(tower_volume(tower(3, 6), &cfg).unwrap().value, 3.0 * vol(6));
    }

    #[test]
    fn per_vertex() {
        let cfg = EvalConfig::default();
        assert_abs_diff_eq!(
            volume_per_vertex(tower(1, 5), &cfg).unwrap(),
            0.2153,
            epsilon = 1e-4
        );
        let v3 = constant_v3();
        let r = volume_per_vertex(tower(1, 5000), &cfg).unwrap();
        assert_abs_diff_eq!(r, 5.0 * v3 / 16.0, epsilon = 1e-6);
        let r = volume_per_vertex(tower(3, 5000), &cfg).unwrap();
        assert_abs_diff_eq!(r, 0.75 * 5.0 * v3 / 8.0, epsilon = 1e-6);
    }

    #[test]
    fn error_bound_is_small() {
        let r = lobell_volume(10_000, &EvalConfig::default()).unwrap();
        assert!(r.abs_error_bound > 0.0 && r.abs_error_bound < 1e-8);
    }
}
