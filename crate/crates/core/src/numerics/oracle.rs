//! Independent evaluators of `Λ` used to cross-check the series.
//!
//! [`lobachevsky_oracle`] integrates `-log|2 sin t|` directly. The interval
//! `[0, x]` is cut at every multiple of π/2 so that each piece lies within
//! π/2 of a single zero `s` of `sin`. On that piece, with `u = t - s`,
//!
//! ```text
//! -log|2 sin t| = -log|u| - log|2 sin u / u|
//! ```
//!
//! The first term is integrated in closed form and the second, smooth on
//! `|u| ≤ π/2`, by adaptive Gauss–Kronrod (7/15) quadrature.

use std::f64::consts::{FRAC_PI_2, PI};

use super::{Angle, EvalConfig};
use crate::error::{Error, Result};

// Gauss–Kronrod 7/15 nodes and weights on [-1, 1], as tabulated.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Subdivision budget per unit of `max_series_terms`.
const INTERVALS_PER_TERM: usize = 32;

/// `Λ(x)` by adaptive quadrature of the defining integral.
pub fn lobachevsky_oracle(x: Angle, cfg: &EvalConfig) -> Result<f64> {
    cfg.check()?;
    let x = x.radians();
    if x == 0.0 {
        return Ok(0.0);
    }
    let (a, b, sign) = if x > 0.0 {
        (0.0, x, 1.0)
    } else {
        (x, 0.0, -1.0)
    };

    let mut cuts = vec![a];
    let first = (a / FRAC_PI_2).floor() as i64 + 1;
    let mut j = first;
    while (j as f64) * FRAC_PI_2 < b {
        cuts.push(j as f64 * FRAC_PI_2);
        j += 1;
    }
    cuts.push(b);

    let pieces = (cuts.len() - 1) as f64;
    let piece_target = cfg.target_abs_error / pieces;
    let max_intervals = cfg.max_series_terms * INTERVALS_PER_TERM;
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (p, q) = (w[0], w[1]);
        if q <= p {
            continue;
        }
        let s = PI * (0.5 * (p + q) / PI).round();
        let (ua, ub) = (p - s, q - s);
        let log_part = neg_log_antiderivative(ub) - neg_log_antiderivative(ua);
        let smooth =
            adaptive_gk(smooth_part, ua, ub, piece_target, max_intervals).ok_or_else(|| {
                Error::Accuracy {
                    target: cfg.target_abs_error,
                    reason: format!("quadrature did not converge on [{p}, {q}]"),
                }
            })?;
        total += log_part + smooth;
    }
    Ok(sign * total)
}

/// Antiderivative of `-log|u|` vanishing at zero.
fn neg_log_antiderivative(u: f64) -> f64 {
    if u == 0.0 {
        0.0
    } else {
        u - u * u.abs().ln()
    }
}

/// `-log|2 sin u / u|`, smooth on `|u| < π`.
fn smooth_part(u: f64) -> f64 {
    if u == 0.0 {
        -std::f64::consts::LN_2
    } else {
        -(2.0 * u.sin() / u).abs().ln()
    }
}

fn gk15(f: fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    let value = kronrod * half;
    // The Kronrod-Gauss difference can round to zero; never claim better
    // than a few dozen ulps of the interval's contribution.
    let err = ((kronrod - gauss) * half)
        .abs()
        .max(50.0 * f64::EPSILON * value.abs());
    (value, err)
}

/// Integrates by repeatedly bisecting the interval with the largest error
/// estimate until the summed estimate falls below `tol`.
fn adaptive_gk(f: fn(f64) -> f64, a: f64, b: f64, tol: f64, max_intervals: usize) -> Option<f64> {
    let (v, e) = gk15(f, a, b);
    let mut intervals = vec![(a, b, v, e)];
    loop {
        let err: f64 = intervals.iter().map(|iv| iv.3).sum();
        if err <= tol {
            return Some(intervals.iter().map(|iv| iv.2).sum());
        }
        if intervals.len() >= max_intervals {
            return None;
        }
        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|l, r| l.1 .3.total_cmp(&r.1 .3))
            .map(|(i, _)| i)?;
        let (lo, hi, _, _) = intervals.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return None;
        }
        let (v1, e1) = gk15(f, lo, mid);
        let (v2, e2) = gk15(f, mid, hi);
        intervals.push((lo, mid, v1, e1));
        intervals.push((mid, hi, v2, e2));
    }
}

/// Partial sum of the Fourier series `Λ(x) = ½ Σ sin(2kx)/k²`.
///
/// The truncation error is at most `1 / (2·terms)`; convergence is far too
/// slow for production use.
pub fn lobachevsky_fourier(x: Angle, terms: usize) -> f64 {
    let x = x.radians();
    let mut sum = 0.0;
    for k in (1..=terms).rev() {
        let kf = k as f64;
        sum += (2.0 * kf * x).sin() / (kf * kf);
    }
    0.5 * sum
}
