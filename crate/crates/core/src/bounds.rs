//! Volume bounds for compact right-angled hyperbolic polyhedra, and the
//! asymptotic bands of the Löbell family.
//!
//! Lower bounds are non-strict (`bound <= vol`) and upper bounds strict
//! (`vol < bound`), as in the inequalities they implement:
//!
//! ```text
//! (V - 2) v8/32      <= vol < (V - 10) 5v3/8      vertices
//! (F - 3) v8/16      <= vol < (F - 7) 5v3/4       faces, V = 2F - 4
//! (S/π + 3) v8/16    <= vol < (S/π - 1) 5v3/4     area, S = π(F - 6)
//! max{(V - 2) v8/32, vol R(6)} <= vol             not a dodecahedron
//! ```

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::numerics::{constant_v3, constant_v8, EvalConfig};
use crate::polyhedra::{total_face_area, PlanarMap};
use crate::volume::{lobell_volume, VolumeResult};

/// `5 v3 / 8`, the supremum of `vol / vert`.
pub fn five_v3_over_8() -> f64 {
    5.0 * constant_v3() / 8.0
}

/// `5 v3 / 4`, the limit of `vol R(n) / n`.
pub fn five_v3_over_4() -> f64 {
    5.0 * constant_v3() / 4.0
}

/// `5 v3 / 16`, the limit of `vol R(n) / vert R(n)`.
pub fn five_v3_over_16() -> f64 {
    0.5 * five_v3_over_8()
}

pub fn v8_over_32() -> f64 {
    constant_v8() / 32.0
}

pub fn v8_over_16() -> f64 {
    constant_v8() / 16.0
}

/// A lower bound (inclusive) and an upper bound (exclusive) on volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeBounds {
    pub lower: f64,
    pub upper: f64,
}

impl VolumeBounds {
    pub fn admits(&self, vol: f64) -> bool {
        self.lower <= vol && vol < self.upper
    }
}

/// `((V - 2) v8/32, (V - 10) 5v3/8)`.
pub fn atkinson_bounds(vertices: i64) -> VolumeBounds {
    let v = vertices as f64;
    VolumeBounds {
        lower: (v - 2.0) * v8_over_32(),
        upper: (v - 10.0) * five_v3_over_8(),
    }
}

/// `((F - 3) v8/16, (F - 7) 5v3/4)`.
pub fn face_bounds(faces: i64) -> VolumeBounds {
    let f = faces as f64;
    VolumeBounds {
        lower: (f - 3.0) * v8_over_16(),
        upper: (f - 7.0) * five_v3_over_4(),
    }
}

/// `((S/π + 3) v8/16, (S/π - 1) 5v3/4)` for lateral surface area `S`.
pub fn area_bounds(area: f64) -> VolumeBounds {
    let s = area / PI;
    VolumeBounds {
        lower: (s + 3.0) * v8_over_16(),
        upper: (s - 1.0) * five_v3_over_4(),
    }
}

/// `vol R(6)`, the second smallest volume of a compact right-angled
/// polyhedron.
pub fn second_smallest_volume(cfg: &EvalConfig) -> Result<f64> {
    Ok(lobell_volume(6, cfg)?.value)
}

/// Lower bound improved by the constant `vol R(6)` for every polyhedron
/// other than the dodecahedron.
pub fn improved_lower_bound(vertices: u64, is_dodecahedron: bool, cfg: &EvalConfig) -> Result<f64> {
    if vertices < 20 {
        return Err(domain(format!(
            "V = {vertices} is below the dodecahedron's 20 vertices"
        )));
    }
    let linear = atkinson_bounds(vertices as i64).lower;
    if is_dodecahedron {
        if vertices != 20 {
            return Err(domain(format!(
                "a dodecahedron has 20 vertices, not {vertices}"
            )));
        }
        return Ok(linear);
    }
    Ok(linear.max(second_smallest_volume(cfg)?))
}

/// Face-count form: `max{(F - 3) v8/16, vol R(6)}`.
pub fn improved_lower_bound_faces(
    faces: u64,
    is_dodecahedron: bool,
    cfg: &EvalConfig,
) -> Result<f64> {
    if faces < 12 {
        return Err(domain(format!(
            "F = {faces} is below the minimum of 12 faces"
        )));
    }
    let linear = face_bounds(faces as i64).lower;
    if is_dodecahedron {
        if faces != 12 {
            return Err(domain(format!("a dodecahedron has 12 faces, not {faces}")));
        }
        return Ok(linear);
    }
    Ok(linear.max(second_smallest_volume(cfg)?))
}

/// Largest integer `x` with `(x - offset) * slope < threshold`.
fn largest_below(threshold: f64, offset: i64, slope: f64) -> Result<i64> {
    if !(threshold > 0.0 && threshold.is_finite()) {
        return Err(domain(format!(
            "threshold must be positive, got {threshold}"
        )));
    }
    let mut x = (threshold / slope).ceil() as i64 + offset;
    while ((x - offset) as f64) * slope >= threshold {
        x -= 1;
    }
    while ((x + 1 - offset) as f64) * slope < threshold {
        x += 1;
    }
    Ok(x)
}

/// Largest `V` with `(V - 2) v8/32 < threshold`.
pub fn crossover_vertices(threshold: f64) -> Result<i64> {
    largest_below(threshold, 2, v8_over_32())
}

/// Largest `F` with `(F - 3) v8/16 < threshold`.
pub fn crossover_faces(threshold: f64) -> Result<i64> {
    largest_below(threshold, 3, v8_over_16())
}

/// `(5v3/4 · n - 17v3/(2n), 5v3/4 · n)`, the band containing `vol R(n)`
/// for sufficiently large `n`.
pub fn asymptotic_band(n: u64) -> Result<(f64, f64)> {
    if n < 5 {
        return Err(domain(format!("n = {n} is outside the Löbell family")));
    }
    let nf = n as f64;
    let v3 = constant_v3();
    let high = five_v3_over_4() * nf;
    Ok((high - 17.0 * v3 / (2.0 * nf), high))
}

/// Band for `vol R(n) / vert R(n)`: `(5v3/16 - 17v3/(8n²), 5v3/16)`.
pub fn vertex_ratio_band(n: u64) -> Result<(f64, f64)> {
    if n < 5 {
        return Err(domain(format!("n = {n} is outside the Löbell family")));
    }
    let nf = n as f64;
    let high = five_v3_over_16();
    Ok((high - 17.0 * constant_v3() / (8.0 * nf * nf), high))
}

/// Result of scanning `n ∈ [5, n_max]` against [`asymptotic_band`].
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticScan {
    pub n_max: u64,
    /// Smallest `n0` such that the band holds strictly on `[n0, n_max]`.
    pub threshold: Option<u64>,
    /// `n` where `vol R(n)` is not above the lower edge.
    pub lower_failures: Vec<u64>,
    /// `n` where `vol R(n)` is not below the upper edge.
    pub upper_failures: Vec<u64>,
}

pub fn min_n_asymptotic(n_max: u64, cfg: &EvalConfig) -> Result<AsymptoticScan> {
    if n_max < 5 {
        return Err(domain(format!("n_max = {n_max} is below 5")));
    }
    let mut lower_failures = Vec::new();
    let mut upper_failures = Vec::new();
    let mut last_failure = None;
    for n in 5..=n_max {
        let vol = lobell_volume(n, cfg)?.value;
        let (low, high) = asymptotic_band(n)?;
        let lower_ok = low < vol;
        let upper_ok = vol < high;
        if !lower_ok {
            lower_failures.push(n);
        }
        if !upper_ok {
            upper_failures.push(n);
        }
        if !(lower_ok && upper_ok) {
            last_failure = Some(n);
        }
    }
    let threshold = match last_failure {
        None => Some(5),
        Some(n) if n == n_max => None,
        Some(n) => Some(n + 1),
    };
    Ok(AsymptoticScan {
        n_max,
        threshold,
        lower_failures,
        upper_failures,
    })
}

/// `k/(k+1) · 5v3/8`, the limit of `vol R_k(n) / vert R_k(n)` as `n → ∞`.
pub fn band_center(k: u64) -> f64 {
    k as f64 / (k + 1) as f64 * five_v3_over_8()
}

/// One row of a convergence table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub k: u64,
    pub n: u64,
    pub volume: f64,
    pub vertices: u64,
    pub ratio: f64,
    pub band_low: f64,
    pub band_high: f64,
    pub in_band: bool,
}

/// Row for `R_k(n)` from a precomputed `vol R(n)`.
pub fn convergence_row(k: u64, n: u64, base: &VolumeResult) -> ConvergenceRow {
    let volume = k as f64 * base.value;
    let vertices = (2 * k + 2) * n;
    let ratio = volume / vertices as f64;
    let nf = n as f64;
    let scale = k as f64 / (k + 1) as f64;
    let band_high = scale * five_v3_over_8();
    let band_low = band_high - scale * (17.0 * constant_v3() / (4.0 * nf * nf));
    ConvergenceRow {
        k,
        n,
        volume,
        vertices,
        ratio,
        band_low,
        band_high,
        in_band: band_low < ratio && ratio < band_high,
    }
}

/// Ratio `vol R_k(n) / vert R_k(n)` against its band.
pub fn ratio_band(k: u64, n: u64, cfg: &EvalConfig) -> Result<ConvergenceRow> {
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    let base = lobell_volume(n, cfg)?;
    Ok(convergence_row(k, n, &base))
}

/// What a [`BoundsReport`] was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundsInput {
    Vertices(u64),
    Faces(u64),
    Area(f64),
    Polyhedron {
        vertices: u64,
        faces: u64,
        area: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub side: Side,
    pub bound: f64,
    /// `None` when no volume was supplied.
    pub satisfied: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub input: BoundsInput,
    pub lower_v8: f64,
    pub upper_v3: f64,
    pub improved_lower: Option<f64>,
    pub volume: Option<f64>,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    /// No evaluated inequality is violated.
    pub fn all_satisfied(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied != Some(false))
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.satisfied == Some(false))
    }
}

fn check(name: &'static str, side: Side, bound: f64, volume: Option<f64>) -> BoundCheck {
    let satisfied = volume.map(|v| match side {
        Side::Lower => bound <= v,
        Side::Upper => v < bound,
    });
    BoundCheck {
        name,
        side,
        bound,
        satisfied,
    }
}

fn push_pair(
    checks: &mut Vec<BoundCheck>,
    names: [&'static str; 2],
    b: VolumeBounds,
    volume: Option<f64>,
) {
    checks.push(check(names[0], Side::Lower, b.lower, volume));
    checks.push(check(names[1], Side::Upper, b.upper, volume));
}

const VERTEX_NAMES: [&str; 2] = ["(V-2)v8/32 <= vol", "vol < (V-10)5v3/8"];
const FACE_NAMES: [&str; 2] = ["(F-3)v8/16 <= vol", "vol < (F-7)5v3/4"];
const AREA_NAMES: [&str; 2] = ["(S/pi+3)v8/16 <= vol", "vol < (S/pi-1)5v3/4"];
const IMPROVED_NAME: &str = "max{linear, vol R(6)} <= vol";

/// Bounds from a vertex count, optionally checked against a volume.
pub fn bounds_for_vertices(
    vertices: u64,
    volume: Option<f64>,
    cfg: &EvalConfig,
) -> Result<BoundsReport> {
    let b = atkinson_bounds(vertices as i64);
    let mut checks = Vec::new();
    push_pair(&mut checks, VERTEX_NAMES, b, volume);
    let improved_lower = if vertices >= 20 {
        let v = improved_lower_bound(vertices, vertices == 20, cfg)?;
        checks.push(check(IMPROVED_NAME, Side::Lower, v, volume));
        Some(v)
    } else {
        None
    };
    Ok(BoundsReport {
        input: BoundsInput::Vertices(vertices),
        lower_v8: b.lower,
        upper_v3: b.upper,
        improved_lower,
        volume,
        checks,
    })
}

/// Bounds from a face count, optionally checked against a volume.
pub fn bounds_for_faces(faces: u64, volume: Option<f64>, cfg: &EvalConfig) -> Result<BoundsReport> {
    let b = face_bounds(faces as i64);
    let mut checks = Vec::new();
    push_pair(&mut checks, FACE_NAMES, b, volume);
    let improved_lower = if faces >= 12 {
        let v = improved_lower_bound_faces(faces, faces == 12, cfg)?;
        checks.push(check(IMPROVED_NAME, Side::Lower, v, volume));
        Some(v)
    } else {
        None
    };
    Ok(BoundsReport {
        input: BoundsInput::Faces(faces),
        lower_v8: b.lower,
        upper_v3: b.upper,
        improved_lower,
        volume,
        checks,
    })
}

/// Bounds from a lateral surface area, optionally checked against a volume.
pub fn bounds_for_area(area: f64, volume: Option<f64>) -> Result<BoundsReport> {
    if !(area >= 0.0 && area.is_finite()) {
        return Err(domain(format!("area must be non-negative, got {area}")));
    }
    let b = area_bounds(area);
    let mut checks = Vec::new();
    push_pair(&mut checks, AREA_NAMES, b, volume);
    Ok(BoundsReport {
        input: BoundsInput::Area(area),
        lower_v8: b.lower,
        upper_v3: b.upper,
        improved_lower: None,
        volume,
        checks,
    })
}

/// Every bound family evaluated at the counts of `p`, against `volume`.
///
/// The dodecahedron is recognised as the map with twelve pentagons and is
/// exempt from the improved bound.
pub fn check_bounds(p: &PlanarMap, volume: Option<f64>, cfg: &EvalConfig) -> Result<BoundsReport> {
    if let Some(v) = volume {
        if !(v > 0.0 && v.is_finite()) {
            return Err(domain(format!("volume must be positive, got {v}")));
        }
    }
    let vertices = p.vertex_count() as u64;
    let faces = p.face_count() as u64;
    let area = total_face_area(p);
    let vb = atkinson_bounds(vertices as i64);
    let mut checks = Vec::new();
    push_pair(&mut checks, VERTEX_NAMES, vb, volume);
    push_pair(&mut checks, FACE_NAMES, face_bounds(faces as i64), volume);
    push_pair(&mut checks, AREA_NAMES, area_bounds(area), volume);
    let improved_lower = if vertices >= 20 && !(p.is_dodecahedron() && vertices != 20) {
        let v = improved_lower_bound(vertices, p.is_dodecahedron(), cfg)?;
        checks.push(check(IMPROVED_NAME, Side::Lower, v, volume));
        Some(v)
    } else {
        None
    };
    Ok(BoundsReport {
        input: BoundsInput::Polyhedron {
            vertices,
            faces,
            area,
        },
        lower_v8: vb.lower,
        upper_v3: vb.upper,
        improved_lower,
        volume,
        checks,
    })
}
