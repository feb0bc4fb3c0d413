//! Even zeta values `ζ(2k)` used as coefficients of the Lobachevsky series.

use std::sync::OnceLock;

/// Number of coefficients kept in the table.
pub(crate) const TABLE_LEN: usize = 64;

/// Terms summed directly before the Euler–Maclaurin tail takes over.
const DIRECT_TERMS: u32 = 32;

/// `ζ(s)` for real `s ≥ 2` by direct summation of the first
/// `DIRECT_TERMS - 1` terms plus an Euler–Maclaurin correction at
/// `N = DIRECT_TERMS`.
///
/// The first omitted correction is of order `s^7 N^{-s-7} / 10^6`, below
/// `1e-17` for every `s ≥ 2`.
pub fn zeta(s: f64) -> f64 {
    debug_assert!(s >= 2.0);
    let n = f64::from(DIRECT_TERMS);
    // Sum small terms first.
    let mut sum = 0.0;
    for j in (1..DIRECT_TERMS).rev() {
        sum += f64::from(j).powf(-s);
    }
    let n_pow = n.powf(-s);
    let tail = n * n_pow / (s - 1.0) + 0.5 * n_pow + s * n_pow / (12.0 * n)
        - s * (s + 1.0) * (s + 2.0) * n_pow / (720.0 * n.powi(3))
        + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * n_pow / (30240.0 * n.powi(5));
    sum + tail
}

/// Series coefficients `ζ(2k) / (k (2k + 1))` for `k = 1..=TABLE_LEN`,
/// stored at index `k - 1`.
pub(crate) fn series_coefficients() -> &'static [f64; TABLE_LEN] {
    static TABLE: OnceLock<[f64; TABLE_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [0.0; TABLE_LEN];
        for (i, c) in table.iter_mut().enumerate() {
            let k = (i + 1) as f64;
            *c = zeta(2.0 * k) / (k * (2.0 * k + 1.0));
        }
        table
    })
}
