use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};

use approx::assert_abs_diff_eq;
use lobell::numerics::oracle::{lobachevsky_fourier, lobachevsky_oracle};
use lobell::numerics::{lobachevsky, reduce_angle, Angle, EvalConfig};
use proptest::prelude::*;

fn lob(x: f64) -> f64 {
    lobachevsky(Angle::new(x).unwrap(), &EvalConfig::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn odd(x in -FRAC_PI_2 + 1e-9..FRAC_PI_2 - 1e-9) {
        prop_assert!((lob(-x) + lob(x)).abs() <= 1e-11);
    }

    #[test]
    fn pi_periodic(x in -10.0f64..10.0) {
        prop_assert!((lob(x + PI) - lob(x)).abs() <= 1e-11);
    }

    #[test]
    fn reduction_lands_in_half_open_interval(x in -1e3f64..1e3) {
        let r = reduce_angle(Angle::new(x).unwrap()).radians();
        prop_assert!(r > -FRAC_PI_2 && r <= FRAC_PI_2);
        let turns = (x - r) / PI;
        prop_assert!((turns - turns.round()).abs() < 1e-9);
    }

    #[test]
    fn bounded_by_maximum(x in -20.0f64..20.0) {
        prop_assert!(lob(x).abs() <= lob(FRAC_PI_6) + 1e-13);
    }
}

#[test]
fn identity_between_pi_over_3_and_pi_over_6() {
    assert_abs_diff_eq!(3.0 * lob(FRAC_PI_3), 2.0 * lob(FRAC_PI_6), epsilon = 1e-14);
}

#[test]
fn series_matches_quadrature_on_grid() {
    let cfg = EvalConfig::default();
    let mut worst: f64 = 0.0;
    for i in 0..500 {
        let x = -PI + 2.0 * PI * i as f64 / 499.0;
        let a = Angle::new(x).unwrap();
        let d = (lobachevsky(a, &cfg).unwrap() - lobachevsky_oracle(a, &cfg).unwrap()).abs();
        worst = worst.max(d);
    }
    assert!(worst <= 1e-10, "worst deviation {worst:e}");
}

#[test]
fn oracle_examples() {
    let cfg = EvalConfig::default();
    for x in [FRAC_PI_6, 1.0] {
        let a = Angle::new(x).unwrap();
        assert_abs_diff_eq!(
            lobachevsky_oracle(a, &cfg).unwrap(),
            lob(x),
            epsilon = 1e-10
        );
    }
}

#[test]
fn fourier_series_agrees() {
    for x in [0.2, 0.9, -1.3] {
        let f = lobachevsky_fourier(Angle::new(x).unwrap(), 100_000);
        assert_abs_diff_eq!(f, lob(x), epsilon = 1e-5);
    }
}

#[test]
fn maximum_at_pi_over_6() {
    let steps = 20_000;
    let h = FRAC_PI_2 / steps as f64;
    let (arg, _) =
        (0..=steps)
            .map(|i| (i as f64 * h, lob(i as f64 * h)))
            .fold(
                (0.0, f64::MIN),
                |best, c| if c.1 > best.1 { c } else { best },
            );
    assert!((arg - FRAC_PI_6).abs() <= h, "argmax {arg}");
}
