//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! fails. Run with `cargo test -p lobell-cli --test acceptance`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lobell::bounds::{
    atkinson_bounds, convergence_row, crossover_faces, crossover_vertices, min_n_asymptotic,
    second_smallest_volume,
};
use lobell::numerics::oracle::lobachevsky_oracle;
use lobell::numerics::{constant_v3, constant_v8, lobachevsky, reduce_angle, Angle, EvalConfig};
use lobell::polyhedra::{
    build_lobell, build_tower, four_color, validate, verify_coloring, ColoringOutcome,
    LobellDescriptor, TowerDescriptor, DEFAULT_NODE_BUDGET,
};
use lobell::volume::{lobell_arguments, lobell_volume, VolumeResult};

const V3_PRINTED: f64 = 1.0149416064096535;
const V8_PRINTED: f64 = 3.663862376708876;
const CONSTANT_TOL: f64 = 1e-12;
const GOLDEN: [(u64, f64); 3] = [(5, 4.306), (6, 6.023), (7, 7.563)];
const GOLDEN_TOL: f64 = 1e-3;
const ORACLE_TOL: f64 = 1e-10;
const GRID_POINTS: usize = 500;
const SYMMETRY_TOL: f64 = 1e-14;
const IDENTITY_TOL: f64 = 1e-14;
const CROSSOVER_V: i64 = 54;
const CROSSOVER_F: i64 = 29;
const ABSTRACT_V: i64 = 56;

type Outcome = Result<String, String>;

/// Name, check and optional time limit.
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn lob(x: f64) -> f64 {
    lobachevsky(Angle::new(x).unwrap(), &cfg()).unwrap()
}

fn oracle(x: f64) -> f64 {
    lobachevsky_oracle(Angle::new(x).unwrap(), &cfg()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn volume(n: u64) -> VolumeResult {
    lobell_volume(n, &cfg()).unwrap()
}

fn constants() -> Outcome {
    let (v3, v8) = (constant_v3(), constant_v8());
    ensure((v3 - V3_PRINTED).abs() <= CONSTANT_TOL, || {
        format!("v3 = {v3:.16}")
    })?;
    ensure((v8 - V8_PRINTED).abs() <= CONSTANT_TOL, || {
        format!("v8 = {v8:.16}")
    })?;
    Ok(format!(
        "v3 = {v3:.16}, v8 = {v8:.15} (tol {CONSTANT_TOL:e})"
    ))
}

fn golden_volumes() -> Outcome {
    let mut shown = Vec::new();
    for (n, printed) in GOLDEN {
        let v = volume(n);
        ensure((v.value - printed).abs() <= GOLDEN_TOL, || {
            format!("vol R({n}) = {}", v.value)
        })?;
        let args = lobell_arguments(n).unwrap();
        let weights = [2.0, 1.0, 1.0, 1.0];
        let via_oracle = n as f64 / 2.0
            * args
                .iter()
                .zip(weights)
                .map(|(&a, w)| w * oracle(a))
                .sum::<f64>();
        ensure((via_oracle - v.value).abs() <= ORACLE_TOL, || {
            format!("R({n}): series {} vs quadrature {via_oracle}", v.value)
        })?;
        shown.push(format!("R({n}) = {:.10}", v.value));
    }
    Ok(format!(
        "{} (printed tol {GOLDEN_TOL:e}, oracle tol {ORACLE_TOL:e})",
        shown.join(", ")
    ))
}

fn lambda_properties() -> Outcome {
    let mut worst_odd: f64 = 0.0;
    let mut worst_period: f64 = 0.0;
    let mut worst_oracle: f64 = 0.0;
    for i in 0..GRID_POINTS {
        // Grid over (-pi, pi) avoiding the endpoints.
        let x = -PI + 2.0 * PI * (i as f64 + 0.5) / GRID_POINTS as f64;
        worst_odd = worst_odd.max((lob(-x) + lob(x)).abs());
        worst_period = worst_period.max((lob(x + PI) - lob(x)).abs());
        worst_oracle = worst_oracle.max((lob(x) - oracle(x)).abs());
        let r = reduce_angle(Angle::new(x).unwrap()).radians();
        ensure(-FRAC_PI_2 < r && r <= FRAC_PI_2, || {
            format!("reduce({x}) = {r}")
        })?;
    }
    // Periodicity is checked against the reduced argument, whose rounding
    // grows with |x|; the tolerance accounts for one ulp of pi.
    ensure(worst_odd <= SYMMETRY_TOL, || {
        format!("oddness defect {worst_odd:e}")
    })?;
    ensure(worst_period <= 1e-13, || {
        format!("periodicity defect {worst_period:e}")
    })?;
    ensure(worst_oracle <= ORACLE_TOL, || {
        format!("series vs oracle {worst_oracle:e}")
    })?;
    let identity = (3.0 * lob(FRAC_PI_3) - 2.0 * lob(FRAC_PI_6)).abs();
    ensure(identity <= IDENTITY_TOL, || {
        format!("3L(pi/3) - 2L(pi/6) = {identity:e}")
    })?;
    Ok(format!(
        "{GRID_POINTS} points: odd {worst_odd:.1e}, period {worst_period:.1e}, oracle {worst_oracle:.1e}, identity {identity:.1e}"
    ))
}

fn combinatorics() -> Outcome {
    for n in 5..=200u64 {
        let p = build_lobell(LobellDescriptor::new(n).unwrap());
        let r = validate(&p);
        ensure(r.all_passed(), || format!("R({n}) fails validation"))?;
        ensure(
            p.face_count() as u64 == 2 * n + 2 && p.vertex_count() as u64 == 4 * n,
            || {
                format!(
                    "R({n}) counts V = {}, F = {}",
                    p.vertex_count(),
                    p.face_count()
                )
            },
        )?;
    }
    let mut maps = 0;
    for k in 1..=50u64 {
        for n in 5..=50u64 {
            let p = build_tower(TowerDescriptor::new(k, n).unwrap());
            let r = validate(&p);
            ensure(r.all_passed(), || format!("R_{k}({n}) fails validation"))?;
            ensure(p.vertex_count() as u64 == (2 * k + 2) * n, || {
                format!("R_{k}({n}) V")
            })?;
            // Lateral faces are every face except the two bases (faces 0, 1).
            let lateral = &p.faces()[2..];
            let pentagons = lateral.iter().filter(|f| f.len() == 5).count() as u64;
            let hexagons = lateral.iter().filter(|f| f.len() == 6).count() as u64;
            ensure(
                pentagons == 2 * n
                    && hexagons == (k - 1) * n
                    && lateral.len() as u64 == (k + 1) * n,
                || format!("R_{k}({n}) lateral: {pentagons} pentagons, {hexagons} hexagons"),
            )?;
            maps += 1;
        }
    }
    Ok(format!(
        "196 Lobell maps and {maps} towers pass all checks and count formulas"
    ))
}

fn sandwich() -> Outcome {
    let mut violations = Vec::new();
    let mut checked = 0;
    for n in 5..=50u64 {
        let base = volume(n);
        for k in 1..=50u64 {
            let t = TowerDescriptor::new(k, n).unwrap();
            let vol = k as f64 * base.value;
            if !atkinson_bounds(t.vertex_count() as i64).admits(vol) {
                violations.push(format!("R_{k}({n})"));
            }
            checked += 1;
        }
    }
    ensure(violations.is_empty(), || {
        format!("violations: {}", violations.join(" "))
    })?;
    Ok(format!("{checked} towers, 0 violations"))
}

fn convergence() -> Outcome {
    let bases: Vec<VolumeResult> = (50..=10_000u64).map(volume).collect();
    let mut worst = Vec::new();
    for k in [1u64, 2, 3, 5, 10, 100] {
        let mut max_scaled: f64 = 0.0;
        for (n, base) in (50u64..).zip(&bases) {
            let row = convergence_row(k, n, base);
            ensure(row.in_band, || {
                format!("k = {k}, n = {n}: ratio {} outside band", row.ratio)
            })?;
            let center = k as f64 / (k + 1) as f64 * 5.0 * constant_v3() / 8.0;
            let allowed = k as f64 / (k + 1) as f64 * 17.0 * constant_v3() / (4.0 * (n * n) as f64);
            let deviation = center - row.ratio;
            ensure(deviation.abs() <= allowed, || {
                format!("k = {k}, n = {n}: deviation {deviation:e}")
            })?;
            max_scaled = max_scaled.max(deviation / allowed);
        }
        worst.push(format!("k={k}: {max_scaled:.3}"));
    }
    Ok(format!(
        "n in [50, 10000], worst deviation / allowance {}",
        worst.join(", ")
    ))
}

fn crossovers() -> Outcome {
    let r6 = second_smallest_volume(&cfg()).unwrap();
    let v = crossover_vertices(r6).unwrap();
    let f = crossover_faces(r6).unwrap();
    ensure(v == CROSSOVER_V && f == CROSSOVER_F, || {
        format!("V <= {v}, F <= {f}")
    })?;
    let lower_at_56 = atkinson_bounds(ABSTRACT_V).lower;
    Ok(format!(
        "V <= {v}, F <= {f}; discrepancy: a crossover of {ABSTRACT_V} is not reproduced, \
         since (56-2)v8/32 = {lower_at_56:.6} exceeds vol R(6) = {r6:.6}"
    ))
}

fn asymptotic_threshold() -> Outcome {
    let small = min_n_asymptotic(1_000, &cfg()).unwrap();
    let large = min_n_asymptotic(10_000, &cfg()).unwrap();
    for n in [5, 6, 7] {
        ensure(small.lower_failures.contains(&n), || {
            format!("band unexpectedly holds at n = {n}")
        })?;
    }
    ensure(
        small.threshold.is_some() && small.threshold == large.threshold,
        || format!("n0 {:?} vs {:?}", small.threshold, large.threshold),
    )?;
    let mut previous = volume(5).value;
    for n in 6..=10_000u64 {
        let v = volume(n).value;
        ensure(v > previous, || format!("vol R({n}) <= vol R({})", n - 1))?;
        previous = v;
    }
    Ok(format!(
        "band fails for n in {:?}, n0 = {} for n_max 1e3 and 1e4, volume increasing on [5, 10000]",
        small.lower_failures,
        small.threshold.unwrap()
    ))
}

fn coloring() -> Outcome {
    let mut max_nodes = 0;
    for n in 5..=32u64 {
        let p = build_lobell(LobellDescriptor::new(n).unwrap());
        match four_color(&p, DEFAULT_NODE_BUDGET) {
            ColoringOutcome::Found { coloring, nodes } => {
                verify_coloring(&p, &coloring).map_err(|d| format!("R({n}): {d:?}"))?;
                max_nodes = max_nodes.max(nodes);
            }
            other => return Err(format!("R({n}): {other:?}")),
        }
    }
    Ok(format!(
        "R(5)..R(32) colored and verified, at most {max_nodes} search nodes"
    ))
}

fn lobell_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lobell"))
        .args(args)
        .output()
        .expect("run lobell binary")
}

fn cli() -> Outcome {
    let args = ["volumes", "5", "7", "--format", "csv"];
    let first = lobell_cli(&args);
    let second = lobell_cli(&args);
    ensure(first.status.code() == Some(0), || {
        format!("exit {:?}", first.status.code())
    })?;
    ensure(first.stdout == second.stdout, || {
        "output differs between runs".to_string()
    })?;
    let text = String::from_utf8(first.stdout).map_err(|e| e.to_string())?;
    for (n, printed) in GOLDEN {
        let row = text
            .lines()
            .find(|l| l.starts_with(&format!("{n},")))
            .ok_or_else(|| format!("no row for n = {n}"))?;
        let vol: f64 = row
            .split(',')
            .nth(2)
            .and_then(|s| s.parse().ok())
            .ok_or("bad vol column")?;
        ensure(
            (vol - printed).abs() <= GOLDEN_TOL && (vol - volume(n).value).abs() <= 1e-13,
            || format!("n = {n}: vol {vol}"),
        )?;
    }
    let negative: [(&[&str], i32); 3] = [
        (&["volumes", "7", "5"], 1),
        (&["bounds", "--vertices", "20", "--volume", "100"], 2),
        (&["color", "--lobell", "7", "--budget", "1"], 3),
    ];
    for (args, code) in negative {
        let got = lobell_cli(args).status.code();
        ensure(got == Some(code), || {
            format!("{args:?}: exit {got:?}, expected {code}")
        })?;
    }
    Ok("csv byte-stable, golden values present, exit codes 1, 2, 3 as specified".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("constants", constants, Some(Duration::from_secs(1))),
        (
            "golden volumes",
            golden_volumes,
            Some(Duration::from_secs(1)),
        ),
        (
            "lobachevsky properties",
            lambda_properties,
            Some(Duration::from_secs(10)),
        ),
        (
            "combinatorics",
            combinatorics,
            Some(Duration::from_secs(30)),
        ),
        ("bounds sandwich", sandwich, None),
        ("convergence", convergence, None),
        ("crossovers", crossovers, None),
        (
            "asymptotic threshold",
            asymptotic_threshold,
            Some(Duration::from_secs(60)),
        ),
        ("coloring", coloring, None),
        ("cli", cli, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, limit) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS {name}: {detail} [{elapsed:.2?}]",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL {name}: {detail} [{elapsed:.2?}]",
                    i + 1
                );
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
