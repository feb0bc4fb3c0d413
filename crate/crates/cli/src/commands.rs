use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use lobell::bounds::{
    self, asymptotic_band, bounds_for_area, bounds_for_faces, bounds_for_vertices, check_bounds,
    convergence_row, crossover_faces, crossover_vertices, min_n_asymptotic, second_smallest_volume,
    BoundsReport, Side,
};
use lobell::numerics::{constant_v3, constant_v8, EvalConfig};
use lobell::polyhedra::{
    build_lobell, build_tower, four_color, parse_poly, validate, verify_coloring, ColoringOutcome,
    LobellDescriptor, PlanarMap, TowerDescriptor, ValidationReport,
};
use lobell::volume::lobell_volume;

use crate::output::{sig, Format, Table};
use crate::{BoundsArgs, Cli, ColorArgs, Command};

const MAX_N: u64 = 100_000;
const MAX_K: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Status {
    Ok = 0,
    Usage = 1,
    Violated = 2,
    Inconclusive = 3,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input { path: String, source: lobell::Error },
    #[error(transparent)]
    Numeric(#[from] lobell::Error),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn run(cli: &Cli) -> Status {
    let cfg = match EvalConfig::with_target(cli.precision) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: --precision: {e}");
            return Status::Usage;
        }
    };
    let (table, status) = match execute(&cli.command, &cfg, cli.format) {
        Ok(result) => result,
        Err(e) => {
            eprintln!("error: {e}");
            return Status::Usage;
        }
    };
    let text = table.render(cli.format);
    let written = match &cli.output {
        Some(path) => fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return Status::Usage;
    }
    status
}

fn execute(
    command: &Command,
    cfg: &EvalConfig,
    format: Format,
) -> Result<(Table, Status), CliError> {
    let d = format.digits();
    match command {
        Command::Volumes { n_from, n_to } => volumes(*n_from, *n_to, cfg, d),
        Command::Tower { k, n_from, n_to } => tower(*k, *n_from, n_to.unwrap_or(*n_from), cfg, d),
        Command::Convergence { k, n_min, n_max } => convergence(k, *n_min, *n_max, cfg, d),
        Command::Bounds(args) => bounds_cmd(args, cfg, d),
        Command::Validate { file } => {
            let p = read_map(file)?;
            let report = validate(&p);
            let status = if report.all_passed() {
                Status::Ok
            } else {
                Status::Violated
            };
            Ok((validation_table(&report), status))
        }
        Command::Color(args) => color(args),
        Command::Constants => Ok((constants(d), Status::Ok)),
    }
}

fn check_range(name: &str, from: u64, to: u64, min: u64, max: u64) -> Result<(), CliError> {
    if from < min {
        return Err(usage(format!("{name} must be at least {min}, got {from}")));
    }
    if from > to {
        return Err(usage(format!("empty {name} range {from}..{to}")));
    }
    if to > max {
        return Err(usage(format!("{name} must not exceed {max}, got {to}")));
    }
    Ok(())
}

fn flag(b: bool) -> String {
    b.to_string()
}

fn volumes(
    n_from: u64,
    n_to: u64,
    cfg: &EvalConfig,
    d: usize,
) -> Result<(Table, Status), CliError> {
    check_range("n", n_from, n_to, 5, MAX_N)?;
    let rows = (n_from..=n_to)
        .into_par_iter()
        .map(|n| -> Result<Vec<String>, lobell::Error> {
            let v = lobell_volume(n, cfg)?;
            let (low, high) = asymptotic_band(n)?;
            Ok(vec![
                n.to_string(),
                sig(v.theta, d),
                sig(v.value, d),
                sig(v.value / n as f64, d),
                sig(low, d),
                sig(high, d),
                flag(low < v.value && v.value < high),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&[
        "n",
        "theta",
        "vol",
        "vol_per_n",
        "band_low",
        "band_high",
        "in_band",
    ]);
    rows.into_iter().for_each(|r| table.push(r));
    let scan = min_n_asymptotic(n_to, cfg)?;
    match scan.threshold {
        Some(n0) => table.note(format!(
            "n0 = {n0}: band holds for every n in [{n0}, {n_to}]"
        )),
        None => table.note(format!("n0 not found <= {n_to}")),
    }
    Ok((table, Status::Ok))
}

fn tower(
    k: u64,
    n_from: u64,
    n_to: u64,
    cfg: &EvalConfig,
    d: usize,
) -> Result<(Table, Status), CliError> {
    check_range("k", k, k, 1, MAX_K)?;
    check_range("n", n_from, n_to, 5, MAX_N)?;
    let rows = (n_from..=n_to)
        .into_par_iter()
        .map(|n| -> Result<Vec<String>, lobell::Error> {
            let t = TowerDescriptor::new(k, n)?;
            let base = lobell_volume(n, cfg)?;
            let row = convergence_row(k, n, &base);
            Ok(vec![
                k.to_string(),
                n.to_string(),
                t.vertex_count().to_string(),
                t.face_count().to_string(),
                (2 * n).to_string(),
                ((k - 1) * n).to_string(),
                sig(row.volume, d),
                sig(row.ratio, d),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&[
        "k",
        "n",
        "vertices",
        "faces",
        "lateral_pentagons",
        "lateral_hexagons",
        "vol",
        "vol_per_vertex",
    ]);
    rows.into_iter().for_each(|r| table.push(r));
    Ok((table, Status::Ok))
}

fn convergence(
    ks: &[u64],
    n_min: u64,
    n_max: u64,
    cfg: &EvalConfig,
    d: usize,
) -> Result<(Table, Status), CliError> {
    check_range("n", n_min, n_max, 5, MAX_N)?;
    for &k in ks {
        check_range("k", k, k, 1, MAX_K)?;
    }
    let bases = (n_min..=n_max)
        .into_par_iter()
        .map(|n| lobell_volume(n, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let n0 = min_n_asymptotic(n_max, cfg)?.threshold;

    let mut table = Table::new(&[
        "k",
        "n",
        "volume",
        "vertices",
        "ratio",
        "band_low",
        "band_high",
        "in_band",
    ]);
    for &k in ks {
        let mut inside = 0;
        let mut last = None;
        for (n, base) in (n_min..).zip(&bases) {
            let row = convergence_row(k, n, base);
            inside += usize::from(row.in_band);
            table.push(vec![
                k.to_string(),
                n.to_string(),
                sig(row.volume, d),
                row.vertices.to_string(),
                sig(row.ratio, d),
                sig(row.band_low, d),
                sig(row.band_high, d),
                flag(row.in_band),
            ]);
            last = Some(row);
        }
        let last = last.expect("non-empty n range");
        let limit = bounds::band_center(k);
        table.note(format!(
            "summary k={k} limit={} ratio_at_n_max={} gap={} in_band={inside}/{}",
            sig(limit, d),
            sig(last.ratio, d),
            sig(limit - last.ratio, d),
            bases.len()
        ));
    }
    table.note(format!(
        "supremum 5v3/8 = {}; n0 = {}",
        sig(bounds::five_v3_over_8(), d),
        n0.map_or_else(|| "not found".to_string(), |n| n.to_string())
    ));
    Ok((table, Status::Ok))
}

fn bounds_cmd(args: &BoundsArgs, cfg: &EvalConfig, d: usize) -> Result<(Table, Status), CliError> {
    if let Some(v) = args.volume {
        if !(v > 0.0 && v.is_finite()) {
            return Err(usage(format!("--volume must be positive, got {v}")));
        }
    }
    let report = if let Some(v) = args.vertices {
        bounds_for_vertices(v, args.volume, cfg)?
    } else if let Some(f) = args.faces {
        bounds_for_faces(f, args.volume, cfg)?
    } else if let Some(s) = args.area {
        if !(s >= 0.0 && s.is_finite()) {
            return Err(usage(format!("--area must be non-negative, got {s}")));
        }
        bounds_for_area(s, args.volume)?
    } else if let Some(path) = &args.file {
        let p = read_map(path)?;
        let validation = validate(&p);
        if !validation.all_passed() {
            return Ok((validation_table(&validation), Status::Violated));
        }
        check_bounds(&p, args.volume, cfg)?
    } else {
        return Err(usage(
            "one of --vertices, --faces, --area, --file is required",
        ));
    };
    let status = if report.all_satisfied() {
        Status::Ok
    } else {
        Status::Violated
    };
    Ok((bounds_table(&report, cfg, d)?, status))
}

fn bounds_table(report: &BoundsReport, cfg: &EvalConfig, d: usize) -> Result<Table, CliError> {
    let mut table = Table::new(&["inequality", "side", "bound", "volume", "satisfied"]);
    let volume = report.volume.map_or_else(|| "-".to_string(), |v| sig(v, d));
    for c in &report.checks {
        table.push(vec![
            c.name.to_string(),
            match c.side {
                Side::Lower => "lower".to_string(),
                Side::Upper => "upper".to_string(),
            },
            sig(c.bound, d),
            volume.clone(),
            c.satisfied.map_or_else(|| "-".to_string(), flag),
        ]);
    }
    let input = match report.input {
        bounds::BoundsInput::Vertices(v) => format!("V = {v}"),
        bounds::BoundsInput::Faces(f) => format!("F = {f}"),
        bounds::BoundsInput::Area(s) => format!("S = {}", sig(s, d)),
        bounds::BoundsInput::Polyhedron {
            vertices,
            faces,
            area,
        } => {
            format!(
                "polyhedron V = {vertices}, F = {faces}, S = {}",
                sig(area, d)
            )
        }
    };
    table.note(format!("input: {input}"));
    if let Some(v) = report.improved_lower {
        table.note(format!("improved lower bound: {}", sig(v, d)));
    }
    let r6 = second_smallest_volume(cfg)?;
    table.note(format!(
        "vol R(6) = {} exceeds the linear lower bound for V <= {} and F <= {}",
        sig(r6, d),
        crossover_vertices(r6)?,
        crossover_faces(r6)?
    ));
    Ok(table)
}

fn validation_table(report: &ValidationReport) -> Table {
    let mut table = Table::new(&["check", "passed", "detail"]);
    for c in &report.checks {
        table.push(vec![
            c.kind.name().to_string(),
            flag(c.passed),
            c.detail.clone(),
        ]);
    }
    table.note(format!(
        "V = {}, E = {}, F = {}",
        report.vertices, report.edges, report.faces
    ));
    table
}

fn color(args: &ColorArgs) -> Result<(Table, Status), CliError> {
    let map = if let Some(n) = args.lobell {
        check_range("n", n, n, 5, MAX_N)?;
        build_lobell(LobellDescriptor::new(n)?)
    } else if let Some(kn) = &args.tower {
        let &[k, n] = kn.as_slice() else {
            return Err(usage("--tower takes K,N"));
        };
        check_range("k", k, k, 1, MAX_K)?;
        check_range("n", n, n, 5, MAX_N)?;
        build_tower(TowerDescriptor::new(k, n)?)
    } else if let Some(path) = &args.file {
        let p = read_map(path)?;
        let report = validate(&p);
        if !report.all_passed() {
            return Ok((validation_table(&report), Status::Violated));
        }
        p
    } else {
        return Err(usage("one of --lobell, --tower, --file is required"));
    };

    match four_color(&map, args.budget) {
        ColoringOutcome::Found { coloring, nodes } => {
            if let Err(defect) = verify_coloring(&map, &coloring) {
                eprintln!("error: coloring failed verification: {defect:?}");
                return Ok((Table::new(&["face", "degree", "color"]), Status::Violated));
            }
            let mut table = Table::new(&["face", "degree", "color"]);
            for (f, &c) in coloring.colors().iter().enumerate() {
                table.push(vec![
                    f.to_string(),
                    map.face(f).len().to_string(),
                    c.to_string(),
                ]);
            }
            table.note(format!(
                "certificate verified: all {} edges separate distinct colors ({nodes} search nodes)",
                map.edge_count()
            ));
            Ok((table, Status::Ok))
        }
        ColoringOutcome::NoColoring { nodes } => {
            let mut table = Table::new(&["face", "degree", "color"]);
            table.note(format!(
                "no four-coloring exists (exhaustive search, {nodes} nodes)"
            ));
            Ok((table, Status::Violated))
        }
        ColoringOutcome::Inconclusive { nodes } => {
            eprintln!(
                "inconclusive: node budget of {} exhausted after {nodes} nodes",
                args.budget
            );
            let mut table = Table::new(&["face", "degree", "color"]);
            table.note(format!("inconclusive after {nodes} nodes"));
            Ok((table, Status::Inconclusive))
        }
    }
}

fn constants(d: usize) -> Table {
    let v3 = constant_v3();
    let v8 = constant_v8();
    let mut table = Table::new(&["name", "value"]);
    for (name, value) in [
        ("v3", v3),
        ("v8", v8),
        ("5v3/8", bounds::five_v3_over_8()),
        ("5v3/16", bounds::five_v3_over_16()),
        ("5v3/4", bounds::five_v3_over_4()),
        ("v8/32", bounds::v8_over_32()),
        ("v8/16", bounds::v8_over_16()),
    ] {
        table.push(vec![name.to_string(), sig(value, d)]);
    }
    table
}

fn read_map(path: &Path) -> Result<PlanarMap, CliError> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: display.clone(),
        source,
    })?;
    parse_poly(&text).map_err(|source| CliError::Input {
        path: display,
        source,
    })
}
