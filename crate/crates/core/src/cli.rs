//! Command-line front end.
//!
//! Subcommands: `map` (solve and persist a solution), `eval` / `invert`
//! (batch point evaluation from a stored solution), `grid` (figure data),
//! `convergence` (self-convergence table), and `selftest` (oracle suite).
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 selftest
//! failure. All JSON/CSV output uses 17-significant-digit floats so that
//! identical inputs reproduce byte-identical files.

use std::f64::consts::FRAC_PI_4;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::Value;

use crate::canonical::{
    default_alpha, default_z1, solve_map, CanonicalKind, Diagnostics, MapSolution,
};
use crate::error::MapError;
use crate::eval::{
    evaluate_request, image_grid, DomainSide, EvalRequest, GridSpec, GridStyle, Polyline,
    PolylineRole,
};
use crate::geometry::{Region, RegionConfig};
use crate::verify::{convergence_table, selftest};

#[derive(Debug)]
enum CliError {
    Usage(String),
    Numerical(String),
}

impl From<MapError> for CliError {
    fn from(err: MapError) -> Self {
        CliError::Numerical(err.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "slitmap",
    version,
    about = "Conformal maps from multiply connected regions onto canonical slit domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for a canonical map and write the solution JSON.
    Map(MapArgs),
    /// Evaluate the forward map at points of the region.
    Eval(PointArgs),
    /// Evaluate the inverse map at points of the canonical domain.
    Invert(PointArgs),
    /// Write images of a grid and of the boundary as SVG/CSV polylines.
    Grid(GridArgs),
    /// Self-convergence study against a finest-n reference solve.
    Convergence(ConvergenceArgs),
    /// Run the oracle suite; exits nonzero on any failure.
    Selftest,
}

#[derive(Args)]
struct KindArgs {
    /// Target domain: annulus | disk | circular | radial | parallel.
    #[arg(long)]
    kind: String,
    /// Point in hole 1 (annulus target), e.g. "1.5+1.0i". Defaults to the
    /// center of hole 1's bounding box.
    #[arg(long)]
    z1: Option<String>,
    /// Interior zero of the map (circular/radial targets). Defaults to the
    /// outer-curve centroid.
    #[arg(long)]
    alpha: Option<String>,
    /// Slit angle in radians (parallel target). Defaults to pi/4.
    #[arg(long)]
    delta: Option<f64>,
}

#[derive(Args)]
struct MapArgs {
    /// Region JSON file.
    #[arg(long)]
    region: PathBuf,
    #[command(flatten)]
    kind: KindArgs,
    /// Nodes per boundary curve (even, at least 8).
    #[arg(long)]
    n: usize,
    /// Output solution JSON path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PointArgs {
    /// Region JSON file (the solution stores no geometry).
    #[arg(long)]
    region: PathBuf,
    /// Solution JSON written by `map`.
    #[arg(long)]
    solution: PathBuf,
    /// Comma-separated complex literals, e.g. "0.1+0.2i,-0.3i".
    #[arg(long)]
    points: Option<String>,
    /// CSV file with one "re,im" pair per line.
    #[arg(long)]
    points_file: Option<PathBuf>,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    region: PathBuf,
    #[arg(long)]
    solution: PathBuf,
    /// cartesian | polar.
    #[arg(long, default_value = "cartesian")]
    style: String,
    /// Grid curves per family.
    #[arg(long, default_value_t = 12)]
    lines: usize,
    /// Sample points per grid curve.
    #[arg(long, default_value_t = 400)]
    samples: usize,
    #[arg(long)]
    out_svg: Option<PathBuf>,
    #[arg(long)]
    out_csv: Option<PathBuf>,
}

#[derive(Args)]
struct ConvergenceArgs {
    #[arg(long)]
    region: PathBuf,
    /// "all" or a comma-separated subset of
    /// annulus,disk,circular,radial,parallel.
    #[arg(long)]
    kinds: String,
    /// Comma-separated node counts, e.g. "16,32,64,128,256".
    #[arg(long)]
    n: String,
    /// Reference node count; every n must divide it.
    #[arg(long = "ref")]
    reference: usize,
    #[command(flatten)]
    aux: AuxArgs,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuxArgs {
    #[arg(long)]
    z1: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    delta: Option<f64>,
}

/// Parses `std::env::args` and runs; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args().collect())
}

/// Entry point used by `main` and by tests.
pub fn run_from(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Map(args) => cmd_map(args),
        Command::Eval(args) => cmd_points(args, DomainSide::Original),
        Command::Invert(args) => cmd_points(args, DomainSide::Canonical),
        Command::Grid(args) => cmd_grid(args),
        Command::Convergence(args) => cmd_convergence(args),
        Command::Selftest => return cmd_selftest(),
    };
    match outcome {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn load_region(path: &Path) -> CliResult<Region> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read region file {}: {e}", path.display())))?;
    let config: RegionConfig = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid region file {}: {e}", path.display())))?;
    config
        .build()
        .map_err(|e| CliError::Usage(format!("invalid region in {}: {e}", path.display())))
}

fn parse_complex(text: &str) -> CliResult<Complex64> {
    let s: String = text.trim().chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(CliError::Usage("empty complex literal".into()));
    }
    let parse_real = |part: &str| -> Option<f64> { part.parse::<f64>().ok() };
    if !s.ends_with('i') && !s.ends_with('I') {
        return parse_real(&s)
            .map(|re| Complex64::new(re, 0.0))
            .ok_or_else(|| CliError::Usage(format!("invalid complex literal {text:?}")));
    }
    let body = &s[..s.len() - 1];
    // Split before the sign of the imaginary part: the last +/- that is
    // neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let c = bytes[i] as char;
        if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
            split = Some(i);
            break;
        }
    }
    let (re_part, im_part) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let im = match im_part {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        p => parse_real(p),
    };
    let re = if re_part.is_empty() { Some(0.0) } else { parse_real(re_part) };
    match (re, im) {
        (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
        _ => Err(CliError::Usage(format!("invalid complex literal {text:?}"))),
    }
}

fn resolve_kind(args: &KindArgs, region: &Region) -> CliResult<CanonicalKind> {
    let z1 = args.z1.as_deref().map(parse_complex).transpose()?;
    let alpha = args.alpha.as_deref().map(parse_complex).transpose()?;
    build_kind(&args.kind, z1, alpha, args.delta, region)
}

fn build_kind(
    tag: &str,
    z1: Option<Complex64>,
    alpha: Option<Complex64>,
    delta: Option<f64>,
    region: &Region,
) -> CliResult<CanonicalKind> {
    match tag {
        "annulus" => {
            let z1 = match z1 {
                Some(z) => z,
                None => default_z1(region).ok_or_else(|| {
                    CliError::Usage("annulus target needs a region with a hole".into())
                })?,
            };
            Ok(CanonicalKind::AnnulusSlits { z1 })
        }
        "disk" => Ok(CanonicalKind::DiskSlits),
        "circular" | "radial" => {
            let alpha = match alpha {
                Some(a) => a,
                None => default_alpha(region)
                    .map_err(|e| CliError::Usage(e.to_string()))?,
            };
            Ok(if tag == "circular" {
                CanonicalKind::CircularSlits { alpha }
            } else {
                CanonicalKind::RadialSlits { alpha }
            })
        }
        "parallel" => Ok(CanonicalKind::ParallelSlits { delta: delta.unwrap_or(FRAC_PI_4) }),
        other => Err(CliError::Usage(format!(
            "unknown kind {other:?}; expected annulus|disk|circular|radial|parallel"
        ))),
    }
}

fn check_n(n: usize) -> CliResult<()> {
    if n < 8 || n % 2 != 0 {
        return Err(CliError::Usage(format!("n must be even and at least 8, got {n}")));
    }
    Ok(())
}

fn write_output(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, contents: &str) -> CliResult<()> {
    match out {
        Some(path) => write_output(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn cmd_map(args: MapArgs) -> CliResult<()> {
    check_n(args.n)?;
    let region = load_region(&args.region)?;
    let kind = resolve_kind(&args.kind, &region)?;
    let solution = solve_map(&region, &kind, args.n)?;
    write_output(&args.out, &solution_to_json(&solution))?;
    println!(
        "wrote {} (kind={}, n={}, linear residual {:.3e}, winding residual {:.3e})",
        args.out.display(),
        kind.tag(),
        args.n,
        solution.diagnostics.linear_system,
        solution.diagnostics.winding,
    );
    Ok(())
}

fn parse_points(args: &PointArgs) -> CliResult<Vec<Complex64>> {
    let mut points = Vec::new();
    if let Some(list) = &args.points {
        for item in list.split(',').filter(|s| !s.trim().is_empty()) {
            points.push(parse_complex(item)?);
        }
    }
    if let Some(path) = &args.points_file {
        let text = fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read points file {}: {e}", path.display()))
        })?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(',').map(str::trim);
            let bad = || {
                CliError::Usage(format!(
                    "points file {}:{}: expected \"re,im\"",
                    path.display(),
                    lineno + 1
                ))
            };
            let re: f64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let im: f64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if parts.next().is_some() {
                return Err(bad());
            }
            points.push(Complex64::new(re, im));
        }
    }
    if points.is_empty() {
        return Err(CliError::Usage(
            "no query points; pass --points and/or --points-file".into(),
        ));
    }
    Ok(points)
}

fn cmd_points(args: PointArgs, side: DomainSide) -> CliResult<()> {
    let region = load_region(&args.region)?;
    let solution = load_solution(&args.solution, region)?;
    let points = parse_points(&args)?;
    let outcomes = evaluate_request(&solution, &EvalRequest { points, side })?;

    let mut csv = String::new();
    match side {
        DomainSide::Original => {
            csv.push_str("z_re,z_im,w_re,w_im,boundary_distance\n");
            for o in &outcomes {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{}",
                    fmt_g17(o.query.re),
                    fmt_g17(o.query.im),
                    fmt_g17(o.answer.re),
                    fmt_g17(o.answer.im),
                    fmt_g17(o.boundary_distance),
                );
            }
        }
        DomainSide::Canonical => {
            csv.push_str("w_re,w_im,z_re,z_im,boundary_distance,reliable\n");
            for o in &outcomes {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    fmt_g17(o.query.re),
                    fmt_g17(o.query.im),
                    fmt_g17(o.answer.re),
                    fmt_g17(o.answer.im),
                    fmt_g17(o.boundary_distance),
                    o.reliable,
                );
            }
        }
    }
    emit(&args.out, &csv)
}

fn cmd_grid(args: GridArgs) -> CliResult<()> {
    if args.out_svg.is_none() && args.out_csv.is_none() {
        return Err(CliError::Usage("pass --out-svg and/or --out-csv".into()));
    }
    let style = match args.style.as_str() {
        "cartesian" => GridStyle::Cartesian,
        "polar" => GridStyle::Polar,
        other => {
            return Err(CliError::Usage(format!(
                "unknown grid style {other:?}; expected cartesian|polar"
            )))
        }
    };
    let region = load_region(&args.region)?;
    let solution = load_solution(&args.solution, region)?;
    let spec = GridSpec { style, lines: args.lines, samples: args.samples };
    let polylines = image_grid(&solution, &spec);
    if let Some(path) = &args.out_svg {
        write_output(path, &polylines_to_svg(&polylines))?;
    }
    if let Some(path) = &args.out_csv {
        write_output(path, &polylines_to_csv(&polylines))?;
    }
    Ok(())
}

fn cmd_convergence(args: ConvergenceArgs) -> CliResult<()> {
    let region = load_region(&args.region)?;
    let z1 = args.aux.z1.as_deref().map(parse_complex).transpose()?;
    let alpha = args.aux.alpha.as_deref().map(parse_complex).transpose()?;
    let tags: Vec<&str> = if args.kinds == "all" {
        vec!["annulus", "disk", "circular", "radial", "parallel"]
    } else {
        args.kinds.split(',').map(str::trim).collect()
    };
    let mut kinds = Vec::with_capacity(tags.len());
    for tag in tags {
        kinds.push(build_kind(tag, z1, alpha, args.aux.delta, &region)?);
    }
    let mut ns = Vec::new();
    for part in args.n.split(',') {
        let n: usize = part
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid node count {part:?}")))?;
        check_n(n)?;
        ns.push(n);
    }
    if ns.is_empty() {
        return Err(CliError::Usage("empty node-count list".into()));
    }
    check_n(args.reference)?;

    let rows = convergence_table(&region, &kinds, &ns, args.reference)?;
    let mut csv = String::from("kind,n,sup_error,wall_time_ms\n");
    for row in &rows {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            row.kind,
            row.n,
            fmt_g17(row.sup_error),
            fmt_g17(row.wall_ms),
        );
    }
    emit(&args.out, &csv)
}

fn cmd_selftest() -> i32 {
    let checks = selftest();
    let mut failed = 0;
    for check in &checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        println!("selftest {:<45} {} ({})", check.name, status, check.detail);
        if !check.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("selftest: all {} checks passed", checks.len());
        0
    } else {
        eprintln!("selftest: {failed} of {} checks failed", checks.len());
        3
    }
}

/// Full-precision float formatting: 17 significant digits round-trip f64
/// exactly, making outputs byte-identical across runs.
fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_pair(z: Complex64) -> String {
    format!("[{},{}]", fmt_g17(z.re), fmt_g17(z.im))
}

/// Serializes a solution with fixed field order and full float precision:
/// `{"kind":..,"n":..,"R":[..],"c":..,"c_k":[..],"theta":[[..]],
///   "theta_prime":[[..]],"omega_boundary":[[re,im],..],
///   "residuals":{"linear_system":..,"winding":..}}`.
pub fn solution_to_json(sol: &MapSolution) -> String {
    let mut out = String::new();
    out.push_str("{\"kind\":");
    match sol.kind() {
        CanonicalKind::AnnulusSlits { z1 } => {
            let _ = write!(out, "{{\"tag\":\"annulus\",\"z1\":{}}}", fmt_pair(*z1));
        }
        CanonicalKind::DiskSlits => out.push_str("{\"tag\":\"disk\"}"),
        CanonicalKind::CircularSlits { alpha } => {
            let _ = write!(out, "{{\"tag\":\"circular\",\"alpha\":{}}}", fmt_pair(*alpha));
        }
        CanonicalKind::RadialSlits { alpha } => {
            let _ = write!(out, "{{\"tag\":\"radial\",\"alpha\":{}}}", fmt_pair(*alpha));
        }
        CanonicalKind::ParallelSlits { delta } => {
            let _ = write!(out, "{{\"tag\":\"parallel\",\"delta\":{}}}", fmt_g17(*delta));
        }
    }
    let _ = write!(out, ",\"n\":{}", sol.nodes_per_curve());

    let join = |values: &[f64]| -> String {
        values.iter().map(|&v| fmt_g17(v)).collect::<Vec<_>>().join(",")
    };
    let _ = write!(out, ",\"R\":[{}]", join(&sol.parameters));
    match sol.c {
        Some(c) => {
            let _ = write!(out, ",\"c\":{}", fmt_g17(c));
        }
        None => out.push_str(",\"c\":null"),
    }
    let _ = write!(out, ",\"c_k\":[{}]", join(&sol.integration_constants));

    let per_curve = |out: &mut String, name: &str, values: &dyn Fn(usize) -> String| {
        let _ = write!(out, ",\"{name}\":[");
        for k in 0..sol.num_curves() {
            if k > 0 {
                out.push(',');
            }
            let _ = write!(out, "[{}]", values(k));
        }
        out.push(']');
    };
    per_curve(&mut out, "theta", &|k| join(sol.theta_curve(k)));
    per_curve(&mut out, "theta_prime", &|k| join(sol.theta_prime_curve(k)));

    out.push_str(",\"omega_boundary\":[");
    for (i, w) in sol.omega_boundary.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&fmt_pair(*w));
    }
    out.push(']');

    let _ = write!(
        out,
        ",\"residuals\":{{\"linear_system\":{},\"winding\":{}}}}}",
        fmt_g17(sol.diagnostics.linear_system),
        fmt_g17(sol.diagnostics.winding),
    );
    out.push('\n');
    out
}

fn json_f64(value: &Value, context: &str) -> CliResult<f64> {
    value
        .as_f64()
        .ok_or_else(|| CliError::Usage(format!("solution file: {context} is not a number")))
}

fn json_f64_array(value: &Value, context: &str) -> CliResult<Vec<f64>> {
    value
        .as_array()
        .ok_or_else(|| CliError::Usage(format!("solution file: {context} is not an array")))?
        .iter()
        .map(|v| json_f64(v, context))
        .collect()
}

fn json_complex(value: &Value, context: &str) -> CliResult<Complex64> {
    let pair = json_f64_array(value, context)?;
    if pair.len() != 2 {
        return Err(CliError::Usage(format!("solution file: {context} is not an [re,im] pair")));
    }
    Ok(Complex64::new(pair[0], pair[1]))
}

/// Reads a solution JSON back into a `MapSolution` over `region`,
/// recomputing the discretization and boundary samples; no linear solve is
/// involved.
fn load_solution(path: &Path, region: Region) -> CliResult<MapSolution> {
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::Usage(format!("cannot read solution file {}: {e}", path.display()))
    })?;
    let root: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid solution file {}: {e}", path.display())))?;

    let kind_value = &root["kind"];
    let tag = kind_value["tag"]
        .as_str()
        .ok_or_else(|| CliError::Usage("solution file: missing kind.tag".into()))?;
    let kind = match tag {
        "annulus" => CanonicalKind::AnnulusSlits { z1: json_complex(&kind_value["z1"], "kind.z1")? },
        "disk" => CanonicalKind::DiskSlits,
        "circular" => {
            CanonicalKind::CircularSlits { alpha: json_complex(&kind_value["alpha"], "kind.alpha")? }
        }
        "radial" => {
            CanonicalKind::RadialSlits { alpha: json_complex(&kind_value["alpha"], "kind.alpha")? }
        }
        "parallel" => {
            CanonicalKind::ParallelSlits { delta: json_f64(&kind_value["delta"], "kind.delta")? }
        }
        other => return Err(CliError::Usage(format!("solution file: unknown kind {other:?}"))),
    };

    let n = root["n"]
        .as_u64()
        .ok_or_else(|| CliError::Usage("solution file: n is not an integer".into()))?
        as usize;
    let parameters = json_f64_array(&root["R"], "R")?;
    let c = if root["c"].is_null() { None } else { Some(json_f64(&root["c"], "c")?) };
    let constants = json_f64_array(&root["c_k"], "c_k")?;

    let per_curve = |name: &str| -> CliResult<Vec<f64>> {
        let rows = root[name]
            .as_array()
            .ok_or_else(|| CliError::Usage(format!("solution file: {name} is not an array")))?;
        let mut flat = Vec::new();
        for row in rows {
            flat.extend(json_f64_array(row, name)?);
        }
        Ok(flat)
    };
    let theta = per_curve("theta")?;
    let theta_prime = per_curve("theta_prime")?;

    let diagnostics = Diagnostics {
        linear_system: json_f64(&root["residuals"]["linear_system"], "residuals.linear_system")
            .unwrap_or(f64::NAN),
        winding: json_f64(&root["residuals"]["winding"], "residuals.winding").unwrap_or(f64::NAN),
        rho_mu_periodicity: f64::NAN,
    };

    MapSolution::from_parts(
        region,
        kind,
        n,
        parameters,
        c,
        constants,
        theta,
        theta_prime,
        diagnostics,
    )
    .map_err(|e| CliError::Usage(format!("solution file does not match region: {e}")))
}

fn polylines_to_csv(polylines: &[Polyline]) -> String {
    let mut csv = String::from("polyline,role,re,im\n");
    for (id, line) in polylines.iter().enumerate() {
        let role = match line.role {
            PolylineRole::Boundary(k) => format!("boundary:{k}"),
            PolylineRole::GridLine => "grid".to_string(),
        };
        for p in &line.points {
            let _ = writeln!(csv, "{id},{role},{},{}", fmt_g17(p.re), fmt_g17(p.im));
        }
    }
    csv
}

fn polylines_to_svg(polylines: &[Polyline]) -> String {
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for line in polylines {
        for p in &line.points {
            xmin = xmin.min(p.re);
            xmax = xmax.max(p.re);
            ymin = ymin.min(p.im);
            ymax = ymax.max(p.im);
        }
    }
    if !(xmin.is_finite() && ymin.is_finite()) {
        (xmin, xmax, ymin, ymax) = (0.0, 1.0, 0.0, 1.0);
    }
    let pad = 0.03 * ((xmax - xmin).max(ymax - ymin)).max(1e-12);
    xmin -= pad;
    xmax += pad;
    ymin -= pad;
    ymax += pad;
    let width = 800.0;
    let scale = width / (xmax - xmin);
    let height = (ymax - ymin) * scale;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
    );
    for line in polylines {
        if line.points.len() < 2 {
            continue;
        }
        let mut points = String::new();
        for p in &line.points {
            let x = (p.re - xmin) * scale;
            let y = (ymax - p.im) * scale;
            let _ = write!(points, "{x:.3},{y:.3} ");
        }
        let _ = writeln!(
            svg,
            "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"{}\"/>",
            points.trim_end()
        );
    }
    svg.push_str("</svg>\n");
    svg
}
