//! The `sprayplan` command line: fit, plan, evaluate, compare, export.
//!
//! Exit codes: 0 success, 1 I/O, parse or usage error, 2 infeasible input
//! (fit failure, footprint larger than the region, endpoint outside the
//! reachable region), 3 safety audit failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use thiserror::Error;

use sprayplan::coverage::{default_cell_size, evaluate, evaluate_within, EvalReport, AUDIT_TOLERANCE};
use sprayplan::geodesy::{GeoReference, GeodeticCoord};
use sprayplan::lm::LmConfig;
use sprayplan::mission_io::{
    self, format_fit_report, format_report, parse_key_values, read_droplets, read_path, read_region, render_svg,
    write_mission, write_path, write_report, FitReport, Frame, IoError, LocalRegion, MissionFile, SvgStyle,
    ROUND_TRIP_TOLERANCE,
};
use sprayplan::sprinkler::{self, FitError, Paraboloid};
use sprayplan::{plan_baseline, plan_coverage, ConvexPolygon, CoveragePath, PlanError, PlanParams, Point2D, Waypoint, WaypointRole};

mod args;

pub use args::Cli;
use args::{Command, CompareArgs, Endpoints, EvaluateArgs, ExportArgs, FitArgs, PlanArgs, RadiusSource};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] IoError),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("{0}")]
    Audit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Input(_) => 1,
            CliError::Infeasible(_) => 2,
            CliError::Audit(_) => 3,
        }
    }
}

impl From<PlanError> for CliError {
    fn from(e: PlanError) -> Self {
        match e {
            PlanError::FootprintTooLarge { radius } => CliError::Infeasible(format!(
                "footprint radius {radius} m does not fit inside the region: every safe position collapses to a \
                 single point, so no sweep is possible (hover at the region's centre instead)"
            )),
            PlanError::InvalidParams(msg) => CliError::Input(msg),
            other => CliError::Infeasible(other.to_string()),
        }
    }
}

/// Runs the command line with process stdout and stderr; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too.
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Fit(a) => cmd_fit(&a, out),
        Command::Plan(a) => cmd_plan(&a, out),
        Command::Evaluate(a) => cmd_evaluate(&a, out),
        Command::Compare(a) => cmd_compare(&a, out),
        Command::Export(a) => cmd_export(&a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::Input(format!("--{name} must be a positive number, got {v}")))
    }
}

fn numbers(flag: &str, text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Input(format!("--{flag}: expected comma-separated numbers, got `{text}`")))
        })
        .collect()
}

fn parse_origin(text: Option<&str>) -> Result<Option<GeodeticCoord>, CliError> {
    let Some(text) = text else { return Ok(None) };
    let v = numbers("origin", text)?;
    if !(2..=3).contains(&v.len()) {
        return Err(CliError::Input(format!("--origin: expected lat,lon[,alt], got `{text}`")));
    }
    GeodeticCoord::new(v[0], v[1], v.get(2).copied().unwrap_or(0.0))
        .map(Some)
        .map_err(|e| CliError::Input(format!("--origin: {e}")))
}

struct Region {
    local: LocalRegion,
    polygon: ConvexPolygon,
}

fn load_region(path: &Path, origin: Option<&str>) -> Result<Region, CliError> {
    let file = read_region(path)?;
    let local = file.to_local(parse_origin(origin)?)?;
    let polygon = ConvexPolygon::new(local.vertices.clone())
        .map_err(|e| CliError::Input(format!("{}: region is not a strictly convex polygon: {e}", path.display())))?;
    Ok(Region { local, polygon })
}

impl Region {
    /// Planar point from a `--start`/`--end` value in the region's frame.
    fn point(&self, flag: &str, text: &str) -> Result<Point2D, CliError> {
        let v = numbers(flag, text)?;
        if v.len() != 2 {
            return Err(CliError::Input(format!("--{flag}: expected two numbers, got `{text}`")));
        }
        match self.local.frame {
            Frame::Local => Ok(Point2D::new(v[0], v[1])),
            Frame::Geodetic => {
                let g = GeodeticCoord::new(v[0], v[1], 0.0).map_err(|e| CliError::Input(format!("--{flag}: {e}")))?;
                Ok(self.local.project(&g).expect("geodetic regions carry a reference"))
            }
        }
    }

    fn endpoints(&self, ends: &Endpoints, eroded: Option<&ConvexPolygon>) -> Result<(Point2D, Point2D), CliError> {
        let fallback = eroded.map_or_else(|| self.polygon.centroid(), |e| e.centroid());
        let s = ends.start.as_deref().map(|t| self.point("start", t)).transpose()?.unwrap_or(fallback);
        let e = ends.end.as_deref().map(|t| self.point("end", t)).transpose()?.unwrap_or(fallback);
        Ok((s, e))
    }

    fn reference(&self) -> Result<GeoReference, CliError> {
        self.local.reference.ok_or_else(|| {
            CliError::Input("local region has no geodetic anchor; add an `origin:` line or pass --origin".into())
        })
    }
}

fn cmd_fit(a: &FitArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let altitude = positive("altitude", a.altitude)?;
    if let Some(s) = a.sigma {
        if !(s.is_finite() && s >= 0.0) {
            return Err(CliError::Input(format!("--sigma must be non-negative, got {s}")));
        }
    }
    let samples = read_droplets(&a.droplets)?;
    let fit = sprinkler::fit(&samples, None, &LmConfig::default()).map_err(|e| match e {
        FitError::MaxIterations { best } => CliError::Infeasible(format!(
            "fit did not converge after {} iterations (best A={}, B={}, h={})",
            best.iterations,
            best.model.a(),
            best.model.b(),
            best.model.h()
        )),
        other => CliError::Infeasible(other.to_string()),
    })?;
    let footprint_radius = fit.model.footprint_radius_at_altitude(altitude).map_err(|e| CliError::Input(e.to_string()))?;
    let report = FitReport { fit, samples: samples.len(), altitude, footprint_radius, noise_sigma: a.sigma };
    let text = format_fit_report(&report);
    fs::write(&a.out, &text).map_err(|source| IoError::Write { path: a.out.clone(), source })?;
    let _ = out.write_all(text.as_bytes());
    Ok(())
}

/// Footprint radius at `altitude` from a fit report.
fn radius_from_model(path: &Path, altitude: f64) -> Result<f64, CliError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })?;
    let kv = parse_key_values(&text).map_err(|e| match e {
        IoError::Parse { line, column, message, .. } => {
            CliError::Io(IoError::Parse { file: Some(path.to_path_buf()), line, column, message })
        }
        other => other.into(),
    })?;
    let get = |key: &str| -> Result<f64, CliError> {
        kv.iter()
            .find(|(k, _)| k == key)
            .and_then(|(_, v)| v.parse::<f64>().ok())
            .ok_or_else(|| CliError::Input(format!("{}: missing or invalid `{key}`", path.display())))
    };
    let model = Paraboloid::new(get("A")?, get("B")?, get("h")?).map_err(|e| CliError::Input(e.to_string()))?;
    model.footprint_radius_at_altitude(altitude).map_err(|e| CliError::Input(e.to_string()))
}

fn resolve_radius(src: &RadiusSource, altitude: f64) -> Result<f64, CliError> {
    match (&src.radius, &src.model) {
        (Some(r), _) => positive("radius", *r),
        (None, Some(model)) => radius_from_model(model, altitude),
        (None, None) => Err(CliError::Input("one of --radius or --model is required".into())),
    }
}

/// Six decimals without a sign on values that round to zero.
fn fixed6(v: f64) -> String {
    let text = format!("{v:.6}");
    if text == "-0.000000" { text[1..].to_string() } else { text }
}

fn summary(path: &CoveragePath, radius: f64) -> String {
    let mut s = String::new();
    let d = path.sweep_direction;
    let _ = writeln!(s, "footprint_radius={radius:.6}");
    let _ = writeln!(s, "line_spacing={:.6}", path.line_spacing);
    let _ = writeln!(s, "line_count={}", path.line_count);
    let _ = writeln!(s, "sweep_direction={},{}", fixed6(d.x), fixed6(d.y));
    let _ = writeln!(s, "path_length={:.6}", path.total_length);
    let _ = writeln!(s, "waypoints={}", path.waypoints.len());
    s
}

fn cmd_plan(a: &PlanArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let altitude = positive("altitude", a.altitude)?;
    let radius = resolve_radius(&a.radius, altitude)?;
    let region = load_region(&a.region, a.origin.as_deref())?;
    // Validate output prerequisites before planning.
    let reference = a.out_mission.as_ref().map(|_| region.reference()).transpose()?;
    let eroded = region.polygon.erode(radius).ok();
    let (s, e) = region.endpoints(&a.endpoints, eroded.as_ref())?;
    let mut params = PlanParams::new(radius, s, e);
    if let Some(d) = a.spacing {
        params = params.with_spacing(positive("spacing", d)?);
    }
    let path = plan_coverage(&region.polygon, &params)?;
    if let (Some(file), Some(reference)) = (&a.out_mission, &reference) {
        write_mission(&path, reference, altitude, file)?;
    }
    if let Some(file) = &a.out_path {
        write_path(&path, file)?;
    }
    if let Some(file) = &a.svg {
        mission_io::write_svg(&region.polygon, eroded.as_ref(), &path, &SvgStyle::default(), file)?;
    }
    let _ = out.write_all(summary(&path, radius).as_bytes());
    Ok(())
}

/// A path rebuilt from mission items. Roles are not stored in missions, so
/// every leg after takeoff is treated as sprayed.
fn path_from_mission(file: &Path, reference: &GeoReference) -> Result<CoveragePath, CliError> {
    let mission = MissionFile::read(file)?;
    let points = mission_io::mission_waypoints(&mission, reference)?;
    let waypoints = points
        .into_iter()
        .enumerate()
        .map(|(k, p)| Waypoint::new(p, if k == 0 { WaypointRole::TakeoffTransit } else { WaypointRole::Sweep }))
        .collect();
    Ok(CoveragePath::new(waypoints, Point2D::new(1.0, 0.0), 0, 0.0))
}

fn check_cell(cell: Option<f64>, radius: f64) -> Result<f64, CliError> {
    match cell {
        Some(c) => positive("cell", c),
        None => Ok(default_cell_size(radius)),
    }
}

fn eroded_or_infeasible(region: &ConvexPolygon, radius: f64) -> Result<ConvexPolygon, CliError> {
    region.erode(radius).map_err(|_| CliError::from(PlanError::FootprintTooLarge { radius }))
}

fn cmd_evaluate(a: &EvaluateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let radius = positive("radius", a.radius)?;
    let speed = positive("speed", a.speed)?;
    let cell = check_cell(a.cell, radius)?;
    let region = load_region(&a.region, a.origin.as_deref())?;
    // Mission coordinates are rounded on disk, so the audit allows for that.
    let (path, tolerance) = match (&a.source.mission, &a.source.path) {
        (Some(m), _) => (path_from_mission(m, &region.reference()?)?, ROUND_TRIP_TOLERANCE),
        (None, Some(p)) => (read_path(p)?, AUDIT_TOLERANCE),
        (None, None) => return Err(CliError::Input("one of --mission or --path is required".into())),
    };
    let eroded = eroded_or_infeasible(&region.polygon, radius)?;
    let (report, _) = evaluate_within(&region.polygon, &eroded, &path, radius, speed, cell, tolerance)
        .map_err(|e| CliError::Input(e.to_string()))?;
    write_report(&report, &a.report)?;
    let _ = out.write_all(format_report(&report).as_bytes());
    if report.safety_violations > 0 {
        return Err(CliError::Audit(format!(
            "{} sampled positions bring the footprint across the region boundary (max incursion {:.6} m)",
            report.safety_violations, report.max_incursion
        )));
    }
    Ok(())
}

const COMPARE_COLUMNS: &str =
    "planner,path_length,est_flight_time,line_count,covered_fraction_M,covered_fraction_Mprime,safety_violations,max_incursion";

fn compare_row(name: &str, path: &CoveragePath, r: &EvalReport) -> String {
    format!(
        "{name},{:.6},{:.6},{},{:.6},{:.6},{},{:.6}",
        r.path_length,
        r.est_flight_time,
        path.line_count,
        r.covered_fraction_region,
        r.covered_fraction_eroded,
        r.safety_violations,
        r.max_incursion
    )
}

fn compare_table(rows: &[(&str, &CoveragePath, &EvalReport)], ratio: f64) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<10} {:>12} {:>10} {:>6} {:>10} {:>10} {:>10} {:>13}",
        "planner", "length_m", "time_s", "lines", "cover_M", "cover_M'", "violations", "incursion_m"
    );
    for (name, path, r) in rows {
        let _ = writeln!(
            s,
            "{:<10} {:>12.3} {:>10.3} {:>6} {:>10.4} {:>10.4} {:>10} {:>13.6}",
            name,
            r.path_length,
            r.est_flight_time,
            path.line_count,
            r.covered_fraction_region,
            r.covered_fraction_eroded,
            r.safety_violations,
            r.max_incursion
        );
    }
    let _ = writeln!(s, "length_ratio={ratio:.6}");
    s
}

fn cmd_compare(a: &CompareArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let radius = positive("radius", a.radius)?;
    let speed = positive("speed", a.speed)?;
    let cell = check_cell(a.cell, radius)?;
    let region = load_region(&a.region, None)?;
    let eroded = eroded_or_infeasible(&region.polygon, radius)?;
    let (s, e) = region.endpoints(&a.endpoints, Some(&eroded))?;
    let proposed = plan_coverage(&region.polygon, &PlanParams::new(radius, s, e))?;
    let baseline = plan_baseline(&region.polygon, 2.0 * radius, s, e)?;
    let eval = |p: &CoveragePath| {
        evaluate(&region.polygon, &eroded, p, radius, speed, cell)
            .map(|(r, _)| r)
            .map_err(|e| CliError::Input(e.to_string()))
    };
    let (ours, theirs) = (eval(&proposed)?, eval(&baseline)?);

    let dir = &a.out_dir;
    fs::create_dir_all(dir).map_err(|source| IoError::Write { path: dir.clone(), source })?;
    let write = |name: &str, text: &str| -> Result<(), CliError> {
        let file = dir.join(name);
        fs::write(&file, text).map_err(|source| CliError::Io(IoError::Write { path: file, source }))
    };
    write("proposed.svg", &render_svg(&region.polygon, Some(&eroded), &proposed, &SvgStyle::default()))?;
    write("baseline.svg", &render_svg(&region.polygon, Some(&eroded), &baseline, &SvgStyle::baseline()))?;
    write_path(&proposed, &dir.join("proposed.path"))?;
    write_path(&baseline, &dir.join("baseline.path"))?;
    let csv = format!(
        "{COMPARE_COLUMNS}\n{}\n{}\n",
        compare_row("proposed", &proposed, &ours),
        compare_row("baseline", &baseline, &theirs)
    );
    write("compare.csv", &csv)?;
    let ratio = proposed.total_length / baseline.total_length;
    let table = compare_table(&[("proposed", &proposed, &ours), ("baseline", &baseline, &theirs)], ratio);
    write("compare.txt", &table)?;
    let _ = out.write_all(table.as_bytes());
    Ok(())
}

fn cmd_export(a: &ExportArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let altitude = positive("altitude", a.altitude)?;
    let region = load_region(&a.region, a.origin.as_deref())?;
    let reference = region.reference()?;
    let path = read_path(&a.path)?;
    let mission = write_mission(&path, &reference, altitude, &a.out_mission)?;
    let _ = writeln!(out, "mission_items={}", mission.items.len());
    Ok(())
}
