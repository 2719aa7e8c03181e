use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Coverage path planning for spraying drones over convex fields.
#[derive(Debug, Parser)]
#[command(name = "sprayplan", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit the paraboloid spray model to droplet observations.
    Fit(FitArgs),
    /// Plan a boundary-safe coverage path and export it as a mission.
    Plan(PlanArgs),
    /// Rasterize a path's spray coverage and audit its safety.
    Evaluate(EvaluateArgs),
    /// Plan with both the boundary-safe planner and the baseline and compare.
    Compare(CompareArgs),
    /// Convert a planar path file into a mission file.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Droplet file: one `x,y,z` triple per line, meters.
    #[arg(long, value_name = "FILE")]
    pub droplets: PathBuf,
    /// Flight altitude the footprint radius is reported for, meters.
    #[arg(long, value_name = "M")]
    pub altitude: f64,
    /// Noise standard deviation of the droplet heights, meters (recorded in the report).
    #[arg(long, value_name = "S")]
    pub sigma: Option<f64>,
    /// Output fit report (`key=value` lines).
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}

/// Where the footprint radius comes from.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct RadiusSource {
    /// Footprint radius, meters.
    #[arg(long, value_name = "M")]
    pub radius: Option<f64>,
    /// Fit report from `sprayplan fit`; the radius is derived at --altitude.
    #[arg(long, value_name = "FILE")]
    pub model: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Endpoints {
    /// Start point: `lat,lon` (degrees) for geodetic regions, `x,y` (meters) for local ones.
    /// Defaults to the centroid of the reachable region.
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    pub start: Option<String>,
    /// End point, same format as --start. Defaults to the centroid of the reachable region.
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    pub end: Option<String>,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    /// Region file (`frame: geodetic` or `frame: local`).
    #[arg(long, value_name = "FILE")]
    pub region: PathBuf,
    #[command(flatten)]
    pub radius: RadiusSource,
    #[command(flatten)]
    pub endpoints: Endpoints,
    /// Flight-line spacing, meters. Defaults to twice the footprint radius.
    #[arg(long, value_name = "M")]
    pub spacing: Option<f64>,
    /// Flight altitude above home, meters.
    #[arg(long, value_name = "M", default_value_t = 10.0)]
    pub altitude: f64,
    /// Geodetic anchor `lat,lon[,alt]` for local regions (overrides the file's `origin:`).
    #[arg(long, value_name = "LAT,LON", allow_hyphen_values = true)]
    pub origin: Option<String>,
    /// Output mission file (QGC WPL 110).
    #[arg(long, value_name = "FILE")]
    pub out_mission: Option<PathBuf>,
    /// Output planar path file.
    #[arg(long, value_name = "FILE")]
    pub out_path: Option<PathBuf>,
    /// Output SVG figure.
    #[arg(long, value_name = "FILE")]
    pub svg: Option<PathBuf>,
}

/// The path to evaluate.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PathSource {
    /// Mission file (QGC WPL 110) written by `sprayplan plan`.
    #[arg(long, value_name = "FILE")]
    pub mission: Option<PathBuf>,
    /// Planar path file written by `sprayplan plan --out-path`.
    #[arg(long, value_name = "FILE")]
    pub path: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Region file the path was planned for.
    #[arg(long, value_name = "FILE")]
    pub region: PathBuf,
    #[command(flatten)]
    pub source: PathSource,
    /// Footprint radius, meters.
    #[arg(long, value_name = "M")]
    pub radius: f64,
    /// Cruise speed for the flight-time estimate, meters per second.
    #[arg(long, value_name = "M/S", default_value_t = 2.0)]
    pub speed: f64,
    /// Raster cell size, meters. Defaults to radius / 50.
    #[arg(long, value_name = "M")]
    pub cell: Option<f64>,
    /// Geodetic anchor `lat,lon[,alt]` for local regions read with --mission.
    #[arg(long, value_name = "LAT,LON", allow_hyphen_values = true)]
    pub origin: Option<String>,
    /// Output report (`key=value` lines).
    #[arg(long, value_name = "FILE")]
    pub report: PathBuf,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Region file.
    #[arg(long, value_name = "FILE")]
    pub region: PathBuf,
    /// Footprint radius, meters; both planners use a line spacing of twice this.
    #[arg(long, value_name = "M")]
    pub radius: f64,
    #[command(flatten)]
    pub endpoints: Endpoints,
    /// Cruise speed for the flight-time estimates, meters per second.
    #[arg(long, value_name = "M/S", default_value_t = 2.0)]
    pub speed: f64,
    /// Raster cell size, meters. Defaults to radius / 50.
    #[arg(long, value_name = "M")]
    pub cell: Option<f64>,
    /// Directory for the SVGs, path files and the comparison tables.
    #[arg(long, value_name = "DIR")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Region file the path was planned for (provides the geodetic anchor).
    #[arg(long, value_name = "FILE")]
    pub region: PathBuf,
    /// Planar path file.
    #[arg(long, value_name = "FILE")]
    pub path: PathBuf,
    /// Flight altitude above home, meters.
    #[arg(long, value_name = "M", default_value_t = 10.0)]
    pub altitude: f64,
    /// Geodetic anchor `lat,lon[,alt]` for local regions.
    #[arg(long, value_name = "LAT,LON", allow_hyphen_values = true)]
    pub origin: Option<String>,
    /// Output mission file (QGC WPL 110).
    #[arg(long, value_name = "FILE")]
    pub out_mission: PathBuf,
}
