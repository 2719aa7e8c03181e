//! Coverage path planning for spraying drones.
//!
//! The pipeline: fit a paraboloid spray model to droplet observations
//! ([`sprinkler`]), take the largest ground circle it guarantees as the
//! footprint, erode the convex region of interest by that radius and sweep
//! it back and forth ([`planner`]), check the result on a raster
//! ([`coverage`]), and export a waypoint mission in geodetic coordinates
//! ([`geodesy`], [`mission_io`]).

pub mod coverage;
pub mod geodesy;
pub mod geometry;
pub mod lm;
pub mod mission_io;
pub mod planner;
pub mod shapes;
pub mod sprinkler;

pub use geometry::{ConvexPolygon, GeometryError, Point2D, Segment2D};
pub use planner::{plan_baseline, plan_coverage, CoveragePath, PlanError, PlanParams, Waypoint, WaypointRole};
