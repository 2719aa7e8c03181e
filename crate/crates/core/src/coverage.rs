//! Raster evaluation of coverage paths.
//!
//! A cell counts as covered when its centre lies within the footprint radius
//! of some path segment, i.e. inside the stadium swept by the spray disk.

use thiserror::Error;

use crate::geometry::{point_segment_distance, ConvexPolygon, Point2D};
use crate::planner::CoveragePath;

/// Spacing of the safety audit samples along the path, in meters.
pub const AUDIT_STEP: f64 = 0.01;
/// Slack allowed before a sample counts as a safety violation.
pub const AUDIT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EvalError {
    #[error("path point {0} with its footprint extends past the grid")]
    PathOutsideGrid(Point2D),
    #[error("invalid evaluation parameter: {0}")]
    InvalidParams(String),
}

#[derive(Clone, Debug)]
pub struct CoverageGrid {
    cell_size: f64,
    origin: Point2D,
    nx: usize,
    ny: usize,
    covered: Vec<bool>,
    in_region: Vec<bool>,
    in_eroded: Vec<bool>,
}

impl CoverageGrid {
    /// Grid over `region` inflated by `radius`, also spanning `extra` points
    /// inflated by `radius`. `eroded` fills the second region mask.
    pub fn new(
        region: &ConvexPolygon,
        eroded: Option<&ConvexPolygon>,
        radius: f64,
        cell_size: f64,
        extra: impl IntoIterator<Item = Point2D>,
    ) -> Result<Self, EvalError> {
        if !(cell_size.is_finite() && cell_size > 0.0) {
            return Err(EvalError::InvalidParams(format!("cell size must be positive, got {cell_size}")));
        }
        if !(radius.is_finite() && radius >= 0.0) {
            return Err(EvalError::InvalidParams(format!("radius must be non-negative, got {radius}")));
        }
        let (mut lo, mut hi) = region.bounds();
        for p in extra {
            lo = Point2D::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2D::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let pad = radius + cell_size;
        let origin = Point2D::new(lo.x - pad, lo.y - pad);
        let nx = ((hi.x - lo.x + 2.0 * pad) / cell_size).ceil() as usize;
        let ny = ((hi.y - lo.y + 2.0 * pad) / cell_size).ceil() as usize;
        let mut grid = Self {
            cell_size,
            origin,
            nx,
            ny,
            covered: vec![false; nx * ny],
            in_region: vec![false; nx * ny],
            in_eroded: vec![false; nx * ny],
        };
        grid.in_region = grid.polygon_mask(region);
        if let Some(e) = eroded {
            grid.in_eroded = grid.polygon_mask(e);
        }
        Ok(grid)
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn cell_center(&self, ix: usize, iy: usize) -> Point2D {
        Point2D::new(
            self.origin.x + (ix as f64 + 0.5) * self.cell_size,
            self.origin.y + (iy as f64 + 0.5) * self.cell_size,
        )
    }

    /// Scanline fill: each row's inside span is found from the edge crossings.
    fn polygon_mask(&self, poly: &ConvexPolygon) -> Vec<bool> {
        let mut mask = vec![false; self.nx * self.ny];
        for iy in 0..self.ny {
            let y = self.cell_center(0, iy).y;
            let mut x_lo = f64::INFINITY;
            let mut x_hi = f64::NEG_INFINITY;
            for (a, b) in poly.edges() {
                if (a.y <= y && y <= b.y) || (b.y <= y && y <= a.y) {
                    if a.y == b.y {
                        x_lo = x_lo.min(a.x.min(b.x));
                        x_hi = x_hi.max(a.x.max(b.x));
                    } else {
                        let x = a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
                        x_lo = x_lo.min(x);
                        x_hi = x_hi.max(x);
                    }
                }
            }
            if x_lo > x_hi {
                continue;
            }
            let (first, last) = self.column_span(x_lo, x_hi);
            for ix in first..last {
                let c = self.cell_center(ix, iy);
                if c.x >= x_lo && c.x <= x_hi {
                    mask[iy * self.nx + ix] = true;
                }
            }
        }
        mask
    }

    /// Column index range whose centres may fall in `[x_lo, x_hi]`.
    fn column_span(&self, x_lo: f64, x_hi: f64) -> (usize, usize) {
        let first = ((x_lo - self.origin.x) / self.cell_size - 0.5).floor().max(0.0) as usize;
        let last = (((x_hi - self.origin.x) / self.cell_size + 0.5).ceil().max(0.0) as usize).min(self.nx);
        (first.min(self.nx), last)
    }

    fn row_span(&self, y_lo: f64, y_hi: f64) -> (usize, usize) {
        let first = ((y_lo - self.origin.y) / self.cell_size - 0.5).floor().max(0.0) as usize;
        let last = (((y_hi - self.origin.y) / self.cell_size + 0.5).ceil().max(0.0) as usize).min(self.ny);
        (first.min(self.ny), last)
    }

    fn contains_disk(&self, p: Point2D, radius: f64) -> bool {
        let max = Point2D::new(
            self.origin.x + self.nx as f64 * self.cell_size,
            self.origin.y + self.ny as f64 * self.cell_size,
        );
        p.x - radius >= self.origin.x && p.y - radius >= self.origin.y && p.x + radius <= max.x && p.y + radius <= max.y
    }

    /// Marks every cell whose centre is within `radius` of segment `a`–`b`.
    fn mark_capsule(&mut self, a: Point2D, b: Point2D, radius: f64) {
        let (rows_lo, rows_hi) = self.row_span(a.y.min(b.y) - radius, a.y.max(b.y) + radius);
        let (cols_lo, cols_hi) = self.column_span(a.x.min(b.x) - radius, a.x.max(b.x) + radius);
        for iy in rows_lo..rows_hi {
            for ix in cols_lo..cols_hi {
                let idx = iy * self.nx + ix;
                if !self.covered[idx] && point_segment_distance(self.cell_center(ix, iy), a, b) <= radius {
                    self.covered[idx] = true;
                }
            }
        }
    }

    pub fn is_covered(&self, ix: usize, iy: usize) -> bool {
        self.covered[iy * self.nx + ix]
    }

    pub fn covered_cells(&self) -> usize {
        self.covered.iter().filter(|&&c| c).count()
    }

    pub fn covered_area(&self) -> f64 {
        self.covered_cells() as f64 * self.cell_size * self.cell_size
    }

    fn fraction(&self, mask: &[bool]) -> f64 {
        let total = mask.iter().filter(|&&m| m).count();
        if total == 0 {
            return 0.0;
        }
        let hit = mask.iter().zip(&self.covered).filter(|(&m, &c)| m && c).count();
        hit as f64 / total as f64
    }

    pub fn covered_fraction_region(&self) -> f64 {
        self.fraction(&self.in_region)
    }

    pub fn covered_fraction_eroded(&self) -> f64 {
        self.fraction(&self.in_eroded)
    }
}

/// Rasterizes the disk swept along `path`. Marking is idempotent.
pub fn sweep_coverage(path: &CoveragePath, radius: f64, mut grid: CoverageGrid) -> Result<CoverageGrid, EvalError> {
    if let Some(p) = path.positions().find(|&p| !grid.contains_disk(p, radius)) {
        return Err(EvalError::PathOutsideGrid(p));
    }
    let pts: Vec<Point2D> = path.positions().collect();
    match pts.len() {
        0 => {}
        1 => grid.mark_capsule(pts[0], pts[0], radius),
        _ => {
            for w in pts.windows(2) {
                grid.mark_capsule(w[0], w[1], radius);
            }
        }
    }
    Ok(grid)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SafetyAudit {
    pub samples: usize,
    pub violations: usize,
    /// Largest amount by which the footprint crosses the boundary (≥ 0).
    pub max_incursion: f64,
    /// Smallest signed distance from a sample to the boundary.
    pub min_clearance: f64,
}

/// Samples the path every [`AUDIT_STEP`] meters and checks that the footprint
/// stays inside `region`.
pub fn safety_audit(region: &ConvexPolygon, path: &CoveragePath, radius: f64) -> SafetyAudit {
    safety_audit_within(region, path, radius, AUDIT_TOLERANCE)
}

/// [`safety_audit`] with a caller-chosen slack, for paths whose positions
/// went through a lossy format.
pub fn safety_audit_within(region: &ConvexPolygon, path: &CoveragePath, radius: f64, tolerance: f64) -> SafetyAudit {
    let mut audit =
        SafetyAudit { samples: 0, violations: 0, max_incursion: 0.0, min_clearance: f64::INFINITY };
    let mut check = |p: Point2D| {
        let d = region.distance_to_boundary(p);
        audit.samples += 1;
        audit.min_clearance = audit.min_clearance.min(d);
        if d < radius - tolerance {
            audit.violations += 1;
        }
        audit.max_incursion = audit.max_incursion.max(radius - d);
    };
    let pts: Vec<Point2D> = path.positions().collect();
    if let Some(&first) = pts.first() {
        check(first);
    }
    for w in pts.windows(2) {
        let steps = (w[0].distance(w[1]) / AUDIT_STEP).ceil().max(1.0) as usize;
        for k in 1..=steps {
            check(w[0].lerp(w[1], k as f64 / steps as f64));
        }
    }
    audit
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalReport {
    pub covered_fraction_region: f64,
    pub covered_fraction_eroded: f64,
    pub path_length: f64,
    pub est_flight_time: f64,
    pub safety_violations: usize,
    pub max_incursion: f64,
}

/// Cell size used when the caller does not pick one.
pub fn default_cell_size(radius: f64) -> f64 {
    radius / 50.0
}

/// Coverage, safety and timing of `path` over `region`.
pub fn evaluate(
    region: &ConvexPolygon,
    eroded: &ConvexPolygon,
    path: &CoveragePath,
    radius: f64,
    speed: f64,
    cell_size: f64,
) -> Result<(EvalReport, CoverageGrid), EvalError> {
    evaluate_within(region, eroded, path, radius, speed, cell_size, AUDIT_TOLERANCE)
}

/// [`evaluate`] with the safety audit's slack given explicitly.
pub fn evaluate_within(
    region: &ConvexPolygon,
    eroded: &ConvexPolygon,
    path: &CoveragePath,
    radius: f64,
    speed: f64,
    cell_size: f64,
    tolerance: f64,
) -> Result<(EvalReport, CoverageGrid), EvalError> {
    if !(speed.is_finite() && speed > 0.0) {
        return Err(EvalError::InvalidParams(format!("speed must be positive, got {speed}")));
    }
    let grid = CoverageGrid::new(region, Some(eroded), radius, cell_size, path.positions())?;
    let grid = sweep_coverage(path, radius, grid)?;
    let audit = safety_audit_within(region, path, radius, tolerance);
    let report = EvalReport {
        covered_fraction_region: grid.covered_fraction_region(),
        covered_fraction_eroded: grid.covered_fraction_eroded(),
        path_length: path.total_length,
        est_flight_time: path.total_length / speed,
        safety_violations: audit.violations,
        max_incursion: audit.max_incursion.max(0.0),
    };
    Ok((report, grid))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UncoveredSummary {
    pub count: usize,
    /// Largest distance from an uncovered cell centre inside the region to
    /// the region boundary (0 when everything is covered).
    pub max_distance_to_boundary: f64,
}

impl UncoveredSummary {
    /// True when every gap lies in the boundary band `r + cell_size` wide.
    pub fn confined_to_band(&self, radius: f64, cell_size: f64) -> bool {
        self.max_distance_to_boundary < radius + cell_size
    }
}

pub fn uncovered_regions(region: &ConvexPolygon, grid: &CoverageGrid) -> UncoveredSummary {
    let mut summary = UncoveredSummary { count: 0, max_distance_to_boundary: 0.0 };
    for iy in 0..grid.ny {
        for ix in 0..grid.nx {
            let idx = iy * grid.nx + ix;
            if grid.in_region[idx] && !grid.covered[idx] {
                summary.count += 1;
                let d = region.distance_to_boundary(grid.cell_center(ix, iy));
                summary.max_distance_to_boundary = summary.max_distance_to_boundary.max(d);
            }
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planner::{Waypoint, WaypointRole};
    use std::f64::consts::PI;

    fn p(x: f64, y: f64) -> Point2D {
        Point2D::new(x, y)
    }

    fn square(size: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![p(0.0, 0.0), p(size, 0.0), p(size, size), p(0.0, size)]).unwrap()
    }

    fn path_of(points: &[Point2D]) -> CoveragePath {
        let w = points.iter().map(|&q| Waypoint::new(q, WaypointRole::Sweep)).collect();
        CoveragePath::new(w, p(1.0, 0.0), 1, 1.0)
    }

    #[test]
    fn disk_area_converges() {
        let r = 1.0;
        let grid = CoverageGrid::new(&square(10.0), None, r, r / 50.0, []).unwrap();
        let grid = sweep_coverage(&path_of(&[p(5.0, 5.0)]), r, grid).unwrap();
        let rel = (grid.covered_area() - PI * r * r).abs() / (PI * r * r);
        assert!(rel < 0.02, "{rel}");
    }

    #[test]
    fn stadium_area() {
        let r = 1.0;
        let grid = CoverageGrid::new(&square(10.0), None, r, r / 50.0, []).unwrap();
        let grid = sweep_coverage(&path_of(&[p(2.0, 5.0), p(8.0, 5.0)]), r, grid).unwrap();
        let expected = 2.0 * r * 6.0 + PI * r * r;
        assert!((grid.covered_area() - expected).abs() / expected < 0.02);
    }

    #[test]
    fn empty_path_covers_nothing() {
        let grid = CoverageGrid::new(&square(10.0), None, 1.0, 0.1, []).unwrap();
        let grid = sweep_coverage(&path_of(&[]), 1.0, grid).unwrap();
        assert_eq!(grid.covered_cells(), 0);
    }

    #[test]
    fn path_outside_grid() {
        let grid = CoverageGrid::new(&square(10.0), None, 1.0, 0.1, []).unwrap();
        assert!(matches!(
            sweep_coverage(&path_of(&[p(50.0, 5.0)]), 1.0, grid),
            Err(EvalError::PathOutsideGrid(_))
        ));
    }

    #[test]
    fn idempotent_marking() {
        let grid = CoverageGrid::new(&square(10.0), None, 1.0, 0.05, []).unwrap();
        let path = path_of(&[p(2.0, 2.0), p(8.0, 7.0)]);
        let once = sweep_coverage(&path, 1.0, grid).unwrap();
        let twice = sweep_coverage(&path, 1.0, once.clone()).unwrap();
        assert_eq!(once.covered, twice.covered);
    }

    #[test]
    fn flight_time_is_length_over_speed() {
        let sq = square(100.0);
        let eroded = sq.erode(1.0).unwrap();
        let path = path_of(&[p(10.0, 10.0), p(70.0, 10.0), p(70.0, 70.0)]);
        assert!((path.total_length - 120.0).abs() < 1e-12);
        let (report, _) = evaluate(&sq, &eroded, &path, 1.0, 2.0, 0.5).unwrap();
        assert_eq!(report.est_flight_time, 60.0);
        assert_eq!(report.est_flight_time * 2.0, report.path_length);
    }

    #[test]
    fn audit_flags_incursions() {
        let sq = square(10.0);
        let safe = safety_audit(&sq, &path_of(&[p(2.0, 2.0), p(8.0, 2.0)]), 2.0);
        assert_eq!(safe.violations, 0);
        let unsafe_path = safety_audit(&sq, &path_of(&[p(2.0, 2.0), p(8.0, 1.0)]), 2.0);
        assert!(unsafe_path.violations > 0);
        assert!((unsafe_path.max_incursion - 1.0).abs() < 1e-9);
    }

    #[test]
    fn masks_match_areas() {
        let sq = square(10.0);
        let e = sq.erode(1.5).unwrap();
        let g = CoverageGrid::new(&sq, Some(&e), 1.5, 0.03, []).unwrap();
        let cell_area = g.cell_size() * g.cell_size();
        let region_cells = g.in_region.iter().filter(|&&m| m).count() as f64;
        let eroded_cells = g.in_eroded.iter().filter(|&&m| m).count() as f64;
        assert!((region_cells * cell_area - 100.0).abs() < 1.0);
        assert!((eroded_cells * cell_area - 49.0).abs() < 0.5);
    }
}
