//! Back-and-forth coverage planning over a convex region.
//!
//! [`plan_coverage`] erodes the region by the footprint radius so the spray
//! disk never crosses the region boundary, sweeps the eroded polygon with
//! parallel flight lines `2r` apart, and finishes with a tour of the eroded
//! polygon's corners before landing. The sweep direction is chosen among the
//! eroded polygon's edge directions by total path length.
//!
//! The tour and the sweep share work where they overlap: an extreme flight
//! line that lies on an edge is flown once, either as a sweep (and the tour
//! skips that edge) or as part of the tour. Every point of the eroded polygon
//! ends up within `spacing / 2` of a flown sweep or tour segment.
//!
//! [`plan_baseline`] is the classic unconstrained variant used for comparison:
//! lines laid over the original region and joined by perpendicular turns that
//! may leave it.

use std::cmp::Ordering;

use thiserror::Error;

use crate::geometry::{ConvexPolygon, GeometryError, Point2D, DEFAULT_TOLERANCE};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlanError {
    #[error("footprint radius {radius} m does not fit inside the region; the plan degenerates to a single point")]
    FootprintTooLarge { radius: f64 },
    #[error("start point {0} is outside the reachable (eroded) region")]
    StartOutside(Point2D),
    #[error("end point {0} is outside the reachable (eroded) region")]
    EndOutside(Point2D),
    #[error("invalid planning parameter: {0}")]
    InvalidParams(String),
}

/// The leg flown to reach a waypoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WaypointRole {
    TakeoffTransit,
    Sweep,
    BoundaryConnection,
    CornerTour,
    LandingTransit,
}

impl WaypointRole {
    pub const ALL: [WaypointRole; 5] = [
        WaypointRole::TakeoffTransit,
        WaypointRole::Sweep,
        WaypointRole::BoundaryConnection,
        WaypointRole::CornerTour,
        WaypointRole::LandingTransit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WaypointRole::TakeoffTransit => "takeoff-transit",
            WaypointRole::Sweep => "sweep",
            WaypointRole::BoundaryConnection => "boundary-connection",
            WaypointRole::CornerTour => "corner-tour",
            WaypointRole::LandingTransit => "landing-transit",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.as_str() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Waypoint {
    pub position: Point2D,
    pub role: WaypointRole,
}

impl Waypoint {
    pub fn new(position: Point2D, role: WaypointRole) -> Self {
        Self { position, role }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlanParams {
    pub footprint_radius: f64,
    pub start: Point2D,
    pub end: Point2D,
    spacing_override: Option<f64>,
}

impl PlanParams {
    pub fn new(footprint_radius: f64, start: Point2D, end: Point2D) -> Self {
        Self { footprint_radius, start, end, spacing_override: None }
    }

    /// Replaces the default `2r` line spacing (overlap studies).
    pub fn with_spacing(mut self, spacing: f64) -> Self {
        self.spacing_override = Some(spacing);
        self
    }

    pub fn line_spacing(&self) -> f64 {
        self.spacing_override.unwrap_or(2.0 * self.footprint_radius)
    }

    fn validate(&self) -> Result<(), PlanError> {
        let r = self.footprint_radius;
        if !(r.is_finite() && r > 0.0) {
            return Err(PlanError::InvalidParams(format!("footprint radius must be positive, got {r}")));
        }
        let d = self.line_spacing();
        if !(d.is_finite() && d > 0.0) {
            return Err(PlanError::InvalidParams(format!("line spacing must be positive, got {d}")));
        }
        if !self.start.is_finite() || !self.end.is_finite() {
            return Err(PlanError::InvalidParams("start and end must be finite".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoveragePath {
    pub waypoints: Vec<Waypoint>,
    pub total_length: f64,
    /// Unit vector along the flight lines.
    pub sweep_direction: Point2D,
    pub line_count: usize,
    pub line_spacing: f64,
}

impl CoveragePath {
    pub fn new(
        waypoints: Vec<Waypoint>,
        sweep_direction: Point2D,
        line_count: usize,
        line_spacing: f64,
    ) -> Self {
        let total_length = polyline_length(waypoints.iter().map(|w| w.position));
        Self { waypoints, total_length, sweep_direction, line_count, line_spacing }
    }

    pub fn positions(&self) -> impl Iterator<Item = Point2D> + '_ {
        self.waypoints.iter().map(|w| w.position)
    }

    /// The same path with every waypoint of `role` removed.
    pub fn without_role(&self, role: WaypointRole) -> CoveragePath {
        let kept = self.waypoints.iter().copied().filter(|w| w.role != role).collect();
        CoveragePath::new(kept, self.sweep_direction, self.line_count, self.line_spacing)
    }

    pub fn count_role(&self, role: WaypointRole) -> usize {
        self.waypoints.iter().filter(|w| w.role == role).count()
    }
}

pub fn polyline_length(points: impl IntoIterator<Item = Point2D>) -> f64 {
    let mut it = points.into_iter();
    let Some(mut prev) = it.next() else { return 0.0 };
    let mut total = 0.0;
    for p in it {
        total += prev.distance(p);
        prev = p;
    }
    total
}

/// Erode, sweep, tour the corners, land.
pub fn plan_coverage(region: &ConvexPolygon, params: &PlanParams) -> Result<CoveragePath, PlanError> {
    params.validate()?;
    let r = params.footprint_radius;
    let eroded = region.erode(r).map_err(|e| match e {
        GeometryError::EmptyErosion { .. } => PlanError::FootprintTooLarge { radius: r },
        other => PlanError::InvalidParams(other.to_string()),
    })?;
    if !eroded.contains(params.start, DEFAULT_TOLERANCE) {
        return Err(PlanError::StartOutside(params.start));
    }
    if !eroded.contains(params.end, DEFAULT_TOLERANCE) {
        return Err(PlanError::EndOutside(params.end));
    }
    Ok(rcpp(&eroded, params.line_spacing(), params.start, params.end))
}

/// One flight line clipped to the polygon, as its endpoints ordered along the
/// sweep direction.
#[derive(Clone, Copy, Debug)]
struct Chord {
    lo: Point2D,
    hi: Point2D,
}

/// Normal offsets of the flight lines: the first on the supporting line of
/// the polygon, then every `spacing`, and a terminal line on the opposite
/// supporting line when the width is not a multiple of `spacing`.
fn line_offsets(min: f64, max: f64, spacing: f64) -> Vec<f64> {
    let width = max - min;
    let ratio = width / spacing;
    let rounded = ratio.round();
    let gaps = if (ratio - rounded).abs() <= 1e-9 * ratio.max(1.0) {
        rounded as usize
    } else {
        ratio.ceil() as usize
    };
    let mut offsets: Vec<f64> = (0..gaps).map(|k| min + k as f64 * spacing).collect();
    offsets.push(max);
    offsets
}

/// Chord of `poly` on the line `{p : normal·p = offset}`. Vertices within
/// tolerance of the line belong to the chord, so lines lying on an edge keep
/// the whole edge and lines through a single vertex collapse to that vertex.
fn chord_at(poly: &ConvexPolygon, direction: Point2D, normal: Point2D, offset: f64) -> Option<Chord> {
    let tol = DEFAULT_TOLERANCE * offset.abs().max(1.0);
    let mut lo: Option<(f64, Point2D)> = None;
    let mut hi: Option<(f64, Point2D)> = None;
    let mut push = |p: Point2D| {
        let t = p.dot(direction);
        if lo.is_none_or(|(lt, _)| t < lt) {
            lo = Some((t, p));
        }
        if hi.is_none_or(|(ht, _)| t > ht) {
            hi = Some((t, p));
        }
    };
    for (a, b) in poly.edges() {
        let da = normal.dot(a) - offset;
        let db = normal.dot(b) - offset;
        if da.abs() <= tol {
            push(a);
        }
        if (da < -tol && db > tol) || (da > tol && db < -tol) {
            let p = a.lerp(b, da / (da - db));
            // Pin the crossing exactly onto the line to keep spacing exact.
            push(p + normal * (offset - normal.dot(p)));
        }
    }
    Some(Chord { lo: lo?.1, hi: hi?.1 })
}

fn flight_lines(poly: &ConvexPolygon, direction: Point2D, spacing: f64) -> Vec<Chord> {
    let normal = direction.perp();
    let (min, max) = poly.projection_range(normal);
    line_offsets(min, max, spacing)
        .into_iter()
        .filter_map(|c| chord_at(poly, direction, normal, c))
        .collect()
}

/// Polygon corners in boundary order starting at the one nearest `from`
/// (lowest index on ties). `ccw = false` walks the boundary clockwise.
fn tour_from(poly: &ConvexPolygon, from: Point2D, ccw: bool) -> Vec<Point2D> {
    let v = poly.vertices();
    let n = v.len();
    let start = (0..n)
        .min_by(|&i, &j| {
            from.distance(v[i]).partial_cmp(&from.distance(v[j])).unwrap_or(Ordering::Equal).then(i.cmp(&j))
        })
        .unwrap_or(0);
    (0..n).map(|k| if ccw { v[(start + k) % n] } else { v[(start + n - k) % n] }).collect()
}

/// Corner tour of `poly`, counterclockwise from the vertex nearest `from`.
/// The tour stops at the last distinct vertex; the closing edge is not flown.
pub fn corner_tour(poly: &ConvexPolygon, from: Point2D) -> Vec<Waypoint> {
    tour_from(poly, from, true).into_iter().map(|p| Waypoint::new(p, WaypointRole::CornerTour)).collect()
}

#[derive(Clone, Copy, Debug)]
struct SweepOrder {
    /// Fly lines from the highest normal offset down.
    descending: bool,
    /// First line flown from its `hi` end.
    start_hi: bool,
}

const SWEEP_ORDERS: [SweepOrder; 4] = [
    SweepOrder { descending: false, start_hi: false },
    SweepOrder { descending: false, start_hi: true },
    SweepOrder { descending: true, start_hi: false },
    SweepOrder { descending: true, start_hi: true },
];

/// Boustrophedon sweep of pre-clipped chords. Each line is entered from the
/// end adjacent to where the previous line finished.
fn sweep_waypoints(chords: &[Chord], order: SweepOrder) -> Vec<Waypoint> {
    let mut out = Vec::with_capacity(2 * chords.len());
    let indices: Box<dyn Iterator<Item = usize>> =
        if order.descending { Box::new((0..chords.len()).rev()) } else { Box::new(0..chords.len()) };
    for (k, i) in indices.enumerate() {
        let chord = chords[i];
        let from_hi = order.start_hi ^ (k % 2 == 1);
        let (entry, exit) = if from_hi { (chord.hi, chord.lo) } else { (chord.lo, chord.hi) };
        let entry_role = if k == 0 { WaypointRole::TakeoffTransit } else { WaypointRole::BoundaryConnection };
        out.push(Waypoint::new(entry, entry_role));
        out.push(Waypoint::new(exit, WaypointRole::Sweep));
    }
    out
}

/// Edge of `poly` lying on the line `{p : normal·p = offset}`, with the same
/// tolerance as `chord_at`, so the chord on that line is exactly the edge.
fn edge_on_line(poly: &ConvexPolygon, normal: Point2D, offset: f64) -> Option<usize> {
    let tol = DEFAULT_TOLERANCE * offset.abs().max(1.0);
    let on_line = |v: Point2D| (normal.dot(v) - offset).abs() <= tol;
    (0..poly.len()).find(|&i| {
        let (a, b) = poly.edge(i);
        on_line(a) && on_line(b)
    })
}

/// Candidate corner tours after a sweep ending at `from`.
///
/// For every edge in `omittable` (an edge already flown as a sweep line), the
/// two open tours that leave exactly that edge out; then the closed
/// counterclockwise loop from every corner, since a closed loop costs the
/// same wherever it starts and only the transits differ. Counterclockwise
/// options come first so they win ties.
fn tour_options(poly: &ConvexPolygon, omittable: &[usize]) -> Vec<Vec<Point2D>> {
    let mut options = Vec::new();
    for &i in omittable {
        let (a, b) = poly.edge(i);
        options.push(tour_from(poly, b, true));
        options.push(tour_from(poly, a, false));
    }
    for &v in poly.vertices() {
        let mut closed = tour_from(poly, v, true);
        closed.push(closed[0]);
        options.push(closed);
    }
    options
}

#[derive(Clone, Debug)]
struct Candidate {
    path: CoveragePath,
    edge: usize,
}

fn lexicographic(a: Point2D, b: Point2D) -> Ordering {
    a.x.partial_cmp(&b.x).unwrap_or(Ordering::Equal).then(a.y.partial_cmp(&b.y).unwrap_or(Ordering::Equal))
}

/// Replaces `best` when `cand` is shorter beyond rounding, or equally long
/// for the same edge with a lexicographically smaller first sweep waypoint.
/// Candidates must arrive in increasing edge order.
fn keep_better(best: &mut Option<Candidate>, cand: Candidate) {
    let Some(current) = best else {
        *best = Some(cand);
        return;
    };
    let (a, b) = (cand.path.total_length, current.path.total_length);
    let eps = 1e-9 * b.max(1.0);
    let replace = if a < b - eps {
        true
    } else if a <= b + eps && cand.edge == current.edge {
        let first = |c: &Candidate| c.path.waypoints.get(1).map(|w| w.position).unwrap_or_default();
        lexicographic(first(&cand), first(current)) == Ordering::Less
    } else {
        false
    };
    if replace {
        *best = Some(cand);
    }
}

/// Best route with flight lines parallel to `direction`, over both sweep
/// orders, both entry ends, which edge-lying extreme lines the tour takes
/// over, and every admissible corner tour.
fn best_route_for_direction(
    poly: &ConvexPolygon,
    direction: Point2D,
    spacing: f64,
    start: Point2D,
    end: Point2D,
    edge: usize,
    best: &mut Option<Candidate>,
) {
    let chords = flight_lines(poly, direction, spacing);
    if chords.is_empty() {
        return;
    }
    let normal = direction.perp();
    let (min, max) = poly.projection_range(normal);
    let low_edge = edge_on_line(poly, normal, min);
    let high_edge = edge_on_line(poly, normal, max);
    // An extreme line lying on an edge may be left to the corner tour, which
    // then has to fly that edge; otherwise it would be flown twice.
    let skips = [(false, false), (true, false), (false, true), (true, true)];
    for order in SWEEP_ORDERS {
        for (skip_low, skip_high) in skips {
            if (skip_low && low_edge.is_none()) || (skip_high && high_edge.is_none()) {
                continue;
            }
            let kept = &chords[skip_low as usize..chords.len() - skip_high as usize];
            if kept.is_empty() {
                continue;
            }
            let omittable: Vec<usize> = [(low_edge, skip_low), (high_edge, skip_high)]
                .into_iter()
                .filter_map(|(edge, skipped)| edge.filter(|_| !skipped))
                .collect();
            let sweep = sweep_waypoints(kept, order);
            let last = sweep.last().map_or(start, |w| w.position);
            let tour_cost = |t: &[Point2D]| {
                last.distance(t[0]) + polyline_length(t.iter().copied()) + t[t.len() - 1].distance(end)
            };
            let mut tour = Vec::new();
            let mut tour_len = f64::INFINITY;
            for option in tour_options(poly, &omittable) {
                let len = tour_cost(&option);
                if tour.is_empty() || len < tour_len - 1e-9 * tour_len.max(1.0) {
                    tour = option;
                    tour_len = len;
                }
            }

            let mut waypoints = Vec::with_capacity(sweep.len() + tour.len() + 2);
            waypoints.push(Waypoint::new(start, WaypointRole::TakeoffTransit));
            waypoints.extend(sweep);
            waypoints.extend(tour.into_iter().map(|p| Waypoint::new(p, WaypointRole::CornerTour)));
            waypoints.push(Waypoint::new(end, WaypointRole::LandingTransit));
            let path = CoveragePath::new(waypoints, direction, chords.len(), spacing);
            keep_better(best, Candidate { path, edge });
        }
    }
}

/// Complete route (sweeps, connections, corner tour, transits) for flight
/// lines parallel to an arbitrary `direction`. Exposed for direction studies.
pub fn route_for_direction(
    eroded: &ConvexPolygon,
    direction: Point2D,
    spacing: f64,
    start: Point2D,
    end: Point2D,
) -> CoveragePath {
    let mut best = None;
    best_route_for_direction(eroded, direction.normalized(), spacing, start, end, 0, &mut best);
    best.expect("convex polygon always yields at least one flight line").path
}

/// Rotating-calipers planner: one candidate sweep direction per edge of the
/// eroded polygon, keeping the shortest complete route.
pub fn rcpp(eroded: &ConvexPolygon, spacing: f64, start: Point2D, end: Point2D) -> CoveragePath {
    let mut best = None;
    for (i, (a, b)) in eroded.edges().enumerate() {
        let direction = (b - a).normalized();
        // Lines are laid from the low side of the normal, so the two signs
        // anchor the first line on the edge or on the opposite side.
        best_route_for_direction(eroded, direction, spacing, start, end, i, &mut best);
        best_route_for_direction(eroded, -direction, spacing, start, end, i, &mut best);
    }
    best.expect("polygon has at least three edges").path
}

/// Unconstrained back-and-forth over the original region: lines at half a
/// spacing from the supporting lines, joined by perpendicular turns. The turn
/// points extend the shorter of two neighbouring lines, so the route may leave
/// the region.
pub fn plan_baseline(
    region: &ConvexPolygon,
    spacing: f64,
    start: Point2D,
    end: Point2D,
) -> Result<CoveragePath, PlanError> {
    if !(spacing.is_finite() && spacing > 0.0) {
        return Err(PlanError::InvalidParams(format!("line spacing must be positive, got {spacing}")));
    }
    let mut best: Option<Candidate> = None;
    for (i, (a, b)) in region.edges().enumerate() {
        let direction = (b - a).normalized();
        let normal = direction.perp();
        let (min, max) = region.projection_range(normal);
        let chords: Vec<Chord> = baseline_offsets(min, max, spacing)
            .into_iter()
            .filter_map(|c| chord_at(region, direction, normal, c))
            .collect();
        if chords.is_empty() {
            continue;
        }
        for order in SWEEP_ORDERS {
            let mut sweep = sweep_waypoints(&chords, order);
            square_turns(&mut sweep, direction);
            let mut waypoints = Vec::with_capacity(sweep.len() + 2);
            waypoints.push(Waypoint::new(start, WaypointRole::TakeoffTransit));
            waypoints.extend(sweep);
            waypoints.push(Waypoint::new(end, WaypointRole::LandingTransit));
            let path = CoveragePath::new(waypoints, direction, chords.len(), spacing);
            keep_better(&mut best, Candidate { path, edge: i });
        }
    }
    best.map(|c| c.path).ok_or_else(|| PlanError::InvalidParams("region admits no flight line".into()))
}

fn baseline_offsets(min: f64, max: f64, spacing: f64) -> Vec<f64> {
    let width = max - min;
    if width <= spacing {
        return vec![min + 0.5 * width];
    }
    let count = (width / spacing - 1e-9).ceil() as usize;
    let last = max - 0.5 * spacing;
    let mut offsets: Vec<f64> =
        (0..count).map(|k| (min + 0.5 * spacing + k as f64 * spacing).min(last)).collect();
    offsets.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    offsets
}

/// Moves each turn so the connection is perpendicular to the lines: the exit
/// of one line and the entry of the next share the outermost along-track
/// coordinate of the pair.
fn square_turns(sweep: &mut [Waypoint], direction: Point2D) {
    let lines = sweep.len() / 2;
    for k in 0..lines.saturating_sub(1) {
        let exit = sweep[2 * k + 1].position;
        let entry = sweep[2 * k + 2].position;
        let leaving_start = sweep[2 * k].position;
        // Turning at the far end when this line was flown along +direction.
        let forward = (exit - leaving_start).dot(direction) >= 0.0;
        let (te, tn) = (exit.dot(direction), entry.dot(direction));
        let target = if forward { te.max(tn) } else { te.min(tn) };
        sweep[2 * k + 1].position = exit + direction * (target - te);
        sweep[2 * k + 2].position = entry + direction * (target - tn);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2D {
        Point2D::new(x, y)
    }

    fn square(size: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![p(0.0, 0.0), p(size, 0.0), p(size, size), p(0.0, size)]).unwrap()
    }

    #[test]
    fn default_spacing_is_twice_radius() {
        assert_eq!(PlanParams::new(1.5, p(0.0, 0.0), p(0.0, 0.0)).line_spacing(), 3.0);
        assert_eq!(PlanParams::new(2.0, p(0.0, 0.0), p(0.0, 0.0)).line_spacing(), 4.0);
        assert_eq!(PlanParams::new(2.0, p(0.0, 0.0), p(0.0, 0.0)).with_spacing(3.5).line_spacing(), 3.5);
    }

    #[test]
    fn offsets_clamp_terminal_line() {
        assert_eq!(line_offsets(0.0, 7.0, 3.0), vec![0.0, 3.0, 6.0, 7.0]);
        assert_eq!(line_offsets(0.0, 6.0, 3.0), vec![0.0, 3.0, 6.0]);
        assert_eq!(line_offsets(1.0, 2.0, 3.0), vec![1.0, 2.0]);
    }

    #[test]
    fn square_plan_lines() {
        let params = PlanParams::new(1.5, p(5.0, 5.0), p(5.0, 5.0));
        let path = plan_coverage(&square(10.0), &params).unwrap();
        assert_eq!(path.line_count, 4);
        assert_eq!(path.line_spacing, 3.0);
        for w in &path.waypoints {
            assert!((1.5 - 1e-9..=8.5 + 1e-9).contains(&w.position.x), "{w:?}");
            assert!((1.5 - 1e-9..=8.5 + 1e-9).contains(&w.position.y), "{w:?}");
        }
        // Flight lines sit at normal offsets {0, 3, 6, 7}; an extreme line on
        // an edge may be flown as part of the corner tour.
        let normal = path.sweep_direction.perp();
        let mut offsets: Vec<f64> = path
            .waypoints
            .iter()
            .filter(|w| matches!(w.role, WaypointRole::Sweep | WaypointRole::CornerTour))
            .map(|w| w.position.dot(normal))
            .collect();
        offsets.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let base = offsets[0];
        let mut rel: Vec<f64> = offsets.iter().map(|o| ((o - base) * 1e9).round() / 1e9).collect();
        rel.dedup();
        assert_eq!(rel, vec![0.0, 3.0, 6.0, 7.0]);
        assert_eq!(path.waypoints.first().unwrap().position, p(5.0, 5.0));
        assert_eq!(path.waypoints.last().unwrap().position, p(5.0, 5.0));
    }

    #[test]
    fn hand_computed_square_length() {
        // 7×7 square, δ = 3, s = e = centre. Lines at y = 1.5, 4.5, 7.5, 8.5
        // (and the rotations of that family). The y = 1.5 line lies on an edge,
        // so it is left to the corner tour: fly 4.5, 7.5, 8.5 (3 × 7 m, joined
        // by 3 m and 1 m), then tour the other three edges (21 m) back down to
        // the corner where the tour ends at the far end of the bottom edge.
        let eroded = ConvexPolygon::new(vec![p(1.5, 1.5), p(8.5, 1.5), p(8.5, 8.5), p(1.5, 8.5)]).unwrap();
        let c = p(5.0, 5.0);
        let path = rcpp(&eroded, 3.0, c, c);
        let takeoff = 12.5f64.sqrt(); // centre to (1.5, 4.5)
        let landing = 3.5 * 2f64.sqrt(); // corner back to the centre
        let expected = takeoff + 3.0 * 7.0 + 3.0 + 1.0 + 21.0 + landing;
        assert_eq!(path.line_count, 4);
        assert_eq!(path.count_role(WaypointRole::Sweep), 3);
        assert_eq!(path.sweep_direction, p(1.0, 0.0));
        assert!((path.total_length - expected).abs() < 1e-9, "{} vs {expected}", path.total_length);
    }

    #[test]
    fn too_large_footprint() {
        let tri = ConvexPolygon::new(vec![p(0.0, 0.0), p(4.0, 0.0), p(2.0, 3.0)]).unwrap();
        let params = PlanParams::new(2.0, p(2.0, 1.0), p(2.0, 1.0));
        assert_eq!(plan_coverage(&tri, &params), Err(PlanError::FootprintTooLarge { radius: 2.0 }));
    }

    #[test]
    fn start_and_end_must_be_reachable() {
        let params = PlanParams::new(1.5, p(0.5, 5.0), p(5.0, 5.0));
        assert!(matches!(plan_coverage(&square(10.0), &params), Err(PlanError::StartOutside(_))));
        let params = PlanParams::new(1.5, p(5.0, 5.0), p(9.0, 9.0));
        assert!(matches!(plan_coverage(&square(10.0), &params), Err(PlanError::EndOutside(_))));
        let params = PlanParams::new(-1.0, p(5.0, 5.0), p(5.0, 5.0));
        assert!(matches!(plan_coverage(&square(10.0), &params), Err(PlanError::InvalidParams(_))));
    }

    #[test]
    fn corner_tour_starts_nearest() {
        let eroded = square(7.0).transformed(0.0, p(1.5, 1.5));
        let tour = corner_tour(&eroded, p(1.5 + 1e-3, 1.5 + 2e-3));
        let pts: Vec<_> = tour.iter().map(|w| w.position).collect();
        assert_eq!(pts, vec![p(1.5, 1.5), p(8.5, 1.5), p(8.5, 8.5), p(1.5, 8.5)]);
        assert!(tour.iter().all(|w| w.role == WaypointRole::CornerTour));

        let tri = ConvexPolygon::new(vec![p(0.0, 0.0), p(4.0, 0.0), p(2.0, 3.0)]).unwrap();
        let tour = corner_tour(&tri, p(2.0, 2.9));
        assert_eq!(tour.len(), 3);
        assert_eq!(tour[0].position, p(2.0, 3.0));
        assert_eq!(tour[1].position, p(0.0, 0.0));
        let len = polyline_length(tour.iter().map(|w| w.position));
        let closing = p(4.0, 0.0).distance(p(2.0, 3.0));
        assert!((len - (tri.perimeter() - closing)).abs() < 1e-12);
    }

    #[test]
    fn role_layout() {
        let params = PlanParams::new(1.0, p(4.0, 3.0), p(6.0, 6.0));
        let path = plan_coverage(&square(10.0), &params).unwrap();
        let roles: Vec<_> = path.waypoints.iter().map(|w| w.role).collect();
        assert_eq!(roles[0], WaypointRole::TakeoffTransit);
        assert_eq!(roles[1], WaypointRole::TakeoffTransit);
        assert_eq!(*roles.last().unwrap(), WaypointRole::LandingTransit);
        let tour_start = roles.iter().position(|r| *r == WaypointRole::CornerTour).unwrap();
        assert!(roles[tour_start..roles.len() - 1].iter().all(|r| *r == WaypointRole::CornerTour));
        // Up to two extreme lines lying on edges can be flown by the tour.
        let sweeps = path.count_role(WaypointRole::Sweep);
        assert!((path.line_count - 2..=path.line_count).contains(&sweeps));
        assert_eq!(path.count_role(WaypointRole::BoundaryConnection), sweeps - 1);
    }

    #[test]
    fn baseline_leaves_safe_zone_on_square() {
        let sq = square(10.0);
        let path = plan_baseline(&sq, 3.0, p(5.0, 5.0), p(5.0, 5.0)).unwrap();
        let eroded = sq.erode(1.5).unwrap();
        assert!(path.positions().any(|q| !eroded.contains(q, 1e-9)));
        assert_eq!(path.line_count, 4);
    }

    #[test]
    fn baseline_turns_are_perpendicular() {
        let tri = ConvexPolygon::new(vec![p(0.0, 0.0), p(30.0, 0.0), p(12.0, 20.0)]).unwrap();
        let path = plan_baseline(&tri, 3.0, p(12.0, 5.0), p(12.0, 5.0)).unwrap();
        let d = path.sweep_direction;
        for pair in path.waypoints.windows(2) {
            if pair[1].role == WaypointRole::BoundaryConnection {
                let step = pair[1].position - pair[0].position;
                assert!(step.dot(d).abs() < 1e-9, "turn not perpendicular: {step:?}");
            }
        }
    }
}
