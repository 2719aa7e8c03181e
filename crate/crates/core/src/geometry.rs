//! Planar geometry for strictly convex polygons.
//!
//! Coordinates are meters in a local tangent frame (`x` east, `y` north).
//! Every polygon is stored counterclockwise; constructors canonicalize
//! clockwise input and reject anything that is not strictly convex.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Default absolute tolerance for geometric predicates, in meters.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("polygon needs at least 3 vertices, got {count}")]
    TooFewVertices { count: usize },
    #[error("polygon is not convex (reflex turn at vertex {index})")]
    NotConvex { index: usize },
    #[error("polygon is degenerate at vertex {index} (duplicate or collinear points)")]
    Degenerate { index: usize },
    #[error("non-finite coordinate at vertex {index}")]
    NonFinite { index: usize },
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("erosion by {inset} m leaves an empty region")]
    EmptyErosion { inset: f64 },
    #[error("inset must be positive, got {inset}")]
    NonPositiveInset { inset: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// Left-hand perpendicular, `(-y, x)`.
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        Self::new(self.x / n, self.y / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Rotates counterclockwise about the origin.
    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn lerp(self, other: Self, t: f64) -> Self {
        self + (other - self) * t
    }
}

impl Add for Point2D {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2D {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2D {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2D {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment2D {
    pub a: Point2D,
    pub b: Point2D,
}

impl Segment2D {
    pub fn new(a: Point2D, b: Point2D) -> Result<Self, GeometryError> {
        if a.distance(b) <= 1e-12 {
            return Err(GeometryError::DegenerateSegment);
        }
        Ok(Self { a, b })
    }

    pub fn length(&self) -> f64 {
        self.a.distance(self.b)
    }
}

/// Distance from `q` to the closed segment `a`–`b`. Works for `a == b`.
pub fn point_segment_distance(q: Point2D, a: Point2D, b: Point2D) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return q.distance(a);
    }
    let t = ((q - a).dot(ab) / len2).clamp(0.0, 1.0);
    q.distance(a + ab * t)
}

/// A strictly convex polygon with counterclockwise vertex order.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2D>,
}

impl ConvexPolygon {
    /// Validates with [`DEFAULT_TOLERANCE`].
    pub fn new(vertices: Vec<Point2D>) -> Result<Self, GeometryError> {
        Self::with_tolerance(vertices, DEFAULT_TOLERANCE)
    }

    /// Validates `vertices` as a strictly convex polygon, reversing clockwise
    /// input. Consecutive vertices closer than `tol`, or a vertex within `tol`
    /// of the line through its neighbours, make the polygon degenerate.
    pub fn with_tolerance(mut vertices: Vec<Point2D>, tol: f64) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeometryError::TooFewVertices { count: n });
        }
        if let Some(index) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite { index });
        }
        for i in 0..n {
            if vertices[i].distance(vertices[(i + 1) % n]) < tol {
                return Err(GeometryError::Degenerate { index: (i + 1) % n });
            }
        }
        let twice_area = shoelace(&vertices);
        if twice_area.abs() <= tol * tol {
            return Err(GeometryError::Degenerate { index: 0 });
        }
        if twice_area < 0.0 {
            vertices.reverse();
        }

        let mut turning = 0.0;
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            let e1 = cur - prev;
            let e2 = next - cur;
            // Height of `cur` above the chord prev→next.
            let chord = next - prev;
            let height = chord.cross(cur - prev) / chord.norm();
            if height.abs() <= tol || !height.is_finite() {
                return Err(GeometryError::Degenerate { index: i });
            }
            let turn = e1.cross(e2);
            if turn <= 0.0 {
                return Err(GeometryError::NotConvex { index: i });
            }
            turning += turn.atan2(e1.dot(e2));
        }
        // All left turns but winding more than once: a star polygon.
        if (turning - std::f64::consts::TAU).abs() > 1e-6 {
            return Err(GeometryError::NotConvex { index: 0 });
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2D] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (Point2D, Point2D) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2D, Point2D)> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn area(&self) -> f64 {
        0.5 * shoelace(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.distance(b)).sum()
    }

    pub fn centroid(&self) -> Point2D {
        let mut cx = 0.0;
        let mut cy = 0.0;
        let origin = self.vertices[0];
        for (a, b) in self.edges() {
            let (a, b) = (a - origin, b - origin);
            let w = a.cross(b);
            cx += (a.x + b.x) * w;
            cy += (a.y + b.y) * w;
        }
        let six_area = 3.0 * shoelace(&self.vertices);
        origin + Point2D::new(cx / six_area, cy / six_area)
    }

    /// Axis-aligned bounds as `(min, max)`.
    pub fn bounds(&self) -> (Point2D, Point2D) {
        let mut lo = Point2D::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2D::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo = Point2D::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Point2D::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        (lo, hi)
    }

    /// Extent of the polygon projected onto `direction` (max minus min of the
    /// vertex projections).
    pub fn width_in_direction(&self, direction: Point2D) -> f64 {
        let (lo, hi) = self.projection_range(direction);
        hi - lo
    }

    pub fn projection_range(&self, direction: Point2D) -> (f64, f64) {
        self.vertices
            .iter()
            .map(|v| v.dot(direction))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p), hi.max(p)))
    }

    /// Width of the polygon measured perpendicular to each edge, found with
    /// rotating calipers: the antipodal vertex of edge `i + 1` is never behind
    /// that of edge `i`, so one pass suffices.
    ///
    /// Entry `i` is `(width, antipodal_vertex)` for edge `i`.
    pub fn edge_widths(&self) -> Vec<(f64, usize)> {
        let n = self.len();
        let v = &self.vertices;
        let height = |edge: usize, k: usize| {
            let (a, b) = self.edge(edge);
            (b - a).cross(v[k] - a) / a.distance(b)
        };
        let mut out = Vec::with_capacity(n);
        let mut k = 1;
        for i in 0..n {
            if i == 0 {
                k = 2 % n;
            }
            let mut steps = 0;
            while steps < n && height(i, (k + 1) % n) >= height(i, k) {
                k = (k + 1) % n;
                steps += 1;
            }
            out.push((height(i, k), k));
        }
        out
    }

    /// True iff `q` lies inside or within `tol` of the boundary.
    pub fn contains(&self, q: Point2D, tol: f64) -> bool {
        self.edges().all(|(a, b)| (b - a).cross(q - a) / a.distance(b) >= -tol)
    }

    /// Signed distance to the boundary: positive inside, negative outside.
    pub fn distance_to_boundary(&self, q: Point2D) -> f64 {
        let mut min_dist = f64::INFINITY;
        let mut inside = true;
        for (a, b) in self.edges() {
            min_dist = min_dist.min(point_segment_distance(q, a, b));
            if (b - a).cross(q - a) < 0.0 {
                inside = false;
            }
        }
        if inside {
            min_dist
        } else {
            -min_dist
        }
    }

    /// Sub-segment of `s` inside the polygon. Touching contacts shorter than
    /// `DEFAULT_TOLERANCE` count as empty.
    pub fn clip_segment(&self, s: &Segment2D) -> Option<Segment2D> {
        let dir = s.b - s.a;
        let mut t_lo: f64 = 0.0;
        let mut t_hi: f64 = 1.0;
        for (a, b) in self.edges() {
            let edge = b - a;
            let len = edge.norm();
            // Signed inward distance of s.a and its rate of change along s.
            let dist = edge.cross(s.a - a) / len;
            let rate = edge.cross(dir) / len;
            if rate.abs() < 1e-15 {
                if dist < -DEFAULT_TOLERANCE {
                    return None;
                }
                continue;
            }
            let t = -dist / rate;
            if rate > 0.0 {
                t_lo = t_lo.max(t);
            } else {
                t_hi = t_hi.min(t);
            }
            if t_lo > t_hi {
                return None;
            }
        }
        let a = s.a + dir * t_lo;
        let b = s.a + dir * t_hi;
        if a.distance(b) < DEFAULT_TOLERANCE {
            return None;
        }
        Some(Segment2D { a, b })
    }

    /// Inner parallel polygon: every edge moved inward by `inset` and the
    /// resulting half-planes intersected. Edges that collapse drop out.
    pub fn erode(&self, inset: f64) -> Result<ConvexPolygon, GeometryError> {
        if inset.is_nan() || inset <= 0.0 {
            return Err(GeometryError::NonPositiveInset { inset });
        }
        let mut poly = self.vertices.clone();
        for (a, b) in self.edges() {
            let normal = (b - a).perp().normalized();
            let offset = normal.dot(a) + inset;
            poly = clip_half_plane(&poly, normal, offset);
            if poly.len() < 3 {
                return Err(GeometryError::EmptyErosion { inset });
            }
        }
        let cleaned = simplify_ring(poly, DEFAULT_TOLERANCE);
        ConvexPolygon::new(cleaned).map_err(|_| GeometryError::EmptyErosion { inset })
    }

    /// Applies a rigid rotation about the origin followed by a translation.
    pub fn transformed(&self, angle: f64, shift: Point2D) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| v.rotated(angle) + shift).collect(),
        }
    }
}

/// Twice the signed area.
fn shoelace(vertices: &[Point2D]) -> f64 {
    let n = vertices.len();
    (0..n).map(|i| vertices[i].cross(vertices[(i + 1) % n])).sum()
}

/// Sutherland–Hodgman step keeping `{p : normal·p >= offset}`.
fn clip_half_plane(poly: &[Point2D], normal: Point2D, offset: f64) -> Vec<Point2D> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = poly[i];
        let next = poly[(i + 1) % n];
        let dc = normal.dot(cur) - offset;
        let dn = normal.dot(next) - offset;
        if dc >= 0.0 {
            out.push(cur);
        }
        if (dc >= 0.0) != (dn >= 0.0) {
            let t = dc / (dc - dn);
            out.push(cur.lerp(next, t));
        }
    }
    out
}

/// Drops near-duplicate and collinear vertices from a convex ring.
fn simplify_ring(mut ring: Vec<Point2D>, tol: f64) -> Vec<Point2D> {
    loop {
        let n = ring.len();
        if n < 3 {
            return ring;
        }
        let mut removed = false;
        for i in 0..n {
            let prev = ring[(i + n - 1) % n];
            let cur = ring[i];
            let next = ring[(i + 1) % n];
            let chord = next - prev;
            let chord_len = chord.norm();
            let flat = chord_len <= tol || (chord.cross(cur - prev) / chord_len).abs() <= tol;
            if cur.distance(next) < tol || flat {
                ring.remove(i);
                removed = true;
                break;
            }
        }
        if !removed {
            return ring;
        }
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
    fn accepts_ccw_square() {
        let sq = square(10.0);
        assert_eq!(sq.vertices()[1], p(10.0, 0.0));
    }

    #[test]
    fn reverses_clockwise_input() {
        let cw = ConvexPolygon::new(vec![p(0.0, 0.0), p(0.0, 10.0), p(10.0, 10.0), p(10.0, 0.0)])
            .unwrap();
        assert!(cw.area() > 0.0);
        assert_eq!(cw.vertices(), &[p(10.0, 0.0), p(10.0, 10.0), p(0.0, 10.0), p(0.0, 0.0)]);
    }

    #[test]
    fn rejects_collinear_triple() {
        let err = ConvexPolygon::new(vec![p(0.0, 0.0), p(5.0, 0.0), p(10.0, 0.0), p(5.0, 5.0)])
            .unwrap_err();
        assert!(matches!(err, GeometryError::Degenerate { .. }), "{err:?}");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            ConvexPolygon::new(vec![p(0.0, 0.0), p(1.0, 0.0)]).unwrap_err(),
            GeometryError::TooFewVertices { count: 2 }
        );
        let dup = ConvexPolygon::new(vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)]);
        assert!(matches!(dup, Err(GeometryError::Degenerate { .. })));
        let reflex =
            ConvexPolygon::new(vec![p(0.0, 0.0), p(10.0, 0.0), p(5.0, 2.0), p(10.0, 10.0), p(0.0, 10.0)]);
        assert!(matches!(reflex, Err(GeometryError::NotConvex { .. })));
        let nan = ConvexPolygon::new(vec![p(0.0, 0.0), p(f64::NAN, 0.0), p(0.0, 1.0)]);
        assert!(matches!(nan, Err(GeometryError::NonFinite { index: 1 })));
    }

    #[test]
    fn rejects_pentagram() {
        let star: Vec<_> = (0..5)
            .map(|k| {
                let a = k as f64 * 2.0 * std::f64::consts::TAU / 5.0;
                p(a.cos(), a.sin())
            })
            .collect();
        assert!(matches!(ConvexPolygon::new(star), Err(GeometryError::NotConvex { .. })));
    }

    #[test]
    fn areas() {
        assert_eq!(square(1.0).area(), 1.0);
        assert_eq!(square(10.0).area(), 100.0);
    }

    #[test]
    fn erode_square() {
        let inner = square(10.0).erode(1.5).unwrap();
        let expected = [p(1.5, 1.5), p(8.5, 1.5), p(8.5, 8.5), p(1.5, 8.5)];
        assert_eq!(inner.len(), 4);
        for e in expected {
            assert!(inner.vertices().iter().any(|v| v.distance(e) < 1e-12), "missing {e}");
        }
    }

    #[test]
    fn erode_past_inradius_is_empty() {
        // Equilateral triangle with inradius 1: side = 2·√3.
        let side = 2.0 * 3f64.sqrt();
        let tri = ConvexPolygon::new(vec![p(0.0, 0.0), p(side, 0.0), p(side / 2.0, 3.0)]).unwrap();
        assert!(matches!(tri.erode(1.5), Err(GeometryError::EmptyErosion { .. })));
        assert!(matches!(tri.erode(1.0), Err(GeometryError::EmptyErosion { .. })));
        assert!(tri.erode(0.9).is_ok());
        assert!(matches!(tri.erode(0.0), Err(GeometryError::NonPositiveInset { .. })));
    }

    #[test]
    fn widths() {
        let sq = square(10.0);
        assert!((sq.width_in_direction(p(1.0, 0.0)) - 10.0).abs() < 1e-12);
        let diag = p(1.0, 1.0).normalized();
        assert!((sq.width_in_direction(diag) - 10.0 * 2f64.sqrt()).abs() < 1e-9);
        for (w, _) in sq.edge_widths() {
            assert!((w - 10.0).abs() < 1e-12);
        }
    }

    #[test]
    fn containment() {
        let sq = square(10.0);
        assert!(sq.contains(p(5.0, 5.0), 1e-9));
        assert!(sq.contains(p(10.0 + 1e-12, 5.0), 1e-9));
        assert!(!sq.contains(p(11.0, 5.0), 1e-9));
    }

    #[test]
    fn boundary_distance() {
        let sq = square(10.0);
        assert_eq!(sq.distance_to_boundary(p(5.0, 5.0)), 5.0);
        assert_eq!(sq.distance_to_boundary(p(5.0, -2.0)), -2.0);
        assert!(sq.distance_to_boundary(p(3.7, 0.0)).abs() < 1e-12);
        assert!(sq.distance_to_boundary(p(10.0, 6.1)).abs() < 1e-12);
    }

    #[test]
    fn clipping() {
        let sq = square(10.0);
        let through = Segment2D::new(p(-5.0, 5.0), p(15.0, 5.0)).unwrap();
        let clipped = sq.clip_segment(&through).unwrap();
        assert!(clipped.a.distance(p(0.0, 5.0)) < 1e-12);
        assert!(clipped.b.distance(p(10.0, 5.0)) < 1e-12);

        let outside = Segment2D::new(p(-5.0, 20.0), p(15.0, 20.0)).unwrap();
        assert!(sq.clip_segment(&outside).is_none());

        // Touches only the corner (10, 10).
        let tangent = Segment2D::new(p(5.0, 15.0), p(15.0, 5.0)).unwrap();
        assert!(sq.clip_segment(&tangent).is_none());
    }

    #[test]
    fn degenerate_segment_rejected() {
        assert!(Segment2D::new(p(1.0, 1.0), p(1.0, 1.0)).is_err());
    }

    #[test]
    fn centroid_of_square() {
        let c = square(10.0).centroid();
        assert!(c.distance(p(5.0, 5.0)) < 1e-12);
    }
}
