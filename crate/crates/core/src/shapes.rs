//! Polygon generators for studies, demos and tests.

use std::f64::consts::TAU;

use rand::Rng;

use crate::geometry::{ConvexPolygon, Point2D};

/// Regular `n`-gon with circumradius `radius`, first vertex on the +x axis.
pub fn regular_polygon(n: usize, radius: f64, center: Point2D) -> ConvexPolygon {
    let pts = (0..n)
        .map(|k| {
            let a = TAU * k as f64 / n as f64;
            center + Point2D::new(radius * a.cos(), radius * a.sin())
        })
        .collect();
    ConvexPolygon::new(pts).expect("regular polygon is strictly convex")
}

/// Random strictly convex polygon with `n` vertices and diameter at most
/// `diameter`, centred on the origin.
///
/// Vertices sit on a circle with random angular gaps (each at least 40% of
/// the even gap, which keeps the shape from collapsing into a sliver); the
/// circle is then squashed by a random aspect ratio in `[0.6, 1]` and rotated.
pub fn random_convex_polygon<R: Rng + ?Sized>(rng: &mut R, n: usize, diameter: f64) -> ConvexPolygon {
    assert!(n >= 3, "polygon needs at least 3 vertices");
    let even = TAU / n as f64;
    let min_gap = 0.4 * even;
    let weights: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let spare = TAU - n as f64 * min_gap;
    let phase = rng.random::<f64>() * TAU;
    let aspect = 0.6 + 0.4 * rng.random::<f64>();
    let tilt = rng.random::<f64>() * TAU;
    let radius = 0.5 * diameter;
    let mut angle = phase;
    let pts = weights
        .iter()
        .map(|w| {
            let p = Point2D::new(radius * angle.cos(), aspect * radius * angle.sin()).rotated(tilt);
            angle += min_gap + spare * w / total;
            p
        })
        .collect();
    ConvexPolygon::new(pts).expect("points on an ellipse are in convex position")
}

/// Radius of the largest inscribed circle, found by bisection on erosion.
pub fn inradius(poly: &ConvexPolygon) -> f64 {
    let (lo, hi) = poly.bounds();
    let mut a = 0.0;
    let mut b = 0.5 * (hi.x - lo.x).min(hi.y - lo.y).max(f64::MIN_POSITIVE);
    // The bound above can be exceeded only by degenerate inputs.
    while poly.erode(b).is_ok() {
        b *= 2.0;
    }
    for _ in 0..60 {
        let mid = 0.5 * (a + b);
        if mid > 0.0 && poly.erode(mid).is_ok() {
            a = mid;
        } else {
            b = mid;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn regular_square_inradius() {
        let sq = regular_polygon(4, 2f64.sqrt(), Point2D::default());
        assert!((inradius(&sq) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn random_polygons_respect_diameter() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 3..=12 {
            let poly = random_convex_polygon(&mut rng, n, 40.0);
            assert_eq!(poly.len(), n);
            let v = poly.vertices();
            for a in v {
                for b in v {
                    assert!(a.distance(*b) <= 40.0 + 1e-9);
                }
            }
        }
    }
}
