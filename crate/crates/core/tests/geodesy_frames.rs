use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sprayplan::geodesy::{GeoReference, GeodesyError, GeodeticCoord, NedCoord, WGS84_A, WGS84_F};

const ORIGIN_LAT: f64 = 19.467468;
const ORIGIN_LON: f64 = -99.193345;

fn reference() -> GeoReference {
    GeoReference::new(GeodeticCoord::new(ORIGIN_LAT, ORIGIN_LON, 0.0).unwrap())
}

/// Metric gap between two nearby geodetic points, through ECEF.
fn gap_m(a: &GeodeticCoord, b: &GeodeticCoord) -> f64 {
    let (p, q) = (a.to_ecef(), b.to_ecef());
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2) + (p[2] - q[2]).powi(2)).sqrt()
}

/// Vincenty's inverse formula on the WGS-84 ellipsoid, in metres.
fn vincenty(lat1: f64, lon1: f64, lat2: f64, lon2: f64) -> f64 {
    let (a, f) = (WGS84_A, WGS84_F);
    let b = a * (1.0 - f);
    let u1 = ((1.0 - f) * lat1.to_radians().tan()).atan();
    let u2 = ((1.0 - f) * lat2.to_radians().tan()).atan();
    let l = (lon2 - lon1).to_radians();
    let (su1, cu1) = u1.sin_cos();
    let (su2, cu2) = u2.sin_cos();
    let mut lambda = l;
    for _ in 0..200 {
        let (sl, cl) = lambda.sin_cos();
        let sin_sigma = ((cu2 * sl).powi(2) + (cu1 * su2 - su1 * cu2 * cl).powi(2)).sqrt();
        if sin_sigma == 0.0 {
            return 0.0;
        }
        let cos_sigma = su1 * su2 + cu1 * cu2 * cl;
        let sigma = sin_sigma.atan2(cos_sigma);
        let sin_alpha = cu1 * cu2 * sl / sin_sigma;
        let cos2_alpha = 1.0 - sin_alpha * sin_alpha;
        let cos_2sm = if cos2_alpha == 0.0 { 0.0 } else { cos_sigma - 2.0 * su1 * su2 / cos2_alpha };
        let c = f / 16.0 * cos2_alpha * (4.0 + f * (4.0 - 3.0 * cos2_alpha));
        let prev = lambda;
        lambda = l
            + (1.0 - c) * f * sin_alpha * (sigma + c * sin_sigma * (cos_2sm + c * cos_sigma * (-1.0 + 2.0 * cos_2sm * cos_2sm)));
        if (lambda - prev).abs() < 1e-13 {
            let u2sq = cos2_alpha * (a * a - b * b) / (b * b);
            let big_a = 1.0 + u2sq / 16384.0 * (4096.0 + u2sq * (-768.0 + u2sq * (320.0 - 175.0 * u2sq)));
            let big_b = u2sq / 1024.0 * (256.0 + u2sq * (-128.0 + u2sq * (74.0 - 47.0 * u2sq)));
            let delta = big_b
                * sin_sigma
                * (cos_2sm
                    + big_b / 4.0
                        * (cos_sigma * (-1.0 + 2.0 * cos_2sm * cos_2sm)
                            - big_b / 6.0 * cos_2sm * (-3.0 + 4.0 * sin_sigma * sin_sigma) * (-3.0 + 4.0 * cos_2sm * cos_2sm)));
            return b * big_a * (sigma - delta);
        }
    }
    panic!("Vincenty did not converge");
}

#[test]
fn round_trip_near_origin_is_millimetre_exact() {
    let frame = reference();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let range = rng.random_range(0.0..5000.0);
        let bearing = rng.random_range(0.0..std::f64::consts::TAU);
        let down = rng.random_range(-100.0..10.0);
        let ned = NedCoord::new(range * bearing.cos(), range * bearing.sin(), down);
        let g = frame.ned_to_geodetic(&ned).unwrap();
        let back = frame.geodetic_to_ned(&g);
        let again = frame.ned_to_geodetic(&back).unwrap();
        worst = worst.max(gap_m(&g, &again));
        let d = ((back.north - ned.north).powi(2) + (back.east - ned.east).powi(2) + (back.down - ned.down).powi(2)).sqrt();
        worst = worst.max(d);
    }
    assert!(worst < 1e-3, "worst round-trip error {worst} m");
}

#[test]
fn distances_agree_with_vincenty() {
    let frame = reference();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let lat = ORIGIN_LAT + rng.random_range(-0.04..0.04);
        let lon = ORIGIN_LON + rng.random_range(-0.04..0.04);
        let g = GeodeticCoord::new(lat, lon, 0.0).unwrap();
        let ned = frame.geodetic_to_ned(&g);
        // Chord and geodesic differ by d³/(24R²) < 0.3 mm at this range.
        let geodesic = vincenty(ORIGIN_LAT, ORIGIN_LON, lat, lon);
        assert!((ned.norm() - geodesic).abs() < 1e-3, "{} vs {geodesic}", ned.norm());
    }
}

#[test]
fn one_hundred_metres_north() {
    let frame = reference();
    let g = frame.ned_to_geodetic(&NedCoord::new(100.0, 0.0, 0.0)).unwrap();
    assert!((g.latitude() - 19.468372).abs() < 2e-6, "{}", g.latitude());
    assert!((g.longitude() - ORIGIN_LON).abs() < 1e-9);
}

#[test]
fn far_points_are_rejected() {
    let frame = reference();
    let err = frame.ned_to_geodetic(&NedCoord::new(60_000.0, 0.0, 0.0)).unwrap_err();
    assert!(matches!(err, GeodesyError::OutOfFrame { .. }));
}

proptest! {
    #[test]
    fn ecef_round_trip_anywhere(lat in -89.9f64..89.9, lon in -180.0f64..180.0, alt in -500.0f64..10_000.0) {
        let g = GeodeticCoord::new(lat, lon, alt).unwrap();
        let back = GeodeticCoord::from_ecef(g.to_ecef());
        prop_assert!(gap_m(&g, &back) < 1e-6);
        prop_assert!((back.altitude() - alt).abs() < 1e-6);
    }

    #[test]
    fn frame_round_trip_at_any_origin(
        lat in -80.0f64..80.0,
        lon in -180.0f64..180.0,
        north in -5000.0f64..5000.0,
        east in -5000.0f64..5000.0,
        down in -200.0f64..50.0,
    ) {
        let frame = GeoReference::new(GeodeticCoord::new(lat, lon, 0.0).unwrap());
        let ned = NedCoord::new(north, east, down);
        let back = frame.geodetic_to_ned(&frame.ned_to_geodetic(&ned).unwrap());
        prop_assert!((back.north - north).abs() < 1e-3);
        prop_assert!((back.east - east).abs() < 1e-3);
        prop_assert!((back.down - down).abs() < 1e-3);
    }
}
