use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sprayplan::coverage::{default_cell_size, evaluate, sweep_coverage, uncovered_regions, CoverageGrid};
use sprayplan::shapes::{inradius, random_convex_polygon, regular_polygon};
use sprayplan::{plan_coverage, ConvexPolygon, CoveragePath, PlanParams, Point2D, Waypoint, WaypointRole};

fn random_case(seed: u64) -> (ConvexPolygon, f64, CoveragePath) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(3..=10);
    let d = rng.random_range(10.0..40.0);
    let region = random_convex_polygon(&mut rng, n, d);
    let r = rng.random_range(0.15..0.4) * inradius(&region);
    let c = region.erode(r).unwrap().centroid();
    let path = plan_coverage(&region, &PlanParams::new(r, c, c)).unwrap();
    (region, r, path)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn more_waypoints_never_cover_less(seed in any::<u64>(), cut in 0.0f64..1.0) {
        let (region, r, path) = random_case(seed);
        let k = 1 + ((path.waypoints.len() - 1) as f64 * cut) as usize;
        let prefix = CoveragePath::new(path.waypoints[..k].to_vec(), path.sweep_direction, path.line_count, path.line_spacing);
        let cell = r / 10.0;
        let grid = || CoverageGrid::new(&region, None, r, cell, path.positions()).unwrap();
        let part = sweep_coverage(&prefix, r, grid()).unwrap();
        let full = sweep_coverage(&path, r, grid()).unwrap();
        let (nx, ny) = full.dims();
        for ix in 0..nx {
            for iy in 0..ny {
                prop_assert!(!part.is_covered(ix, iy) || full.is_covered(ix, iy));
            }
        }
        prop_assert!(part.covered_fraction_region() <= full.covered_fraction_region());
    }

    #[test]
    fn flight_time_is_length_over_speed(seed in any::<u64>(), speed in 0.5f64..15.0) {
        let (region, r, path) = random_case(seed);
        let eroded = region.erode(r).unwrap();
        let (report, _) = evaluate(&region, &eroded, &path, r, speed, r / 5.0).unwrap();
        prop_assert!((report.est_flight_time * speed - report.path_length).abs() <= 1e-9 * report.path_length);
        prop_assert_eq!(report.path_length, path.total_length);
    }

    #[test]
    fn plans_cover_the_eroded_region(seed in any::<u64>()) {
        let (region, r, path) = random_case(seed);
        let eroded = region.erode(r).unwrap();
        let cell = default_cell_size(r);
        let (report, grid) = evaluate(&region, &eroded, &path, r, 2.0, cell).unwrap();
        prop_assert!(report.covered_fraction_eroded >= 0.995, "{}", report.covered_fraction_eroded);
        prop_assert!(uncovered_regions(&region, &grid).confined_to_band(r, cell));
    }
}

#[test]
fn halving_the_cell_barely_moves_the_fraction() {
    for (n, r) in [(3, 1.5), (4, 1.5), (6, 1.5), (8, 2.0), (9, 2.0), (10, 2.0)] {
        let region = regular_polygon(n, 11.0, Point2D::default());
        let eroded = region.erode(r).unwrap();
        let path = plan_coverage(&region, &PlanParams::new(r, Point2D::default(), Point2D::default())).unwrap();
        let cell = default_cell_size(r);
        let (coarse, _) = evaluate(&region, &eroded, &path, r, 2.0, cell).unwrap();
        let (fine, _) = evaluate(&region, &eroded, &path, r, 2.0, cell / 2.0).unwrap();
        let change = (coarse.covered_fraction_region - fine.covered_fraction_region).abs();
        assert!(change < 0.005 * fine.covered_fraction_region, "n={n}: {change}");
    }
}

#[test]
fn single_segment_covers_a_stadium() {
    let region = ConvexPolygon::new(vec![
        Point2D::new(-20.0, -20.0),
        Point2D::new(20.0, -20.0),
        Point2D::new(20.0, 20.0),
        Point2D::new(-20.0, 20.0),
    ])
    .unwrap();
    let waypoints = vec![
        Waypoint::new(Point2D::new(-5.0, 0.0), WaypointRole::TakeoffTransit),
        Waypoint::new(Point2D::new(5.0, 0.0), WaypointRole::Sweep),
    ];
    let path = CoveragePath::new(waypoints, Point2D::new(1.0, 0.0), 1, 2.0);
    let r = 1.0;
    let grid = CoverageGrid::new(&region, None, r, 0.01, path.positions()).unwrap();
    let grid = sweep_coverage(&path, r, grid).unwrap();
    let stadium = 10.0 * 2.0 * r + std::f64::consts::PI * r * r;
    assert!((grid.covered_area() - stadium).abs() < 0.01 * stadium);
}
