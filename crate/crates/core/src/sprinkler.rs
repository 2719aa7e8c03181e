//! Paraboloid spray model.
//!
//! The spray boundary below a vehicle hovering at altitude `h` is the inverted
//! paraboloid `z = −A·x² − B·y² + h`. Its intersection with the ground is the
//! ellipse `A·x² + B·y² = h`; planning uses the largest circle inside that
//! ellipse, which is conservative.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

use crate::geometry::Point2D;
use crate::lm::{self, LeastSquaresProblem, LmConfig};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SprinklerError {
    #[error("paraboloid parameters must be positive and finite (A={a}, B={b}, h={h})")]
    InvalidModel { a: f64, b: f64, h: f64 },
    #[error("noise standard deviation must be finite and non-negative, got {0}")]
    InvalidNoise(f64),
    #[error("altitude must be positive, got {0}")]
    InvalidAltitude(f64),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FitError {
    #[error("droplet samples do not determine A, B and h ({samples} samples, rank-deficient design)")]
    NotIdentifiable { samples: usize },
    #[error("best fit has non-positive curvature (A={a}, B={b}, h={h})")]
    NonPositiveFit { a: f64, b: f64, h: f64 },
    #[error("no convergence after {} iterations", best.iterations)]
    MaxIterations { best: FitResult },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Paraboloid {
    a: f64,
    b: f64,
    h: f64,
}

impl Paraboloid {
    /// `a`, `b` are the x and y curvatures (1/m), `h` the vehicle altitude (m).
    pub fn new(a: f64, b: f64, h: f64) -> Result<Self, SprinklerError> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if ok(a) && ok(b) && ok(h) {
            Ok(Self { a, b, h })
        } else {
            Err(SprinklerError::InvalidModel { a, b, h })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Height of the spray boundary above the ground at horizontal offset (x, y).
    pub fn evaluate(&self, x: f64, y: f64) -> f64 {
        -self.a * x * x - self.b * y * y + self.h
    }

    pub fn sample_noisy<R: Rng + ?Sized>(&self, noise: NoiseModel, x: f64, y: f64, rng: &mut R) -> f64 {
        let z = self.evaluate(x, y);
        if noise.sigma == 0.0 {
            return z;
        }
        // sigma was validated on construction
        let normal = Normal::new(0.0, noise.sigma).expect("valid sigma");
        z + normal.sample(rng)
    }

    /// Largest circle inside the ground ellipse, centered below the vehicle.
    pub fn footprint(&self) -> FootprintDisk {
        self.footprint_at(Point2D::new(0.0, 0.0))
    }

    pub fn footprint_at(&self, nadir: Point2D) -> FootprintDisk {
        FootprintDisk { center: nadir, radius: (self.h / self.a.max(self.b)).sqrt() }
    }

    /// Footprint radius when flown at `altitude` with the same curvatures.
    pub fn footprint_radius_at_altitude(&self, altitude: f64) -> Result<f64, SprinklerError> {
        if !(altitude.is_finite() && altitude > 0.0) {
            return Err(SprinklerError::InvalidAltitude(altitude));
        }
        Ok((altitude / self.a.max(self.b)).sqrt())
    }

    /// Semi-axes of the ground ellipse along x and y.
    pub fn ground_semi_axes(&self) -> (f64, f64) {
        ((self.h / self.a).sqrt(), (self.h / self.b).sqrt())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseModel {
    sigma: f64,
}

impl NoiseModel {
    pub fn new(sigma: f64) -> Result<Self, SprinklerError> {
        if sigma.is_finite() && sigma >= 0.0 {
            Ok(Self { sigma })
        } else {
            Err(SprinklerError::InvalidNoise(sigma))
        }
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DropletSample {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl DropletSample {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FootprintDisk {
    pub center: Point2D,
    pub radius: f64,
}

impl FootprintDisk {
    pub fn contains(&self, p: Point2D) -> bool {
        p.distance(self.center) <= self.radius
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitResult {
    pub model: Paraboloid,
    pub residual_rms: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Residuals `model(x, y) − z` over (A, B, h).
pub struct ParaboloidResiduals<'a> {
    samples: &'a [DropletSample],
}

impl<'a> ParaboloidResiduals<'a> {
    pub fn new(samples: &'a [DropletSample]) -> Self {
        Self { samples }
    }
}

impl LeastSquaresProblem for ParaboloidResiduals<'_> {
    fn num_params(&self) -> usize {
        3
    }

    fn num_residuals(&self) -> usize {
        self.samples.len()
    }

    fn residuals(&self, p: &DVector<f64>) -> DVector<f64> {
        DVector::from_iterator(
            self.samples.len(),
            self.samples.iter().map(|s| -p[0] * s.x * s.x - p[1] * s.y * s.y + p[2] - s.z),
        )
    }

    fn jacobian(&self, _p: &DVector<f64>) -> DMatrix<f64> {
        let mut j = DMatrix::zeros(self.samples.len(), 3);
        for (i, s) in self.samples.iter().enumerate() {
            j[(i, 0)] = -s.x * s.x;
            j[(i, 1)] = -s.y * s.y;
            j[(i, 2)] = 1.0;
        }
        j
    }
}

fn check_identifiable(samples: &[DropletSample]) -> Result<(), FitError> {
    let not_identifiable = FitError::NotIdentifiable { samples: samples.len() };
    if samples.len() < 3 {
        return Err(not_identifiable);
    }
    let jac = ParaboloidResiduals::new(samples).jacobian(&DVector::zeros(3));
    let sv = jac.singular_values();
    let max = sv.max();
    if max.is_nan() || max <= 0.0 || sv.min() <= max * 1e-12 {
        return Err(not_identifiable);
    }
    Ok(())
}

/// Linear least-squares estimate of (A, B, h) from the normal equations.
/// Used as the starting point when no initial model is supplied.
pub fn linear_estimate(samples: &[DropletSample]) -> Result<[f64; 3], FitError> {
    check_identifiable(samples)?;
    let problem = ParaboloidResiduals::new(samples);
    let jac = problem.jacobian(&DVector::zeros(3));
    // r(p) = J p − z, so the optimum solves JᵀJ p = Jᵀz.
    let z = DVector::from_iterator(samples.len(), samples.iter().map(|s| s.z));
    let rhs = jac.transpose() * z;
    let sol = (jac.transpose() * &jac)
        .cholesky()
        .ok_or(FitError::NotIdentifiable { samples: samples.len() })?
        .solve(&rhs);
    Ok([sol[0], sol[1], sol[2]])
}

/// Fits (A, B, h) to droplets on the spray boundary with Levenberg–Marquardt.
///
/// Without `initial`, the linear estimate seeds the solver.
pub fn fit(
    samples: &[DropletSample],
    initial: Option<Paraboloid>,
    config: &LmConfig,
) -> Result<FitResult, FitError> {
    check_identifiable(samples)?;
    let start = match initial {
        Some(m) => [m.a, m.b, m.h],
        None => linear_estimate(samples)?,
    };
    let problem = ParaboloidResiduals::new(samples);
    let report = lm::minimize(&problem, DVector::from_row_slice(&start), config);
    let (a, b, h) = (report.params[0], report.params[1], report.params[2]);
    let model = Paraboloid::new(a, b, h).map_err(|_| FitError::NonPositiveFit { a, b, h })?;
    let result = FitResult {
        model,
        residual_rms: (2.0 * report.cost / samples.len() as f64).sqrt(),
        iterations: report.iterations,
        converged: report.converged(),
    };
    if result.converged {
        Ok(result)
    } else {
        Err(FitError::MaxIterations { best: result })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn grid_samples(m: &Paraboloid) -> Vec<DropletSample> {
        let mut out = Vec::new();
        for i in -2..=2 {
            for j in -2..=2 {
                let (x, y) = (i as f64 * 0.5, j as f64 * 0.5);
                out.push(DropletSample::new(x, y, m.evaluate(x, y)));
            }
        }
        out
    }

    #[test]
    fn evaluates_surface() {
        let m = Paraboloid::new(1.0, 1.0, 4.0).unwrap();
        assert_eq!(m.evaluate(0.0, 0.0), 4.0);
        assert_eq!(m.evaluate(2.0, 0.0), 0.0);
        let m = Paraboloid::new(0.5, 0.3, 3.0).unwrap();
        assert!((m.evaluate(1.0, 2.0) - 1.3).abs() < 1e-12);
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(Paraboloid::new(0.0, 1.0, 1.0).is_err());
        assert!(Paraboloid::new(1.0, -1.0, 1.0).is_err());
        assert!(Paraboloid::new(1.0, 1.0, f64::NAN).is_err());
        assert!(NoiseModel::new(-0.1).is_err());
        let m = Paraboloid::new(1.0, 1.0, 1.0).unwrap();
        assert!(m.footprint_radius_at_altitude(0.0).is_err());
    }

    #[test]
    fn zero_noise_matches_surface() {
        let m = Paraboloid::new(0.5, 0.3, 3.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let quiet = NoiseModel::new(0.0).unwrap();
        for (x, y) in [(0.0, 0.0), (1.0, -2.0), (0.3, 0.7)] {
            assert_eq!(m.sample_noisy(quiet, x, y, &mut rng), m.evaluate(x, y));
        }
    }

    #[test]
    fn footprint_radii() {
        let m = Paraboloid::new(1.0, 1.0, 4.0).unwrap();
        assert_eq!(m.footprint().radius, 2.0);
        let m = Paraboloid::new(0.5, 2.0, 2.0).unwrap();
        assert_eq!(m.footprint().radius, 1.0);
        let m = Paraboloid::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(m.footprint_radius_at_altitude(9.0).unwrap(), 3.0);
        let m = Paraboloid::new(0.5, 2.0, 1.0).unwrap();
        assert_eq!(m.footprint_radius_at_altitude(8.0).unwrap(), 2.0);
    }

    #[test]
    fn doubling_altitude_scales_radius_by_sqrt2() {
        let m = Paraboloid::new(0.7, 1.3, 5.0).unwrap();
        let r1 = m.footprint_radius_at_altitude(5.0).unwrap();
        let r2 = m.footprint_radius_at_altitude(10.0).unwrap();
        assert!((r2 / r1 - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn recovers_noiseless_parameters() {
        let truth = Paraboloid::new(0.5, 0.3, 3.0).unwrap();
        let samples = grid_samples(&truth);
        let start = Paraboloid::new(2.0, 2.0, 1.0).unwrap();
        let fitted = fit(&samples, Some(start), &LmConfig::default()).unwrap();
        assert!(fitted.converged);
        assert!((fitted.model.a() - 0.5).abs() < 1e-8);
        assert!((fitted.model.b() - 0.3).abs() < 1e-8);
        assert!((fitted.model.h() - 3.0).abs() < 1e-8);
        assert!(fitted.residual_rms < 1e-10);
    }

    #[test]
    fn too_few_samples_not_identifiable() {
        let s = vec![DropletSample::new(0.0, 0.0, 1.0), DropletSample::new(1.0, 0.0, 0.5)];
        assert_eq!(
            fit(&s, None, &LmConfig::default()).unwrap_err(),
            FitError::NotIdentifiable { samples: 2 }
        );
    }

    #[test]
    fn symmetric_design_not_identifiable() {
        // Only x varies, so B cannot be determined.
        let s: Vec<_> = (0..10).map(|i| DropletSample::new(i as f64, 0.0, 1.0)).collect();
        assert!(matches!(fit(&s, None, &LmConfig::default()), Err(FitError::NotIdentifiable { .. })));
    }

    #[test]
    fn upward_paraboloid_reported() {
        let s: Vec<_> = (-3..=3)
            .flat_map(|i| (-3..=3).map(move |j| (i as f64, j as f64)))
            .map(|(x, y)| DropletSample::new(x, y, 0.5 * x * x + 0.2 * y * y + 1.0))
            .collect();
        let err = fit(&s, None, &LmConfig::default()).unwrap_err();
        match err {
            FitError::NonPositiveFit { a, b, h } => {
                assert!((a + 0.5).abs() < 1e-8 && (b + 0.2).abs() < 1e-8 && (h - 1.0).abs() < 1e-8);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn iteration_cap_returns_best_so_far() {
        let truth = Paraboloid::new(0.5, 0.3, 3.0).unwrap();
        let samples = grid_samples(&truth);
        let start = Paraboloid::new(20.0, 20.0, 0.1).unwrap();
        let config = LmConfig { max_iterations: 1, ..LmConfig::default() };
        match fit(&samples, Some(start), &config) {
            Err(FitError::MaxIterations { best }) => {
                assert!(!best.converged);
                assert_eq!(best.iterations, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
