//! WebAssembly bindings for the browser demo in `www/`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wasm_bindgen::prelude::*;

use sprayplan::coverage::{default_cell_size, evaluate};
use sprayplan::lm::LmConfig;
use sprayplan::mission_io::{render_svg, SvgStyle};
use sprayplan::shapes::random_convex_polygon;
use sprayplan::sprinkler::{fit, DropletSample, NoiseModel, Paraboloid};
use sprayplan::{plan_baseline, plan_coverage, ConvexPolygon, PlanParams, Point2D};

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn polygon(flat: &[f64]) -> Result<ConvexPolygon, JsError> {
    if !flat.len().is_multiple_of(2) {
        return Err(JsError::new("vertex list must hold x,y pairs"));
    }
    ConvexPolygon::new(flat.chunks(2).map(|c| Point2D::new(c[0], c[1])).collect()).map_err(js_err)
}

/// Corners of a random convex field as a flat `[x0, y0, x1, y1, ...]` list.
#[wasm_bindgen]
pub fn random_field(seed: u64, corners: usize, diameter: f64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let region = random_convex_polygon(&mut rng, corners.clamp(3, 16), diameter);
    region.vertices().iter().flat_map(|v| [v.x, v.y]).collect()
}

/// Centroid of the safe (eroded) region, or of the field when nothing is safe.
#[wasm_bindgen]
pub fn safe_centroid(vertices: &[f64], radius: f64) -> Result<Vec<f64>, JsError> {
    let region = polygon(vertices)?;
    let c = region.erode(radius).map(|e| e.centroid()).unwrap_or_else(|_| region.centroid());
    Ok(vec![c.x, c.y])
}

/// A planned and evaluated path.
#[wasm_bindgen]
pub struct PlanView {
    svg: String,
    path_length: f64,
    line_count: usize,
    line_spacing: f64,
    covered_fraction: f64,
    covered_fraction_safe: f64,
    safety_violations: usize,
    max_incursion: f64,
}

#[wasm_bindgen]
impl PlanView {
    #[wasm_bindgen(getter)]
    pub fn svg(&self) -> String {
        self.svg.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn path_length(&self) -> f64 {
        self.path_length
    }
    #[wasm_bindgen(getter)]
    pub fn line_count(&self) -> usize {
        self.line_count
    }
    #[wasm_bindgen(getter)]
    pub fn line_spacing(&self) -> f64 {
        self.line_spacing
    }
    #[wasm_bindgen(getter)]
    pub fn covered_fraction(&self) -> f64 {
        self.covered_fraction
    }
    #[wasm_bindgen(getter)]
    pub fn covered_fraction_safe(&self) -> f64 {
        self.covered_fraction_safe
    }
    #[wasm_bindgen(getter)]
    pub fn safety_violations(&self) -> usize {
        self.safety_violations
    }
    #[wasm_bindgen(getter)]
    pub fn max_incursion(&self) -> f64 {
        self.max_incursion
    }
}

/// Plans a path over the field (boundary-safe planner, or the baseline when
/// `baseline` is set), then rasterizes its coverage and audits it.
#[wasm_bindgen]
pub fn plan(vertices: &[f64], radius: f64, start: &[f64], end: &[f64], baseline: bool) -> Result<PlanView, JsError> {
    let region = polygon(vertices)?;
    let (&[sx, sy], &[ex, ey]) = (start, end) else {
        return Err(JsError::new("start and end must be x,y pairs"));
    };
    let (s, e) = (Point2D::new(sx, sy), Point2D::new(ex, ey));
    let eroded = region.erode(radius).map_err(js_err)?;
    let (path, style) = if baseline {
        (plan_baseline(&region, 2.0 * radius, s, e).map_err(js_err)?, SvgStyle::baseline())
    } else {
        (plan_coverage(&region, &PlanParams::new(radius, s, e)).map_err(js_err)?, SvgStyle::default())
    };
    // A coarser raster than the command line's keeps the page responsive.
    let cell = 2.0 * default_cell_size(radius);
    let (report, _) = evaluate(&region, &eroded, &path, radius, 2.0, cell).map_err(js_err)?;
    Ok(PlanView {
        svg: render_svg(&region, Some(&eroded), &path, &style),
        path_length: path.total_length,
        line_count: path.line_count,
        line_spacing: path.line_spacing,
        covered_fraction: report.covered_fraction_region,
        covered_fraction_safe: report.covered_fraction_eroded,
        safety_violations: report.safety_violations,
        max_incursion: report.max_incursion,
    })
}

/// Result of fitting the spray model to simulated droplets.
#[wasm_bindgen]
pub struct FitView {
    a: f64,
    b: f64,
    h: f64,
    residual_rms: f64,
    iterations: usize,
    footprint_radius: f64,
}

#[wasm_bindgen]
impl FitView {
    #[wasm_bindgen(getter)]
    pub fn a(&self) -> f64 {
        self.a
    }
    #[wasm_bindgen(getter)]
    pub fn b(&self) -> f64 {
        self.b
    }
    #[wasm_bindgen(getter)]
    pub fn h(&self) -> f64 {
        self.h
    }
    #[wasm_bindgen(getter)]
    pub fn residual_rms(&self) -> f64 {
        self.residual_rms
    }
    #[wasm_bindgen(getter)]
    pub fn iterations(&self) -> usize {
        self.iterations
    }
    #[wasm_bindgen(getter)]
    pub fn footprint_radius(&self) -> f64 {
        self.footprint_radius
    }
}

/// Samples `count` droplets from the model (A, B, h) with Gaussian height
/// noise `sigma`, fits the model back and reports the footprint radius at
/// `altitude`.
#[wasm_bindgen]
pub fn fit_droplets(a: f64, b: f64, h: f64, sigma: f64, count: usize, altitude: f64, seed: u64) -> Result<FitView, JsError> {
    let truth = Paraboloid::new(a, b, h).map_err(js_err)?;
    let noise = NoiseModel::new(sigma).map_err(js_err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (ax, ay) = truth.ground_semi_axes();
    let samples: Vec<DropletSample> = (0..count)
        .map(|_| {
            let x = rng.random_range(-ax..=ax);
            let y = rng.random_range(-ay..=ay);
            DropletSample::new(x, y, truth.sample_noisy(noise, x, y, &mut rng))
        })
        .collect();
    let got = fit(&samples, None, &LmConfig::default()).map_err(js_err)?;
    Ok(FitView {
        a: got.model.a(),
        b: got.model.b(),
        h: got.model.h(),
        residual_rms: got.residual_rms,
        iterations: got.iterations,
        footprint_radius: got.model.footprint_radius_at_altitude(altitude).map_err(js_err)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // JsError only works on wasm targets, so native tests stick to the happy path.
    #[test]
    fn planned_field_is_safe() {
        let field = random_field(3, 7, 40.0);
        let c = safe_centroid(&field, 1.5).unwrap();
        let view = plan(&field, 1.5, &c, &c, false).unwrap();
        assert_eq!(view.safety_violations(), 0);
        assert_eq!(view.line_spacing(), 3.0);
        assert!(view.covered_fraction_safe() > 0.99);
        assert!(view.svg().starts_with("<?xml"));
        let base = plan(&field, 1.5, &c, &c, true).unwrap();
        assert!(base.safety_violations() > 0);
    }

    #[test]
    fn fit_recovers_the_radius() {
        let view = fit_droplets(40.0 / 9.0, 40.0 / 9.0, 10.0, 0.0, 50, 10.0, 1).unwrap();
        assert!((view.footprint_radius() - 1.5).abs() < 1e-6);
    }
}
