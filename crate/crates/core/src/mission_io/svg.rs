//! Standalone SVG figures of a region, its eroded counterpart and a path.

use std::fmt::Write as _;
use std::path::Path;

use super::{write_text, IoError};
use crate::geometry::{ConvexPolygon, Point2D};
use crate::planner::{CoveragePath, WaypointRole};

#[derive(Clone, Debug, PartialEq)]
pub struct SvgStyle {
    pub region: &'static str,
    pub eroded: &'static str,
    pub sweep: &'static str,
    pub connection: &'static str,
    pub corner_tour: &'static str,
    pub transit: &'static str,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self {
            region: "#1f4fd8",
            eroded: "#d81f1f",
            sweep: "#d81f1f",
            connection: "#f28c28",
            corner_tour: "#2a9d3a",
            transit: "#7f7f7f",
        }
    }
}

impl SvgStyle {
    /// Baseline paths drawn in blue.
    pub fn baseline() -> Self {
        Self { sweep: "#1f4fd8", connection: "#5b8def", ..Self::default() }
    }
}

fn points_attr(points: impl IntoIterator<Item = Point2D>) -> String {
    points.into_iter().map(|p| format!("{:.4},{:.4}", p.x, -p.y)).collect::<Vec<_>>().join(" ")
}

/// Renders the figure. North is up; the view box is the bounding box of
/// everything drawn plus a 5% margin.
pub fn render_svg(region: &ConvexPolygon, eroded: Option<&ConvexPolygon>, path: &CoveragePath, style: &SvgStyle) -> String {
    let (mut lo, mut hi) = region.bounds();
    for p in path.positions() {
        lo = Point2D::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2D::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let margin = 0.05 * w.max(h);
    let stroke = 0.004 * w.max(h);
    let (vx, vy, vw, vh) = (lo.x - margin, -hi.y - margin, w + 2.0 * margin, h + 2.0 * margin);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{vx:.4} {vy:.4} {vw:.4} {vh:.4}" width="800" height="{:.0}">"#,
        800.0 * vh / vw
    );
    let _ = writeln!(out, r#"<rect x="{vx:.4}" y="{vy:.4}" width="{vw:.4}" height="{vh:.4}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<polygon id="region" points="{}" fill="none" stroke="{}" stroke-width="{:.4}"/>"#,
        points_attr(region.vertices().iter().copied()),
        style.region,
        2.0 * stroke
    );
    if let Some(e) = eroded {
        let _ = writeln!(
            out,
            r#"<polygon id="eroded" points="{}" fill="none" stroke="{}" stroke-width="{stroke:.4}" stroke-dasharray="{:.4}"/>"#,
            points_attr(e.vertices().iter().copied()),
            style.eroded,
            4.0 * stroke
        );
    }

    // Legs grouped by the role of the waypoint they arrive at.
    let groups = [
        ("transits", style.transit, &[WaypointRole::TakeoffTransit, WaypointRole::LandingTransit][..], true),
        ("sweeps", style.sweep, &[WaypointRole::Sweep][..], false),
        ("connections", style.connection, &[WaypointRole::BoundaryConnection][..], false),
        ("corner-tour", style.corner_tour, &[WaypointRole::CornerTour][..], false),
    ];
    let wps = &path.waypoints;
    for (id, color, roles, dashed) in groups {
        let legs: Vec<(Point2D, Point2D)> = wps
            .windows(2)
            .filter(|pair| roles.contains(&pair[1].role))
            .map(|pair| (pair[0].position, pair[1].position))
            .collect();
        if legs.is_empty() {
            continue;
        }
        let dash = if dashed { format!(r#" stroke-dasharray="{:.4}""#, 3.0 * stroke) } else { String::new() };
        let _ = writeln!(out, r#"<g id="{id}" stroke="{color}" stroke-width="{stroke:.4}" fill="none"{dash}>"#);
        for (a, b) in legs {
            let _ = writeln!(out, r#"<line x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{:.4}"/>"#, a.x, -a.y, b.x, -b.y);
        }
        let _ = writeln!(out, "</g>");
    }

    if let (Some(s), Some(e)) = (wps.first(), wps.last()) {
        let r = 3.0 * stroke;
        let _ = writeln!(
            out,
            r#"<circle id="start" cx="{:.4}" cy="{:.4}" r="{r:.4}" fill="{}"/>"#,
            s.position.x,
            -s.position.y,
            style.corner_tour
        );
        let _ = writeln!(
            out,
            r#"<rect id="end" x="{:.4}" y="{:.4}" width="{:.4}" height="{:.4}" fill="black"/>"#,
            e.position.x - r,
            -e.position.y - r,
            2.0 * r,
            2.0 * r
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn write_svg(
    region: &ConvexPolygon,
    eroded: Option<&ConvexPolygon>,
    path: &CoveragePath,
    style: &SvgStyle,
    out: &Path,
) -> Result<(), IoError> {
    write_text(out, &render_svg(region, eroded, path, style))
}
