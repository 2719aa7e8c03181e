//! Planar path files: a few `key: value` headers followed by `x,y,role`
//! rows in meters.

use std::fmt::Write as _;
use std::path::Path;

use super::{content, fields, parse_finite, read_text, write_text, IoError};
use crate::geometry::Point2D;
use crate::planner::{CoveragePath, Waypoint, WaypointRole};

pub fn format_path(path: &CoveragePath) -> String {
    let mut out = String::new();
    let d = path.sweep_direction;
    let _ = writeln!(out, "sweep_direction: {:.9},{:.9}", d.x, d.y);
    let _ = writeln!(out, "line_count: {}", path.line_count);
    let _ = writeln!(out, "line_spacing: {:.6}", path.line_spacing);
    for w in &path.waypoints {
        let _ = writeln!(out, "{:.9},{:.9},{}", w.position.x, w.position.y, w.role.as_str());
    }
    out
}

pub fn write_path(path: &CoveragePath, out: &Path) -> Result<(), IoError> {
    write_text(out, &format_path(path))
}

pub fn read_path(file: &Path) -> Result<CoveragePath, IoError> {
    parse_path(&read_text(file)?).map_err(|e| e.in_file(file))
}

pub fn parse_path(text: &str) -> Result<CoveragePath, IoError> {
    let mut direction = Point2D::new(1.0, 0.0);
    let mut line_count = 0;
    let mut spacing = 0.0;
    let mut waypoints = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let f = fields(value);
            match key.trim() {
                "sweep_direction" if f.len() == 2 => {
                    direction = Point2D::new(parse_finite(line_no, f[0].0, f[0].1)?, parse_finite(line_no, f[1].0, f[1].1)?);
                }
                "line_count" => {
                    line_count = value
                        .trim()
                        .parse()
                        .map_err(|_| IoError::parse(line_no, 1, format!("bad line count `{}`", value.trim())))?;
                }
                "line_spacing" => spacing = parse_finite(line_no, 1, value.trim())?,
                other => return Err(IoError::parse(line_no, 1, format!("unknown header `{other}`"))),
            }
            continue;
        }
        let f = fields(line);
        if f.len() != 3 {
            return Err(IoError::parse(line_no, 1, format!("expected x,y,role, found {} fields", f.len())));
        }
        let x = parse_finite(line_no, f[0].0, f[0].1)?;
        let y = parse_finite(line_no, f[1].0, f[1].1)?;
        let role = WaypointRole::parse(f[2].1)
            .ok_or_else(|| IoError::parse(line_no, f[2].0, format!("unknown role `{}`", f[2].1)))?;
        waypoints.push(Waypoint::new(Point2D::new(x, y), role));
    }
    if waypoints.is_empty() {
        return Err(IoError::parse(1, 1, "path has no waypoints"));
    }
    Ok(CoveragePath::new(waypoints, direction, line_count, spacing))
}
