//! Text formats: region and droplet input, WPL missions, path files,
//! key-value reports and SVG figures. All are UTF-8 with `\n` line endings.

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

mod droplets;
mod mission;
mod pathfile;
mod region;
mod report;
mod svg;

pub use droplets::{parse_droplets, read_droplets};
pub use mission::{mission_waypoints, write_mission, MissionFile, MissionItem, MAV_CMD_LAND, MAV_CMD_NAV_TAKEOFF, MAV_CMD_NAV_WAYPOINT, MAV_FRAME_GLOBAL, MAV_FRAME_GLOBAL_RELATIVE_ALT, ROUND_TRIP_TOLERANCE};
pub use pathfile::{format_path, parse_path, read_path, write_path};
pub use region::{parse_region, read_region, unproject, Frame, LocalRegion, Location, RegionFile, RegionPoints};
pub use report::{format_fit_report, format_report, parse_key_values, write_report, FitReport};
pub use svg::{render_svg, write_svg, SvgStyle};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{}:{line}:{column}: {message}", file.as_deref().map(|p| p.display().to_string()).unwrap_or_else(|| "<input>".into()))]
    Parse { file: Option<PathBuf>, line: usize, column: usize, message: String },
    #[error("region file has no `frame:` header")]
    FrameMissing,
    #[error("region needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Invalid(String),
}

impl IoError {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        IoError::Parse { file: None, line, column, message: message.into() }
    }

    /// Attaches a file name to parse errors.
    pub(crate) fn in_file(self, path: &Path) -> Self {
        match self {
            IoError::Parse { line, column, message, .. } => {
                IoError::Parse { file: Some(path.to_path_buf()), line, column, message }
            }
            other => other,
        }
    }
}

pub(crate) fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Write { path: path.to_path_buf(), source })
}

/// Splits a data line on commas, returning each trimmed field with its
/// 1-based column.
pub(crate) fn fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for part in line.split(',') {
        let lead = part.len() - part.trim_start().len();
        out.push((start + lead + 1, part.trim()));
        start += part.len() + 1;
    }
    out
}

/// Parses a finite float, reporting the column on failure.
pub(crate) fn parse_finite(line_no: usize, column: usize, text: &str) -> Result<f64, IoError> {
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(IoError::parse(line_no, column, format!("non-finite value `{text}`"))),
        Err(_) => Err(IoError::parse(line_no, column, format!("expected a number, found `{text}`"))),
    }
}

/// Strips `#` comments and surrounding whitespace.
pub(crate) fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_columns() {
        let f = fields("1.0, 2.5 ,x");
        assert_eq!(f, vec![(1, "1.0"), (6, "2.5"), (11, "x")]);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(parse_finite(1, 1, "nan").is_err());
        assert!(parse_finite(1, 1, "inf").is_err());
        assert_eq!(parse_finite(1, 1, "-2.5").unwrap(), -2.5);
    }
}
