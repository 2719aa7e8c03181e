//! Region files.
//!
//! ```text
//! # basketball court
//! frame: geodetic
//! home: 19.467468, -99.193345, 0
//! 19.467500, -99.193400
//! 19.467500, -99.193100
//! 19.467300, -99.193100
//! ```
//!
//! Geodetic points are `lat,lon[,alt]` in degrees and meters. Local files use
//! `frame: local`, `x,y` points in meters east and north of an optional
//! `origin: lat,lon[,alt]`, and an optional local `home: x,y`. Without a
//! `home:` line the first vertex is used and a warning recorded.

use std::path::Path;

use super::{content, fields, parse_finite, read_text, IoError};
use crate::geodesy::{GeoReference, GeodeticCoord, NedCoord};
use crate::geometry::Point2D;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    Geodetic,
    Local,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RegionPoints {
    Geodetic(Vec<GeodeticCoord>),
    Local(Vec<Point2D>),
}

impl RegionPoints {
    pub fn len(&self) -> usize {
        match self {
            RegionPoints::Geodetic(v) => v.len(),
            RegionPoints::Local(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Location {
    Geodetic(GeodeticCoord),
    Local(Point2D),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegionFile {
    pub frame: Frame,
    pub points: RegionPoints,
    pub home: Location,
    /// Geodetic anchor of a local frame.
    pub origin: Option<GeodeticCoord>,
    pub warnings: Vec<String>,
}

/// A region expressed in planar coordinates (x east, y north).
#[derive(Clone, Debug, PartialEq)]
pub struct LocalRegion {
    pub vertices: Vec<Point2D>,
    pub home: Point2D,
    /// Geodetic anchor of the planar frame, when known.
    pub reference: Option<GeoReference>,
    pub frame: Frame,
}

impl LocalRegion {
    /// Converts a geodetic point into this region's planar frame.
    pub fn project(&self, g: &GeodeticCoord) -> Option<Point2D> {
        self.reference.map(|r| r.geodetic_to_ned(g).to_local())
    }
}

impl RegionFile {
    /// Planar form of the region. Geodetic regions are anchored at the home
    /// point; local regions keep their coordinates, anchored at `origin`
    /// (the file's `origin:` unless overridden).
    pub fn to_local(&self, origin_override: Option<GeodeticCoord>) -> Result<LocalRegion, IoError> {
        match (&self.points, self.home) {
            (RegionPoints::Geodetic(points), Location::Geodetic(home)) => {
                let reference = GeoReference::new(home);
                let vertices = points.iter().map(|g| reference.geodetic_to_ned(g).to_local()).collect();
                Ok(LocalRegion {
                    vertices,
                    home: Point2D::new(0.0, 0.0),
                    reference: Some(reference),
                    frame: Frame::Geodetic,
                })
            }
            (RegionPoints::Local(points), Location::Local(home)) => Ok(LocalRegion {
                vertices: points.clone(),
                home,
                reference: origin_override.or(self.origin).map(GeoReference::new),
                frame: Frame::Local,
            }),
            _ => Err(IoError::Invalid("home point frame does not match region frame".into())),
        }
    }
}

pub fn read_region(path: &Path) -> Result<RegionFile, IoError> {
    parse_region(&read_text(path)?).map_err(|e| e.in_file(path))
}

fn parse_geodetic(line_no: usize, f: &[(usize, &str)]) -> Result<GeodeticCoord, IoError> {
    if !(2..=3).contains(&f.len()) {
        return Err(IoError::parse(line_no, 1, format!("expected lat,lon[,alt], found {} fields", f.len())));
    }
    let lat = parse_finite(line_no, f[0].0, f[0].1)?;
    let lon = parse_finite(line_no, f[1].0, f[1].1)?;
    let alt = match f.get(2) {
        Some(&(col, text)) => parse_finite(line_no, col, text)?,
        None => 0.0,
    };
    if !(-90.0..=90.0).contains(&lat) {
        return Err(IoError::parse(line_no, f[0].0, format!("latitude {lat} outside [-90, 90]")));
    }
    if !(-180.0..=180.0).contains(&lon) {
        return Err(IoError::parse(line_no, f[1].0, format!("longitude {lon} outside [-180, 180]")));
    }
    GeodeticCoord::new(lat, lon, alt).map_err(|e| IoError::parse(line_no, 1, e.to_string()))
}

fn parse_local(line_no: usize, f: &[(usize, &str)]) -> Result<Point2D, IoError> {
    if f.len() != 2 {
        return Err(IoError::parse(line_no, 1, format!("expected x,y, found {} fields", f.len())));
    }
    Ok(Point2D::new(parse_finite(line_no, f[0].0, f[0].1)?, parse_finite(line_no, f[1].0, f[1].1)?))
}

pub fn parse_region(text: &str) -> Result<RegionFile, IoError> {
    let mut frame = None;
    let mut home_line: Option<(usize, usize, String)> = None;
    let mut origin = None;
    let mut geo = Vec::new();
    let mut local = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let key = key.trim();
            let offset = raw.find(':').map_or(1, |i| i + 2);
            match key {
                "frame" => {
                    frame = Some(match value.trim() {
                        "geodetic" => Frame::Geodetic,
                        "local" => Frame::Local,
                        other => {
                            return Err(IoError::parse(line_no, offset, format!("unknown frame `{other}`")));
                        }
                    });
                }
                "home" => home_line = Some((line_no, offset, value.to_string())),
                "origin" => {
                    let f: Vec<_> = fields(value).into_iter().map(|(c, t)| (c + offset - 1, t)).collect();
                    origin = Some(parse_geodetic(line_no, &f)?);
                }
                other => return Err(IoError::parse(line_no, 1, format!("unknown key `{other}`"))),
            }
            continue;
        }
        let f = fields(line);
        match frame {
            None => return Err(IoError::FrameMissing),
            Some(Frame::Geodetic) => geo.push(parse_geodetic(line_no, &f)?),
            Some(Frame::Local) => local.push(parse_local(line_no, &f)?),
        }
    }

    let frame = frame.ok_or(IoError::FrameMissing)?;
    let points = match frame {
        Frame::Geodetic => RegionPoints::Geodetic(geo),
        Frame::Local => RegionPoints::Local(local),
    };
    if points.len() < 3 {
        return Err(IoError::TooFewPoints(points.len()));
    }
    if frame == Frame::Geodetic && origin.is_some() {
        return Err(IoError::Invalid("`origin:` only applies to local regions; geodetic regions use `home:`".into()));
    }

    let mut warnings = Vec::new();
    let home = match (&home_line, &points) {
        (Some((line_no, offset, value)), RegionPoints::Geodetic(_)) => {
            let f: Vec<_> = fields(value).into_iter().map(|(c, t)| (c + offset - 1, t)).collect();
            Location::Geodetic(parse_geodetic(*line_no, &f)?)
        }
        (Some((line_no, offset, value)), RegionPoints::Local(_)) => {
            let f: Vec<_> = fields(value).into_iter().map(|(c, t)| (c + offset - 1, t)).collect();
            Location::Local(parse_local(*line_no, &f)?)
        }
        (None, RegionPoints::Geodetic(v)) => {
            warnings.push("no home point given; using the first vertex".to_string());
            Location::Geodetic(v[0])
        }
        (None, RegionPoints::Local(v)) => {
            warnings.push("no home point given; using the first vertex".to_string());
            Location::Local(v[0])
        }
    };
    Ok(RegionFile { frame, points, home, origin, warnings })
}

/// Converts a planar point back to geodetic through the region reference.
pub fn unproject(reference: &GeoReference, p: Point2D) -> Result<GeodeticCoord, IoError> {
    reference.ned_to_geodetic(&NedCoord::from_local(p, 0.0)).map_err(|e| IoError::Invalid(e.to_string()))
}
