//! QGroundControl `QGC WPL 110` waypoint files.
//!
//! Layout written here: item 0 is home (current = 1, absolute frame), item 1
//! a takeoff to the flight altitude, then one waypoint per path point at the
//! same relative altitude, the last of which is a land command.

use std::fmt::Write as _;
use std::path::Path;

use super::region::unproject;
use super::{read_text, write_text, IoError};
use crate::geodesy::GeoReference;
use crate::geometry::Point2D;
use crate::planner::CoveragePath;

pub const MAV_FRAME_GLOBAL: u8 = 0;
pub const MAV_FRAME_GLOBAL_RELATIVE_ALT: u8 = 3;
pub const MAV_CMD_NAV_WAYPOINT: u16 = 16;
pub const MAV_CMD_LAND: u16 = 21;
pub const MAV_CMD_NAV_TAKEOFF: u16 = 22;

const HEADER: &str = "QGC WPL 110";

/// Bound on how far a waypoint moves through a write/read cycle: eight
/// decimals of a degree are about 1.1 mm.
pub const ROUND_TRIP_TOLERANCE: f64 = 2e-3;

#[derive(Clone, Debug, PartialEq)]
pub struct MissionItem {
    pub seq: usize,
    pub current: bool,
    pub frame: u8,
    pub command: u16,
    pub params: [f64; 4],
    pub latitude: f64,
    pub longitude: f64,
    pub altitude: f64,
    pub autocontinue: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MissionFile {
    pub items: Vec<MissionItem>,
}

impl MissionFile {
    /// Builds the mission for `path`, whose planar frame is anchored at
    /// `reference`; `home` is the takeoff location in that frame.
    pub fn from_path(
        path: &CoveragePath,
        reference: &GeoReference,
        home: Point2D,
        altitude: f64,
    ) -> Result<Self, IoError> {
        if path.waypoints.is_empty() {
            return Err(IoError::Invalid("cannot export an empty path".into()));
        }
        if !(altitude.is_finite() && altitude > 0.0) {
            return Err(IoError::Invalid(format!("flight altitude must be positive, got {altitude}")));
        }
        let item = |seq, frame, command, lat, lon, alt| MissionItem {
            seq,
            current: seq == 0,
            frame,
            command,
            params: [0.0; 4],
            latitude: lat,
            longitude: lon,
            altitude: alt,
            autocontinue: true,
        };
        let home_geo = unproject(reference, home)?;
        let first = unproject(reference, path.waypoints[0].position)?;
        let mut items = vec![
            item(0, MAV_FRAME_GLOBAL, MAV_CMD_NAV_WAYPOINT, home_geo.latitude(), home_geo.longitude(), home_geo.altitude()),
            item(1, MAV_FRAME_GLOBAL_RELATIVE_ALT, MAV_CMD_NAV_TAKEOFF, first.latitude(), first.longitude(), altitude),
        ];
        let last = path.waypoints.len() - 1;
        for (k, w) in path.waypoints.iter().enumerate() {
            let g = unproject(reference, w.position)?;
            let (command, alt) = if k == last { (MAV_CMD_LAND, 0.0) } else { (MAV_CMD_NAV_WAYPOINT, altitude) };
            items.push(item(k + 2, MAV_FRAME_GLOBAL_RELATIVE_ALT, command, g.latitude(), g.longitude(), alt));
        }
        Ok(Self { items })
    }

    pub fn to_wpl(&self) -> String {
        let mut out = String::with_capacity(64 * (self.items.len() + 1));
        out.push_str(HEADER);
        out.push('\n');
        for it in &self.items {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{:.8}\t{:.8}\t{:.6}\t{}",
                it.seq,
                u8::from(it.current),
                it.frame,
                it.command,
                it.params[0],
                it.params[1],
                it.params[2],
                it.params[3],
                it.latitude,
                it.longitude,
                it.altitude,
                u8::from(it.autocontinue),
            );
        }
        out
    }

    pub fn parse_wpl(text: &str) -> Result<Self, IoError> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, first)) if first.trim_end() == HEADER => {}
            _ => return Err(IoError::parse(1, 1, format!("expected `{HEADER}` header"))),
        }
        let mut items = Vec::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 12 {
                return Err(IoError::parse(line_no, 1, format!("expected 12 tab-separated fields, found {}", cols.len())));
            }
            let column_of = |i: usize| cols[..i].iter().map(|c| c.len() + 1).sum::<usize>() + 1;
            let int = |i: usize| -> Result<u64, IoError> {
                cols[i].trim().parse().map_err(|_| IoError::parse(line_no, column_of(i), format!("expected an integer, found `{}`", cols[i])))
            };
            let num = |i: usize| -> Result<f64, IoError> { super::parse_finite(line_no, column_of(i), cols[i].trim()) };
            let flag = |i: usize| -> Result<bool, IoError> {
                match int(i)? {
                    0 => Ok(false),
                    1 => Ok(true),
                    _ => Err(IoError::parse(line_no, column_of(i), "expected 0 or 1")),
                }
            };
            let seq = int(0)? as usize;
            if seq != items.len() {
                return Err(IoError::parse(line_no, 1, format!("sequence index {seq}, expected {}", items.len())));
            }
            items.push(MissionItem {
                seq,
                current: flag(1)?,
                frame: u8::try_from(int(2)?).map_err(|_| IoError::parse(line_no, column_of(2), "frame out of range"))?,
                command: u16::try_from(int(3)?).map_err(|_| IoError::parse(line_no, column_of(3), "command out of range"))?,
                params: [num(4)?, num(5)?, num(6)?, num(7)?],
                latitude: num(8)?,
                longitude: num(9)?,
                altitude: num(10)?,
                autocontinue: flag(11)?,
            });
        }
        if items.is_empty() {
            return Err(IoError::parse(1, 1, "mission has no items"));
        }
        Ok(Self { items })
    }

    pub fn read(path: &Path) -> Result<Self, IoError> {
        Self::parse_wpl(&read_text(path)?).map_err(|e| e.in_file(path))
    }
}

/// Writes the mission for `path` with home at the reference origin.
pub fn write_mission(
    path: &CoveragePath,
    reference: &GeoReference,
    altitude: f64,
    out: &Path,
) -> Result<MissionFile, IoError> {
    let mission = MissionFile::from_path(path, reference, Point2D::new(0.0, 0.0), altitude)?;
    write_text(out, &mission.to_wpl())?;
    Ok(mission)
}

/// Planar positions of the flown items (everything after home and takeoff).
pub fn mission_waypoints(mission: &MissionFile, reference: &GeoReference) -> Result<Vec<Point2D>, IoError> {
    mission
        .items
        .iter()
        .skip(2)
        .map(|it| {
            crate::geodesy::GeodeticCoord::new(it.latitude, it.longitude, 0.0)
                .map(|g| reference.geodetic_to_ned(&g).to_local())
                .map_err(|e| IoError::Invalid(format!("mission item {}: {e}", it.seq)))
        })
        .collect()
}
