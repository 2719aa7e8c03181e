//! WGS-84 geodetic coordinates and a local North-East-Down frame.
//!
//! Conversions go through Earth-centred Earth-fixed (ECEF) coordinates; the
//! inverse uses Zhu's closed-form ECEF→geodetic solution.

use thiserror::Error;

use crate::geometry::Point2D;

/// WGS-84 semi-major axis (m).
pub const WGS84_A: f64 = 6_378_137.0;
/// WGS-84 flattening.
pub const WGS84_F: f64 = 1.0 / 298.257_223_563;

/// Farthest distance from the origin at which the tangent frame is accepted.
pub const MAX_FRAME_RADIUS: f64 = 50_000.0;

fn b() -> f64 {
    WGS84_A * (1.0 - WGS84_F)
}

fn e2() -> f64 {
    WGS84_F * (2.0 - WGS84_F)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeodesyError {
    #[error("latitude {0} outside [-90, 90]")]
    LatitudeOutOfRange(f64),
    #[error("longitude {0} outside [-180, 180]")]
    LongitudeOutOfRange(f64),
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("point is {distance:.1} m from the frame origin (limit {MAX_FRAME_RADIUS} m)")]
    OutOfFrame { distance: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodeticCoord {
    latitude: f64,
    longitude: f64,
    altitude: f64,
}

impl GeodeticCoord {
    /// Degrees, degrees, meters above the ellipsoid.
    pub fn new(latitude: f64, longitude: f64, altitude: f64) -> Result<Self, GeodesyError> {
        if !(latitude.is_finite() && longitude.is_finite() && altitude.is_finite()) {
            return Err(GeodesyError::NonFinite);
        }
        if !(-90.0..=90.0).contains(&latitude) {
            return Err(GeodesyError::LatitudeOutOfRange(latitude));
        }
        if !(-180.0..=180.0).contains(&longitude) {
            return Err(GeodesyError::LongitudeOutOfRange(longitude));
        }
        Ok(Self { latitude, longitude, altitude })
    }

    pub fn latitude(&self) -> f64 {
        self.latitude
    }

    pub fn longitude(&self) -> f64 {
        self.longitude
    }

    pub fn altitude(&self) -> f64 {
        self.altitude
    }

    pub fn to_ecef(&self) -> [f64; 3] {
        let (sin_lat, cos_lat) = self.latitude.to_radians().sin_cos();
        let (sin_lon, cos_lon) = self.longitude.to_radians().sin_cos();
        let n = WGS84_A / (1.0 - e2() * sin_lat * sin_lat).sqrt();
        let h = self.altitude;
        [
            (n + h) * cos_lat * cos_lon,
            (n + h) * cos_lat * sin_lon,
            (n * (1.0 - e2()) + h) * sin_lat,
        ]
    }

    pub fn from_ecef(ecef: [f64; 3]) -> Self {
        let [x, y, z] = ecef;
        let (a, b, e2) = (WGS84_A, b(), e2());
        let p = x.hypot(y);
        let longitude = y.atan2(x).to_degrees();
        if p < 1e-9 {
            let latitude = if z >= 0.0 { 90.0 } else { -90.0 };
            return Self { latitude, longitude: 0.0, altitude: z.abs() - b };
        }
        let ep2 = (a * a - b * b) / (b * b);
        let f = 54.0 * b * b * z * z;
        let g = p * p + (1.0 - e2) * z * z - e2 * (a * a - b * b);
        let c = e2 * e2 * f * p * p / (g * g * g);
        let s = (1.0 + c + (c * c + 2.0 * c).sqrt()).cbrt();
        let k = s + 1.0 + 1.0 / s;
        let pp = f / (3.0 * k * k * g * g);
        let q = (1.0 + 2.0 * e2 * e2 * pp).sqrt();
        let r0 = -(pp * e2 * p) / (1.0 + q)
            + (0.5 * a * a * (1.0 + 1.0 / q) - pp * (1.0 - e2) * z * z / (q * (1.0 + q)) - 0.5 * pp * p * p)
                .sqrt();
        let u = ((p - e2 * r0).powi(2) + z * z).sqrt();
        let v = ((p - e2 * r0).powi(2) + (1.0 - e2) * z * z).sqrt();
        let z0 = b * b * z / (a * v);
        let altitude = u * (1.0 - b * b / (a * v));
        let latitude = ((z + ep2 * z0) / p).atan().to_degrees();
        Self { latitude, longitude, altitude }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct NedCoord {
    pub north: f64,
    pub east: f64,
    pub down: f64,
}

impl NedCoord {
    pub fn new(north: f64, east: f64, down: f64) -> Self {
        Self { north, east, down }
    }

    /// Local planar point `(x = east, y = north)` at height `-down`.
    pub fn from_local(p: Point2D, down: f64) -> Self {
        Self { north: p.y, east: p.x, down }
    }

    pub fn to_local(&self) -> Point2D {
        Point2D::new(self.east, self.north)
    }

    pub fn norm(&self) -> f64 {
        (self.north * self.north + self.east * self.east + self.down * self.down).sqrt()
    }
}

/// Geodetic origin of a local NED frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeoReference {
    pub origin: GeodeticCoord,
}

impl GeoReference {
    pub fn new(origin: GeodeticCoord) -> Self {
        Self { origin }
    }

    /// Rows are the north, east and down unit vectors expressed in ECEF.
    fn rotation(&self) -> [[f64; 3]; 3] {
        let (sl, cl) = self.origin.latitude.to_radians().sin_cos();
        let (so, co) = self.origin.longitude.to_radians().sin_cos();
        [[-sl * co, -sl * so, cl], [-so, co, 0.0], [-cl * co, -cl * so, -sl]]
    }

    pub fn geodetic_to_ned(&self, g: &GeodeticCoord) -> NedCoord {
        let o = self.origin.to_ecef();
        let p = g.to_ecef();
        let d = [p[0] - o[0], p[1] - o[1], p[2] - o[2]];
        let r = self.rotation();
        let row = |i: usize| r[i][0] * d[0] + r[i][1] * d[1] + r[i][2] * d[2];
        NedCoord { north: row(0), east: row(1), down: row(2) }
    }

    pub fn ned_to_geodetic(&self, n: &NedCoord) -> Result<GeodeticCoord, GeodesyError> {
        let dist = n.norm();
        if !dist.is_finite() {
            return Err(GeodesyError::NonFinite);
        }
        if dist > MAX_FRAME_RADIUS {
            return Err(GeodesyError::OutOfFrame { distance: dist });
        }
        let o = self.origin.to_ecef();
        let r = self.rotation();
        let v = [n.north, n.east, n.down];
        let col = |j: usize| r[0][j] * v[0] + r[1][j] * v[1] + r[2][j] * v[2];
        Ok(GeodeticCoord::from_ecef([o[0] + col(0), o[1] + col(1), o[2] + col(2)]))
    }
}
