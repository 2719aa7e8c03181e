//! Deterministic `key=value` reports, one metric per line in a fixed order.

use std::fmt::Write as _;
use std::path::Path;

use super::{write_text, IoError};
use crate::coverage::EvalReport;
use crate::sprinkler::FitResult;

pub fn format_report(r: &EvalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "covered_fraction_M={:.6}", r.covered_fraction_region);
    let _ = writeln!(out, "covered_fraction_Mprime={:.6}", r.covered_fraction_eroded);
    let _ = writeln!(out, "path_length={:.6}", r.path_length);
    let _ = writeln!(out, "est_flight_time={:.6}", r.est_flight_time);
    let _ = writeln!(out, "safety_violations={}", r.safety_violations);
    let _ = writeln!(out, "max_incursion={:.6}", r.max_incursion);
    out
}

pub fn write_report(r: &EvalReport, out: &Path) -> Result<(), IoError> {
    write_text(out, &format_report(r))
}

/// Spray-model fit summary, also the model file read back by planning.
#[derive(Clone, Debug, PartialEq)]
pub struct FitReport {
    pub fit: FitResult,
    pub samples: usize,
    /// Altitude the footprint radius refers to.
    pub altitude: f64,
    pub footprint_radius: f64,
    pub noise_sigma: Option<f64>,
}

pub fn format_fit_report(r: &FitReport) -> String {
    let mut out = String::new();
    let m = &r.fit.model;
    let _ = writeln!(out, "A={:.10}", m.a());
    let _ = writeln!(out, "B={:.10}", m.b());
    let _ = writeln!(out, "h={:.10}", m.h());
    let _ = writeln!(out, "residual_rms={:.10}", r.fit.residual_rms);
    let _ = writeln!(out, "iterations={}", r.fit.iterations);
    let _ = writeln!(out, "converged={}", r.fit.converged);
    let _ = writeln!(out, "samples={}", r.samples);
    if let Some(s) = r.noise_sigma {
        let _ = writeln!(out, "noise_sigma={s:.6}");
    }
    let _ = writeln!(out, "altitude={:.6}", r.altitude);
    let _ = writeln!(out, "footprint_radius={:.10}", r.footprint_radius);
    out
}

/// Parses `key=value` lines; blank lines and `#` comments are skipped.
pub fn parse_key_values(text: &str) -> Result<Vec<(String, String)>, IoError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = super::content(raw);
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| IoError::parse(idx + 1, 1, format!("expected key=value, found `{line}`")))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> EvalReport {
        EvalReport {
            covered_fraction_region: 0.9731,
            covered_fraction_eroded: 1.0,
            path_length: 120.0,
            est_flight_time: 60.0,
            safety_violations: 0,
            max_incursion: 0.0,
        }
    }

    #[test]
    fn fixed_formatting() {
        let text = format_report(&sample());
        assert_eq!(
            text,
            "covered_fraction_M=0.973100\ncovered_fraction_Mprime=1.000000\npath_length=120.000000\n\
             est_flight_time=60.000000\nsafety_violations=0\nmax_incursion=0.000000\n"
        );
        assert_eq!(text, format_report(&sample()));
    }

    #[test]
    fn unwritable_destination() {
        let dir = tempfile::tempdir().unwrap();
        let target = dir.path().join("missing").join("report.txt");
        assert!(matches!(write_report(&sample(), &target), Err(IoError::Write { .. })));
    }

    #[test]
    fn key_values() {
        let kv = parse_key_values("# fit\nA=1.5\n\nB = 2\n").unwrap();
        assert_eq!(kv, vec![("A".into(), "1.5".into()), ("B".into(), "2".into())]);
        assert!(parse_key_values("oops\n").is_err());
    }
}
