use std::path::Path;

use super::{content, fields, parse_finite, read_text, IoError};
use crate::sprinkler::DropletSample;

/// Reads `x,y,z` droplet observations, one per line.
pub fn read_droplets(path: &Path) -> Result<Vec<DropletSample>, IoError> {
    parse_droplets(&read_text(path)?).map_err(|e| e.in_file(path))
}

pub fn parse_droplets(text: &str) -> Result<Vec<DropletSample>, IoError> {
    let mut out = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let f = fields(line);
        if f.len() != 3 {
            return Err(IoError::parse(line_no, 1, format!("expected x,y,z, found {} fields", f.len())));
        }
        let x = parse_finite(line_no, f[0].0, f[0].1)?;
        let y = parse_finite(line_no, f[1].0, f[1].1)?;
        let z = parse_finite(line_no, f[2].0, f[2].1)?;
        out.push(DropletSample::new(x, y, z));
    }
    if out.is_empty() {
        return Err(IoError::parse(last_line.max(1), 1, "no droplet samples"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_grid_rows() {
        let mut text = String::from("# x,y,z\n");
        for i in 0..5 {
            for j in 0..5 {
                text.push_str(&format!("{i},{j},{}\n", 3.0 - 0.1 * (i * i + j * j) as f64));
            }
        }
        assert_eq!(parse_droplets(&text).unwrap().len(), 25);
    }

    #[test]
    fn rejects_nan() {
        match parse_droplets("0,0,1\n1.0, 2.0, nan\n") {
            Err(IoError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 11)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_empty() {
        assert!(matches!(parse_droplets(""), Err(IoError::Parse { .. })));
        assert!(matches!(parse_droplets("# only a comment\n"), Err(IoError::Parse { .. })));
    }
}
