//! The `.pts` point-set file format.
//!
//! UTF-8 text. Lines whose first non-blank character is `#` are
//! comments; blank lines are ignored. The first meaningful line is the
//! plane header, exactly `Z2` or `K2`; every following meaningful line
//! is two integers separated by whitespace. Duplicate points collapse
//! on load with a warning.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use digitop::Plane;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PtsError {
    #[error("{path}: missing plane header at line {line}")]
    MissingHeader { path: String, line: usize },
    #[error("{path}: line {line}: expected plane `Z2` or `K2`, found `{found}`")]
    BadHeader {
        path: String,
        line: usize,
        found: String,
    },
    #[error("{path}: line {line}: expected two integers, found `{found}`")]
    BadPoint {
        path: String,
        line: usize,
        found: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug)]
pub struct PointSetFile {
    pub plane: Plane,
    /// Canonically ordered, deduplicated.
    pub points: Vec<(i32, i32)>,
    /// Number of duplicate lines collapsed during load.
    pub duplicates: usize,
}

pub fn load(path: &Path) -> Result<PointSetFile, PtsError> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| PtsError::Io {
        path: display.clone(),
        source,
    })?;
    parse(&display, &text)
}

pub fn parse(name: &str, text: &str) -> Result<PointSetFile, PtsError> {
    let mut plane = None;
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if plane.is_none() {
            plane = Some(match trimmed {
                "Z2" => Plane::Z2,
                "K2" => Plane::K2,
                other if parse_point(other).is_some() => {
                    return Err(PtsError::MissingHeader {
                        path: name.to_string(),
                        line,
                    })
                }
                other => {
                    return Err(PtsError::BadHeader {
                        path: name.to_string(),
                        line,
                        found: other.to_string(),
                    })
                }
            });
            continue;
        }
        match parse_point(trimmed) {
            Some(p) => points.push(p),
            None => {
                return Err(PtsError::BadPoint {
                    path: name.to_string(),
                    line,
                    found: trimmed.to_string(),
                })
            }
        }
    }
    let plane = plane.ok_or_else(|| PtsError::MissingHeader {
        path: name.to_string(),
        line: text.lines().count().max(1),
    })?;
    let before = points.len();
    points.sort_unstable();
    points.dedup();
    Ok(PointSetFile {
        plane,
        duplicates: before - points.len(),
        points,
    })
}

fn parse_point(s: &str) -> Option<(i32, i32)> {
    let mut it = s.split_whitespace();
    let x = it.next()?.parse().ok()?;
    let y = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((x, y))
}

pub fn render(plane: Plane, points: &[(i32, i32)]) -> String {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = String::new();
    let _ = writeln!(out, "{plane}");
    for (x, y) in sorted {
        let _ = writeln!(out, "{x} {y}");
    }
    out
}

pub fn save(path: &Path, plane: Plane, points: &[(i32, i32)]) -> Result<(), PtsError> {
    fs::write(path, render(plane, points)).map_err(|source| PtsError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_plain_file() {
        let f = parse("t", "Z2\n0 0\n1 1\n").unwrap();
        assert_eq!(f.plane, Plane::Z2);
        assert_eq!(f.points, vec![(0, 0), (1, 1)]);
        assert_eq!(f.duplicates, 0);
    }

    #[test]
    fn parses_comments_and_blanks() {
        let f = parse("t", "K2\n# ring\n\n0 0\n").unwrap();
        assert_eq!(f.plane, Plane::K2);
        assert_eq!(f.points, vec![(0, 0)]);
    }

    #[test]
    fn missing_header_is_an_error() {
        let err = parse("t", "0 0\n").unwrap_err();
        assert!(err.to_string().contains("missing plane header at line 1"));
    }

    #[test]
    fn bad_tokens_carry_line_numbers() {
        let err = parse("t", "Z2\n0 0\nx y\n").unwrap_err();
        assert!(err.to_string().contains("line 3"));
        let err = parse("t", "Q9\n").unwrap_err();
        assert!(err.to_string().contains("line 1"));
        let err = parse("t", "Z2\n1 2 3\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn duplicates_collapse_and_count() {
        let f = parse("t", "Z2\n2 2\n2 2\n1 0\n").unwrap();
        assert_eq!(f.points, vec![(1, 0), (2, 2)]);
        assert_eq!(f.duplicates, 1);
    }

    #[test]
    fn empty_point_list_is_fine() {
        let f = parse("t", "# nothing\nK2\n").unwrap();
        assert!(f.points.is_empty());
    }

    proptest! {
        #[test]
        fn round_trip_identity(
            pts in proptest::collection::btree_set((-40i32..40, -40i32..40), 0..60),
            k2 in proptest::bool::ANY,
        ) {
            let plane = if k2 { Plane::K2 } else { Plane::Z2 };
            let pts: Vec<(i32, i32)> = pts.into_iter().collect();
            let text = render(plane, &pts);
            let back = parse("t", &text).unwrap();
            prop_assert_eq!(back.plane, plane);
            prop_assert_eq!(back.points, pts);
        }
    }
}
