//! Line-oriented input files for rings, polynomial lists, matrices and skew
//! matrices.
//!
//! ```text
//! # comment
//! vars: x, y, z, t
//! weights: 4, 5, 6, 9
//! poly: x^3*z + x*y*t - z^3 + t^2
//! rowdegs: 3, 2, 0
//! row: -x, -y, -z, -t, 0, 0
//! skewrow: x, y, z, t
//! ```
//!
//! `vars` and `weights` are required and must come before any polynomial
//! content. Entries on `row`/`skewrow` lines are comma-separated polynomial
//! expressions (the grammar has no commas).

use thiserror::Error;

use crate::parse::{parse_poly, ParseError};
use crate::poly::Poly;
use crate::ring::{GradedRing, RingError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {0}: {1}")]
    Parse(usize, ParseError),
    #[error("line {0}: {1}")]
    Ring(usize, RingError),
    #[error("line {0}: expected `key: value`")]
    Format(usize),
    #[error("line {0}: unknown key `{1}`")]
    UnknownKey(usize, String),
    #[error("line {0}: `{1}` appears before vars/weights are set")]
    NoRing(usize, String),
    #[error("line {0}: {1} must be set exactly once")]
    Duplicate(usize, String),
    #[error("line {0}: bad integer list")]
    BadIntegers(usize),
    #[error("missing vars/weights header")]
    MissingRing,
}

#[derive(Debug, Default)]
pub struct InputFile {
    pub ring: Option<GradedRing>,
    pub polys: Vec<Poly>,
    pub rows: Vec<Vec<Poly>>,
    pub skew_rows: Vec<Vec<Poly>>,
    pub row_degrees: Option<Vec<i64>>,
    pub col_degrees: Option<Vec<i64>>,
}

impl InputFile {
    pub fn ring(&self) -> Result<&GradedRing, FileError> {
        self.ring.as_ref().ok_or(FileError::MissingRing)
    }
}

fn parse_int_list(s: &str, ln: usize) -> Result<Vec<i64>, FileError> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| FileError::BadIntegers(ln)))
        .collect()
}

pub fn parse_input(text: &str) -> Result<InputFile, FileError> {
    let mut out = InputFile::default();
    let mut vars: Option<(usize, Vec<String>)> = None;
    let mut weights: Option<(usize, Vec<i64>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(FileError::Format(ln));
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "vars" => {
                if vars.is_some() {
                    return Err(FileError::Duplicate(ln, "vars".into()));
                }
                vars = Some((ln, value.split(',').map(|v| v.trim().to_string()).collect()));
            }
            "weights" => {
                if weights.is_some() {
                    return Err(FileError::Duplicate(ln, "weights".into()));
                }
                weights = Some((ln, parse_int_list(value, ln)?));
            }
            "rowdegs" => {
                out.row_degrees = Some(parse_int_list(value, ln)?);
            }
            "coldegs" => {
                out.col_degrees = Some(parse_int_list(value, ln)?);
            }
            "poly" | "row" | "skewrow" => {
                if out.ring.is_none() {
                    match (&vars, &weights) {
                        (Some((_, v)), Some((wl, w))) => {
                            let ring = GradedRing::new(v.clone(), w.clone())
                                .map_err(|e| FileError::Ring(*wl, e))?;
                            out.ring = Some(ring);
                        }
                        _ => return Err(FileError::NoRing(ln, key.to_string())),
                    }
                }
                let ring = out.ring.as_ref().unwrap();
                match key {
                    "poly" => {
                        out.polys
                            .push(parse_poly(value, ring).map_err(|e| FileError::Parse(ln, e))?);
                    }
                    "row" | "skewrow" => {
                        let entries: Result<Vec<Poly>, FileError> = value
                            .split(',')
                            .map(|t| parse_poly(t.trim(), ring).map_err(|e| FileError::Parse(ln, e)))
                            .collect();
                        if key == "row" {
                            out.rows.push(entries?);
                        } else {
                            out.skew_rows.push(entries?);
                        }
                    }
                    _ => unreachable!(),
                }
            }
            other => return Err(FileError::UnknownKey(ln, other.to_string())),
        }
    }
    if out.ring.is_none() {
        match (vars, weights) {
            (Some((_, v)), Some((wl, w))) => {
                out.ring =
                    Some(GradedRing::new(v, w).map_err(|e| FileError::Ring(wl, e))?);
            }
            _ => return Err(FileError::MissingRing),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ideal_file() {
        let text = "\
# the embedding graph
vars: u, v, x, y, z, t
weights: 2, 3, 4, 5, 6, 9
poly: -x + u^2
poly: -y + u*v
";
        let f = parse_input(text).unwrap();
        assert_eq!(f.ring().unwrap().arity(), 6);
        assert_eq!(f.polys.len(), 2);
    }

    #[test]
    fn parses_matrix_rows() {
        let text = "\
vars: x, y
weights: 1, 1
rowdegs: 0, 1
row: x, y
row: 1, 0
";
        let f = parse_input(text).unwrap();
        assert_eq!(f.rows.len(), 2);
        assert_eq!(f.row_degrees, Some(vec![0, 1]));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "vars: x\nweights: 1\npoly: x + w\n";
        match parse_input(text) {
            Err(FileError::Parse(3, ParseError::UnknownVariable { name, .. })) => {
                assert_eq!(name, "w");
            }
            other => panic!("unexpected result: {other:?}"),
        }
        assert!(matches!(
            parse_input("poly: x\n"),
            Err(FileError::NoRing(1, _))
        ));
        assert!(matches!(
            parse_input("vars: x\nnonsense: 3\n"),
            Err(FileError::UnknownKey(2, _))
        ));
    }
}
