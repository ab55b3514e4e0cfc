//! Seed database of polarised K3 graded-ring entries: ingestion with
//! validation, queries by codimension and centre projection type.
//!
//! The file format is one JSON record per line with fields `name`,
//! `weights` (list or null), `codimension`, `basket` (list of `[r, a, b]`
//! triples), `numerator` (list of `[degree, coefficient]` pairs or null),
//! `centres` (list of `{singularity: [r,a,b] | null, types: [..]}`), and
//! `notes` (string or null).

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DbError {
    #[error("line {0}: {1}")]
    Json(usize, serde_json::Error),
    #[error("line {line}: entry {name:?}: {reason}")]
    Invalid {
        line: usize,
        name: String,
        reason: String,
    },
    #[error("line {0}: duplicate entry name {1:?}")]
    Duplicate(usize, String),
}

/// A quotient singularity `1/r (a, b)` of surface type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(u32, u32, u32)", into = "(u32, u32, u32)")]
pub struct BasketEntry {
    pub r: u32,
    pub a: u32,
    pub b: u32,
}

impl From<(u32, u32, u32)> for BasketEntry {
    fn from((r, a, b): (u32, u32, u32)) -> Self {
        BasketEntry { r, a, b }
    }
}

impl From<BasketEntry> for (u32, u32, u32) {
    fn from(e: BasketEntry) -> Self {
        (e.r, e.a, e.b)
    }
}

impl BasketEntry {
    pub fn validate(&self) -> Result<(), String> {
        if self.a == 0 || self.b == 0 || self.a >= self.r || self.b >= self.r {
            return Err(format!("1/{}({},{}) needs 0 < a,b < r", self.r, self.a, self.b));
        }
        if self.a.gcd(&self.r) != 1 {
            return Err(format!("1/{}({},{}) needs gcd(a, r) = 1", self.r, self.a, self.b));
        }
        if (self.a + self.b) % self.r != 0 {
            return Err(format!(
                "1/{}({},{}) needs a + b divisible by r",
                self.r, self.a, self.b
            ));
        }
        Ok(())
    }
}

impl std::fmt::Display for BasketEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "1/{}({},{})", self.r, self.a, self.b)
    }
}

/// A singular point together with the projection types available from it.
/// The singularity is optional: placeholder entries record a projection type
/// without basket data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Centre {
    pub singularity: Option<BasketEntry>,
    pub types: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct K3Entry {
    pub name: String,
    pub weights: Option<Vec<i64>>,
    pub codimension: u32,
    pub basket: Vec<BasketEntry>,
    /// Sparse numerator: (degree, coefficient) pairs.
    pub numerator: Option<Vec<(i64, i64)>>,
    pub centres: Vec<Centre>,
    pub notes: Option<String>,
}

impl K3Entry {
    fn validate(&self) -> Result<(), String> {
        for b in &self.basket {
            b.validate()?;
        }
        if let Some(w) = &self.weights {
            if w.iter().any(|&x| x < 1) {
                return Err("weights must be positive".to_string());
            }
            let expect = w.len() as i64 - 3;
            if i64::from(self.codimension) != expect {
                return Err(format!(
                    "codimension {} does not match {} weights",
                    self.codimension,
                    w.len()
                ));
            }
        }
        for c in &self.centres {
            if c.types.iter().any(|&t| t == 0 || t > 4) {
                return Err("projection types lie in 1..=4".to_string());
            }
            if let Some(s) = &c.singularity {
                s.validate()?;
                if !self.basket.contains(s) {
                    return Err(format!("centre {s} does not appear in the basket"));
                }
            }
        }
        Ok(())
    }

    pub fn numerator_coefficient(&self, degree: i64) -> Option<i64> {
        self.numerator.as_ref().map(|n| {
            n.iter()
                .find(|(d, _)| *d == degree)
                .map(|(_, c)| *c)
                .unwrap_or(0)
        })
    }
}

/// Parse and validate a database (one JSON record per line; `#` comments and
/// blank lines allowed).
pub fn load_db(text: &str) -> Result<Vec<K3Entry>, DbError> {
    let mut out: Vec<K3Entry> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entry: K3Entry = serde_json::from_str(line).map_err(|e| DbError::Json(ln, e))?;
        entry.validate().map_err(|reason| DbError::Invalid {
            line: ln,
            name: entry.name.clone(),
            reason,
        })?;
        if out.iter().any(|e| e.name == entry.name) {
            return Err(DbError::Duplicate(ln, entry.name));
        }
        out.push(entry);
    }
    Ok(out)
}

/// Serialize back to the line format (inverse of `load_db` on valid data).
pub fn save_db(entries: &[K3Entry]) -> String {
    entries
        .iter()
        .map(|e| serde_json::to_string(e).expect("entries serialize"))
        .map(|l| l + "\n")
        .collect()
}

/// Entries matching all provided filters, in database order. A centre-type
/// filter matches entries having at least one centre whose type list
/// contains the value.
pub fn query<'a>(
    db: &'a [K3Entry],
    codimension: Option<u32>,
    centre_type: Option<u8>,
) -> Vec<&'a K3Entry> {
    db.iter()
        .filter(|e| codimension.is_none_or(|c| e.codimension == c))
        .filter(|e| {
            centre_type.is_none_or(|t| {
                e.centres.iter().any(|c| c.types.contains(&t))
            })
        })
        .collect()
}

pub fn find_by_name<'a>(db: &'a [K3Entry], name: &str) -> Option<&'a K3Entry> {
    db.iter().find(|e| e.name == name)
}

/// The shipped seed database.
pub fn seed_db() -> Vec<K3Entry> {
    load_db(crate::fixtures::K3_SEED).expect("embedded seed database is valid")
}

pub fn format_entry(e: &K3Entry) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", e.name);
    match &e.weights {
        Some(w) => {
            let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "weights: ({})", ws.join(","));
        }
        None => {
            let _ = writeln!(out, "weights: unknown");
        }
    }
    let _ = writeln!(out, "codimension: {}", e.codimension);
    let basket: Vec<String> = e.basket.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "basket: [{}]", basket.join(", "));
    match &e.numerator {
        Some(n) => {
            let top = n.iter().map(|(d, _)| *d).max().unwrap_or(0);
            let mut coeffs = vec![0i64; (top + 1) as usize];
            for (d, c) in n {
                coeffs[*d as usize] = *c;
            }
            let _ = writeln!(
                out,
                "numerator: {} + ...",
                crate::hilbert::format_numerator(&coeffs)
            );
        }
        None => {
            let _ = writeln!(out, "numerator: unknown");
        }
    }
    for c in &e.centres {
        let sing = c
            .singularity
            .map(|s| s.to_string())
            .unwrap_or_else(|| "?".to_string());
        let types: Vec<String> = c.types.iter().map(|t| t.to_string()).collect();
        let _ = writeln!(out, "centre: {sing} types [{}]", types.join(","));
    }
    if let Some(nts) = &e.notes {
        let _ = writeln!(out, "notes: {nts}");
    }
    out
}
