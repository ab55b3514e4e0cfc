//! Weighted polynomial rings and exponent vectors.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Maximum ring arity. Exponent vectors are fixed-size arrays so monomials
/// stay `Copy`; every ring in scope has at most 9 variables (8 plus one
/// auxiliary for radical membership).
pub const MAX_VARS: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("ring needs at least one variable")]
    Empty,
    #[error("ring supports at most {MAX_VARS} variables, got {0}")]
    TooManyVariables(usize),
    #[error("variable names and weights must have equal length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("variable name {0:?} is empty or repeated")]
    BadVariable(String),
    #[error("weight of {0:?} must be >= 1, got {1}")]
    BadWeight(String, i64),
}

/// Exponent vector of a monomial. Entries beyond the ring arity are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents(pub [u16; MAX_VARS]);

impl Exponents {
    pub const fn one() -> Self {
        Exponents([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u16; MAX_VARS];
        e[i] = 1;
        Exponents(e)
    }

    pub fn from_slice(exps: &[u16]) -> Self {
        let mut e = [0u16; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Exponents(e)
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials. Exponent overflow is a hard error by design;
    /// degrees in scope stay far below u16::MAX.
    pub fn mul(&self, other: &Self) -> Self {
        let mut e = [0u16; MAX_VARS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.0[k]
                .checked_add(other.0[k])
                .expect("monomial exponent overflow");
        }
        Exponents(e)
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut e = [0u16; MAX_VARS];
        for k in 0..MAX_VARS {
            e[k] = self.0[k].checked_sub(other.0[k])?;
        }
        Some(Exponents(e))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut e = [0u16; MAX_VARS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.0[k].max(other.0[k]);
        }
        Exponents(e)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut e = [0u16; MAX_VARS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.0[k].min(other.0[k]);
        }
        Exponents(e)
    }

    pub fn is_coprime_to(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when every variable in `block` has exponent zero.
    pub fn free_of(&self, block: &[usize]) -> bool {
        block.iter().all(|&i| self.0[i] == 0)
    }
}

impl fmt::Debug for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Exponents({:?})", &self.0)
    }
}

#[derive(Debug, PartialEq, Eq)]
struct RingRepr {
    vars: Vec<String>,
    weights: Vec<i64>,
}

/// A polynomial ring over Q whose variables carry positive integer weights.
/// Cheap to clone; two rings compare equal iff their variable names and
/// weights agree.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedRing(Arc<RingRepr>);

impl GradedRing {
    pub fn new<S: Into<String>>(vars: Vec<S>, weights: Vec<i64>) -> Result<Self, RingError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(RingError::Empty);
        }
        if vars.len() > MAX_VARS {
            return Err(RingError::TooManyVariables(vars.len()));
        }
        if vars.len() != weights.len() {
            return Err(RingError::LengthMismatch(vars.len(), weights.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || vars[..i].contains(v) {
                return Err(RingError::BadVariable(v.clone()));
            }
        }
        for (v, &w) in vars.iter().zip(weights.iter()) {
            if w < 1 {
                return Err(RingError::BadWeight(v.clone(), w));
            }
        }
        Ok(GradedRing(Arc::new(RingRepr { vars, weights })))
    }

    pub fn arity(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn weights(&self) -> &[i64] {
        &self.0.weights
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.0.weights[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn monomial_degree(&self, e: &Exponents) -> i64 {
        self.0
            .weights
            .iter()
            .enumerate()
            .map(|(i, &w)| w * i64::from(e.0[i]))
            .sum()
    }

    /// Ring with one extra variable appended (used by radical membership).
    /// The fresh name is derived from `hint` and made collision-free.
    pub fn extended(&self, hint: &str, weight: i64) -> GradedRing {
        let mut name = hint.to_string();
        let mut k = 0usize;
        while self.var_index(&name).is_some() {
            name = format!("{hint}{k}");
            k += 1;
        }
        let mut vars = self.0.vars.clone();
        let mut weights = self.0.weights.clone();
        vars.push(name);
        weights.push(weight);
        GradedRing::new(vars, weights).expect("extended ring is valid")
    }

    /// Subring on the variables at `keep` (indices into this ring, in the
    /// given order).
    pub fn subring(&self, keep: &[usize]) -> GradedRing {
        let vars: Vec<String> = keep.iter().map(|&i| self.0.vars[i].clone()).collect();
        let weights: Vec<i64> = keep.iter().map(|&i| self.0.weights[i]).collect();
        GradedRing::new(vars, weights).expect("subring of a valid ring is valid")
    }

    pub fn format_monomial(&self, e: &Exponents) -> String {
        if e.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in 0..self.arity() {
            match e.0[i] {
                0 => {}
                1 => parts.push(self.0.vars[i].clone()),
                k => parts.push(format!("{}^{}", self.0.vars[i], k)),
            }
        }
        parts.join("*")
    }

    /// All monomials of exact weighted degree `d`, in descending order of the
    /// exponent vector (deterministic; independent of monomial orders).
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Exponents> {
        let mut out = Vec::new();
        let mut cur = [0u16; MAX_VARS];
        self.enumerate_rec(0, d, &mut cur, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn enumerate_rec(&self, i: usize, rem: i64, cur: &mut [u16; MAX_VARS], out: &mut Vec<Exponents>) {
        if i == self.arity() {
            if rem == 0 {
                out.push(Exponents(*cur));
            }
            return;
        }
        let w = self.0.weights[i];
        let max = rem / w;
        for k in 0..=max {
            cur[i] = k as u16;
            self.enumerate_rec(i + 1, rem - k * w, cur, out);
        }
        cur[i] = 0;
    }
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .0
            .vars
            .iter()
            .zip(self.0.weights.iter())
            .map(|(v, w)| format!("{v}:{w}"))
            .collect();
        write!(f, "GradedRing[{}]", pairs.join(", "))
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q[{}] weights ({})",
            self.0.vars.join(", "),
            self.0
                .weights
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_validation() {
        assert!(GradedRing::new(vec!["x", "y"], vec![2, 3]).is_ok());
        assert_eq!(
            GradedRing::new(Vec::<&str>::new(), vec![]),
            Err(RingError::Empty)
        );
        assert!(matches!(
            GradedRing::new(vec!["x", "x"], vec![1, 1]),
            Err(RingError::BadVariable(_))
        ));
        assert!(matches!(
            GradedRing::new(vec!["x", "y"], vec![1, 0]),
            Err(RingError::BadWeight(_, 0))
        ));
        assert!(matches!(
            GradedRing::new(vec!["x"], vec![1, 2]),
            Err(RingError::LengthMismatch(1, 2))
        ));
    }

    #[test]
    fn monomial_arithmetic() {
        let a = Exponents::from_slice(&[2, 1]);
        let b = Exponents::from_slice(&[1, 3]);
        assert_eq!(a.mul(&b), Exponents::from_slice(&[3, 4]));
        assert_eq!(a.lcm(&b), Exponents::from_slice(&[2, 3]));
        assert_eq!(a.gcd(&b), Exponents::from_slice(&[1, 1]));
        assert_eq!(a.div(&b), None);
        assert_eq!(
            Exponents::from_slice(&[3, 4]).div(&b),
            Some(Exponents::from_slice(&[2, 1]))
        );
        assert!(Exponents::from_slice(&[1, 0]).is_coprime_to(&Exponents::from_slice(&[0, 5])));
    }

    #[test]
    fn weighted_degrees() {
        let r = GradedRing::new(vec!["u", "v"], vec![2, 3]).unwrap();
        // u^3 v has degree 3*2 + 3 = 9
        assert_eq!(r.monomial_degree(&Exponents::from_slice(&[3, 1])), 9);
        assert_eq!(r.monomial_degree(&Exponents::one()), 0);
    }

    #[test]
    fn degree_enumeration() {
        let r = GradedRing::new(vec!["u", "v"], vec![2, 3]).unwrap();
        // degree 12: u^6, u^3 v^2, v^4
        let ms = r.monomials_of_degree(12);
        assert_eq!(ms.len(), 3);
        assert_eq!(ms[0], Exponents::from_slice(&[6, 0]));
        assert_eq!(ms[2], Exponents::from_slice(&[0, 4]));
    }

    #[test]
    fn extension_avoids_collisions() {
        let r = GradedRing::new(vec!["aux", "x"], vec![1, 1]).unwrap();
        let e = r.extended("aux", 1);
        assert_eq!(e.arity(), 3);
        assert_eq!(e.var_name(2), "aux0");
    }
}
