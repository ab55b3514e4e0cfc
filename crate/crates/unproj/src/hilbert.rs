//! Hilbert series of graded quotients and their numerators over the
//! weighted denominator `prod (1 - t^w_i)`.
//!
//! The series is computed from the leading-term monomial ideal of a Gröbner
//! basis: dimensions count standard monomials, by the colon-ideal recursion
//! `count(J + (g)) = count(J) - t^{deg g} * count(J : g)` with memoization,
//! never by enumerating monomials.

use std::collections::HashMap;

use thiserror::Error;

use crate::ideal::{AlgebraError, Ideal};
use crate::order::MonomialOrder;
use crate::ring::{Exponents, GradedRing};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HilbertError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("series bound {bound} is too small to determine the numerator to degree {wanted}")]
    BoundTooSmall { bound: i64, wanted: i64 },
}

/// Truncated Hilbert series of a graded quotient, with its denominator
/// weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    weights: Vec<i64>,
    series: Vec<i64>,
}

impl HilbertData {
    pub fn bound(&self) -> i64 {
        self.series.len() as i64 - 1
    }

    /// `c_d` for `d <= bound`.
    pub fn series(&self) -> &[i64] {
        &self.series
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn coefficient(&self, d: i64) -> i64 {
        if d < 0 || d > self.bound() {
            0
        } else {
            self.series[d as usize]
        }
    }

    /// Coefficients of `series * prod_i (1 - t^{w_i})`, exact up to the
    /// series bound.
    pub fn numerator(&self) -> Vec<i64> {
        let bound = self.series.len();
        let mut den = vec![0i64; bound];
        den[0] = 1;
        for &w in &self.weights {
            let w = w as usize;
            // multiply by (1 - t^w)
            for d in (0..bound).rev() {
                if d >= w {
                    den[d] -= den[d - w];
                }
            }
        }
        let mut num = vec![0i64; bound];
        for d in 0..bound {
            if self.series[d] == 0 {
                continue;
            }
            for k in d..bound {
                num[k] += self.series[d] * den[k - d];
            }
        }
        num
    }

    /// Numerator coefficients `0..=wanted`; errors when the truncation bound
    /// cannot determine them.
    pub fn numerator_up_to(&self, wanted: i64) -> Result<Vec<i64>, HilbertError> {
        if wanted > self.bound() {
            return Err(HilbertError::BoundTooSmall {
                bound: self.bound(),
                wanted,
            });
        }
        Ok(self.numerator()[..=(wanted as usize)].to_vec())
    }
}

/// Dimension count of the free weighted ring, degrees `0..=bound`.
pub fn free_series(ring: &GradedRing, bound: i64) -> Vec<i64> {
    let b = bound.max(0) as usize;
    let mut dp = vec![0i64; b + 1];
    dp[0] = 1;
    for &w in ring.weights() {
        let w = w as usize;
        for d in w..=b {
            dp[d] += dp[d - w];
        }
    }
    dp
}

fn minimalize_monomials(mut gens: Vec<Exponents>) -> Vec<Exponents> {
    // componentwise divisibility implies lex order, so divisors come first
    gens.sort_unstable();
    gens.dedup();
    let mut out: Vec<Exponents> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

struct SeriesMemo<'a> {
    ring: &'a GradedRing,
    bound: usize,
    memo: HashMap<Vec<Exponents>, Vec<i64>>,
}

impl<'a> SeriesMemo<'a> {
    fn quotient_series(&mut self, gens: Vec<Exponents>) -> Vec<i64> {
        let gens = minimalize_monomials(gens);
        if gens.is_empty() {
            return free_series(self.ring, self.bound as i64);
        }
        if gens.iter().any(Exponents::is_one) {
            return vec![0; self.bound + 1];
        }
        if let Some(s) = self.memo.get(&gens) {
            return s.clone();
        }
        let g = gens[0];
        let rest: Vec<Exponents> = gens[1..].to_vec();
        let without = self.quotient_series(rest.clone());
        let colon: Vec<Exponents> = rest
            .iter()
            .map(|h| h.div(&h.gcd(&g)).expect("gcd divides"))
            .collect();
        let colon_series = self.quotient_series(colon);
        let dg = self.ring.monomial_degree(&g);
        let mut series = without;
        for d in 0..=self.bound {
            let shifted = d as i64 - dg;
            if shifted >= 0 {
                series[d] -= colon_series[shifted as usize];
            }
            debug_assert!(series[d] >= 0, "standard monomial count went negative");
        }
        self.memo.insert(gens, series.clone());
        series
    }
}

/// Standard-monomial counts of `ring/⟨gens⟩` for a monomial ideal, degrees
/// `0..=bound`.
pub fn monomial_quotient_series(ring: &GradedRing, gens: &[Exponents], bound: i64) -> Vec<i64> {
    let mut m = SeriesMemo {
        ring,
        bound: bound.max(0) as usize,
        memo: HashMap::new(),
    };
    m.quotient_series(gens.to_vec())
}

/// Hilbert series of `ring/I` for a homogeneous ideal, to the given bound.
pub fn hilbert_series(ideal: &Ideal, bound: i64) -> Result<HilbertData, HilbertError> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous.into());
    }
    let ring = ideal.ring();
    let order = MonomialOrder::grevlex(ring);
    let basis = ideal.groebner_basis(&order);
    let lead: Vec<Exponents> = basis
        .iter()
        .map(|g| g.leading_term(&order).expect("nonzero").0)
        .collect();
    Ok(HilbertData {
        weights: ring.weights().to_vec(),
        series: monomial_quotient_series(ring, &lead, bound),
    })
}

/// Default truncation bound: sum of the weights plus a margin of 5.
pub fn default_bound(ring: &GradedRing) -> i64 {
    ring.weights().iter().sum::<i64>() + 5
}

/// Print a numerator the way series tables do: `1 - t^12 - 2t^14 + ...`.
pub fn format_numerator(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (d, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let power = match d {
            0 => String::from("1"),
            1 => String::from("t"),
            _ => format!("t^{d}"),
        };
        if d == 0 {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{mag}{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn monogenic_quotient() {
        // k[x]/(x^2) with weight(x) = 4: dimensions 1 at degrees 0 and 4
        let r = GradedRing::new(vec!["x"], vec![4]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly("x^2", &r).unwrap()]);
        let h = hilbert_series(&i, 10).unwrap();
        let expect = [1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0];
        assert_eq!(h.series(), &expect);
    }

    #[test]
    fn free_ring_counts() {
        let r = GradedRing::new(vec!["u", "v"], vec![2, 3]).unwrap();
        let i = Ideal::new(&r, vec![]);
        let h = hilbert_series(&i, 12).unwrap();
        assert_eq!(h.series(), &[1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3]);
        assert_eq!(h.numerator()[0], 1);
        assert!(h.numerator()[1..].iter().all(|&c| c == 0));
    }

    #[test]
    fn hypersurface_numerator() {
        // one degree-24 equation in weights (4,5,6,9): numerator 1 - t^24
        let r = GradedRing::new(vec!["x", "y", "z", "t"], vec![4, 5, 6, 9]).unwrap();
        let f = parse_poly(
            "x^6 + 3*x^2*y^2*z - x*y^4 + y^3*t - z^4 + z*t^2",
            &r,
        )
        .unwrap();
        let i = Ideal::new(&r, vec![f]);
        let h = hilbert_series(&i, default_bound(&r)).unwrap();
        let num = h.numerator_up_to(24).unwrap();
        let mut expect = vec![0i64; 25];
        expect[0] = 1;
        expect[24] = -1;
        assert_eq!(num, expect);
    }

    #[test]
    fn bound_guard() {
        let r = GradedRing::new(vec!["x"], vec![1]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly("x^3", &r).unwrap()]);
        let h = hilbert_series(&i, 4).unwrap();
        assert!(matches!(
            h.numerator_up_to(9),
            Err(HilbertError::BoundTooSmall { bound: 4, wanted: 9 })
        ));
        assert_eq!(h.numerator_up_to(3).unwrap(), vec![1, 0, 0, -1]);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let r = GradedRing::new(vec!["x", "y"], vec![1, 2]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly("x + y", &r).unwrap()]);
        assert!(matches!(
            hilbert_series(&i, 5),
            Err(HilbertError::Algebra(AlgebraError::NotHomogeneous))
        ));
    }

    #[test]
    fn numerator_formatting() {
        let mut c = vec![0i64; 25];
        c[0] = 1;
        c[12] = -1;
        c[14] = -2;
        c[21] = 3;
        assert_eq!(format_numerator(&c), "1 - t^12 - 2t^14 + 3t^21");
        assert_eq!(format_numerator(&[0, -1]), "-t");
        assert_eq!(format_numerator(&[0, 0]), "0");
    }
}
