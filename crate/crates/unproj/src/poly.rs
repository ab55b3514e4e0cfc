//! Sparse multivariate polynomials over Q with exact rational coefficients.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vector, so the stored
//! form is canonical and independent of any monomial order. No zero
//! coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::order::MonomialOrder;
use crate::ring::{Exponents, GradedRing};

pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Weighted degree of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    /// The zero polynomial has no degree.
    ZeroPoly,
    /// All terms share this degree.
    Homogeneous(i64),
    /// Mixed term degrees; carries the maximum.
    Inhomogeneous { max: i64 },
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: GradedRing,
    terms: BTreeMap<Exponents, Coeff>,
}

impl Poly {
    pub fn zero(ring: &GradedRing) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &GradedRing) -> Self {
        Poly::constant(ring, coeff_int(1))
    }

    pub fn constant(ring: &GradedRing, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::one(), c);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &GradedRing, i: usize) -> Self {
        assert!(i < ring.arity(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Exponents::var(i), coeff_int(1));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var_named(ring: &GradedRing, name: &str) -> Option<Self> {
        ring.var_index(name).map(|i| Poly::var(ring, i))
    }

    pub fn monomial(ring: &GradedRing, e: Exponents, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &GradedRing, it: impl IntoIterator<Item = (Exponents, Coeff)>) -> Self {
        let mut p = Poly::zero(ring);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exponents::one())
                .is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Exponents::one()))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> Coeff {
        self.terms.get(e).cloned().unwrap_or_else(Coeff::zero)
    }

    fn add_term(&mut self, e: Exponents, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &Poly) {
        assert!(
            self.ring == other.ring,
            "polynomials live in different rings"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (e, c) in other.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (e, c) in other.terms.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let mut out = Poly::zero(&self.ring);
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in other.terms.iter() {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }

    /// `self * c * x^e`.
    pub fn mul_term(&self, e: &Exponents, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(e), a * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        self.mul_term(&Exponents::one(), c)
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one(&self.ring);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn weighted_degree(&self) -> WeightedDegree {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return WeightedDegree::ZeroPoly,
            Some(e) => self.ring.monomial_degree(e),
        };
        let mut max = first;
        let mut homogeneous = true;
        for e in it {
            let d = self.ring.monomial_degree(e);
            if d != first {
                homogeneous = false;
            }
            max = max.max(d);
        }
        if homogeneous {
            WeightedDegree::Homogeneous(first)
        } else {
            WeightedDegree::Inhomogeneous { max }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.weighted_degree(), WeightedDegree::Inhomogeneous { .. })
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.weighted_degree() {
            WeightedDegree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    /// Leading term under `order` (largest monomial).
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Exponents, Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(e, c)| (*e, c.clone()))
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (e, c) in self.terms.iter() {
            let k = e.get(i);
            if k > 0 {
                let mut m = *e;
                m.0[i] -= 1;
                out.add_term(m, c * coeff_int(i64::from(k)));
            }
        }
        out
    }

    /// Divide out the largest power of variable `i` that divides every term.
    /// Returns `(quotient, power)`.
    pub fn strip_variable_power(&self, i: usize) -> (Poly, u16) {
        if self.is_zero() {
            return (self.clone(), 0);
        }
        let k = self.terms.keys().map(|e| e.get(i)).min().unwrap();
        if k == 0 {
            return (self.clone(), 0);
        }
        let mut out = Poly::zero(&self.ring);
        for (e, c) in self.terms.iter() {
            let mut m = *e;
            m.0[i] -= k;
            out.add_term(m, c.clone());
        }
        (out, k)
    }

    /// Exact division by variable `i` to the given power, or `None` if some
    /// term is not divisible.
    pub fn div_variable_power(&self, i: usize, k: u16) -> Option<Poly> {
        let mut out = Poly::zero(&self.ring);
        for (e, c) in self.terms.iter() {
            if e.get(i) < k {
                return None;
            }
            let mut m = *e;
            m.0[i] -= k;
            out.add_term(m, c.clone());
        }
        Some(out)
    }

    /// Scalar content: gcd of numerators over lcm of denominators, signed so
    /// that `self = content * primitive` with primitive having integer
    /// coefficients, content 1, and positive coefficient on the maximal
    /// stored monomial.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        // sign normalization on the last (maximal in storage order) monomial
        let lead = self.terms.iter().next_back().unwrap().1;
        if (lead * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Monic w.r.t. `order`: leading coefficient scaled to 1.
    pub fn monic(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Evaluate at a rational point (one value per ring variable).
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.arity());
        let mut total = Coeff::zero();
        for (e, c) in self.terms.iter() {
            let mut v = c.clone();
            for (i, p) in point.iter().enumerate() {
                for _ in 0..e.get(i) {
                    v *= p;
                }
            }
            total += v;
        }
        total
    }

    /// True when no term involves any variable in `block`.
    pub fn free_of(&self, block: &[usize]) -> bool {
        self.terms.keys().all(|e| e.free_of(block))
    }

    /// Reinterpret in `target`, matching variables by name. Every variable
    /// occurring in `self` must exist in `target`.
    pub fn transfer(&self, target: &GradedRing) -> Poly {
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        let mut out = Poly::zero(target);
        for (e, c) in self.terms.iter() {
            let mut m = Exponents::one();
            for i in 0..self.ring.arity() {
                let k = e.get(i);
                if k > 0 {
                    let j = map[i].unwrap_or_else(|| {
                        panic!(
                            "variable {:?} not present in target ring",
                            self.ring.var_name(i)
                        )
                    });
                    m.0[j] = m.0[j].checked_add(k).expect("monomial exponent overflow");
                }
            }
            out.add_term(m, c.clone());
        }
        out
    }

    /// Terms in decreasing `order`, as (monomial, coefficient) pairs.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Exponents, Coeff)> {
        let mut v: Vec<(Exponents, Coeff)> =
            self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }
}

/// Substitution homomorphism between rings: each source variable maps to a
/// polynomial of the target ring.
pub struct RingMap {
    source: GradedRing,
    target: GradedRing,
    images: Vec<Poly>,
}

impl RingMap {
    pub fn new(source: &GradedRing, target: &GradedRing, images: Vec<Poly>) -> Self {
        assert_eq!(images.len(), source.arity(), "one image per source variable");
        for im in &images {
            assert!(im.ring() == target, "image lives in the wrong ring");
        }
        RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
        }
    }

    /// Inclusion of `source` into `target` matching variables by name.
    pub fn inclusion(source: &GradedRing, target: &GradedRing) -> Self {
        let images = source
            .vars()
            .iter()
            .map(|v| {
                Poly::var_named(target, v)
                    .unwrap_or_else(|| panic!("variable {v:?} missing from target ring"))
            })
            .collect();
        RingMap::new(source, target, images)
    }

    pub fn source(&self) -> &GradedRing {
        &self.source
    }

    pub fn target(&self) -> &GradedRing {
        &self.target
    }

    pub fn image(&self, i: usize) -> &Poly {
        &self.images[i]
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        assert!(p.ring() == &self.source, "polynomial not in the source ring");
        let mut out = Poly::zero(&self.target);
        for (e, c) in p.terms() {
            let mut t = Poly::constant(&self.target, c.clone());
            for i in 0..self.source.arity() {
                let k = e.get(i);
                if k > 0 {
                    t = t.mul(&self.images[i].pow(u32::from(k)));
                }
            }
            out = out.add(&t);
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Canonical form: terms in decreasing weighted-degrevlex order of the
    /// owning ring, unit coefficients suppressed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let order = MonomialOrder::grevlex(&self.ring);
        let terms = self.sorted_terms(&order);
        let mut first = true;
        for (e, c) in terms {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = self.ring.format_monomial(&e);
            if mono == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
