//! Monomial and module orders.
//!
//! The base order is weighted degree reverse lexicographic: higher weighted
//! degree wins; on equal degree the monomial whose last nonzero exponent
//! difference is negative is the larger one (reading variables in the ring's
//! declared sequence). An optional elimination block of variables is compared
//! first under the same rule restricted to the block, so any monomial
//! involving a block variable exceeds every block-free monomial.

use std::cmp::Ordering;

use crate::ring::{Exponents, GradedRing};

#[derive(Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    ring: GradedRing,
    /// Variable indices compared first (elimination block), ascending.
    block: Vec<usize>,
    /// Complement of `block`, ascending.
    rest: Vec<usize>,
}

impl MonomialOrder {
    /// Plain weighted degrevlex.
    pub fn grevlex(ring: &GradedRing) -> Self {
        MonomialOrder {
            ring: ring.clone(),
            block: Vec::new(),
            rest: (0..ring.arity()).collect(),
        }
    }

    /// Weighted degrevlex with the given variables eliminated first.
    pub fn eliminating(ring: &GradedRing, block_vars: &[usize]) -> Self {
        let mut block: Vec<usize> = block_vars.to_vec();
        block.sort_unstable();
        block.dedup();
        assert!(
            block.iter().all(|&i| i < ring.arity()),
            "block variable out of range"
        );
        let rest = (0..ring.arity()).filter(|i| !block.contains(i)).collect();
        MonomialOrder {
            ring: ring.clone(),
            block,
            rest,
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn block(&self) -> &[usize] {
        &self.block
    }

    pub fn has_block(&self) -> bool {
        !self.block.is_empty()
    }

    /// Stable identifier for caching Gröbner bases per order.
    pub fn cache_key(&self) -> String {
        let mut k = String::from("grevlex");
        for i in &self.block {
            k.push_str(&format!(":{i}"));
        }
        k
    }

    fn cmp_on(&self, vars: &[usize], a: &Exponents, b: &Exponents) -> Ordering {
        let deg = |e: &Exponents| -> i64 {
            vars.iter()
                .map(|&i| self.ring.weight(i) * i64::from(e.get(i)))
                .sum()
        };
        match deg(a).cmp(&deg(b)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // reverse lexicographic tie-break: scan from the last variable;
        // at the first difference the smaller exponent belongs to the
        // larger monomial
        for &i in vars.iter().rev() {
            match a.get(i).cmp(&b.get(i)) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Exponents, b: &Exponents) -> Ordering {
        if !self.block.is_empty() {
            match self.cmp_on(&self.block, a, b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.cmp_on(&self.rest, a, b)
    }
}

impl std::fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.block.is_empty() {
            write!(f, "grevlex")
        } else {
            let names: Vec<&str> = self.block.iter().map(|&i| self.ring.var_name(i)).collect();
            write!(f, "grevlex eliminating {{{}}}", names.join(", "))
        }
    }
}

/// Position of a module term: monomial times a basis vector of a free module.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModTerm {
    pub mono: Exponents,
    pub pos: usize,
}

/// Term-over-position order with per-generator degree shifts. Comparison is
/// by the base order's elimination block (when present), then shifted
/// weighted degree, then the base order on monomials, then position (lower
/// position wins).
#[derive(Clone)]
pub struct ModuleOrder {
    base: MonomialOrder,
    shifts: Vec<i64>,
}

impl ModuleOrder {
    pub fn new(base: MonomialOrder, shifts: Vec<i64>) -> Self {
        ModuleOrder { base, shifts }
    }

    pub fn base(&self) -> &MonomialOrder {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn ring(&self) -> &GradedRing {
        self.base.ring()
    }

    pub fn cmp(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        if self.base.has_block() {
            match self.base.cmp_on(&self.base.block, &a.mono, &b.mono) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        let da = self.ring().monomial_degree(&a.mono) + self.shifts[a.pos];
        let db = self.ring().monomial_degree(&b.mono) + self.shifts[b.pos];
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self.base.cmp(&a.mono, &b.mono) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // lower position is the larger module term
        b.pos.cmp(&a.pos)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_uv() -> GradedRing {
        GradedRing::new(vec!["u", "v"], vec![2, 3]).unwrap()
    }

    #[test]
    fn grevlex_ties() {
        // weights (2,3): u^3 and v^2 both have degree 6.
        // revlex: v-exponent differs (0 vs 2); smaller v-exponent => larger,
        // so u^3 > v^2.
        let r = ring_uv();
        let o = MonomialOrder::grevlex(&r);
        let u3 = Exponents::from_slice(&[3, 0]);
        let v2 = Exponents::from_slice(&[0, 2]);
        assert_eq!(o.cmp(&u3, &v2), Ordering::Greater);
        assert_eq!(o.cmp(&v2, &u3), Ordering::Less);
        assert_eq!(o.cmp(&u3, &u3), Ordering::Equal);
    }

    #[test]
    fn elimination_dominates_degree() {
        // ring (u, x): block {u}. u*x^99 must exceed x^100.
        let r = GradedRing::new(vec!["u", "x"], vec![2, 1]).unwrap();
        let o = MonomialOrder::eliminating(&r, &[0]);
        let a = Exponents::from_slice(&[1, 99]);
        let b = Exponents::from_slice(&[0, 100]);
        assert_eq!(o.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn multiplicative() {
        let r = ring_uv();
        let o = MonomialOrder::grevlex(&r);
        let a = Exponents::from_slice(&[3, 0]);
        let b = Exponents::from_slice(&[0, 2]);
        let m = Exponents::from_slice(&[1, 4]);
        assert_eq!(o.cmp(&a.mul(&m), &b.mul(&m)), o.cmp(&a, &b));
    }

    #[test]
    fn module_order_shifts_and_position() {
        let r = ring_uv();
        let o = ModuleOrder::new(MonomialOrder::grevlex(&r), vec![0, 2]);
        // u at position 1 has shifted degree 2+2=4; u^2 at position 0 has 4.
        // equal shifted degree, base order u^2 > u, so (u^2, 0) wins
        let a = ModTerm {
            mono: Exponents::from_slice(&[2, 0]),
            pos: 0,
        };
        let b = ModTerm {
            mono: Exponents::from_slice(&[1, 0]),
            pos: 1,
        };
        assert_eq!(o.cmp(&a, &b), Ordering::Greater);
        // same monomial different positions: lower position larger
        let c = ModTerm {
            mono: Exponents::from_slice(&[1, 0]),
            pos: 0,
        };
        assert_eq!(o.cmp(&c, &c), Ordering::Equal);
        let o2 = ModuleOrder::new(MonomialOrder::grevlex(&r), vec![0, 0]);
        let d = ModTerm {
            mono: Exponents::from_slice(&[1, 0]),
            pos: 1,
        };
        assert_eq!(o2.cmp(&c, &d), Ordering::Greater);
    }
}
