//! Ideals, free modules and submodules, with cached Gröbner bases and the
//! operations built on them: normal forms, membership, elimination, radical
//! membership, syzygies, minimal generating sets.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::gb::{
    groebner_vect, ideal_order, is_groebner_basis, normal_form_vect, syzygies_vect, GbState, Vect,
};
use crate::order::{ModuleOrder, MonomialOrder};
use crate::poly::Poly;
use crate::ring::GradedRing;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operation requires homogeneous generators")]
    NotHomogeneous,
    #[error("variable index {0} out of range")]
    BadVariable(usize),
    #[error("cannot eliminate every variable of the ring")]
    NothingLeft,
}

/// An ideal of a weighted polynomial ring. Zero generators are discarded on
/// construction. Reduced Gröbner bases are memoized per order; the cache is
/// shared across clones.
#[derive(Clone)]
pub struct Ideal {
    ring: GradedRing,
    gens: Vec<Poly>,
    cache: Arc<RwLock<HashMap<String, Arc<Vec<Poly>>>>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal({} generators over {:?})", self.gens.len(), self.ring)
    }
}

impl Ideal {
    pub fn new(ring: &GradedRing, gens: Vec<Poly>) -> Self {
        for g in &gens {
            assert!(g.ring() == ring, "generator in the wrong ring");
        }
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    /// Reduced Gröbner basis under `order`, memoized.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Poly>> {
        let key = order.cache_key();
        if let Some(b) = self.cache.read().expect("cache lock").get(&key) {
            return Arc::clone(b);
        }
        let inputs: Vec<Vect> = self.gens.iter().map(|g| Vect::from_poly(g.clone())).collect();
        let out = groebner_vect(&inputs, &self.ring, &ideal_order(order.clone()), false);
        let basis: Arc<Vec<Poly>> = Arc::new(
            out.basis
                .into_iter()
                .map(|v| v.into_comps().pop().expect("rank 1"))
                .collect(),
        );
        self.cache
            .write()
            .expect("cache lock")
            .insert(key, Arc::clone(&basis));
        basis
    }

    /// Default-order basis.
    pub fn groebner_basis_default(&self) -> Arc<Vec<Poly>> {
        self.groebner_basis(&MonomialOrder::grevlex(&self.ring))
    }

    pub fn normal_form(&self, f: &Poly, order: &MonomialOrder) -> Poly {
        let basis = self.groebner_basis(order);
        normal_form(f, &basis, order)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f, &MonomialOrder::grevlex(&self.ring)).is_zero()
    }

    /// Equality as ideals, by two-way membership of generators.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g)) && other.gens.iter().all(|g| self.contains(g))
    }

    /// `I ∩ k[remaining variables]` as an ideal of the smaller ring, with a
    /// minimal homogeneous generating set when the input is graded.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal, AlgebraError> {
        for &i in drop {
            if i >= self.ring.arity() {
                return Err(AlgebraError::BadVariable(i));
            }
        }
        let mut drop_sorted: Vec<usize> = drop.to_vec();
        drop_sorted.sort_unstable();
        drop_sorted.dedup();
        if drop_sorted.is_empty() {
            return Ok(self.clone());
        }
        if drop_sorted.len() == self.ring.arity() {
            return Err(AlgebraError::NothingLeft);
        }
        let keep: Vec<usize> = (0..self.ring.arity())
            .filter(|i| !drop_sorted.contains(i))
            .collect();
        let small = self.ring.subring(&keep);
        let order = MonomialOrder::eliminating(&self.ring, &drop_sorted);
        let basis = self.groebner_basis(&order);
        let kept: Vec<Poly> = basis
            .iter()
            .filter(|g| g.free_of(&drop_sorted))
            .map(|g| g.transfer(&small))
            .collect();
        let ideal = Ideal::new(&small, kept);
        if ideal.is_homogeneous() {
            let min = ideal.minimal_generators()?;
            Ok(Ideal::new(&small, min))
        } else {
            Ok(ideal)
        }
    }

    /// Radical membership via the auxiliary-variable trick: `f` is in the
    /// radical iff `1` lies in `I + (1 - f*aux)` over the ring extended by
    /// one weight-1 variable.
    pub fn radical_contains(&self, f: &Poly) -> bool {
        let ext = self.ring.extended("aux", 1);
        let aux = Poly::var(&ext, ext.arity() - 1);
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.transfer(&ext)).collect();
        gens.push(Poly::one(&ext).sub(&f.transfer(&ext).mul(&aux)));
        let extended = Ideal::new(&ext, gens);
        let basis = extended.groebner_basis_default();
        basis.len() == 1 && basis[0].is_one()
    }

    /// Minimal homogeneous generating set by graded Nakayama: process by
    /// ascending degree (ties in input order), keep a generator iff it is not
    /// in the ideal generated by the generators kept so far.
    pub fn minimal_generators(&self) -> Result<Vec<Poly>, AlgebraError> {
        let sub = self.as_submodule();
        let min = sub.minimal_generators()?;
        Ok(min
            .into_iter()
            .map(|v| v.into_comps().pop().expect("rank 1"))
            .collect())
    }

    /// Generators of the syzygy module of `gens()` (one coordinate per
    /// generator).
    pub fn syzygies(&self) -> Vec<Vect> {
        let inputs: Vec<Vect> = self.gens.iter().map(|g| Vect::from_poly(g.clone())).collect();
        syzygies_vect(
            &inputs,
            &self.ring,
            &ideal_order(MonomialOrder::grevlex(&self.ring)),
        )
    }

    fn as_submodule(&self) -> Submodule {
        Submodule::new(
            FreeModule::new(&self.ring, vec![0]),
            self.gens.iter().map(|g| Vect::from_poly(g.clone())).collect(),
        )
    }

    /// Sanity check used by tests: any cached basis generates the same ideal
    /// as the stored generators, verified by two-way membership.
    pub fn validate_cache(&self) -> bool {
        let snapshot: Vec<Arc<Vec<Poly>>> = self
            .cache
            .read()
            .expect("cache lock")
            .values()
            .cloned()
            .collect();
        let default = MonomialOrder::grevlex(&self.ring);
        snapshot.iter().all(|basis| {
            let as_ideal = Ideal::new(&self.ring, basis.to_vec());
            basis.iter().all(|b| self.normal_form(b, &default).is_zero())
                && self.gens.iter().all(|g| as_ideal.contains(g))
        })
    }
}

/// Full normal form of `f` against an explicit Gröbner basis.
pub fn normal_form(f: &Poly, basis: &[Poly], order: &MonomialOrder) -> Poly {
    let ring = f.ring();
    let bas: Vec<Vect> = basis.iter().map(|b| Vect::from_poly(b.clone())).collect();
    normal_form_vect(
        &Vect::from_poly(f.clone()),
        &bas,
        ring,
        &ideal_order(order.clone()),
    )
    .into_comps()
    .pop()
    .expect("rank 1")
}

/// Is `basis` a Gröbner basis for `order`? (every S-polynomial reduces to 0)
pub fn confirms_buchberger(basis: &[Poly], ring: &GradedRing, order: &MonomialOrder) -> bool {
    let bas: Vec<Vect> = basis.iter().map(|b| Vect::from_poly(b.clone())).collect();
    is_groebner_basis(&bas, ring, &ideal_order(order.clone()))
}

/// A graded free module `⊕ A(-d_i)`: generator `i` sits in degree `d_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeModule {
    ring: GradedRing,
    degrees: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: &GradedRing, degrees: Vec<i64>) -> Self {
        assert!(!degrees.is_empty(), "rank must be positive");
        FreeModule {
            ring: ring.clone(),
            degrees,
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn order(&self, base: MonomialOrder) -> ModuleOrder {
        ModuleOrder::new(base, self.degrees.clone())
    }

    pub fn default_order(&self) -> ModuleOrder {
        self.order(MonomialOrder::grevlex(&self.ring))
    }
}

/// A finitely generated submodule of a graded free module.
#[derive(Clone)]
pub struct Submodule {
    ambient: FreeModule,
    gens: Vec<Vect>,
    cache: Arc<RwLock<HashMap<String, Arc<Vec<Vect>>>>>,
}

impl Submodule {
    pub fn new(ambient: FreeModule, gens: Vec<Vect>) -> Self {
        for g in &gens {
            assert_eq!(g.rank(), ambient.rank(), "generator rank mismatch");
            assert!(g.ring() == ambient.ring(), "generator in the wrong ring");
        }
        Submodule {
            ambient,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn gens(&self) -> &[Vect] {
        &self.gens
    }

    pub fn is_graded(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.homogeneous_degree(self.ambient.degrees()).is_some())
    }

    pub fn groebner_basis(&self, base: &MonomialOrder) -> Arc<Vec<Vect>> {
        let key = base.cache_key();
        if let Some(b) = self.cache.read().expect("cache lock").get(&key) {
            return Arc::clone(b);
        }
        let order = self.ambient.order(base.clone());
        let out = groebner_vect(&self.gens, self.ambient.ring(), &order, false);
        let basis = Arc::new(out.basis);
        self.cache
            .write()
            .expect("cache lock")
            .insert(key, Arc::clone(&basis));
        basis
    }

    pub fn normal_form(&self, v: &Vect, base: &MonomialOrder) -> Vect {
        let basis = self.groebner_basis(base);
        normal_form_vect(v, &basis, self.ambient.ring(), &self.ambient.order(base.clone()))
    }

    pub fn contains(&self, v: &Vect) -> bool {
        self.normal_form(v, &MonomialOrder::grevlex(self.ambient.ring()))
            .is_zero()
    }

    pub fn equals(&self, other: &Submodule) -> bool {
        self.gens.iter().all(|g| other.contains(g))
            && other.gens.iter().all(|g| self.contains(g))
    }

    /// Minimal homogeneous generators by graded Nakayama; ties within a
    /// degree are broken by input order.
    pub fn minimal_generators(&self) -> Result<Vec<Vect>, AlgebraError> {
        let shifts = self.ambient.degrees();
        let mut with_deg: Vec<(i64, usize)> = Vec::with_capacity(self.gens.len());
        for (i, g) in self.gens.iter().enumerate() {
            match g.homogeneous_degree(shifts) {
                Some(d) => with_deg.push((d, i)),
                None => return Err(AlgebraError::NotHomogeneous),
            }
        }
        with_deg.sort_by_key(|&(d, i)| (d, i));
        let ring = self.ambient.ring().clone();
        let order = self.ambient.default_order();
        let mut state = GbState::new(&ring, order, false);
        let mut kept = Vec::new();
        for (_, i) in with_deg {
            state.complete();
            if state.normal_form(&self.gens[i]).is_zero() {
                continue;
            }
            kept.push(self.gens[i].clone());
            state.add_input(&self.gens[i]);
        }
        Ok(kept)
    }

    pub fn syzygies(&self) -> Vec<Vect> {
        syzygies_vect(&self.gens, self.ambient.ring(), &self.ambient.default_order())
    }
}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Submodule({} generators of rank {})",
            self.gens.len(),
            self.ambient.rank()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring(names: &[&str], weights: &[i64]) -> GradedRing {
        GradedRing::new(names.to_vec(), weights.to_vec()).unwrap()
    }

    fn ideal(r: &GradedRing, texts: &[&str]) -> Ideal {
        Ideal::new(r, texts.iter().map(|t| parse_poly(t, r).unwrap()).collect())
    }

    #[test]
    fn normal_form_basics() {
        let r = ring(&["x", "y"], &[1, 1]);
        let i = ideal(&r, &["x", "y"]);
        assert_eq!(
            i.normal_form(&parse_poly("1", &r).unwrap(), &MonomialOrder::grevlex(&r)),
            parse_poly("1", &r).unwrap()
        );
        assert!(i.contains(&parse_poly("x^3 + x*y", &r).unwrap()));
        assert!(i.contains(&Poly::zero(&r)));
        assert!(!i.contains(&parse_poly("1", &r).unwrap()));
    }

    #[test]
    fn degree12_membership_fails_by_hand_solved_system() {
        // In k[u,v] with weights (2,3): the degree-12 part of the ideal
        // generated by u^6 and u^6 + 2u^3v^2 + v^4 is their span, and the
        // 2x3 linear system shows u^3*v^2 is not in it.
        let r = ring(&["u", "v"], &[2, 3]);
        let i = ideal(&r, &["u^6", "u^6 + 2*u^3*v^2 + v^4"]);
        assert!(!i.contains(&parse_poly("u^3*v^2", &r).unwrap()));
        assert!(i.contains(&parse_poly("2*u^3*v^2 + v^4", &r).unwrap()));
    }

    #[test]
    fn ideal_absorption() {
        let r = ring(&["x", "y"], &[1, 1]);
        let g = parse_poly("x^2 + y", &r).unwrap();
        let i = Ideal::new(&r, vec![g.clone()]);
        let x = parse_poly("x", &r).unwrap();
        let rpoly = parse_poly("y^3 - x", &r).unwrap();
        let order = MonomialOrder::grevlex(&r);
        let lhs = i.normal_form(&x.mul(&g).add(&rpoly), &order);
        let rhs = i.normal_form(&rpoly, &order);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn elimination_identity_and_minimal_gens() {
        let r = ring(&["x", "y"], &[1, 1]);
        let i = ideal(&r, &["x", "x^2", "x*y"]);
        // dropping nothing returns an equal ideal
        let same = i.eliminate(&[]).unwrap();
        assert!(same.equals(&i));
        let min = i.minimal_generators().unwrap();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0], parse_poly("x", &r).unwrap());
    }

    #[test]
    fn radical_membership_trivia() {
        let r = ring(&["x", "y"], &[1, 1]);
        let i = ideal(&r, &["x^2"]);
        assert!(i.radical_contains(&parse_poly("x", &r).unwrap()));
        let j = ideal(&r, &["x"]);
        assert!(!j.radical_contains(&parse_poly("y", &r).unwrap()));
        // 0 is in every radical
        assert!(j.radical_contains(&Poly::zero(&r)));
    }

    #[test]
    fn gb_idempotence_and_cache_validity() {
        let r = ring(&["x", "y", "z"], &[1, 1, 1]);
        let i = ideal(&r, &["x*y - z^2", "y^2 - x*z", "x^2 - y*z"]);
        let order = MonomialOrder::grevlex(&r);
        let b1 = i.groebner_basis(&order);
        let again = Ideal::new(&r, b1.to_vec());
        let b2 = again.groebner_basis(&order);
        assert_eq!(&*b1, &*b2);
        assert!(i.validate_cache());
        assert!(confirms_buchberger(&b1, &r, &order));
    }

    #[test]
    fn submodule_membership_and_minimal_gens() {
        let r = ring(&["x", "y"], &[1, 1]);
        let free = FreeModule::new(&r, vec![0, 1]);
        let x = parse_poly("x", &r).unwrap();
        let y = parse_poly("y", &r).unwrap();
        let zero = Poly::zero(&r);
        let one = Poly::one(&r);
        // generators (x, 1), (y, 0), and a redundant x*(y,0)
        let g1 = Vect::new(vec![x.clone(), one.clone()]);
        let g2 = Vect::new(vec![y.clone(), zero.clone()]);
        let g3 = g2.mul_poly(&x);
        let s = Submodule::new(free, vec![g1.clone(), g2.clone(), g3]);
        assert!(s.is_graded());
        assert!(s.contains(&g2.mul_poly(&y)));
        assert!(!s.contains(&Vect::new(vec![one.clone(), zero.clone()])));
        let min = s.minimal_generators().unwrap();
        assert_eq!(min.len(), 2);
        assert_eq!(min, vec![g1, g2]);
    }
}
