//! Buchberger engine for ideals and submodules of graded free modules.
//!
//! Everything works on [`Vect`]s, elements of a free module `A^r`; an ideal
//! is the rank-1 case. The algorithm is Buchberger with the normal selection
//! strategy (pairs by ascending lcm degree, then creation index), the product
//! criterion (rank 1 only; it is not sound for modules), and Gebauer–Möller
//! pair pruning. Output bases are reduced: minimal leading terms, fully
//! tail-reduced, monic, sorted by ascending leading term.
//!
//! Internally the basis lives in fraction-free form: integer coefficients,
//! content-divided, positive leading coefficient. Reduction cross-multiplies
//! and strips content, so no rational arithmetic happens on the hot path.
//!
//! Optionally each basis element carries its representation in terms of the
//! input generators; together with division of the inputs by the finished
//! basis this yields syzygy modules via Schreyer's construction.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::order::{ModTerm, ModuleOrder, MonomialOrder};
use crate::poly::{Coeff, Poly};
use crate::ring::{Exponents, GradedRing};

/// Element of a free module `A^rank`.
#[derive(Clone, PartialEq, Eq)]
pub struct Vect {
    comps: Vec<Poly>,
}

impl Vect {
    pub fn new(comps: Vec<Poly>) -> Self {
        assert!(!comps.is_empty(), "rank must be positive");
        let ring = comps[0].ring().clone();
        assert!(
            comps.iter().all(|p| p.ring() == &ring),
            "components in different rings"
        );
        Vect { comps }
    }

    pub fn zero(ring: &GradedRing, rank: usize) -> Self {
        Vect {
            comps: vec![Poly::zero(ring); rank],
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Vect { comps: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn ring(&self) -> &GradedRing {
        self.comps[0].ring()
    }

    pub fn comp(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn comps(&self) -> &[Poly] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<Poly> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Vect) -> Vect {
        Vect::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vect) -> Vect {
        Vect::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn mul_poly(&self, p: &Poly) -> Vect {
        Vect::new(self.comps.iter().map(|c| c.mul(p)).collect())
    }

    pub fn scale(&self, c: &Coeff) -> Vect {
        Vect::new(self.comps.iter().map(|p| p.scale(c)).collect())
    }

    /// Degree of a homogeneous vector w.r.t. generator shifts: every nonzero
    /// component `i` is homogeneous of degree `d - shifts[i]`.
    pub fn homogeneous_degree(&self, shifts: &[i64]) -> Option<i64> {
        let mut deg = None;
        for (i, p) in self.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree()? + shifts[i];
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    pub fn free_of(&self, block: &[usize]) -> bool {
        self.comps.iter().all(|p| p.free_of(block))
    }

    pub fn leading_term(&self, order: &ModuleOrder) -> Option<(ModTerm, Coeff)> {
        let mut best: Option<(ModTerm, Coeff)> = None;
        for (pos, p) in self.comps.iter().enumerate() {
            for (mono, c) in p.terms() {
                let t = ModTerm { mono: *mono, pos };
                if best
                    .as_ref()
                    .is_none_or(|(bt, _)| order.cmp(&t, bt) == std::cmp::Ordering::Greater)
                {
                    best = Some((t, c.clone()));
                }
            }
        }
        best
    }
}

impl std::fmt::Debug for Vect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Fraction-free term list: strictly descending under the module order,
/// integer coefficients with no common content, positive leading coefficient.
type ITerms = Vec<(ModTerm, BigInt)>;

fn to_int_terms(v: &Vect, order: &ModuleOrder) -> ITerms {
    let mut den_lcm = BigInt::one();
    for p in v.comps() {
        for (_, c) in p.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    let mut terms: ITerms = Vec::new();
    for (pos, p) in v.comps().iter().enumerate() {
        for (mono, c) in p.terms() {
            let whole = c.numer() * (&den_lcm / c.denom());
            terms.push((ModTerm { mono: *mono, pos }, whole));
        }
    }
    terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
    let _ = divide_content(&mut terms);
    terms
}

fn from_int_terms(ring: &GradedRing, rank: usize, terms: &[(ModTerm, BigInt)]) -> Vect {
    let mut comps = vec![Poly::zero(ring); rank];
    for (t, c) in terms {
        comps[t.pos] = comps[t.pos].add(&Poly::monomial(
            ring,
            t.mono,
            Coeff::from_integer(c.clone()),
        ));
    }
    Vect::new(comps)
}

/// Divide by the integer content and normalize the leading sign; returns the
/// (signed) scalar that was divided out.
fn divide_content(terms: &mut ITerms) -> BigInt {
    if terms.is_empty() {
        return BigInt::one();
    }
    let mut g = BigInt::zero();
    for (_, c) in terms.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
    g
}

/// `a_scale * a - b_scale * x^m * b`, all sorted descending.
fn int_merge(
    a_scale: &BigInt,
    a: &[(ModTerm, BigInt)],
    b_scale: &BigInt,
    m: &Exponents,
    b: &[(ModTerm, BigInt)],
    order: &ModuleOrder,
) -> ITerms {
    let mut out = ITerms::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bt = ModTerm {
            mono: b[j].0.mono.mul(m),
            pos: b[j].0.pos,
        };
        match order.cmp(&a[i].0, &bt) {
            std::cmp::Ordering::Greater => {
                out.push((a[i].0, a_scale * &a[i].1));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bt, -(b_scale * &b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = a_scale * &a[i].1 - b_scale * &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for (t, c) in &a[i..] {
        out.push((*t, a_scale * c));
    }
    while j < b.len() {
        out.push((
            ModTerm {
                mono: b[j].0.mono.mul(m),
                pos: b[j].0.pos,
            },
            -(b_scale * &b[j].1),
        ));
        j += 1;
    }
    out
}

struct GbElem {
    terms: ITerms,
    lt: ModTerm,
    lc: BigInt,
    /// Representation over the accepted inputs, when tracking.
    repr: Option<Vec<Poly>>,
    alive: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exponents,
}

/// Incremental Buchberger state. Inputs may be added between completions.
pub struct GbState {
    order: ModuleOrder,
    ring: GradedRing,
    rank: usize,
    elems: Vec<GbElem>,
    heap: BinaryHeap<Reverse<(i64, u64, usize, usize)>>,
    pairs: std::collections::HashMap<(usize, usize), Pair>,
    pair_counter: u64,
    track: bool,
    inputs_seen: usize,
}

impl GbState {
    pub fn new(ring: &GradedRing, order: ModuleOrder, track: bool) -> Self {
        let rank = order.rank();
        GbState {
            order,
            ring: ring.clone(),
            rank,
            elems: Vec::new(),
            heap: BinaryHeap::new(),
            pairs: std::collections::HashMap::new(),
            pair_counter: 0,
            track,
            inputs_seen: 0,
        }
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    fn shifted_degree(&self, t: &ModTerm) -> i64 {
        self.ring.monomial_degree(&t.mono) + self.order.shifts()[t.pos]
    }

    /// Reduce and insert one input generator. Every input (accepted or not)
    /// widens the representation vectors by one slot.
    pub fn add_input(&mut self, v: &Vect) {
        assert_eq!(v.rank(), self.rank, "rank mismatch");
        let idx = self.inputs_seen;
        self.inputs_seen += 1;
        if self.track {
            for e in &mut self.elems {
                e.repr
                    .as_mut()
                    .expect("tracking enabled")
                    .push(Poly::zero(&self.ring));
            }
        }
        if v.is_zero() {
            return;
        }
        if self.track {
            let work = to_rational_terms(v, &self.order);
            let mut quot = vec![Poly::zero(&self.ring); self.elems.len()];
            let reduced = self.reduce_rational(work, Some(&mut quot));
            if reduced.is_empty() {
                return;
            }
            let mut repr = vec![Poly::zero(&self.ring); self.inputs_seen];
            repr[idx] = Poly::one(&self.ring);
            for (k, qk) in quot.iter().enumerate() {
                if !qk.is_zero() {
                    let gr = self.elems[k].repr.as_ref().unwrap().clone();
                    for (slot, g) in repr.iter_mut().zip(gr.iter()) {
                        *slot = slot.sub(&qk.mul(g));
                    }
                }
            }
            let (iterms, factor) = rational_to_int(&reduced);
            let repr = repr.iter().map(|p| p.scale(&factor)).collect();
            self.push_elem(iterms, Some(repr));
        } else {
            let work = to_int_terms(v, &self.order);
            let (reduced, _) = self.reduce_int(work);
            if reduced.is_empty() {
                return;
            }
            self.push_elem(reduced, None);
        }
    }

    fn push_elem(&mut self, mut terms: ITerms, repr: Option<Vec<Poly>>) {
        let _ = divide_content(&mut terms);
        let lt = terms[0].0;
        let lc = terms[0].1.clone();
        let t = self.elems.len();
        self.elems.push(GbElem {
            terms,
            lt,
            lc,
            repr,
            alive: true,
        });
        self.update_pairs(t);
    }

    /// Gebauer–Möller pair update for the freshly added element `t`.
    fn update_pairs(&mut self, t: usize) {
        let lt_t = self.elems[t].lt;
        // candidate pairs (i, t)
        let mut cands: Vec<Pair> = Vec::new();
        for i in 0..t {
            if !self.elems[i].alive || self.elems[i].lt.pos != lt_t.pos {
                continue;
            }
            cands.push(Pair {
                i,
                j: t,
                lcm: self.elems[i].lt.mono.lcm(&lt_t.mono),
            });
        }
        // B criterion: discard old pairs whose lcm the new leading term
        // strictly refines
        let old_keys: Vec<(usize, usize)> = self.pairs.keys().copied().collect();
        for key in old_keys {
            let p = &self.pairs[&key];
            if self.elems[p.i].lt.pos != lt_t.pos {
                continue;
            }
            if lt_t.mono.divides(&p.lcm) {
                let lcm_it = self.elems[p.i].lt.mono.lcm(&lt_t.mono);
                let lcm_jt = self.elems[p.j].lt.mono.lcm(&lt_t.mono);
                if lcm_it != p.lcm && lcm_jt != p.lcm {
                    self.pairs.remove(&key);
                }
            }
        }
        // M criterion: drop candidates whose lcm another candidate's divides
        // strictly
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(&cands[a].lcm) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // F criterion: one pair per lcm (lowest partner index)
        for a in 0..cands.len() {
            if !keep[a] {
                continue;
            }
            for b in (a + 1)..cands.len() {
                if keep[b] && cands[b].lcm == cands[a].lcm {
                    keep[b] = false;
                }
            }
        }
        for (a, p) in cands.into_iter().enumerate() {
            if !keep[a] {
                continue;
            }
            // product criterion, sound for ideals only
            if self.rank == 1
                && self.elems[p.i]
                    .lt
                    .mono
                    .is_coprime_to(&self.elems[p.j].lt.mono)
            {
                continue;
            }
            let deg = self.shifted_degree(&ModTerm {
                mono: p.lcm,
                pos: lt_t.pos,
            });
            self.heap
                .push(Reverse((deg, self.pair_counter, p.i, p.j)));
            self.pair_counter += 1;
            self.pairs.insert((p.i, p.j), p);
        }
    }

    /// Fraction-free full reduction. Returns the reduced terms and the
    /// rational multiplier `mu` such that `result = mu * (true residual)`.
    fn reduce_int(&self, mut work: ITerms) -> (ITerms, Coeff) {
        let mut mu = Coeff::one();
        let mut start = 0usize;
        'outer: while start < work.len() {
            let t = work[start].0;
            for g in self.elems.iter() {
                if !g.alive || g.lt.pos != t.pos || !g.lt.mono.divides(&t.mono) {
                    continue;
                }
                let m = t.mono.div(&g.lt.mono).expect("divides");
                let c = work[start].1.clone();
                // work = lc_g * work - c * x^m * g
                let merged = int_merge(&g.lc, &work[start..], &c, &m, &g.terms, &self.order);
                // prefix scales along
                let mut next = ITerms::with_capacity(start + merged.len());
                for (pt, pc) in &work[..start] {
                    next.push((*pt, &g.lc * pc));
                }
                next.extend(merged);
                let divided = divide_content(&mut next);
                mu = mu * Coeff::from_integer(g.lc.clone()) / Coeff::from_integer(divided);
                work = next;
                continue 'outer;
            }
            start += 1;
        }
        (work, mu)
    }

    /// Rational full reduction with quotient tracking:
    /// `input = sum q_k g_k + result`.
    fn reduce_rational(
        &self,
        mut work: Vec<(ModTerm, Coeff)>,
        mut quotients: Option<&mut Vec<Poly>>,
    ) -> Vec<(ModTerm, Coeff)> {
        let mut start = 0usize;
        'outer: while start < work.len() {
            let (t, c) = work[start].clone();
            for (k, g) in self.elems.iter().enumerate() {
                if !g.alive || g.lt.pos != t.pos || !g.lt.mono.divides(&t.mono) {
                    continue;
                }
                let m = t.mono.div(&g.lt.mono).expect("divides");
                let f = &c / Coeff::from_integer(g.lc.clone());
                if let Some(q) = quotients.as_deref_mut() {
                    q[k] = q[k].add(&Poly::monomial(&self.ring, m, f.clone()));
                }
                let mut next = work[..start].to_vec();
                next.extend(rational_merge(&work[start..], &g.terms, &m, &f, &self.order));
                work = next;
                continue 'outer;
            }
            start += 1;
        }
        work
    }

    /// Run Buchberger until no pairs remain.
    pub fn complete(&mut self) {
        while let Some(Reverse((_, _, i, j))) = self.heap.pop() {
            let Some(pair) = self.pairs.remove(&(i, j)) else {
                continue;
            };
            let (lti, ltj) = (self.elems[i].lt, self.elems[j].lt);
            debug_assert_eq!(lti.pos, ltj.pos);
            let mi = pair.lcm.div(&lti.mono).expect("divides");
            let mj = pair.lcm.div(&ltj.mono).expect("divides");
            let ci = self.elems[i].lc.clone();
            let cj = self.elems[j].lc.clone();
            // S = cj * x^mi * g_i - ci * x^mj * g_j
            let scaled_i: ITerms = self.elems[i]
                .terms
                .iter()
                .map(|(t, c)| {
                    (
                        ModTerm {
                            mono: t.mono.mul(&mi),
                            pos: t.pos,
                        },
                        c.clone(),
                    )
                })
                .collect();
            let spoly = int_merge(&cj, &scaled_i, &ci, &mj, &self.elems[j].terms, &self.order);
            if self.track {
                let spoly_rat: Vec<(ModTerm, Coeff)> = spoly
                    .iter()
                    .map(|(t, c)| (*t, Coeff::from_integer(c.clone())))
                    .collect();
                let mut quot = vec![Poly::zero(&self.ring); self.elems.len()];
                let reduced = self.reduce_rational(spoly_rat, Some(&mut quot));
                if reduced.is_empty() {
                    continue;
                }
                let term_i = Poly::monomial(&self.ring, mi, Coeff::from_integer(cj));
                let term_j = Poly::monomial(&self.ring, mj, Coeff::from_integer(ci));
                let ri = self.elems[i].repr.clone().unwrap();
                let rj = self.elems[j].repr.clone().unwrap();
                let mut repr = vec![Poly::zero(&self.ring); self.inputs_seen];
                for (s, slot) in repr.iter_mut().enumerate() {
                    *slot = term_i.mul(&ri[s]).sub(&term_j.mul(&rj[s]));
                }
                for (k, qk) in quot.iter().enumerate() {
                    if !qk.is_zero() {
                        let gr = self.elems[k].repr.as_ref().unwrap().clone();
                        for (slot, g) in repr.iter_mut().zip(gr.iter()) {
                            *slot = slot.sub(&qk.mul(g));
                        }
                    }
                }
                let (iterms, factor) = rational_to_int(&reduced);
                let repr = repr.iter().map(|p| p.scale(&factor)).collect();
                self.push_elem(iterms, Some(repr));
            } else {
                let (reduced, _) = self.reduce_int(spoly);
                if reduced.is_empty() {
                    continue;
                }
                self.push_elem(reduced, None);
            }
        }
    }

    /// Normal form against the current (completed) basis.
    pub fn normal_form(&self, v: &Vect) -> Vect {
        let (reduced, mu) = self.reduce_int(to_int_terms(v, &self.order));
        // undo the fraction-free scaling and the input content division
        let input_content = input_content_of(v);
        let rat: Vec<(ModTerm, Coeff)> = reduced
            .iter()
            .map(|(t, c)| {
                (
                    *t,
                    Coeff::from_integer(c.clone()) / &mu * &input_content,
                )
            })
            .collect();
        from_rational_terms(&self.ring, self.rank, &rat)
    }

    /// Normal form plus quotients over the current basis elements:
    /// `v = sum q_k g_k + r`.
    pub fn normal_form_with_quotients(&self, v: &Vect) -> (Vect, Vec<Poly>) {
        let mut q = vec![Poly::zero(&self.ring); self.elems.len()];
        let work = to_rational_terms(v, &self.order);
        let reduced = self.reduce_rational(work, Some(&mut q));
        (from_rational_terms(&self.ring, self.rank, &reduced), q)
    }

    pub fn basis_vects(&self) -> Vec<Vect> {
        self.elems
            .iter()
            .filter(|e| e.alive)
            .map(|e| from_int_terms(&self.ring, self.rank, &e.terms))
            .collect()
    }

    /// Install an element as-is, without reduction or pair generation. Only
    /// for normal-form computations against an already-computed basis.
    fn add_basis_unchecked(&mut self, v: &Vect) {
        if v.is_zero() {
            return;
        }
        let terms = to_int_terms(v, &self.order);
        let lt = terms[0].0;
        let lc = terms[0].1.clone();
        self.elems.push(GbElem {
            terms,
            lt,
            lc,
            repr: None,
            alive: true,
        });
    }

    /// Reduce to the unique reduced basis: minimal monic generators, fully
    /// tail-reduced, sorted by ascending leading term.
    pub fn finish(mut self) -> GbOutput {
        self.complete();
        let n = self.elems.len();
        let mut order_idx: Vec<usize> = (0..n).filter(|&i| self.elems[i].alive).collect();
        order_idx.sort_by(|&a, &b| self.order.cmp(&self.elems[a].lt, &self.elems[b].lt));
        for pos in 0..order_idx.len() {
            let i = order_idx[pos];
            let lt = self.elems[i].lt;
            let redundant = order_idx[..pos].iter().any(|&k| {
                self.elems[k].alive
                    && self.elems[k].lt.pos == lt.pos
                    && self.elems[k].lt.mono.divides(&lt.mono)
            });
            if redundant {
                self.elems[i].alive = false;
            }
        }
        let alive: Vec<usize> = order_idx
            .iter()
            .copied()
            .filter(|&i| self.elems[i].alive)
            .collect();
        let mut basis: Vec<Vect> = Vec::new();
        let mut reprs: Vec<Vec<Poly>> = Vec::new();
        for &i in &alive {
            self.elems[i].alive = false;
            if self.track {
                let work: Vec<(ModTerm, Coeff)> = self.elems[i]
                    .terms
                    .iter()
                    .map(|(t, c)| (*t, Coeff::from_integer(c.clone())))
                    .collect();
                let mut quot = vec![Poly::zero(&self.ring); self.elems.len()];
                let reduced = self.reduce_rational(work, Some(&mut quot));
                assert!(!reduced.is_empty(), "minimal element reduced to zero");
                let inv = reduced[0].1.recip();
                let terms: Vec<(ModTerm, Coeff)> =
                    reduced.iter().map(|(t, c)| (*t, c * &inv)).collect();
                let mut repr = self.elems[i].repr.clone().unwrap();
                for (k, qk) in quot.iter().enumerate() {
                    if !qk.is_zero() {
                        let gr = self.elems[k].repr.as_ref().unwrap().clone();
                        for (slot, g) in repr.iter_mut().zip(gr.iter()) {
                            *slot = slot.sub(&qk.mul(g));
                        }
                    }
                }
                let repr: Vec<Poly> = repr.iter().map(|p| p.scale(&inv)).collect();
                // keep the integer form for further reductions
                let (iterms, _) = rational_to_int(&terms);
                self.elems[i].lt = iterms[0].0;
                self.elems[i].lc = iterms[0].1.clone();
                self.elems[i].terms = iterms;
                self.elems[i].alive = true;
                basis.push(from_rational_terms(&self.ring, self.rank, &terms));
                reprs.push(repr);
            } else {
                let (reduced, _) = self.reduce_int(self.elems[i].terms.clone());
                assert!(!reduced.is_empty(), "minimal element reduced to zero");
                let lc = Coeff::from_integer(reduced[0].1.clone());
                let monic: Vec<(ModTerm, Coeff)> = reduced
                    .iter()
                    .map(|(t, c)| (*t, Coeff::from_integer(c.clone()) / &lc))
                    .collect();
                self.elems[i].lt = reduced[0].0;
                self.elems[i].lc = reduced[0].1.clone();
                self.elems[i].terms = reduced;
                self.elems[i].alive = true;
                basis.push(from_rational_terms(&self.ring, self.rank, &monic));
            }
        }
        GbOutput {
            basis,
            reprs: self.track.then_some(reprs),
        }
    }
}

fn to_rational_terms(v: &Vect, order: &ModuleOrder) -> Vec<(ModTerm, Coeff)> {
    let mut terms: Vec<(ModTerm, Coeff)> = Vec::new();
    for (pos, p) in v.comps().iter().enumerate() {
        for (mono, c) in p.terms() {
            terms.push((ModTerm { mono: *mono, pos }, c.clone()));
        }
    }
    terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
    terms
}

fn from_rational_terms(ring: &GradedRing, rank: usize, terms: &[(ModTerm, Coeff)]) -> Vect {
    let mut comps = vec![Poly::zero(ring); rank];
    for (t, c) in terms {
        comps[t.pos] = comps[t.pos].add(&Poly::monomial(ring, t.mono, c.clone()));
    }
    Vect::new(comps)
}

/// `a - f * x^m * b` with rational `a`, integer `b`; sorted descending.
fn rational_merge(
    a: &[(ModTerm, Coeff)],
    b: &[(ModTerm, BigInt)],
    m: &Exponents,
    f: &Coeff,
    order: &ModuleOrder,
) -> Vec<(ModTerm, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bt = ModTerm {
            mono: b[j].0.mono.mul(m),
            pos: b[j].0.pos,
        };
        match order.cmp(&a[i].0, &bt) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bt, -(f * Coeff::from_integer(b[j].1.clone()))));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &a[i].1 - f * Coeff::from_integer(b[j].1.clone());
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((
            ModTerm {
                mono: b[j].0.mono.mul(m),
                pos: b[j].0.pos,
            },
            -(f * Coeff::from_integer(b[j].1.clone())),
        ));
        j += 1;
    }
    out
}

/// Integer primitive form of a rational term list; returns the factor that
/// scales the rational input onto the integer output.
fn rational_to_int(terms: &[(ModTerm, Coeff)]) -> (ITerms, Coeff) {
    let mut den_lcm = BigInt::one();
    for (_, c) in terms {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut out: ITerms = terms
        .iter()
        .map(|(t, c)| (*t, c.numer() * (&den_lcm / c.denom())))
        .collect();
    let divided = divide_content(&mut out);
    (
        out,
        Coeff::from_integer(den_lcm) / Coeff::from_integer(divided),
    )
}

fn input_content_of(v: &Vect) -> Coeff {
    // content divided out by to_int_terms: lcm of denominators inverted,
    // gcd of the resulting integers
    let mut den_lcm = BigInt::one();
    for p in v.comps() {
        for (_, c) in p.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    let mut g = BigInt::zero();
    'outer: for p in v.comps() {
        for (_, c) in p.terms() {
            let whole = c.numer() * (&den_lcm / c.denom());
            g = g.gcd(&whole);
            if g.is_one() {
                break 'outer;
            }
        }
    }
    if g.is_zero() {
        return Coeff::one();
    }
    Coeff::from_integer(g) / Coeff::from_integer(den_lcm)
}

pub struct GbOutput {
    /// Reduced Gröbner basis.
    pub basis: Vec<Vect>,
    /// `basis[k] = sum_i reprs[k][i] * inputs[i]` when tracking was enabled.
    pub reprs: Option<Vec<Vec<Poly>>>,
}

/// Reduced Gröbner basis of the submodule generated by `inputs`.
pub fn groebner_vect(
    inputs: &[Vect],
    ring: &GradedRing,
    order: &ModuleOrder,
    track: bool,
) -> GbOutput {
    let mut st = GbState::new(ring, order.clone(), track);
    for v in inputs {
        st.add_input(v);
    }
    st.complete();
    st.finish()
}

/// Full normal form of `v` against `basis` (assumed a Gröbner basis).
pub fn normal_form_vect(v: &Vect, basis: &[Vect], ring: &GradedRing, order: &ModuleOrder) -> Vect {
    let mut st = GbState::new(ring, order.clone(), false);
    for b in basis {
        st.add_basis_unchecked(b);
    }
    st.normal_form(v)
}

/// Does every S-vector of `basis` reduce to zero? (Buchberger's criterion;
/// used by tests and verification suites.)
pub fn is_groebner_basis(basis: &[Vect], ring: &GradedRing, order: &ModuleOrder) -> bool {
    let mut st = GbState::new(ring, order.clone(), false);
    for b in basis {
        st.add_basis_unchecked(b);
    }
    for i in 0..st.elems.len() {
        for j in (i + 1)..st.elems.len() {
            let (lti, ltj) = (st.elems[i].lt, st.elems[j].lt);
            if lti.pos != ltj.pos {
                continue;
            }
            let lcm = lti.mono.lcm(&ltj.mono);
            let mi = lcm.div(&lti.mono).unwrap();
            let mj = lcm.div(&ltj.mono).unwrap();
            let scaled_i: ITerms = st.elems[i]
                .terms
                .iter()
                .map(|(t, c)| {
                    (
                        ModTerm {
                            mono: t.mono.mul(&mi),
                            pos: t.pos,
                        },
                        c.clone(),
                    )
                })
                .collect();
            let spoly = int_merge(
                &st.elems[j].lc,
                &scaled_i,
                &st.elems[i].lc,
                &mj,
                &st.elems[j].terms,
                &st.order,
            );
            if !st.reduce_int(spoly).0.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Generators of the syzygy module of `inputs`: all `v` in `A^n` with
/// `sum v_i * inputs[i] = 0`. Schreyer syzygies of the computed basis are
/// transported back through the transformation matrix, and one relation
/// `e_i - division(input_i)` is added per input.
pub fn syzygies_vect(inputs: &[Vect], ring: &GradedRing, order: &ModuleOrder) -> Vec<Vect> {
    let n = inputs.len();
    if n == 0 {
        return Vec::new();
    }
    let mut st = GbState::new(ring, order.clone(), true);
    for v in inputs {
        st.add_input(v);
    }
    st.complete();
    let out = st.finish();
    let basis = &out.basis;
    let reprs = out.reprs.as_ref().unwrap();
    let s = basis.len();

    let mut nf = GbState::new(ring, order.clone(), false);
    for b in basis {
        nf.add_basis_unchecked(b);
    }

    let mut syzygies: Vec<Vect> = Vec::new();
    let mut push_from_basis_coords = |coords: Vec<Poly>| {
        let mut v = vec![Poly::zero(ring); n];
        for (k, ck) in coords.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (slot, r) in v.iter_mut().zip(reprs[k].iter()) {
                *slot = slot.add(&ck.mul(r));
            }
        }
        let v = Vect::new(v);
        if !v.is_zero() {
            syzygies.push(v);
        }
    };

    // Schreyer: one syzygy per same-position pair of basis elements
    for i in 0..s {
        for j in (i + 1)..s {
            let (Some((lti, ci)), Some((ltj, cj))) =
                (basis[i].leading_term(order), basis[j].leading_term(order))
            else {
                continue;
            };
            if lti.pos != ltj.pos {
                continue;
            }
            let lcm = lti.mono.lcm(&ltj.mono);
            let mi = lcm.div(&lti.mono).unwrap();
            let mj = lcm.div(&ltj.mono).unwrap();
            let ai = Poly::monomial(ring, mi, cj.clone());
            let aj = Poly::monomial(ring, mj, ci.clone());
            let spoly = basis[i].mul_poly(&ai).sub(&basis[j].mul_poly(&aj));
            let (rem, q) = nf.normal_form_with_quotients(&spoly);
            assert!(
                rem.is_zero(),
                "S-vector of a Gröbner basis must reduce to zero"
            );
            let mut coords = vec![Poly::zero(ring); s];
            coords[i] = ai;
            coords[j] = coords[j].sub(&aj);
            for (k, qk) in q.iter().enumerate() {
                coords[k] = coords[k].sub(qk);
            }
            push_from_basis_coords(coords);
        }
    }

    // relations recording how each input divides by the basis
    for (i, v) in inputs.iter().enumerate() {
        if v.is_zero() {
            let mut e = vec![Poly::zero(ring); n];
            e[i] = Poly::one(ring);
            syzygies.push(Vect::new(e));
            continue;
        }
        let (rem, q) = nf.normal_form_with_quotients(v);
        assert!(rem.is_zero(), "input must divide to zero by its own basis");
        let mut w = vec![Poly::zero(ring); n];
        w[i] = Poly::one(ring);
        for (k, qk) in q.iter().enumerate() {
            if qk.is_zero() {
                continue;
            }
            for (slot, r) in w.iter_mut().zip(reprs[k].iter()) {
                *slot = slot.sub(&qk.mul(r));
            }
        }
        let w = Vect::new(w);
        if !w.is_zero() {
            syzygies.push(w);
        }
    }
    syzygies
}

/// Rank-1 module order: the ideal case.
pub fn ideal_order(base: MonomialOrder) -> ModuleOrder {
    ModuleOrder::new(base, vec![0])
}

/// Membership with coefficient recovery: expresses module elements as
/// explicit combinations of a fixed generator list.
pub struct Expressor {
    state: GbState,
    reprs: Vec<Vec<Poly>>,
    n_inputs: usize,
}

impl Expressor {
    pub fn new(inputs: &[Vect], ring: &GradedRing, order: &ModuleOrder) -> Self {
        let out = groebner_vect(inputs, ring, order, true);
        let mut state = GbState::new(ring, order.clone(), false);
        for b in &out.basis {
            state.add_basis_unchecked(b);
        }
        Expressor {
            state,
            reprs: out.reprs.expect("tracking enabled"),
            n_inputs: inputs.len(),
        }
    }

    /// `v = sum out[i] * inputs[i]`, or `None` when `v` is not a member.
    pub fn express(&self, v: &Vect) -> Option<Vec<Poly>> {
        let ring = self.state.ring.clone();
        let (rem, q) = self.state.normal_form_with_quotients(v);
        if !rem.is_zero() {
            return None;
        }
        let mut out = vec![Poly::zero(&ring); self.n_inputs];
        for (k, qk) in q.iter().enumerate() {
            if qk.is_zero() {
                continue;
            }
            for (slot, r) in out.iter_mut().zip(self.reprs[k].iter()) {
                *slot = slot.add(&qk.mul(r));
            }
        }
        Some(out)
    }
}
