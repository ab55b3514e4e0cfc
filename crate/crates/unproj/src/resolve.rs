//! Restriction-of-scalars presentations, minimal graded free resolutions,
//! Betti tables, and lifting of columns through matrices.

use thiserror::Error;

use crate::gb::{groebner_vect, Expressor, Vect};
use crate::hilbert::{free_series, monomial_quotient_series};
use crate::ideal::{AlgebraError, FreeModule, Submodule};
use crate::matrix::{GradedMatrix, MatrixError};
use crate::order::{ModuleOrder, MonomialOrder};
use crate::poly::Poly;
use crate::ring::GradedRing;

#[derive(Debug, Error)]
pub enum ResolveError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("module generators must be monomials in the dropped variables, including 1")]
    BadModuleGens,
    #[error("module generators do not generate: quotient dimensions diverge at degree {0}")]
    GensDoNotGenerate(i64),
    #[error("column {0} lies outside the column module")]
    ColumnOutside(usize),
}

/// A chain of graded matrices `L0 <- L1 <- ... <- Lk`.
#[derive(Clone, Debug)]
pub struct Resolution {
    differentials: Vec<GradedMatrix>,
    degrees: Vec<Vec<i64>>,
    complete: bool,
    minimal: bool,
}

impl Resolution {
    /// Number of differentials.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// `d_k : L_k -> L_{k-1}` for `k = 1..=length`.
    pub fn differential(&self, k: usize) -> &GradedMatrix {
        &self.differentials[k - 1]
    }

    pub fn differentials(&self) -> &[GradedMatrix] {
        &self.differentials
    }

    /// Generator degrees of `L_k` for `k = 0..=length`.
    pub fn degrees(&self, k: usize) -> &[i64] {
        &self.degrees[k]
    }

    /// Reached the zero module (rather than the length cap).
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable(
            self.degrees
                .iter()
                .map(|d| {
                    let mut s = d.clone();
                    s.sort_unstable();
                    s
                })
                .collect(),
        )
    }

    pub fn check(&self) -> ComplexCheck {
        check_complex(&self.differentials)
    }
}

/// Sorted generator-degree multisets per homological position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable(pub Vec<Vec<i64>>);

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, degs) in self.0.iter().enumerate() {
            let list: Vec<String> = degs.iter().map(|d| d.to_string()).collect();
            writeln!(f, "L{k}: {}", list.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCheck {
    pub ok: bool,
    /// `(k, i, j)`: entry `(i,j)` of `d_k * d_{k+1}` is nonzero.
    pub failure: Option<(usize, usize, usize)>,
}

/// Do all consecutive products vanish identically?
pub fn check_complex(differentials: &[GradedMatrix]) -> ComplexCheck {
    for k in 0..differentials.len().saturating_sub(1) {
        let prod = match differentials[k].mul(&differentials[k + 1]) {
            Ok(p) => p,
            Err(_) => {
                return ComplexCheck {
                    ok: false,
                    failure: Some((k + 1, 0, 0)),
                }
            }
        };
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                if !prod.entry(i, j).is_zero() {
                    return ComplexCheck {
                        ok: false,
                        failure: Some((k + 1, i, j)),
                    };
                }
            }
        }
    }
    ComplexCheck {
        ok: true,
        failure: None,
    }
}

/// Minimal graded free resolution of `coker(presentation)` by iterated
/// syzygies, taking a minimal generating set of each syzygy kernel. Stops at
/// the zero module or after `max_length` differentials (the presentation
/// counts as the first).
pub fn free_resolution(
    presentation: &GradedMatrix,
    max_length: usize,
) -> Result<Resolution, ResolveError> {
    let ring = presentation.ring().clone();
    // minimalize the presentation columns first
    let d1 = minimalize_columns(presentation)?;
    let minimal_input = d1.has_no_unit_entry();
    let mut degrees = vec![d1.row_degrees().to_vec(), d1.col_degrees().to_vec()];
    let mut differentials = vec![d1];
    let mut complete = false;
    while differentials.len() < max_length {
        let current = differentials.last().unwrap();
        let cols = current.columns_as_vects();
        let order = ModuleOrder::new(
            MonomialOrder::grevlex(&ring),
            current.row_degrees().to_vec(),
        );
        let syz = crate::gb::syzygies_vect(&cols, &ring, &order);
        let ambient = FreeModule::new(&ring, current.col_degrees().to_vec());
        let min = Submodule::new(ambient, syz).minimal_generators()?;
        if min.is_empty() {
            complete = true;
            break;
        }
        let shifts = current.col_degrees().to_vec();
        let col_degs: Vec<i64> = min
            .iter()
            .map(|v| {
                v.homogeneous_degree(&shifts)
                    .expect("syzygies of graded input are graded")
            })
            .collect();
        let next = GradedMatrix::from_columns(&ring, shifts, &min, col_degs)?;
        debug_assert!(next.has_no_unit_entry(), "minimal syzygy step produced a unit");
        degrees.push(next.col_degrees().to_vec());
        differentials.push(next);
    }
    if !complete {
        // a final empty syzygy module may coincide with the cap
        let current = differentials.last().unwrap();
        let cols = current.columns_as_vects();
        let order = ModuleOrder::new(
            MonomialOrder::grevlex(&ring),
            current.row_degrees().to_vec(),
        );
        let syz = crate::gb::syzygies_vect(&cols, &ring, &order);
        if syz.iter().all(Vect::is_zero) {
            complete = true;
        }
    }
    let minimal = minimal_input
        && differentials.iter().all(GradedMatrix::has_no_unit_entry);
    Ok(Resolution {
        differentials,
        degrees,
        complete,
        minimal,
    })
}

fn minimalize_columns(m: &GradedMatrix) -> Result<GradedMatrix, ResolveError> {
    let ring = m.ring().clone();
    let ambient = FreeModule::new(&ring, m.row_degrees().to_vec());
    let sub = Submodule::new(ambient, m.columns_as_vects());
    let min = sub.minimal_generators()?;
    let shifts = m.row_degrees().to_vec();
    let col_degs: Vec<i64> = min
        .iter()
        .map(|v| v.homogeneous_degree(&shifts).expect("graded"))
        .collect();
    Ok(GradedMatrix::from_columns(&ring, shifts, &min, col_degs)?)
}

/// Lift: a matrix `N` with `M * N = C`, obtained by expressing each column
/// of `C` through the columns of `M` (normal-form based, deterministic).
pub fn lift_columns(m: &GradedMatrix, c: &GradedMatrix) -> Result<GradedMatrix, ResolveError> {
    if m.row_degrees() != c.row_degrees() {
        return Err(MatrixError::Shape.into());
    }
    let ring = m.ring().clone();
    let order = ModuleOrder::new(MonomialOrder::grevlex(&ring), m.row_degrees().to_vec());
    let expressor = Expressor::new(&m.columns_as_vects(), &ring, &order);
    let mut n_cols = Vec::with_capacity(c.cols());
    for j in 0..c.cols() {
        let col = Vect::new((0..c.rows()).map(|i| c.entry(i, j).clone()).collect());
        let coeffs = expressor
            .express(&col)
            .ok_or(ResolveError::ColumnOutside(j))?;
        n_cols.push(Vect::new(coeffs));
    }
    Ok(GradedMatrix::from_columns(
        &ring,
        m.col_degrees().to_vec(),
        &n_cols,
        c.col_degrees().to_vec(),
    )?)
}

/// The restriction-of-scalars pipeline: present the coordinate ring of a
/// graph quotient as a module over the kept-variable subring.
///
/// `graph_relations` cut out the graph inside `big` (each dropped variable
/// expressed by its defining equation); `module_gens` are monomials in the
/// dropped variables, one of which must be 1. The steps: build the relation
/// rows, Gröbnerise under an order eliminating the dropped variables, keep
/// the rows free of them, and minimalize over the kept subring. The result
/// maps `L1 -> L0` with rows paired to `module_gens`.
pub fn restriction_presentation(
    big: &GradedRing,
    graph_relations: &[Poly],
    module_gens: &[Poly],
    drop: &[usize],
) -> Result<GradedMatrix, ResolveError> {
    let mut drop_sorted: Vec<usize> = drop.to_vec();
    drop_sorted.sort_unstable();
    drop_sorted.dedup();
    let keep: Vec<usize> = (0..big.arity()).filter(|i| !drop_sorted.contains(i)).collect();
    if keep.is_empty() {
        return Err(AlgebraError::NothingLeft.into());
    }

    // generators: monomials in the dropped variables, 1 among them
    let one_idx = module_gens
        .iter()
        .position(Poly::is_one)
        .ok_or(ResolveError::BadModuleGens)?;
    let mut shifts = Vec::with_capacity(module_gens.len());
    for g in module_gens {
        if g.num_terms() != 1 || !g.free_of(&keep) {
            return Err(ResolveError::BadModuleGens);
        }
        shifts.push(g.homogeneous_degree().ok_or(ResolveError::BadModuleGens)?);
    }

    let rank = module_gens.len();
    let mut rows: Vec<Vect> = Vec::new();
    for (i, g) in module_gens.iter().enumerate() {
        if i == one_idx {
            continue;
        }
        let mut comps = vec![Poly::zero(big); rank];
        comps[one_idx] = g.clone();
        comps[i] = Poly::one(big).neg();
        rows.push(Vect::new(comps));
    }
    for rel in graph_relations {
        let mut comps = vec![Poly::zero(big); rank];
        comps[one_idx] = rel.clone();
        rows.push(Vect::new(comps));
    }

    // Gröbnerise with the dropped block eliminated first
    let elim_order = ModuleOrder::new(
        MonomialOrder::eliminating(big, &drop_sorted),
        shifts.clone(),
    );
    let out = groebner_vect(&rows, big, &elim_order, false);

    // keep the dropped-variable-free rows, over the kept subring
    let small = big.subring(&keep);
    let kept_rows: Vec<Vect> = out
        .basis
        .iter()
        .filter(|v| v.free_of(&drop_sorted))
        .map(|v| Vect::new(v.comps().iter().map(|p| p.transfer(&small)).collect()))
        .collect();

    let ambient = FreeModule::new(&small, shifts.clone());
    let sub = Submodule::new(ambient, kept_rows);
    let minimal = sub.minimal_generators()?;

    // consistency: the presented module must have the Hilbert function of
    // the coordinate ring on the dropped variables
    let dropped_ring = big.subring(&drop_sorted);
    let max_rel_degree = minimal
        .iter()
        .filter_map(|v| v.homogeneous_degree(&shifts))
        .max()
        .unwrap_or(0);
    let bound = max_rel_degree + small.weights().iter().max().copied().unwrap_or(1) + 5;
    let base = MonomialOrder::grevlex(&small);
    let basis = sub.groebner_basis(&base);
    let module_order = ModuleOrder::new(base.clone(), shifts.clone());
    let mut lead_by_pos: Vec<Vec<crate::ring::Exponents>> = vec![Vec::new(); rank];
    for v in basis.iter() {
        let (lt, _) = v.leading_term(&module_order).expect("nonzero");
        lead_by_pos[lt.pos].push(lt.mono);
    }
    let expected = free_series(&dropped_ring, bound);
    let mut got = vec![0i64; bound as usize + 1];
    for (pos, leads) in lead_by_pos.iter().enumerate() {
        let q = monomial_quotient_series(&small, leads, bound);
        for d in 0..=(bound as usize) {
            let shifted = d as i64 - shifts[pos];
            if shifted >= 0 {
                got[d] += q[shifted as usize];
            }
        }
    }
    for d in 0..=(bound as usize) {
        if got[d] != expected[d] {
            return Err(ResolveError::GensDoNotGenerate(d as i64));
        }
    }

    let col_degs: Vec<i64> = minimal
        .iter()
        .map(|v| v.homogeneous_degree(&shifts).expect("graded"))
        .collect();
    Ok(GradedMatrix::from_columns(&small, shifts, &minimal, col_degs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring(names: &[&str], weights: &[i64]) -> GradedRing {
        GradedRing::new(names.to_vec(), weights.to_vec()).unwrap()
    }

    #[test]
    fn koszul_resolution_of_two_variables() {
        let r = ring(&["x", "y"], &[1, 1]);
        let pres = GradedMatrix::new(
            &r,
            vec![vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()]],
            vec![0],
            vec![1, 1],
        )
        .unwrap();
        let res = free_resolution(&pres, 10).unwrap();
        assert!(res.is_complete());
        assert!(res.is_minimal());
        assert_eq!(res.length(), 2);
        assert_eq!(res.degrees(2), &[2]);
        // the single syzygy is (-y, x) up to sign
        let d2 = res.differential(2);
        let a = d2.entry(0, 0);
        let b = d2.entry(1, 0);
        let y = parse_poly("y", &r).unwrap();
        let x = parse_poly("x", &r).unwrap();
        assert!(
            (a == &y.neg() && b == &x) || (a == &y && b == &x.neg()),
            "unexpected Koszul syzygy ({a}, {b})"
        );
        assert!(res.check().ok);
    }

    #[test]
    fn complex_check_reports_offender() {
        let r = ring(&["x", "y"], &[1, 1]);
        let d1 = GradedMatrix::new(
            &r,
            vec![vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()]],
            vec![0],
            vec![1, 1],
        )
        .unwrap();
        let d2_bad = GradedMatrix::new(
            &r,
            vec![
                vec![parse_poly("y", &r).unwrap()],
                vec![parse_poly("x", &r).unwrap()],
            ],
            vec![1, 1],
            vec![2],
        )
        .unwrap();
        let chk = check_complex(&[d1.clone(), d2_bad]);
        assert!(!chk.ok);
        assert_eq!(chk.failure, Some((1, 0, 0)));
        assert!(check_complex(&[d1]).ok);
        assert!(check_complex(&[]).ok);
    }

    #[test]
    fn lift_trivial_cases() {
        let r = ring(&["x", "y"], &[1, 1]);
        let m = GradedMatrix::new(
            &r,
            vec![vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()]],
            vec![0],
            vec![1, 1],
        )
        .unwrap();
        // C = 0 lifts to 0
        let zero = GradedMatrix::new(&r, vec![vec![Poly::zero(&r)]], vec![0], vec![3]).unwrap();
        let n = lift_columns(&m, &zero).unwrap();
        assert!(n.is_zero());
        // C = M lifts to something with M*N = M
        let n2 = lift_columns(&m, &m).unwrap();
        assert_eq!(m.mul(&n2).unwrap(), m);
        // a column outside the module errors with its index
        let c_bad =
            GradedMatrix::new(&r, vec![vec![parse_poly("1", &r).unwrap()]], vec![0], vec![0])
                .unwrap();
        match lift_columns(&m, &c_bad) {
            Err(ResolveError::ColumnOutside(0)) => {}
            other => panic!("expected ColumnOutside(0), got {other:?}"),
        }
    }

    #[test]
    fn trivial_restriction_is_free() {
        // graph x = u, keep {x}, generators {1}: free module, no relations
        let big = ring(&["u", "x"], &[1, 1]);
        let rel = parse_poly("x - u", &big).unwrap();
        let one = Poly::one(&big);
        let m = restriction_presentation(&big, &[rel], &[one], &[0]).unwrap();
        assert_eq!(m.cols(), 0);
        assert_eq!(m.rows(), 1);
    }

    #[test]
    fn missing_generators_detected() {
        // graph x = u^2, keep {x}, generators {1}: k[u] needs (1, u) over
        // k[x], so {1} does not generate
        let big = ring(&["u", "x"], &[1, 2]);
        let rel = parse_poly("x - u^2", &big).unwrap();
        let one = Poly::one(&big);
        match restriction_presentation(&big, &[rel.clone()], &[one.clone()], &[0]) {
            Err(ResolveError::GensDoNotGenerate(_)) => {}
            other => panic!("expected failure, got {other:?}"),
        }
        // with (1, u) the module is free of rank 2: no relation columns
        let u = Poly::var(&big, 0);
        let m = restriction_presentation(&big, &[rel], &[one, u], &[0]).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 0);
    }

    #[test]
    fn cuspidal_restriction_has_two_relations() {
        // graph x = u^2, y = u^3, keep {x,y}, generators (1, u):
        // relations (y, -x) and (x^2, -y)
        let big = ring(&["u", "x", "y"], &[1, 2, 3]);
        let rels = [
            parse_poly("x - u^2", &big).unwrap(),
            parse_poly("y - u^3", &big).unwrap(),
        ];
        let gens = [Poly::one(&big), Poly::var(&big, 0)];
        let m = restriction_presentation(&big, &rels, &gens, &[0]).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 2);
        assert_eq!(m.row_degrees(), &[0, 1]);
        let mut cd = m.col_degrees().to_vec();
        cd.sort_unstable();
        assert_eq!(cd, vec![3, 4]);
        // each column is a relation: a*1 + b*u maps to zero under u-substitution
        let small = m.ring().clone();
        let uu = GradedRing::new(vec!["u"], vec![1]).unwrap();
        let u1 = Poly::var(&uu, 0);
        let sub = crate::poly::RingMap::new(&small, &uu, vec![u1.pow(2), u1.pow(3)]);
        for j in 0..m.cols() {
            let val = sub.apply(m.entry(0, j)).add(&sub.apply(m.entry(1, j)).mul(&u1));
            assert!(val.is_zero(), "column {j} is not a relation");
        }
    }
}
