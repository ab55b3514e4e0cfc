//! Brute-force oracle for elimination: in each degree, the dimension of the
//! elimination ideal must equal the dimension of `I ∩ k[kept vars]` computed
//! by pure linear algebra on Macaulay matrices (no Gröbner machinery).

use unproj::ideal::Ideal;
use unproj::linalg::QMatrix;
use unproj::parse::parse_poly;
use unproj::poly::{Coeff, Poly};
use unproj::ring::GradedRing;

/// Dimension of the degree-`d` part of the ideal spanned by `gens`, as a
/// subspace of the degree-`d` monomials of `ring`.
fn macaulay_rows(gens: &[Poly], ring: &GradedRing, d: i64) -> Vec<Vec<Coeff>> {
    let monos = ring.monomials_of_degree(d);
    let col_of = |e: &unproj::ring::Exponents| monos.iter().position(|m| m == e).unwrap();
    let mut rows = Vec::new();
    for g in gens {
        let dg = g.homogeneous_degree().expect("homogeneous oracle input");
        if dg > d {
            continue;
        }
        for m in ring.monomials_of_degree(d - dg) {
            let prod = g.mul_term(&m, &unproj::poly::coeff_int(1));
            let mut row = vec![unproj::poly::coeff_int(0); monos.len()];
            for (e, c) in prod.terms() {
                row[col_of(e)] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// dim of (ideal ∩ k[kept])_d by row reduction with the dropped-variable
/// monomial columns ordered first.
fn intersection_dim(gens: &[Poly], ring: &GradedRing, drop: &[usize], d: i64) -> usize {
    let monos = ring.monomials_of_degree(d);
    let mut order: Vec<usize> = (0..monos.len()).collect();
    // dropped-variable monomials first
    order.sort_by_key(|&i| monos[i].free_of(drop));
    let rows = macaulay_rows(gens, ring, d);
    if rows.is_empty() {
        return 0;
    }
    let permuted: Vec<Vec<Coeff>> = rows
        .iter()
        .map(|r| order.iter().map(|&i| r[i].clone()).collect())
        .collect();
    let n_dropped = monos.iter().filter(|m| !m.free_of(drop)).count();
    let mut m = QMatrix::from_rows(permuted);
    let pivots = m.rref();
    pivots.iter().filter(|&&p| p >= n_dropped).count()
}

fn ideal_dim_in_degree(gens: &[Poly], ring: &GradedRing, d: i64) -> usize {
    let rows = macaulay_rows(gens, ring, d);
    if rows.is_empty() {
        return 0;
    }
    QMatrix::from_rows(rows).rank()
}

fn check_against_oracle(ring: &GradedRing, gens: &[&str], drop: &[usize], max_degree: i64) {
    let polys: Vec<Poly> = gens.iter().map(|t| parse_poly(t, ring).unwrap()).collect();
    let ideal = Ideal::new(ring, polys.clone());
    let elim = ideal.eliminate(drop).unwrap();
    let keep: Vec<usize> = (0..ring.arity()).filter(|i| !drop.contains(i)).collect();
    let small = ring.subring(&keep);
    for d in 0..=max_degree {
        let want = intersection_dim(&polys, ring, drop, d);
        let got = ideal_dim_in_degree(elim.gens(), &small, d);
        assert_eq!(
            want, got,
            "degree {d}: oracle dim {want} but elimination ideal has dim {got}"
        );
    }
    // containment direction: every elimination generator expands into the
    // original ideal
    for g in elim.gens() {
        let lifted = g.transfer(ring);
        assert!(ideal.contains(&lifted), "elimination generator outside ideal");
    }
}

#[test]
fn twisted_cubic_style_graph() {
    let r = GradedRing::new(vec!["u", "x", "y", "z"], vec![1, 1, 2, 3]).unwrap();
    check_against_oracle(&r, &["x - u", "y - u^2", "z - u^3"], &[0], 20);
}

#[test]
fn weighted_plane_graph() {
    let r = GradedRing::new(vec!["u", "v", "a", "b"], vec![1, 2, 2, 3]).unwrap();
    check_against_oracle(&r, &["a - u^2", "b - u*v"], &[0, 1], 20);
    check_against_oracle(&r, &["a - v", "b - u^3"], &[0], 18);
}

#[test]
fn non_graph_instances() {
    let r = GradedRing::new(vec!["x", "y", "z"], vec![1, 1, 1]).unwrap();
    check_against_oracle(&r, &["x*y - z^2", "x^2 - y*z"], &[0], 16);
    check_against_oracle(&r, &["x^2 + y^2 + z^2", "x*y + y*z"], &[2], 16);
    // dropping nothing: elimination equals the ideal itself
    check_against_oracle(&r, &["x^3 - y^2*z", "y^3 - z^3"], &[], 14);
}

#[test]
fn small_weighted_curve() {
    let r = GradedRing::new(vec!["u", "v", "x", "y"], vec![2, 3, 4, 6]).unwrap();
    check_against_oracle(&r, &["x - u^2", "y - v^2"], &[0, 1], 24);
}

#[test]
fn main_graph_eliminates_to_the_image_ideal() {
    let (ring_s, graph) = unproj::fixtures::graph_ideal();
    let ideal = Ideal::new(&ring_s, graph);
    let drop = [0usize, 1];
    let elim = ideal.eliminate(&drop).unwrap();

    // the displayed degree-23 generator equals x*g19 - y*f18, so the minimal
    // generating set stops at degree 22 ...
    let mut degrees: Vec<i64> = elim
        .gens()
        .iter()
        .map(|g| g.homogeneous_degree().unwrap())
        .collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![18, 19, 20, 21, 22]);

    // ... while the reduced Groebner basis carries the reported multiset
    let gb = elim.groebner_basis(&unproj::order::MonomialOrder::grevlex(elim.ring()));
    let mut gb_degrees: Vec<i64> = gb
        .iter()
        .map(|g| g.homogeneous_degree().unwrap())
        .collect();
    gb_degrees.sort_unstable();
    assert_eq!(gb_degrees, vec![18, 19, 20, 21, 22, 23]);

    let (ring_r, image) = unproj::fixtures::image_ideal();
    assert_eq!(elim.ring(), &ring_r);
    let expected = Ideal::new(&ring_r, image);
    assert!(elim.equals(&expected), "elimination differs from the image ideal");

    // the redundancy itself, as an exact identity
    let f18 = &expected.gens()[0];
    let g19 = &expected.gens()[1];
    let x = Poly::var(&ring_r, 0);
    let y = Poly::var(&ring_r, 1);
    assert_eq!(x.mul(g19).sub(&y.mul(f18)), expected.gens()[5]);
}
