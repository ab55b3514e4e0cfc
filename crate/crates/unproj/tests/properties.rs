//! Randomized property suites: parser round-trips, ring and order axioms,
//! Gröbner invariants, Pfaffian identities, Hilbert-series oracle agreement.

use proptest::prelude::*;

use unproj::gb::Vect;
use unproj::hilbert::monomial_quotient_series;
use unproj::ideal::{confirms_buchberger, normal_form, Ideal};
use unproj::linalg::QMatrix;
use unproj::order::MonomialOrder;
use unproj::parse::parse_poly;
use unproj::pfaffian::SkewPfaffianMatrix;
use unproj::poly::{coeff_int, Coeff, Poly};
use unproj::ring::{Exponents, GradedRing};

fn test_ring() -> GradedRing {
    GradedRing::new(vec!["x", "y", "z"], vec![1, 2, 3]).unwrap()
}

fn arb_mono() -> impl Strategy<Value = Exponents> {
    (0u16..5, 0u16..4, 0u16..3).prop_map(|(a, b, c)| Exponents::from_slice(&[a, b, c]))
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((arb_mono(), -9i64..10), 0..6).prop_map(|terms| {
        let ring = test_ring();
        Poly::from_terms(&ring, terms.into_iter().map(|(e, c)| (e, coeff_int(c))))
    })
}

proptest! {
    #[test]
    fn print_parse_roundtrip(p in arb_poly()) {
        let ring = test_ring();
        let text = p.to_string();
        let q = parse_poly(&text, &ring).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn degree_multiplicativity(a in arb_poly(), b in arb_poly()) {
        if let (Some(da), Some(db)) = (a.homogeneous_degree(), b.homogeneous_degree()) {
            let prod = a.mul(&b);
            prop_assert_eq!(prod.homogeneous_degree(), Some(da + db));
        }
    }

    #[test]
    fn order_multiplicative(m1 in arb_mono(), m2 in arb_mono(), m in arb_mono()) {
        let ring = test_ring();
        for order in [MonomialOrder::grevlex(&ring), MonomialOrder::eliminating(&ring, &[1])] {
            let base = order.cmp(&m1, &m2);
            prop_assert_eq!(order.cmp(&m1.mul(&m), &m2.mul(&m)), base);
            prop_assert_eq!(order.cmp(&m2, &m1), base.reverse());
            prop_assert_ne!(
                order.cmp(&m1.mul(&m), &Exponents::one()),
                std::cmp::Ordering::Less
            );
        }
    }

    #[test]
    fn normal_form_absorbs_ideal_multiples(
        g in arb_poly(),
        f in arb_poly(),
        r in arb_poly(),
    ) {
        prop_assume!(!g.is_zero());
        let ring = test_ring();
        let ideal = Ideal::new(&ring, vec![g.clone()]);
        let order = MonomialOrder::grevlex(&ring);
        let lhs = ideal.normal_form(&f.mul(&g).add(&r), &order);
        let rhs = ideal.normal_form(&r, &order);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_of_explicit_combinations(
        a in arb_poly(),
        b in arb_poly(),
        g1 in arb_poly(),
        g2 in arb_poly(),
    ) {
        prop_assume!(!g1.is_zero() || !g2.is_zero());
        let ring = test_ring();
        let ideal = Ideal::new(&ring, vec![g1.clone(), g2.clone()]);
        let member = a.mul(&g1).add(&b.mul(&g2));
        prop_assert!(ideal.contains(&member));
    }

    #[test]
    fn groebner_idempotent_and_confirmed(
        g1 in arb_poly(),
        g2 in arb_poly(),
    ) {
        let ring = test_ring();
        let order = MonomialOrder::grevlex(&ring);
        let ideal = Ideal::new(&ring, vec![g1, g2]);
        let b1 = ideal.groebner_basis(&order);
        prop_assert!(confirms_buchberger(&b1, &ring, &order));
        let again = Ideal::new(&ring, b1.to_vec());
        let b2 = again.groebner_basis(&order);
        prop_assert_eq!(&*b1, &*b2);
    }

    #[test]
    fn syzygies_annihilate(
        g1 in arb_poly(),
        g2 in arb_poly(),
        g3 in arb_poly(),
    ) {
        let ring = test_ring();
        let gens: Vec<Poly> = [g1, g2, g3].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(&ring, gens.clone());
        for s in ideal.syzygies() {
            let mut acc = Poly::zero(&ring);
            for (c, g) in s.comps().iter().zip(&gens) {
                acc = acc.add(&c.mul(g));
            }
            prop_assert!(acc.is_zero());
        }
    }

    #[test]
    fn pfaffian_alternating(perm in proptest::sample::select(vec![
        [0usize, 1, 2, 3], [1, 0, 2, 3], [2, 1, 0, 3], [3, 1, 2, 0],
        [0, 2, 1, 3], [0, 3, 2, 1], [1, 2, 3, 0], [3, 2, 1, 0],
    ])) {
        let ring = GradedRing::new(
            vec!["a12", "a13", "a14", "a23", "a24", "a34"],
            vec![1; 6],
        ).unwrap();
        let p = |t: &str| parse_poly(t, &ring).unwrap();
        let skew = SkewPfaffianMatrix::from_upper_rows(
            &ring,
            vec![
                vec![p("a12"), p("a13"), p("a14")],
                vec![p("a23"), p("a24")],
                vec![p("a34")],
            ],
        ).unwrap();
        let base = skew.pfaffian4([0, 1, 2, 3]).unwrap();
        let inversions = {
            let mut k = 0;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    if perm[i] > perm[j] {
                        k += 1;
                    }
                }
            }
            k
        };
        let val = skew.pfaffian4(perm).unwrap();
        let expect = if inversions % 2 == 0 { base } else { base.neg() };
        prop_assert_eq!(val, expect);
    }

    #[test]
    fn monomial_ideal_counts_match_macaulay(
        gens in proptest::collection::vec(arb_mono(), 1..4),
        degree in 0i64..15,
    ) {
        let ring = test_ring();
        let gens: Vec<Exponents> = gens.into_iter().filter(|e| !e.is_one()).collect();
        prop_assume!(!gens.is_empty());
        let counted = monomial_quotient_series(&ring, &gens, degree)[degree as usize];
        // Macaulay-side: rank of the degree-d multiples of the generators
        let monos = ring.monomials_of_degree(degree);
        let col_of = |e: &Exponents| monos.iter().position(|m| m == e).unwrap();
        let mut rows = Vec::new();
        for g in &gens {
            let dg = ring.monomial_degree(g);
            if dg > degree {
                continue;
            }
            for m in ring.monomials_of_degree(degree - dg) {
                let mut row = vec![Coeff::from_integer(0.into()); monos.len()];
                row[col_of(&m.mul(g))] = coeff_int(1);
                rows.push(row);
            }
        }
        let rank = if rows.is_empty() { 0 } else { QMatrix::from_rows(rows).rank() };
        prop_assert_eq!(counted, monos.len() as i64 - rank as i64);
    }
}

#[test]
fn pfaffian_squared_is_determinant() {
    // generic 6x6 skew matrix evaluated at three rational points
    let names: Vec<String> = (0..6)
        .flat_map(|i| ((i + 1)..6).map(move |j| format!("b{i}{j}")))
        .collect();
    let ring = GradedRing::new(names.clone(), vec![1; 15]).unwrap();
    let mut rows = Vec::new();
    let mut k = 0;
    for i in 0..5 {
        let mut row = Vec::new();
        for _ in (i + 1)..6 {
            row.push(Poly::var(&ring, k));
            k += 1;
        }
        rows.push(row);
    }
    let skew = SkewPfaffianMatrix::from_upper_rows(&ring, rows).unwrap();

    // recursive numeric Pfaffian (expansion along the first row)
    fn pf_numeric(m: &Vec<Vec<Coeff>>) -> Coeff {
        let n = m.len();
        if n == 0 {
            return coeff_int(1);
        }
        let mut acc = coeff_int(0);
        let mut sign = coeff_int(1);
        for j in 1..n {
            let keep: Vec<usize> = (0..n).filter(|&k| k != 0 && k != j).collect();
            let minor: Vec<Vec<Coeff>> = keep
                .iter()
                .map(|&a| keep.iter().map(|&b| m[a][b].clone()).collect())
                .collect();
            acc += &sign * &m[0][j] * pf_numeric(&minor);
            sign = -sign;
        }
        acc
    }

    fn det_numeric(m: &[Vec<Coeff>]) -> Coeff {
        let n = m.len();
        let mut a: Vec<Vec<Coeff>> = m.to_vec();
        let mut det = coeff_int(1);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !num_traits::Zero::is_zero(&a[r][col])) else {
                return coeff_int(0);
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            det *= &a[col][col];
            let pivot = a[col][col].clone();
            for r in (col + 1)..n {
                let f = &a[r][col] / &pivot;
                for c in col..n {
                    let v = &a[r][c] - &f * &a[col][c];
                    a[r][c] = v;
                }
            }
        }
        det
    }

    let points: [[i64; 15]; 3] = [
        [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
        [2, -1, 3, -5, 7, 1, -2, 4, 3, -1, 5, 2, -3, 1, 6],
        [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 1, 2, 3, 5],
    ];
    for pt in points {
        let vals: Vec<Coeff> = pt.iter().map(|&c| coeff_int(c)).collect();
        let dense: Vec<Vec<Coeff>> = skew
            .to_dense()
            .iter()
            .map(|row| row.iter().map(|e| e.eval(&vals)).collect())
            .collect();
        let pf = pf_numeric(&dense);
        let det = det_numeric(&dense);
        assert_eq!(&pf * &pf, det, "Pf^2 != det at {pt:?}");
        // the library's 4x4 Pfaffians agree with the numeric recursion on
        // principal 4x4 blocks
        let sub = [0usize, 1, 2, 3];
        let minor: Vec<Vec<Coeff>> = sub
            .iter()
            .map(|&a| sub.iter().map(|&b| dense[a][b].clone()).collect())
            .collect();
        let lib_val = skew.pfaffian4(sub).unwrap().eval(&vals);
        assert_eq!(pf_numeric(&minor), lib_val);
    }
}

#[test]
fn concurrent_membership_queries() {
    let ring = test_ring();
    let gens = vec![
        parse_poly("x*y - z", &ring).unwrap(),
        parse_poly("x^3 - y*z", &ring).unwrap(),
    ];
    let ideal = std::sync::Arc::new(Ideal::new(&ring, gens));
    let mut handles = Vec::new();
    for k in 0..8u16 {
        let ideal = std::sync::Arc::clone(&ideal);
        let ring = ring.clone();
        handles.push(std::thread::spawn(move || {
            let x = Poly::var(&ring, 0);
            let y = Poly::var(&ring, 1);
            let z = Poly::var(&ring, 2);
            let member = x
                .mul(&y)
                .sub(&z)
                .mul(&x.pow(u32::from(k % 3)));
            assert!(ideal.contains(&member));
            assert!(!ideal.contains(&Poly::one(&ring)));
        }));
    }
    for h in handles {
        h.join().unwrap();
    }
}

#[test]
fn module_normal_form_is_canonical() {
    // reduced module bases give zero normal form exactly for members
    let ring = test_ring();
    let free_rank = 2;
    let e0 = |p: Poly| {
        Vect::new(vec![p, Poly::zero(&ring)])
    };
    let e1 = |p: Poly| {
        Vect::new(vec![Poly::zero(&ring), p])
    };
    let x = Poly::var(&ring, 0);
    let y = Poly::var(&ring, 1);
    let gens = vec![
        e0(x.clone()).add(&e1(Poly::one(&ring))),
        e0(y.clone()),
    ];
    let order = unproj::order::ModuleOrder::new(MonomialOrder::grevlex(&ring), vec![0, 1]);
    let gb = unproj::gb::groebner_vect(&gens, &ring, &order, false);
    let member = gens[0].mul_poly(&y).add(&gens[1].mul_poly(&x));
    let nf = unproj::gb::normal_form_vect(&member, &gb.basis, &ring, &order);
    assert!(nf.is_zero());
    let non_member = e0(Poly::one(&ring));
    let nf2 = unproj::gb::normal_form_vect(&non_member, &gb.basis, &ring, &order);
    assert!(!nf2.is_zero());
    let _ = free_rank;
}

/// The division relation holds exactly: f = sum q_i g_i + r with r fully
/// reduced.
#[test]
fn division_identity_with_quotients() {
    let ring = test_ring();
    let order = MonomialOrder::grevlex(&ring);
    let g1 = parse_poly("x^2 - y", &ring).unwrap();
    let g2 = parse_poly("x*y - z", &ring).unwrap();
    let ideal = Ideal::new(&ring, vec![g1.clone(), g2.clone()]);
    let basis = ideal.groebner_basis(&order);
    let f = parse_poly("x^4 + x*z - 7", &ring).unwrap();
    let r = normal_form(&f, &basis, &order);
    // the remainder has no term divisible by any basis leading term
    for (mono, _) in r.terms() {
        for b in basis.iter() {
            let (lt, _) = b.leading_term(&order).unwrap();
            assert!(!lt.divides(mono), "remainder term reducible");
        }
    }
    assert!(ideal.contains(&f.sub(&r)));
}
