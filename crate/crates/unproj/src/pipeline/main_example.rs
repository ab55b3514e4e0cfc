//! The main worked example, end to end: embed the weight-(2,3) line in the
//! weight-(4,5,6,9) space, verify the image ideal and the quasismooth
//! degree-24 hypersurface through it, present the normalisation as a module,
//! resolve, lift the chain map, build the linear unprojection system, realise
//! the relations as Pfaffians, and pin the Hilbert numerator of the
//! unprojected codimension-4 ring.

use crate::fixtures;
use crate::gb::Vect;
use crate::hilbert::{format_numerator, hilbert_series};
use crate::ideal::{FreeModule, Ideal, Submodule};
use crate::matrix::GradedMatrix;
use crate::order::MonomialOrder;
use crate::pipeline::report::{CheckStatus, UnprojectionReport};
use crate::pipeline::{
    is_scalar_multiple, matches_up_to_sign, quasismooth, spanning_check, Fault,
};
use crate::poly::{Poly, RingMap};
use crate::resolve::{free_resolution, lift_columns, restriction_presentation};
use crate::ring::GradedRing;

/// Everything the pipeline manipulates: the two ambient rings, the displayed
/// matrices, the hypersurface equation, and the nine relations of the
/// unprojected ring.
pub struct UnprojectionData {
    pub base: GradedRing,
    pub ext: GradedRing,
    pub m: GradedMatrix,
    pub n: GradedMatrix,
    pub image_gens: Vec<Poly>,
    /// The six linear relations, in display order (degrees 17,16,15,12,13,14).
    pub relations: Vec<Poly>,
    /// The three quadratic relations (degrees 14, 15, 16).
    pub quadratics: Vec<Poly>,
    pub f24: Poly,
}

impl UnprojectionData {
    pub fn load() -> Self {
        let (base, image_gens) = fixtures::image_ideal();
        let (ext, cy) = fixtures::cy_ideal();
        let relations = cy[..6].to_vec();
        let quadratics = cy[6..9].to_vec();
        let x = Poly::var(&base, 0);
        let y = Poly::var(&base, 1);
        let z = Poly::var(&base, 2);
        let f24 = x
            .mul(&image_gens[2])
            .add(&y.mul(&image_gens[1]))
            .add(&z.mul(&image_gens[0]));
        UnprojectionData {
            base,
            ext,
            m: fixtures::presentation_m(),
            n: fixtures::chain_n(),
            image_gens,
            relations,
            quadratics,
            f24,
        }
    }

    /// The unprojection variables in system order (s2, s1, s0).
    pub fn s_vector(&self) -> [Poly; 3] {
        [
            Poly::var_named(&self.ext, "s2").unwrap(),
            Poly::var_named(&self.ext, "s1").unwrap(),
            Poly::var_named(&self.ext, "s0").unwrap(),
        ]
    }

    /// The ideal of the unprojected ring: all nine relations.
    pub fn cy_ideal(&self) -> Ideal {
        let mut gens = self.relations.clone();
        gens.extend(self.quadratics.iter().cloned());
        Ideal::new(&self.ext, gens)
    }
}

/// Build the linear system: left side `J * t(M)` applied to `(s2,s1,s0)`,
/// right side `N * (z,y,x)^T`. Returns `(lhs, rhs, relations)` where the
/// relations are `row_i(lhs)·(s2,s1,s0) - rhs_i` in the extended ring.
/// Errors when `M * N` differs from the displayed target (the offending
/// entry is reported).
pub fn build_kustin_miller_system(
    data: &UnprojectionData,
) -> Result<(GradedMatrix, GradedMatrix, Vec<Poly>), String> {
    let mn = data.m.mul(&data.n).expect("shapes match");
    let target = fixtures::mn_product();
    for i in 0..3 {
        for j in 0..3 {
            if mn.entry(i, j) != target.entry(i, j) {
                return Err(format!("M*N differs from the display at entry ({i},{j})"));
            }
        }
    }
    let j = GradedMatrix::block_j(data.m.ring(), data.m.col_degrees());
    let lhs = j.mul(&data.m.transpose_twisted(19)).expect("shapes match");
    let zyx = GradedMatrix::new(
        &data.base,
        vec![
            vec![Poly::var(&data.base, 2)],
            vec![Poly::var(&data.base, 1)],
            vec![Poly::var(&data.base, 0)],
        ],
        vec![18, 19, 20],
        vec![24],
    )
    .expect("degree data");
    let rhs = data.n.mul(&zyx).expect("shapes match");
    let svec = data.s_vector();
    let mut relations = Vec::with_capacity(6);
    for i in 0..6 {
        let mut r = Poly::zero(&data.ext);
        for (k, s) in svec.iter().enumerate() {
            r = r.add(&lhs.entry(i, k).transfer(&data.ext).mul(s));
        }
        r = r.sub(&rhs.entry(i, 0).transfer(&data.ext));
        relations.push(r);
    }
    Ok((lhs, rhs, relations))
}

/// Membership of the three solved products in the relation ideal: each
/// display `f*s0`, `g*s0`, `h*s0` differs from the stated polynomial by an
/// element of the ideal.
pub fn verify_solved_products(data: &UnprojectionData, report: &mut UnprojectionReport) {
    let ext = &data.ext;
    let ideal = data.cy_ideal();
    let s0 = Poly::var_named(ext, "s0").unwrap();
    let displays = [
        ("f", 0, "-3*x^3*y*z + x^2*y^3 - x^2*z*t - y*t^2"),
        ("g", 1, "x^6 + x^3*z^2 + x*y*z*t + z*t^2"),
        ("h", 2, "-x^5*y + 2*x^2*y*z^2 - x*y^3*z + x*z^2*t - y^2*z*t"),
    ];
    for (name, idx, text) in displays {
        let lhs = data.image_gens[idx].transfer(ext).mul(&s0);
        let shown = crate::parse::parse_poly(text, ext).expect("display parses");
        let ok = ideal.contains(&lhs.sub(&shown));
        report.check(
            &format!("main.solved.{name}s0"),
            &format!("product {name}*s0 equals its displayed polynomial modulo the relation ideal"),
            ok,
            format!("membership of {name}*s0 - display: {ok}"),
        );
    }
}

/// The two 4-term syzygies among the linear relations, the division trick
/// producing the first quadratic relation, and the Pfaffian origin of the
/// second.
pub fn verify_syzygies_and_divisibility(data: &UnprojectionData, report: &mut UnprojectionReport) {
    let ext = &data.ext;
    let r = &data.relations;
    let var = |n: &str| Poly::var_named(ext, n).unwrap();
    let (x, y, z, t) = (var("x"), var("y"), var("z"), var("t"));

    let syz1 = x
        .mul(&r[0])
        .add(&y.mul(&r[1]))
        .add(&z.mul(&r[2]))
        .add(&t.mul(&r[3]));
    report.check(
        "main.syzygy.first",
        "x*R1 + y*R2 + z*R3 + t*R4 vanishes identically",
        syz1.is_zero(),
        format!("remainder: {syz1}"),
    );
    let syz2 = y
        .mul(&r[0])
        .add(&z.mul(&r[1].sub(&x.mul(&r[3]))))
        .add(&t.mul(&r[4]))
        .add(&x.pow(2).mul(&r[5]));
    report.check(
        "main.syzygy.second",
        "y*R1 + z*(R2 - x*R4) + t*R5 + x^2*R6 vanishes identically",
        syz2.is_zero(),
        format!("remainder: {syz2}"),
    );

    // fifth Pfaffian of the first skew matrix, divided by x after removing
    // s0*R5, is exactly the first quadratic relation
    let pf5 = fixtures::skew1().pfaffian4([1, 2, 3, 4]).unwrap();
    let s0 = var("s0");
    let diff = pf5.sub(&s0.mul(&r[4]));
    let x_idx = ext.var_index("x").unwrap();
    match diff.div_variable_power(x_idx, 1) {
        Some(quotient) => {
            let ok = quotient == data.quadratics[0];
            report.check(
                "main.divide.s0",
                "the fifth Pfaffian minus s0*R5 is divisible by x with quotient the first quadratic relation",
                ok,
                format!("quotient: {quotient}"),
            );
        }
        None => {
            report.check(
                "main.divide.s0",
                "the fifth Pfaffian minus s0*R5 is divisible by x",
                false,
                "difference is not divisible by x".to_string(),
            );
        }
    }

    // the second quadratic relation appears among the third matrix's
    // Pfaffians up to sign
    let pf3 = fixtures::skew3().pfaffian_system().unwrap();
    let hit = pf3
        .iter()
        .any(|p| matches_up_to_sign(p, &data.quadratics[1]));
    report.check(
        "main.pfaffian.third-matrix-s1",
        "the third skew matrix realises the middle quadratic relation as a Pfaffian",
        hit,
        format!("matched among {} Pfaffians: {hit}", pf3.len()),
    );
}

fn degrees_of(polys: &[Poly]) -> Vec<i64> {
    let mut d: Vec<i64> = polys
        .iter()
        .map(|p| p.homogeneous_degree().unwrap_or(-1))
        .collect();
    d.sort_unstable();
    d
}

/// Match a Pfaffian list against targets up to sign: every target must be
/// hit by some Pfaffian; returns (all_matched, per-target hits).
fn match_targets(pfs: &[Poly], targets: &[(&str, Poly)]) -> (bool, String) {
    let mut all = true;
    let mut parts = Vec::new();
    for (name, t) in targets {
        let hit = pfs.iter().any(|p| matches_up_to_sign(p, t));
        if !hit {
            all = false;
        }
        parts.push(format!("{name}:{}", if hit { "yes" } else { "NO" }));
    }
    (all, parts.join(" "))
}

pub fn run_main_example() -> UnprojectionReport {
    run_main_example_with(None)
}

pub fn run_main_example_with(fault: Option<Fault>) -> UnprojectionReport {
    let mut report = UnprojectionReport::new("type-IV unprojection: main example", None);
    let mut data = UnprojectionData::load();
    if fault == Some(Fault::S2Sign) {
        data.quadratics[2] = data.quadratics[2].neg();
        report.push(
            "main.fault",
            "fault injection",
            CheckStatus::Info,
            "third quadratic relation sign-flipped".to_string(),
        );
    }

    // stage: elimination of the embedding graph
    let (big, graph) = fixtures::graph_ideal();
    let graph_ideal = Ideal::new(&big, graph.clone());
    let elim = graph_ideal.eliminate(&[0, 1]).expect("valid variables");
    let gb = elim.groebner_basis(&MonomialOrder::grevlex(elim.ring()));
    let gb_degrees = degrees_of(&gb);
    report.check(
        "main.elim.gb-degrees",
        "reduced basis of the eliminated ideal has degrees 18..23",
        gb_degrees == vec![18, 19, 20, 21, 22, 23],
        format!("{gb_degrees:?}"),
    );
    let min_degrees = degrees_of(elim.gens());
    report.check(
        "main.elim.minimal-degrees",
        "minimal generators of the eliminated ideal have degrees 18..22",
        min_degrees == vec![18, 19, 20, 21, 22],
        format!("{min_degrees:?}"),
    );
    report.push(
        "main.elim.redundancy",
        "the displayed degree-23 generator is a combination of lower ones",
        CheckStatus::Flag,
        "q23 = x*g19 - y*f18 exactly; the catalogued six-element list is a reduced basis, not a minimal one".to_string(),
    );
    let image = Ideal::new(&data.base, data.image_gens.clone());
    report.check(
        "main.elim.ideal-equality",
        "eliminated ideal equals the ideal of the six displayed generators",
        elim.equals(&image),
        "two-way membership of all generators".to_string(),
    );

    // stage: the embedding spans every degree from 13 on
    let uv = GradedRing::new(vec!["u", "v"], vec![2, 3]).expect("valid ring");
    let u = Poly::var(&uv, 0);
    let v = Poly::var(&uv, 1);
    let embedding = RingMap::new(
        &data.base,
        &uv,
        vec![
            u.pow(2),
            u.mul(&v),
            u.pow(3).add(&v.pow(2)),
            u.pow(3).mul(&v).add(&v.pow(3)),
        ],
    );
    match spanning_check(&embedding, 12..=24) {
        Ok(checks) => {
            let d12 = &checks[0];
            report.check(
                "main.span.degree12",
                "exactly two degree-12 monomials fall outside the image span",
                d12.failures() == 2,
                format!(
                    "degree 12 pattern: {:?}",
                    d12.in_span
                ),
            );
            let failing: Vec<String> = d12
                .monomials
                .iter()
                .zip(&d12.in_span)
                .filter(|(_, &ok)| !ok)
                .map(|(m, _)| uv.format_monomial(m))
                .collect();
            report.push(
                "main.span.degree12-monomials",
                "the failing degree-12 monomials",
                CheckStatus::Flag,
                format!(
                    "computed failures: {} (catalogued prose names u^3 and v^2, which have degree 6, not 12)",
                    failing.join(", ")
                ),
            );
            let rest_ok = checks[1..].iter().all(|c| c.all_pass());
            report.check(
                "main.span.degrees13-24",
                "every monomial of degrees 13..24 lies in the image span",
                rest_ok,
                format!(
                    "checked degrees 13..24: {}",
                    if rest_ok { "all pass" } else { "failures present" }
                ),
            );
        }
        Err(e) => {
            report.check("main.span", "spanning check runs", false, e.to_string());
        }
    }

    // stage: quasismoothness of the degree-24 hypersurface (gate)
    let f = if fault == Some(Fault::FSign) {
        let x = Poly::var(&data.base, 0);
        let y = Poly::var(&data.base, 1);
        let z = Poly::var(&data.base, 2);
        x.mul(&data.image_gens[2])
            .add(&y.mul(&data.image_gens[1]))
            .sub(&z.mul(&data.image_gens[0]))
    } else {
        data.f24.clone()
    };
    let qs = quasismooth(&[f.clone()]).unwrap_or(false);
    report.check(
        "main.quasismooth.f24",
        "the degree-24 hypersurface through the curve is quasismooth",
        qs,
        format!("equation with {} terms, quasismooth: {qs}", f.num_terms()),
    );
    if !qs {
        report.halt("main.quasismooth.f24");
        return report;
    }

    // stage: restriction presentation
    let gens = vec![Poly::one(&big), Poly::var(&big, 0), Poly::var(&big, 1)];
    let pres = match restriction_presentation(&big, &graph, &gens, &[0, 1]) {
        Ok(p) => p,
        Err(e) => {
            report.check("main.presentation", "presentation computes", false, e.to_string());
            report.halt("main.presentation");
            return report;
        }
    };
    let mut pres_cols = pres.col_degrees().to_vec();
    pres_cols.sort_unstable();
    report.check(
        "main.presentation.shape",
        "presentation is 3 generators (degrees 0,2,3) by 6 relations (degrees 7..12)",
        pres.rows() == 3 && pres.row_degrees() == [0, 2, 3] && pres_cols == vec![7, 8, 9, 10, 11, 12],
        format!("rows {:?}, cols {pres_cols:?}", pres.row_degrees()),
    );
    let ambient = FreeModule::new(pres.ring(), vec![0, 2, 3]);
    let computed_module = Submodule::new(ambient.clone(), pres.columns_as_vects());
    let displayed_rel: Vec<Vect> = (0..data.m.cols())
        .map(|j| {
            Vect::new(vec![
                data.m.entry(2, j).clone(),
                data.m.entry(1, j).clone(),
                data.m.entry(0, j).clone(),
            ])
        })
        .collect();
    let displayed_module = Submodule::new(ambient, displayed_rel);
    report.check(
        "main.presentation.row-module",
        "computed relations generate the same module as the displayed matrix",
        computed_module.equals(&displayed_module),
        "two-way module membership".to_string(),
    );
    report.check(
        "main.presentation.weight-table",
        "the displayed matrix carries the catalogued weight table",
        data.m.weight_table()
            == vec![
                vec![4, 5, 6, 9, 8, 7],
                vec![5, 6, 7, 10, 9, 8],
                vec![7, 8, 9, 12, 11, 10],
            ],
        format!("{:?}", data.m.weight_table()),
    );
    // (v, u, 1) * M = 0 under the substitution
    let mut sub_ok = true;
    for j in 0..data.m.cols() {
        let val = v
            .mul(&embedding.apply(data.m.entry(0, j)))
            .add(&u.mul(&embedding.apply(data.m.entry(1, j))))
            .add(&embedding.apply(data.m.entry(2, j)));
        if !val.is_zero() {
            sub_ok = false;
        }
    }
    report.check(
        "main.presentation.vu1-kernel",
        "(v,u,1) * M vanishes identically after substituting the embedding",
        sub_ok,
        "six columns checked".to_string(),
    );
    let jmat = GradedMatrix::block_j(data.m.ring(), data.m.col_degrees());
    let jtm = jmat.mul(&data.m.transpose_twisted(19)).expect("shapes");
    report.check(
        "main.presentation.mjtm",
        "M * J * t(M) = 0 exactly",
        data.m.mul(&jtm).expect("shapes").is_zero(),
        "nine polynomial identities".to_string(),
    );
    report.check(
        "main.presentation.jtm-display",
        "J * t(M) equals the displayed system matrix",
        jtm == fixtures::km_lhs(),
        "eighteen entries".to_string(),
    );

    // stage: resolution
    match free_resolution(&pres, 6) {
        Ok(res) => {
            let betti = res.betti();
            report.check(
                "main.resolution.betti",
                "minimal resolution has length 2 with top degrees 16, 17, 19",
                res.is_complete()
                    && res.is_minimal()
                    && betti.0.len() == 3
                    && betti.0[2] == vec![16, 17, 19],
                format!("{}", betti).replace('\n', "; "),
            );
            let dual_top: Vec<i64> = betti.0[2].iter().rev().map(|d| 19 - d).collect();
            let mut dual_mid: Vec<i64> = betti.0[1].iter().map(|d| 19 - d).collect();
            dual_mid.sort_unstable();
            report.check(
                "main.resolution.duality",
                "degrees satisfy the d -> 19 - d duality between ends and within the middle",
                dual_top == betti.0[0] && dual_mid == betti.0[1],
                format!("L2 duals to {dual_top:?}, L1 self-dual: {}", dual_mid == betti.0[1]),
            );
            report.check(
                "main.resolution.complex",
                "consecutive differentials compose to zero",
                res.check().ok,
                "verified".to_string(),
            );
        }
        Err(e) => {
            report.check("main.resolution", "resolution computes", false, e.to_string());
        }
    }

    // stage: chain map
    let lift_ok = match lift_columns(&data.m, &fixtures::mn_product()) {
        Ok(n_lift) => {
            let ok = data.m.mul(&n_lift).expect("shapes") == fixtures::mn_product();
            report.check(
                "main.chain.lift",
                "lifting the three image generators through M solves M*N = target",
                ok,
                "normal-form lift".to_string(),
            );
            ok
        }
        Err(e) => report.check("main.chain.lift", "lift computes", false, e.to_string()),
    };
    let _ = lift_ok;
    report.check(
        "main.chain.display",
        "the displayed N satisfies M*N = target exactly",
        data.m.mul(&data.n).expect("shapes") == fixtures::mn_product(),
        "eighteen identities".to_string(),
    );
    let zyx = GradedMatrix::new(
        &data.base,
        vec![
            vec![Poly::var(&data.base, 2)],
            vec![Poly::var(&data.base, 1)],
            vec![Poly::var(&data.base, 0)],
        ],
        vec![18, 19, 20],
        vec![24],
    )
    .expect("degree data");
    report.check(
        "main.chain.degree24-column",
        "N * (z,y,x)^T is the displayed degree-24 column",
        data.n.mul(&zyx).expect("shapes") == fixtures::n24_column(),
        "six entries".to_string(),
    );

    // stage: the linear unprojection system (gate on M*N)
    let (_lhs, rhs, built) = match build_kustin_miller_system(&data) {
        Ok(x) => x,
        Err(e) => {
            report.check("main.km.build", "linear system builds", false, e);
            report.halt("main.km.build");
            return report;
        }
    };
    report.check(
        "main.km.rhs",
        "right-hand side column equals the displayed degree-24 column",
        rhs == fixtures::n24_column(),
        "six entries".to_string(),
    );
    report.check(
        "main.km.relations",
        "built linear relations equal the stored six (degrees 17,16,15,12,13,14)",
        built == data.relations,
        format!("degrees {:?}", degrees_of(&built)),
    );
    let r4_display = crate::parse::parse_poly("x*s2 - y*s1 + x^3 + z^2", &data.ext).unwrap();
    report.check(
        "main.km.r4",
        "the fourth relation reads x*s2 - y*s1 + x^3 + z^2",
        built.len() == 6 && built[3] == r4_display,
        format!("{}", built.get(3).map(|p| p.to_string()).unwrap_or_default()),
    );

    // stage: Pfaffian realizations
    let pf1 = fixtures::skew1().pfaffian_system().unwrap();
    let r = &data.relations;
    let fifth = fixtures::skew1().pfaffian4([1, 2, 3, 4]).unwrap();
    let targets1 = [
        ("R1", r[0].clone()),
        ("R2", r[1].clone()),
        ("R3", r[2].clone()),
        ("R4", r[3].clone()),
        ("fifth", fifth.clone()),
    ];
    let (ok1, detail1) = match_targets(&pf1, &targets1);
    report.check(
        "main.pfaffian.first-matrix",
        "the first skew matrix yields R1..R4 and the degree-22 combination",
        ok1 && pf1.len() == 5,
        detail1,
    );
    report.push(
        "main.pfaffian.fifth-display",
        "computed sign of the degree-22 combination",
        CheckStatus::Flag,
        format!(
            "computed fifth Pfaffian {fifth}; the catalogued display negates the x^2*y*s0 term (the division trick below confirms the computed sign)"
        ),
    );

    let x_ext = Poly::var_named(&data.ext, "x").unwrap();
    let r2_minus_xr4 = r[1].sub(&x_ext.mul(&r[3]));
    let pf2 = fixtures::skew2().pfaffian_system().unwrap();
    let targets2 = [
        ("R5", r[4].clone()),
        ("R6", r[5].clone()),
        ("R2-x*R4", r2_minus_xr4.clone()),
        ("R1", r[0].clone()),
        ("S2", data.quadratics[2].clone()),
    ];
    let (ok2, detail2) = match_targets(&pf2, &targets2);
    report.check(
        "main.pfaffian.second-matrix",
        "the second skew matrix yields R5, R6, R2 - x*R4, R1 and the last quadratic relation",
        ok2 && pf2.len() == 5,
        detail2,
    );

    verify_syzygies_and_divisibility(&data, &mut report);

    let pf6 = fixtures::skew6().pfaffian_system().unwrap();
    let targets6 = [
        ("R1", r[0].clone()),
        ("R2", r[1].clone()),
        ("R3", r[2].clone()),
        ("R4", r[3].clone()),
        ("R5", r[4].clone()),
        ("S0", data.quadratics[0].clone()),
        ("S1", data.quadratics[1].clone()),
        ("S2", data.quadratics[2].clone()),
    ];
    let (ok6, detail6) = match_targets(&pf6, &targets6);
    report.check(
        "main.pfaffian.six-by-six",
        "the 6x6 matrix's fifteen Pfaffians contain R1..R5 and all three quadratic relations",
        ok6 && pf6.len() == 15,
        detail6,
    );
    let r6_absent = !pf6.iter().any(|p| is_scalar_multiple(p, &r[5]));
    report.check(
        "main.pfaffian.r6-absent",
        "no Pfaffian of the 6x6 matrix is a scalar multiple of R6",
        r6_absent,
        format!("checked {} Pfaffians", pf6.len()),
    );

    // stage: the quadratic relations are genuinely new, and their tails lie
    // in the catalogued monomial spans
    let r_only = Ideal::new(&data.ext, data.relations.clone());
    report.check(
        "main.quadratic.new-generator",
        "the first quadratic relation is not in the ideal of the linear ones",
        !r_only.contains(&data.quadratics[0]),
        "membership test".to_string(),
    );
    let leads = [
        ("S0", 0, "s1^2 - x*s0^2", 14i64),
        ("S1", 1, "s1*s2 - y*s0^2", 15),
        ("S2", 2, "s2^2 - z*s0^2 + x*s0*s1", 16),
    ];
    let s_indices: Vec<usize> = ["s0", "s1", "s2"]
        .iter()
        .map(|n| data.ext.var_index(n).unwrap())
        .collect();
    for (name, idx, lead_text, degree) in leads {
        let lead = crate::parse::parse_poly(lead_text, &data.ext).unwrap();
        let rest = lead.sub(&data.quadratics[idx]);
        let ok = rest.terms().all(|(e, _)| {
            let s_degree: u16 = s_indices.iter().map(|&i| e.get(i)).sum();
            s_degree <= 1 && data.ext.monomial_degree(e) == degree
        });
        report.check(
            &format!("main.quadratic.span-{name}"),
            &format!("the tail of {name} lies among the degree-{degree} monomials at most linear in the unprojection variables"),
            ok,
            format!("tail {rest}"),
        );
    }

    verify_solved_products(&data, &mut report);

    // stage: Hilbert numerator of the unprojected ring
    let cy = data.cy_ideal();
    let bound = crate::hilbert::default_bound(&data.ext);
    match hilbert_series(&cy, bound) {
        Ok(h) => match h.numerator_up_to(44) {
            Ok(num) => {
                let prefix_ok = num[0] == 1
                    && num[1..12].iter().all(|&c| c == 0)
                    && num[12..=17] == [-1, -1, -2, -2, -2, -1]
                    && num[18] == 0
                    && num[19..=21] == [1, 2, 3]
                    && num[23] == 3;
                report.check(
                    "main.hilbert.numerator",
                    "numerator of the unprojected ring matches the catalogued series",
                    prefix_ok,
                    format_numerator(&num[..=23.min(num.len() - 1)]),
                );
                report.check(
                    "main.hilbert.degree22",
                    "the degree-22 numerator coefficient computes to 4",
                    num[22] == 4,
                    format!("coefficient: {}", num[22]),
                );
                report.push(
                    "main.hilbert.degree22-display",
                    "catalogued printing of the degree-22 term",
                    CheckStatus::Flag,
                    format!(
                        "the catalogue prints '4t^2' where the computed value is {}t^22 (exponent misprint)",
                        num[22]
                    ),
                );
                let palindromic = (0..=44).all(|d| num[d] == num[44 - d]);
                report.check(
                    "main.hilbert.palindromy",
                    "numerator satisfies N(t) = t^44 * N(1/t)",
                    palindromic,
                    "coefficients mirrored around degree 22".to_string(),
                );
                // consistency with the seed database entry
                let db = crate::k3db::seed_db();
                if let Some(entry) = crate::k3db::find_by_name(&db, "Altinok4(111)") {
                    let agree = entry.numerator.as_ref().is_some_and(|pairs| {
                        pairs.iter().all(|&(d, c)| {
                            d <= 44 && num.get(d as usize).copied().unwrap_or(0) == c
                        })
                    });
                    report.check(
                        "main.hilbert.database",
                        "computed numerator agrees with the seed database record",
                        agree,
                        "all stored coefficients".to_string(),
                    );
                }
            }
            Err(e) => {
                report.check("main.hilbert", "numerator computes", false, e.to_string());
            }
        },
        Err(e) => {
            report.check("main.hilbert", "series computes", false, e.to_string());
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn km_system_relations_have_display_degrees() {
        let data = UnprojectionData::load();
        let (lhs, rhs, built) = build_kustin_miller_system(&data).unwrap();
        assert_eq!(lhs.rows(), 6);
        assert_eq!(lhs.cols(), 3);
        assert_eq!(rhs.cols(), 1);
        let degrees: Vec<i64> = built
            .iter()
            .map(|p| p.homogeneous_degree().unwrap())
            .collect();
        assert_eq!(degrees, vec![17, 16, 15, 12, 13, 14]);
    }

    #[test]
    fn degenerate_system_keeps_only_linear_parts() {
        // zero chain map: every relation is the pure linear form
        let mut data = UnprojectionData::load();
        let zero_n = GradedMatrix::new(
            &data.base,
            vec![vec![Poly::zero(&data.base); 3]; 6],
            data.n.row_degrees().to_vec(),
            data.n.col_degrees().to_vec(),
        )
        .unwrap();
        data.n = zero_n;
        // M * 0 = 0 differs from the displayed product, so the build errors
        assert!(build_kustin_miller_system(&data).is_err());
        // but the raw rows of J*t(M) applied to the s-variables are the
        // constant-free parts of the relations
        let j = GradedMatrix::block_j(data.m.ring(), data.m.col_degrees());
        let lhs = j.mul(&data.m.transpose_twisted(19)).unwrap();
        let svec = data.s_vector();
        for i in 0..6 {
            let mut pure = Poly::zero(&data.ext);
            for (k, s) in svec.iter().enumerate() {
                pure = pure.add(&lhs.entry(i, k).transfer(&data.ext).mul(s));
            }
            // relation minus its constant part
            let diff = data.relations[i].sub(&pure);
            assert!(diff.free_of(
                &["s0", "s1", "s2"].map(|n| data.ext.var_index(n).unwrap())
            ));
        }
    }
}
