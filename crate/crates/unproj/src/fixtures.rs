//! Embedded copies of the data files in `data/`, exposed as typed objects.
//! The same files drive both the library pipelines and the CLI examples.

use crate::io::{parse_input, InputFile};
use crate::matrix::GradedMatrix;
use crate::pfaffian::SkewPfaffianMatrix;
use crate::poly::Poly;
use crate::ring::GradedRing;

pub const GRAPH_IDEAL: &str = include_str!("../../../data/main/graph_ideal.txt");
pub const IMAGE_IDEAL: &str = include_str!("../../../data/main/image_ideal.txt");
pub const PRESENTATION_M: &str = include_str!("../../../data/main/presentation_m.txt");
pub const CHAIN_N: &str = include_str!("../../../data/main/chain_n.txt");
pub const MN_PRODUCT: &str = include_str!("../../../data/main/mn_product.txt");
pub const N24_COLUMN: &str = include_str!("../../../data/main/n24_column.txt");
pub const KM_LHS: &str = include_str!("../../../data/main/km_lhs.txt");
pub const CY_IDEAL: &str = include_str!("../../../data/main/cy_ideal.txt");
pub const L_BASIS_UVFREE: &str = include_str!("../../../data/main/l_basis_uvfree.txt");
pub const SKEW1: &str = include_str!("../../../data/main/skew1.txt");
pub const SKEW2: &str = include_str!("../../../data/main/skew2.txt");
pub const SKEW3: &str = include_str!("../../../data/main/skew3.txt");
pub const SKEW6: &str = include_str!("../../../data/main/skew6.txt");
pub const DET_CURVE_IDEAL: &str = include_str!("../../../data/det/curve_ideal.txt");
pub const DET_EMBEDDING_GRAPH: &str = include_str!("../../../data/det/embedding_graph.txt");
pub const K3_SEED: &str = include_str!("../../../data/k3/seed.jsonl");

fn must_parse(text: &str, what: &str) -> InputFile {
    parse_input(text).unwrap_or_else(|e| panic!("embedded fixture {what} is invalid: {e}"))
}

fn polys_of(text: &str, what: &str) -> (GradedRing, Vec<Poly>) {
    let f = must_parse(text, what);
    (f.ring.expect("fixture has a ring"), f.polys)
}

fn matrix_of(text: &str, what: &str) -> GradedMatrix {
    let f = must_parse(text, what);
    let ring = f.ring.expect("fixture has a ring");
    let rowdegs = f.row_degrees.expect("matrix fixture has rowdegs");
    match f.col_degrees {
        Some(cols) => GradedMatrix::new(&ring, f.rows, rowdegs, cols),
        None => GradedMatrix::infer(&ring, f.rows, rowdegs),
    }
    .unwrap_or_else(|e| panic!("embedded fixture {what} is not a graded matrix: {e}"))
}

fn skew_of(text: &str, what: &str) -> SkewPfaffianMatrix {
    let f = must_parse(text, what);
    let ring = f.ring.expect("fixture has a ring");
    SkewPfaffianMatrix::from_upper_rows(&ring, f.skew_rows)
        .unwrap_or_else(|e| panic!("embedded fixture {what} is not a skew matrix: {e}"))
}

/// Graph ideal of the main embedding, over `Q[u,v,x,y,z,t]` with weights
/// `(2,3,4,5,6,9)`.
pub fn graph_ideal() -> (GradedRing, Vec<Poly>) {
    polys_of(GRAPH_IDEAL, "graph_ideal")
}

/// The six generators f18, g19, h20, q21, q22, q23 of the image-curve ideal
/// over `Q[x,y,z,t]`.
pub fn image_ideal() -> (GradedRing, Vec<Poly>) {
    polys_of(IMAGE_IDEAL, "image_ideal")
}

/// The 3x6 presentation matrix M (rows pair with the generators (v,u,1)).
pub fn presentation_m() -> GradedMatrix {
    matrix_of(PRESENTATION_M, "presentation_m")
}

/// The 6x3 chain-map matrix N.
pub fn chain_n() -> GradedMatrix {
    matrix_of(CHAIN_N, "chain_n")
}

/// The 3x3 target of the chain map (M*N).
pub fn mn_product() -> GradedMatrix {
    matrix_of(MN_PRODUCT, "mn_product")
}

/// The degree-24 column N*(z,y,x)^T.
pub fn n24_column() -> GradedMatrix {
    matrix_of(N24_COLUMN, "n24_column")
}

/// The displayed 6x3 left-hand-side matrix J*t(M) of the linear system.
pub fn km_lhs() -> GradedMatrix {
    matrix_of(KM_LHS, "km_lhs")
}

/// Extended ring `Q[x,y,s0,z,s1,s2,t]` (weights 4,5,5,6,7,8,9) together with
/// the nine relations R1..R6, S0, S1, S2 in that order.
pub fn cy_ideal() -> (GradedRing, Vec<Poly>) {
    polys_of(CY_IDEAL, "cy_ideal")
}

/// The nine u,v-free rows of the Groebnerised graph relation module, as rows
/// (components pair with the module generators (1, u, v)).
pub fn l_basis_uvfree() -> (GradedRing, Vec<Vec<Poly>>) {
    let f = must_parse(L_BASIS_UVFREE, "l_basis_uvfree");
    (f.ring.expect("fixture has a ring"), f.rows)
}

pub fn skew1() -> SkewPfaffianMatrix {
    skew_of(SKEW1, "skew1")
}

pub fn skew2() -> SkewPfaffianMatrix {
    skew_of(SKEW2, "skew2")
}

pub fn skew3() -> SkewPfaffianMatrix {
    skew_of(SKEW3, "skew3")
}

pub fn skew6() -> SkewPfaffianMatrix {
    skew_of(SKEW6, "skew6")
}

/// The conic q and sextics f, g, h over `Q[x1,x2,x3,y1,y2]`.
pub fn det_curve_ideal() -> (GradedRing, Vec<Poly>) {
    polys_of(DET_CURVE_IDEAL, "det_curve_ideal")
}

/// Graph of the second embedding, over `Q[u,v,x1,x2,x3,y1,y2]`.
pub fn det_embedding_graph() -> (GradedRing, Vec<Poly>) {
    polys_of(DET_EMBEDDING_GRAPH, "det_embedding_graph")
}
