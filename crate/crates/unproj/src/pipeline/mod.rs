//! Verification pipelines: quasismoothness and spanning checks, the linear
//! unprojection system with its Pfaffian realizations, and the two worked
//! end-to-end examples.

pub mod determinantal;
pub mod main_example;
pub mod report;

pub use determinantal::{run_determinantal_example, run_determinantal_with_retry};
pub use main_example::{run_main_example, run_main_example_with, UnprojectionData};
pub use report::{CheckEntry, CheckStatus, UnprojectionReport};

use thiserror::Error;

use crate::ideal::Ideal;
use crate::linalg::{QMatrix, RowSpace};
use crate::poly::{Coeff, Poly, RingMap};
use crate::ring::Exponents;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PipelineError {
    #[error("quasismoothness supports one or two equations, got {0}")]
    UnsupportedCount(usize),
    #[error("equations must be homogeneous")]
    NotHomogeneous,
    #[error("substitution images must be homogeneous of the variable weights")]
    BadImages,
}

/// Fault injection hooks for the main pipeline (exercised by tests and the
/// CLI to prove the checks can fail).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flip the sign of the third quadratic relation.
    S2Sign,
    /// Use the singular combination x*h + y*g - z*f for the hypersurface.
    FSign,
}

/// Is the affine cone over `V(equations)` smooth away from the origin?
///
/// For a hypersurface this asks that every variable lies in the radical of
/// `(F, all partials)`; for a codimension-2 complete intersection the ideal
/// also takes all 2x2 minors of the Jacobian.
pub fn quasismooth(equations: &[Poly]) -> Result<bool, PipelineError> {
    if equations.is_empty() || equations.len() > 2 {
        return Err(PipelineError::UnsupportedCount(equations.len()));
    }
    if equations.iter().any(|f| !f.is_homogeneous()) {
        return Err(PipelineError::NotHomogeneous);
    }
    let ring = equations[0].ring().clone();
    let n = ring.arity();
    let mut gens = equations.to_vec();
    match equations {
        [f] => {
            for i in 0..n {
                gens.push(f.derivative(i));
            }
        }
        [f1, f2] => {
            let d1: Vec<Poly> = (0..n).map(|i| f1.derivative(i)).collect();
            let d2: Vec<Poly> = (0..n).map(|i| f2.derivative(i)).collect();
            for i in 0..n {
                for j in (i + 1)..n {
                    gens.push(d1[i].mul(&d2[j]).sub(&d1[j].mul(&d2[i])));
                }
            }
        }
        _ => unreachable!(),
    }
    let jac = Ideal::new(&ring, gens);
    for i in 0..n {
        if !jac.radical_contains(&Poly::var(&ring, i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-degree outcome of the spanning test: for each monomial of the target
/// ring in that degree, whether it lies in the span of the images of the
/// source monomials of the same degree.
#[derive(Clone, Debug)]
pub struct SpanCheck {
    pub degree: i64,
    /// Target monomials, in descending canonical order.
    pub monomials: Vec<Exponents>,
    pub in_span: Vec<bool>,
}

impl SpanCheck {
    pub fn all_pass(&self) -> bool {
        self.in_span.iter().all(|&b| b)
    }

    pub fn failures(&self) -> usize {
        self.in_span.iter().filter(|&&b| !b).count()
    }
}

/// Spanning check for a substitution map: in each degree `d` of `degrees`,
/// do the images of the source-ring monomials span the full degree-`d` part
/// of the target ring?
pub fn spanning_check(
    map: &RingMap,
    degrees: std::ops::RangeInclusive<i64>,
) -> Result<Vec<SpanCheck>, PipelineError> {
    let source = map.source();
    let target = map.target();
    for i in 0..source.arity() {
        if map.image(i).homogeneous_degree() != Some(source.weight(i)) {
            return Err(PipelineError::BadImages);
        }
    }
    let mut out = Vec::new();
    for d in degrees {
        let target_monos = target.monomials_of_degree(d);
        if target_monos.is_empty() {
            out.push(SpanCheck {
                degree: d,
                monomials: target_monos,
                in_span: Vec::new(),
            });
            continue;
        }
        let col_of = |e: &Exponents| target_monos.iter().position(|m| m == e).unwrap();
        let mut rows: Vec<Vec<Coeff>> = Vec::new();
        for sm in source.monomials_of_degree(d) {
            let image = map.apply(&Poly::monomial(source, sm, crate::poly::coeff_int(1)));
            let mut row = vec![Coeff::from_integer(0.into()); target_monos.len()];
            for (e, c) in image.terms() {
                row[col_of(e)] = c.clone();
            }
            rows.push(row);
        }
        let space = if rows.is_empty() {
            RowSpace::new(QMatrix::zero(1, target_monos.len()))
        } else {
            RowSpace::new(QMatrix::from_rows(rows))
        };
        let in_span = target_monos
            .iter()
            .map(|m| {
                let mut v = vec![Coeff::from_integer(0.into()); target_monos.len()];
                v[col_of(m)] = crate::poly::coeff_int(1);
                space.contains(&v)
            })
            .collect();
        out.push(SpanCheck {
            degree: d,
            monomials: target_monos,
            in_span,
        });
    }
    Ok(out)
}

/// Is `p` a nonzero rational multiple of `q`?
pub fn is_scalar_multiple(p: &Poly, q: &Poly) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    if p.num_terms() != q.num_terms() {
        return false;
    }
    let mut ratio: Option<Coeff> = None;
    for ((ep, cp), (eq, cq)) in p.terms().zip(q.terms()) {
        if ep != eq {
            return false;
        }
        let r = cp / cq;
        match &ratio {
            None => ratio = Some(r),
            Some(s) if *s == r => {}
            Some(_) => return false,
        }
    }
    true
}

/// Does `p` equal `target` or `-target`?
pub fn matches_up_to_sign(p: &Poly, target: &Poly) -> bool {
    p == target || p == &target.neg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::GradedRing;

    #[test]
    fn smooth_cone_of_plane_conic() {
        let r = GradedRing::new(vec!["x", "y"], vec![1, 1]).unwrap();
        let f = parse_poly("x^2 + y^2", &r).unwrap();
        assert_eq!(quasismooth(&[f]), Ok(true));
        let g = parse_poly("x^2", &r).unwrap();
        assert_eq!(quasismooth(&[g]), Ok(false));
    }

    #[test]
    fn input_validation() {
        let r = GradedRing::new(vec!["x", "y"], vec![1, 2]).unwrap();
        let f = parse_poly("x + y", &r).unwrap();
        assert_eq!(quasismooth(&[f]), Err(PipelineError::NotHomogeneous));
        let g = parse_poly("x^2", &r).unwrap();
        assert_eq!(
            quasismooth(&[g.clone(), g.clone(), g]),
            Err(PipelineError::UnsupportedCount(3))
        );
    }

    #[test]
    fn identity_images_span_everything() {
        let uv = GradedRing::new(vec!["u", "v"], vec![2, 3]).unwrap();
        let map = RingMap::inclusion(&uv, &uv);
        let checks = spanning_check(&map, 0..=15).unwrap();
        assert!(checks.iter().all(SpanCheck::all_pass));
    }

    #[test]
    fn scalar_multiple_detection() {
        let r = GradedRing::new(vec!["x", "y"], vec![1, 1]).unwrap();
        let p = parse_poly("2*x^2 - 4*y^2", &r).unwrap();
        let q = parse_poly("-x^2 + 2*y^2", &r).unwrap();
        assert!(is_scalar_multiple(&p, &q));
        let s = parse_poly("-x^2 + y^2", &r).unwrap();
        assert!(!is_scalar_multiple(&p, &s));
        assert!(matches_up_to_sign(
            &parse_poly("x - y", &r).unwrap(),
            &parse_poly("y - x", &r).unwrap()
        ));
    }
}
