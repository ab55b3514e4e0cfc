//! Matrices of homogeneous polynomials with row/column degree data.
//!
//! The grading convention: a matrix representing a map `L' <- L` of graded
//! free modules has rows indexed by generators of `L'` and columns by
//! generators of `L`; a nonzero entry at `(i, j)` is homogeneous of weighted
//! degree `col_degrees[j] - row_degrees[i]`.

use thiserror::Error;

use crate::gb::Vect;
use crate::linalg::QMatrix;
use crate::poly::{Coeff, Poly};
use crate::ring::GradedRing;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("entry ({0},{1}) is not homogeneous of degree {2}")]
    BadEntryDegree(usize, usize, i64),
    #[error("inconsistent dimensions")]
    Shape,
    #[error("column {0} is zero; its degree cannot be inferred")]
    ZeroColumn(usize),
    #[error("matrix must be square")]
    NotSquare,
}

#[derive(Clone, PartialEq)]
pub struct GradedMatrix {
    ring: GradedRing,
    entries: Vec<Vec<Poly>>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
}

impl GradedMatrix {
    pub fn new(
        ring: &GradedRing,
        entries: Vec<Vec<Poly>>,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
    ) -> Result<Self, MatrixError> {
        if entries.len() != row_degrees.len()
            || entries.iter().any(|r| r.len() != col_degrees.len())
        {
            return Err(MatrixError::Shape);
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let want = col_degrees[j] - row_degrees[i];
                if e.homogeneous_degree() != Some(want) {
                    return Err(MatrixError::BadEntryDegree(i, j, want));
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            entries,
            row_degrees,
            col_degrees,
        })
    }

    /// Infer column degrees from the first nonzero entry of each column.
    pub fn infer(
        ring: &GradedRing,
        entries: Vec<Vec<Poly>>,
        row_degrees: Vec<i64>,
    ) -> Result<Self, MatrixError> {
        if entries.is_empty() {
            return Err(MatrixError::Shape);
        }
        let cols = entries[0].len();
        let mut col_degrees = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut found = None;
            for (i, row) in entries.iter().enumerate() {
                let e = row.get(j).ok_or(MatrixError::Shape)?;
                if !e.is_zero() {
                    let d = e
                        .homogeneous_degree()
                        .ok_or(MatrixError::BadEntryDegree(i, j, 0))?;
                    found = Some(d + row_degrees[i]);
                    break;
                }
            }
            col_degrees.push(found.ok_or(MatrixError::ZeroColumn(j))?);
        }
        GradedMatrix::new(ring, entries, row_degrees, col_degrees)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    /// The table of entry degrees `col_degrees[j] - row_degrees[i]`.
    pub fn weight_table(&self) -> Vec<Vec<i64>> {
        self.row_degrees
            .iter()
            .map(|r| self.col_degrees.iter().map(|c| c - r).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly::is_zero)
    }

    /// True when no entry is a nonzero constant.
    pub fn has_no_unit_entry(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| e.is_zero() || !e.is_constant())
    }

    pub fn mul(&self, other: &GradedMatrix) -> Result<GradedMatrix, MatrixError> {
        if self.cols() != other.rows() || self.col_degrees != other.row_degrees {
            return Err(MatrixError::Shape);
        }
        let mut out = vec![vec![Poly::zero(&self.ring); other.cols()]; self.rows()];
        for i in 0..self.rows() {
            for j in 0..other.cols() {
                let mut acc = Poly::zero(&self.ring);
                for k in 0..self.cols() {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
                out[i][j] = acc;
            }
        }
        GradedMatrix::new(
            &self.ring,
            out,
            self.row_degrees.clone(),
            other.col_degrees.clone(),
        )
    }

    pub fn sub(&self, other: &GradedMatrix) -> Result<GradedMatrix, MatrixError> {
        if self.rows() != other.rows() || self.cols() != other.cols() {
            return Err(MatrixError::Shape);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.sub(y)).collect())
            .collect();
        GradedMatrix::new(
            &self.ring,
            entries,
            self.row_degrees.clone(),
            self.col_degrees.clone(),
        )
    }

    /// Transpose with a twist: the result's degree data is `k - (old data)`,
    /// swapped. Entry degrees are preserved.
    pub fn transpose_twisted(&self, k: i64) -> GradedMatrix {
        let entries: Vec<Vec<Poly>> = (0..self.cols())
            .map(|j| (0..self.rows()).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        GradedMatrix {
            ring: self.ring.clone(),
            entries,
            row_degrees: self.col_degrees.iter().map(|c| k - c).collect(),
            col_degrees: self.row_degrees.iter().map(|r| k - r).collect(),
        }
    }

    /// The symplectic-style block matrix `((0, I), (-I, 0))` of size `2m`,
    /// graded so that it maps the twisted transpose convention correctly:
    /// row degrees are `degrees`, column degrees are `degrees` rotated by m.
    pub fn block_j(ring: &GradedRing, degrees: &[i64]) -> GradedMatrix {
        let n = degrees.len();
        assert!(n % 2 == 0, "block J needs even size");
        let m = n / 2;
        let one = Poly::one(ring);
        let mut entries = vec![vec![Poly::zero(ring); n]; n];
        for i in 0..m {
            entries[i][m + i] = one.clone();
            entries[m + i][i] = one.neg();
        }
        let col_degrees: Vec<i64> = (0..n).map(|j| degrees[(j + m) % n]).collect();
        GradedMatrix {
            ring: ring.clone(),
            entries,
            row_degrees: degrees.to_vec(),
            col_degrees,
        }
    }

    /// Columns as free-module elements (shifts = row degrees), paired with
    /// their column degrees.
    pub fn columns_as_vects(&self) -> Vec<Vect> {
        (0..self.cols())
            .map(|j| {
                Vect::new(
                    (0..self.rows())
                        .map(|i| self.entries[i][j].clone())
                        .collect(),
                )
            })
            .collect()
    }

    /// Build from columns given as free-module elements over row shifts.
    pub fn from_columns(
        ring: &GradedRing,
        row_degrees: Vec<i64>,
        columns: &[Vect],
        col_degrees: Vec<i64>,
    ) -> Result<GradedMatrix, MatrixError> {
        let rows = row_degrees.len();
        if columns.iter().any(|c| c.rank() != rows) || columns.len() != col_degrees.len() {
            return Err(MatrixError::Shape);
        }
        let entries: Vec<Vec<Poly>> = (0..rows)
            .map(|i| columns.iter().map(|c| c.comp(i).clone()).collect())
            .collect();
        GradedMatrix::new(ring, entries, row_degrees, col_degrees)
    }

    /// Determinant by Laplace expansion along the first row; fine for the
    /// small square matrices in scope.
    pub fn determinant(&self) -> Result<Poly, MatrixError> {
        if self.rows() != self.cols() {
            return Err(MatrixError::NotSquare);
        }
        Ok(det_rec(&self.entries, &self.ring))
    }

    /// Rank after evaluating every entry at a rational point.
    pub fn rank_at(&self, point: &[Coeff]) -> usize {
        let rows: Vec<Vec<Coeff>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval(point)).collect())
            .collect();
        QMatrix::from_rows(rows).rank()
    }

    /// Reinterpret every entry in `target` (variables matched by name).
    pub fn transfer(&self, target: &GradedRing) -> GradedMatrix {
        GradedMatrix {
            ring: target.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| e.transfer(target)).collect())
                .collect(),
            row_degrees: self.row_degrees.clone(),
            col_degrees: self.col_degrees.clone(),
        }
    }
}

pub(crate) fn det_rec(m: &[Vec<Poly>], ring: &GradedRing) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero(ring);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let cof = m[0][j].mul(&det_rec(&minor, ring));
        acc = if j % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
    }
    acc
}

/// Classical adjugate of a square polynomial matrix: `adj[j][i]` is the
/// `(i,j)` cofactor, so `m * adj = det(m) * I`.
pub fn adjugate(m: &[Vec<Poly>], ring: &GradedRing) -> Vec<Vec<Poly>> {
    let n = m.len();
    let mut adj = vec![vec![Poly::zero(ring); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<Poly>> = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let mut cof = det_rec(&minor, ring);
            if (i + j) % 2 == 1 {
                cof = cof.neg();
            }
            adj[j][i] = cof;
        }
    }
    adj
}

impl std::fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GradedMatrix {}x{} rows{:?} cols{:?}", self.rows(), self.cols(), self.row_degrees, self.col_degrees)?;
        for row in &self.entries {
            let parts: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::coeff_int;

    fn ring_xy() -> GradedRing {
        GradedRing::new(vec!["x", "y"], vec![1, 1]).unwrap()
    }

    fn p(t: &str, r: &GradedRing) -> Poly {
        parse_poly(t, r).unwrap()
    }

    #[test]
    fn grading_invariant_enforced() {
        let r = ring_xy();
        // entry x at (0,0) with row degree 0 needs column degree 1
        assert!(GradedMatrix::new(&r, vec![vec![p("x", &r)]], vec![0], vec![1]).is_ok());
        assert!(matches!(
            GradedMatrix::new(&r, vec![vec![p("x", &r)]], vec![0], vec![2]),
            Err(MatrixError::BadEntryDegree(0, 0, 2))
        ));
        assert!(matches!(
            GradedMatrix::new(&r, vec![vec![p("x + 1", &r)]], vec![0], vec![1]),
            Err(MatrixError::BadEntryDegree(..))
        ));
    }

    #[test]
    fn inference_and_weight_table() {
        let r = ring_xy();
        let m = GradedMatrix::infer(
            &r,
            vec![
                vec![p("x", &r), p("x*y", &r)],
                vec![p("1", &r), p("y", &r)],
            ],
            vec![0, 1],
        )
        .unwrap();
        assert_eq!(m.col_degrees(), &[1, 2]);
        assert_eq!(m.weight_table(), vec![vec![1, 2], vec![0, 1]]);
        assert!(!m.has_no_unit_entry());
    }

    #[test]
    fn determinant_and_adjugate() {
        let r = ring_xy();
        let rows = vec![
            vec![p("x", &r), p("y", &r)],
            vec![p("y", &r), p("x", &r)],
        ];
        assert_eq!(det_rec(&rows, &r), p("x^2 - y^2", &r));
        let adj = adjugate(&rows, &r);
        // m * adj = det * I
        let prod00 = rows[0][0].mul(&adj[0][0]).add(&rows[0][1].mul(&adj[1][0]));
        let prod01 = rows[0][0].mul(&adj[0][1]).add(&rows[0][1].mul(&adj[1][1]));
        assert_eq!(prod00, p("x^2 - y^2", &r));
        assert!(prod01.is_zero());
    }

    #[test]
    fn rank_at_points() {
        let r = ring_xy();
        let m = GradedMatrix::infer(
            &r,
            vec![
                vec![p("x", &r), p("y", &r)],
                vec![p("2*x", &r), p("2*y", &r)],
            ],
            vec![0, 0],
        )
        .unwrap();
        assert_eq!(m.rank_at(&[coeff_int(1), coeff_int(3)]), 1);
    }
}
