//! Skew matrices stored by their upper triangle, and their 4x4 Pfaffians.

use itertools::Itertools;
use thiserror::Error;

use crate::poly::Poly;
use crate::ring::GradedRing;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PfaffError {
    #[error("a skew matrix of size n stores n-1 upper rows of lengths n-1, n-2, ..., 1")]
    BadShape,
    #[error("need size >= 4, got {0}")]
    TooSmall(usize),
    #[error("index {0} out of range for size {1}")]
    IndexRange(usize, usize),
    #[error("indices must be distinct")]
    RepeatedIndex,
}

/// A skew-symmetric matrix given by its upper triangle: row `i` stores
/// `a_{i,i+1}, ..., a_{i,n-1}` (zero-based). The diagonal is implicitly zero
/// and the lower triangle implicitly negated.
#[derive(Clone, Debug)]
pub struct SkewPfaffianMatrix {
    ring: GradedRing,
    n: usize,
    upper: Vec<Vec<Poly>>,
}

impl SkewPfaffianMatrix {
    pub fn from_upper_rows(ring: &GradedRing, rows: Vec<Vec<Poly>>) -> Result<Self, PfaffError> {
        let n = rows.len() + 1;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - 1 - i {
                return Err(PfaffError::BadShape);
            }
            for e in row {
                assert!(e.ring() == ring, "entry in the wrong ring");
            }
        }
        Ok(SkewPfaffianMatrix {
            ring: ring.clone(),
            n,
            upper: rows,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    /// Signed entry: `a_ij` above the diagonal, `-a_ji` below, zero on it.
    pub fn entry(&self, i: usize, j: usize) -> Poly {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Poly::zero(&self.ring),
            Less => self.upper[i][j - i - 1].clone(),
            Greater => self.upper[j][i - j - 1].neg(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Poly>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// 4x4 Pfaffian of the rows/columns `idx`: for sorted indices
    /// `i<j<k<l` this is `a_ij*a_kl - a_ik*a_jl + a_il*a_jk`; an unsorted
    /// index tuple contributes the sign of its sorting permutation.
    pub fn pfaffian4(&self, idx: [usize; 4]) -> Result<Poly, PfaffError> {
        for &i in &idx {
            if i >= self.n {
                return Err(PfaffError::IndexRange(i, self.n));
            }
        }
        let mut sorted = idx;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(PfaffError::RepeatedIndex);
        }
        let mut inversions = 0;
        for a in 0..4 {
            for b in (a + 1)..4 {
                if idx[a] > idx[b] {
                    inversions += 1;
                }
            }
        }
        let [i, j, k, l] = sorted;
        let p = self
            .entry(i, j)
            .mul(&self.entry(k, l))
            .sub(&self.entry(i, k).mul(&self.entry(j, l)))
            .add(&self.entry(i, l).mul(&self.entry(j, k)));
        Ok(if inversions % 2 == 0 { p } else { p.neg() })
    }

    /// All principal 4x4 Pfaffians, in lexicographic order of the index
    /// sets. A 5x5 matrix yields 5 values, a 6x6 matrix 15.
    pub fn pfaffian_system(&self) -> Result<Vec<Poly>, PfaffError> {
        if self.n < 4 {
            return Err(PfaffError::TooSmall(self.n));
        }
        (0..self.n)
            .combinations(4)
            .map(|c| self.pfaffian4([c[0], c[1], c[2], c[3]]))
            .collect()
    }

    /// Check degree data: with half-degrees `2*d_i = twice_degrees[i]`, every
    /// nonzero entry `a_ij` must be homogeneous of degree `d_i + d_j`.
    pub fn check_graded(&self, twice_degrees: &[i64]) -> bool {
        if twice_degrees.len() != self.n {
            return false;
        }
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let e = &self.upper[i][j - i - 1];
                if e.is_zero() {
                    continue;
                }
                let want2 = twice_degrees[i] + twice_degrees[j];
                match e.homogeneous_degree() {
                    Some(d) if 2 * d == want2 => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn generic4() -> (GradedRing, SkewPfaffianMatrix) {
        let r = GradedRing::new(
            vec!["a12", "a13", "a14", "a23", "a24", "a34"],
            vec![1, 1, 1, 1, 1, 1],
        )
        .unwrap();
        let p = |t: &str| parse_poly(t, &r).unwrap();
        let m = SkewPfaffianMatrix::from_upper_rows(
            &r,
            vec![
                vec![p("a12"), p("a13"), p("a14")],
                vec![p("a23"), p("a24")],
                vec![p("a34")],
            ],
        )
        .unwrap();
        (r, m)
    }

    #[test]
    fn defining_formula_on_generic_symbols() {
        let (r, m) = generic4();
        let expected = parse_poly("a12*a34 - a13*a24 + a14*a23", &r).unwrap();
        assert_eq!(m.pfaffian4([0, 1, 2, 3]).unwrap(), expected);
        let sys = m.pfaffian_system().unwrap();
        assert_eq!(sys, vec![expected]);
    }

    #[test]
    fn alternating_in_the_indices() {
        let (_, m) = generic4();
        let base = m.pfaffian4([0, 1, 2, 3]).unwrap();
        assert_eq!(m.pfaffian4([1, 0, 2, 3]).unwrap(), base.neg());
        assert_eq!(m.pfaffian4([1, 0, 3, 2]).unwrap(), base);
        assert_eq!(m.pfaffian4([3, 2, 1, 0]).unwrap(), base);
    }

    #[test]
    fn index_validation() {
        let (_, m) = generic4();
        assert_eq!(
            m.pfaffian4([0, 1, 2, 4]),
            Err(PfaffError::IndexRange(4, 4))
        );
        assert_eq!(m.pfaffian4([0, 1, 2, 2]), Err(PfaffError::RepeatedIndex));
    }

    #[test]
    fn zero_rows_degenerate() {
        // zero out rows 2 and 3 of the generic matrix: any Pfaffian using
        // both rows vanishes
        let r = GradedRing::new(vec!["a", "b"], vec![1, 1]).unwrap();
        let p = |t: &str| parse_poly(t, &r).unwrap();
        let m = SkewPfaffianMatrix::from_upper_rows(
            &r,
            vec![
                vec![p("a"), p("0"), p("0")],
                vec![p("0"), p("0")],
                vec![p("0")],
            ],
        )
        .unwrap();
        assert!(m.pfaffian4([0, 1, 2, 3]).unwrap().is_zero());
    }
}
