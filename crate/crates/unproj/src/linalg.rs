//! Dense exact-rational linear algebra: row reduction, rank, span tests.

use num_traits::Zero;

use crate::poly::Coeff;

/// Row-major dense matrix over Q.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Coeff>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Coeff::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Coeff>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.data[i * self.cols + j] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.at(i, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).recip();
            for j in col..self.cols {
                let v = self.at(row, j) * &inv;
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i != row && !self.at(i, col).is_zero() {
                    let f = self.at(i, col).clone();
                    for j in col..self.cols {
                        let v = self.at(i, j) - &f * self.at(row, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }
}

/// Row space of a matrix, kept in reduced echelon form for membership tests.
pub struct RowSpace {
    rref: QMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(mut m: QMatrix) -> Self {
        let pivots = m.rref();
        RowSpace { rref: m, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Does `v` lie in the row space?
    pub fn contains(&self, v: &[Coeff]) -> bool {
        assert_eq!(v.len(), self.rref.cols);
        let mut w = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let f = w[pc].clone();
                for j in pc..self.rref.cols {
                    let t = &w[j] - &f * self.rref.at(r, j);
                    w[j] = t;
                }
            }
        }
        w.iter().all(|c| c.is_zero())
    }
}
