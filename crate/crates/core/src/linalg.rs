//! Exact linear algebra over the rationals: row reduction, rank, null space.

use num::{One, Zero};

use crate::rational::Rational;

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // deterministic pivoting: first nonzero entry in this column
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = Rational::one() / self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c).clone() * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c).clone() - &factor * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space. Vectors are produced from RREF free
    /// columns in increasing column order, so the basis is deterministic.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![Rational::zero(); self.cols];
            vec[free] = Rational::one();
            for (&pc, row) in pivots.iter().zip(0..) {
                vec[pc] = -m.get(row, free).clone();
            }
            basis.push(vec);
        }
        basis
    }
}

/// Rank of an integer matrix given as rows of i64, over the rationals.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    RatMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| crate::rational::rat(v)).collect())
            .collect(),
    )
    .rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rank_and_null_space() {
        // all-ones 1x4: rank 1, nullity 3
        let m = RatMatrix::from_rows(vec![vec![rat(1), rat(1), rat(1), rat(1)]]);
        assert_eq!(m.rank(), 1);
        let ns = m.null_space();
        assert_eq!(ns.len(), 3);
        for v in &ns {
            let s: Rational = v.iter().cloned().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn rref_identity() {
        let mut m = RatMatrix::from_rows(vec![
            vec![rat(2), rat(1)],
            vec![rat(1), rat(1)],
        ]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(*m.get(0, 0), rat(1));
        assert_eq!(*m.get(0, 1), rat(0));
        assert_eq!(*m.get(1, 1), rat(1));
    }

    #[test]
    fn int_rank_rect() {
        assert_eq!(int_rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]), 2);
    }
}
