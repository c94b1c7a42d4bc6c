//! Dense exact linear algebra over `Q(zeta_16)`.

use crate::scalars::CycNumber;

/// A dense matrix with `rows x cols` entries; `m[i][j]` is the coefficient of
/// target basis vector `i` in the image of source basis vector `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub m: Vec<Vec<CycNumber>>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            m: vec![vec![CycNumber::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Mat::zero(n, n);
        for i in 0..n {
            out.m[i][i] = CycNumber::one();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|r| r.iter().all(|c| c.is_zero()))
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.m[i][k].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if rhs.m[k][j].is_zero() {
                        continue;
                    }
                    let p = &self.m[i][k] * &rhs.m[k][j];
                    out.m[i][j] += &p;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.m[i][j] += &rhs.m[i][j];
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        self.add(&rhs.scaled(&(-CycNumber::one())))
    }

    pub fn scaled(&self, c: &CycNumber) -> Mat {
        let mut out = self.clone();
        for row in out.m.iter_mut() {
            for e in row.iter_mut() {
                *e = &*e * c;
            }
        }
        out
    }

    /// Row-reduce in place; returns pivot column indices.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.m[r][col].is_zero()) else {
                continue;
            };
            self.m.swap(row, p);
            let inv = self.m[row][col].inv().expect("nonzero pivot");
            for k in 0..self.cols {
                self.m[row][k] = &self.m[row][k] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self.m[r][col].is_zero() {
                    let f = self.m[r][col].clone();
                    for k in 0..self.cols {
                        let s = &self.m[row][k] * &f;
                        self.m[r][k] = &self.m[r][k] - &s;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref().len()
    }

    /// Kernel basis as columns of a `cols x k` matrix, in reduced echelon form
    /// (deterministic).
    pub fn kernel(&self) -> Mat {
        let mut work = self.clone();
        let pivots = work.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.m[fc][k] = CycNumber::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                out.m[pc][k] = -&work.m[prow][fc];
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut work = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                work.m[i][j] = self.m[i][j].clone();
            }
            work.m[i][n + i] = CycNumber::one();
        }
        let pivots = work.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut out = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.m[i][j] = work.m[i][n + j].clone();
            }
        }
        Some(out)
    }

    /// Solve `self * X = rhs` for `X`; `None` if inconsistent.  `self` need
    /// not be square; the solution uses free variables set to zero.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows);
        let n = self.cols;
        let mut work = Mat::zero(self.rows, n + rhs.cols);
        for i in 0..self.rows {
            for j in 0..n {
                work.m[i][j] = self.m[i][j].clone();
            }
            for j in 0..rhs.cols {
                work.m[i][n + j] = rhs.m[i][j].clone();
            }
        }
        let pivots = work.rref();
        // Inconsistent if a pivot lands in the rhs block.
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut out = Mat::zero(n, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                out.m[pc][j] = work.m[prow][n + j].clone();
            }
        }
        Some(out)
    }

    /// A basis of the column space: the pivot columns under row reduction.
    pub fn column_basis(&self) -> Mat {
        let mut work = self.clone();
        let pivots = work.rref();
        let mut out = Mat::zero(self.rows, pivots.len());
        for (k, &c) in pivots.iter().enumerate() {
            for r in 0..self.rows {
                out.m[r][k] = self.m[r][c].clone();
            }
        }
        out
    }

    /// Column span dimension equals that of `other`'s columns joined in.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.m[i][j] = self.m[i][j].clone();
            }
            for j in 0..other.cols {
                out.m[i][self.cols + j] = other.m[i][j].clone();
            }
        }
        out
    }
}

/// Rank of a collection of sparse rows `(col, value)`; used where dense
/// elimination would be wasteful (block-structured or permutation-like data).
pub fn sparse_rank(rows: &[Vec<(usize, CycNumber)>]) -> usize {
    // Echelon basis keyed by leading column.
    let mut basis: Vec<Vec<(usize, CycNumber)>> = Vec::new();
    let mut rank = 0;
    for row in rows {
        let mut cur: Vec<(usize, CycNumber)> = row
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .cloned()
            .collect();
        cur.sort_by_key(|(c, _)| *c);
        loop {
            let Some(&(lead, _)) = cur.first() else { break };
            match basis.iter().find(|b| b[0].0 == lead) {
                None => {
                    basis.push(cur);
                    rank += 1;
                    break;
                }
                Some(b) => {
                    let f = cur[0].1.div(&b[0].1).expect("nonzero lead");
                    // cur -= f * b  (merge sorted)
                    let mut merged: Vec<(usize, CycNumber)> = Vec::new();
                    let (mut i, mut j) = (0, 0);
                    while i < cur.len() || j < b.len() {
                        if j >= b.len() || (i < cur.len() && cur[i].0 < b[j].0) {
                            merged.push(cur[i].clone());
                            i += 1;
                        } else if i >= cur.len() || b[j].0 < cur[i].0 {
                            let v = -&(&f * &b[j].1);
                            if !v.is_zero() {
                                merged.push((b[j].0, v));
                            }
                            j += 1;
                        } else {
                            let v = &cur[i].1 - &(&f * &b[j].1);
                            if !v.is_zero() {
                                merged.push((cur[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    cur = merged;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, zeta4, CycNumber};

    fn from_ints(rows: usize, cols: usize, v: &[i64]) -> Mat {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.m[i][j] = CycNumber::from_int(v[i * cols + j]);
            }
        }
        m
    }

    #[test]
    fn rank_kernel_inverse() {
        let a = from_ints(2, 2, &[1, 2, 3, 4]);
        assert_eq!(a.rank(), 2);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));

        let b = from_ints(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(b.rank(), 1);
        let k = b.kernel();
        assert_eq!(k.cols, 2);
        assert!(b.mul(&k).is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = from_ints(2, 2, &[1, 1, 0, 1]);
        let rhs = from_ints(2, 1, &[3, 2]);
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.mul(&x), rhs);

        let sing = from_ints(2, 2, &[1, 1, 1, 1]);
        let bad = from_ints(2, 1, &[0, 1]);
        assert!(sing.solve(&bad).is_none());
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let a = from_ints(3, 3, &[1, 0, 2, 0, 1, 0, 1, 1, 2]);
        let rows: Vec<Vec<(usize, CycNumber)>> = a
            .m
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        assert_eq!(sparse_rank(&rows), a.rank());
        // complex entries: [[1, z4], [-z4, 1]] is singular since -z4*z4 = 1
        let mut b = Mat::identity(2);
        b.m[0][1] = zeta4();
        b.m[1][0] = zeta4().scaled(&rat(-1));
        assert_eq!(b.rank(), 1);
        b.m[1][0] = zeta4();
        assert_eq!(b.rank(), 2);
    }
}
