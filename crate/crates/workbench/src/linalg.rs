//! Dense exact linear algebra over GF(p): reduced row echelon form, rank,
//! nullspace, solving, inversion. Matrices are small (a few hundred rows
//! at most), so the textbook algorithms are the right tool. Pivoting is
//! by first nonzero entry, so results are deterministic.

use crate::scalars::Fp;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatFp {
    pub fp: Fp,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl MatFp {
    pub fn zeros(fp: Fp, rows: usize, cols: usize) -> Self {
        MatFp { fp, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(fp: Fp, n: usize) -> Self {
        let mut m = Self::zeros(fp, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(fp: Fp, rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for x in row {
                data.push(x % fp.p);
            }
        }
        MatFp { fp, rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn matmul(&self, other: &MatFp) -> MatFp {
        assert_eq!(self.cols, other.rows);
        let fp = self.fp;
        let mut out = MatFp::zeros(fp, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = fp.add(out[(i, j)], fp.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let fp = self.fp;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for j in 0..self.cols {
                    acc = fp.add(acc, fp.mul(self[(i, j)], v[j]));
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let fp = self.fp;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = fp.inv(self[(r, c)]).expect("pivot nonzero");
            for j in 0..self.cols {
                self[(r, j)] = fp.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let f = self[(i, c)];
                    for j in 0..self.cols {
                        let s = fp.mul(f, self[(r, j)]);
                        self[(i, j)] = fp.sub(self[(i, j)], s);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, in RREF-induced canonical order.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let fp = self.fp;
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = fp.neg(m[(r, fc)]);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of self * x = b, if any.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let fp = self.fp;
        let mut aug = MatFp::zeros(fp, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i] % fp.p;
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent row 0 .. 0 | 1
        }
        let mut x = vec![0u64; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(r, self.cols)];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<MatFp> {
        assert_eq!(self.rows, self.cols);
        let fp = self.fp;
        let n = self.rows;
        let mut aug = MatFp::zeros(fp, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let pivots = aug.rref();
        if pivots.len() < n {
            return None;
        }
        let mut inv = MatFp::zeros(fp, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(inv)
    }

    pub fn transpose(&self) -> MatFp {
        let mut out = MatFp::zeros(self.fp, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for MatFp {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatFp {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    #[test]
    fn rref_rank_nullspace() {
        let fp = f5();
        // rank-2 matrix with a 1-dim nullspace
        let m = MatFp::from_rows(fp, vec![vec![1, 2, 3], vec![2, 4, 1], vec![3, 6, 4]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(m.apply(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let fp = f5();
        let m = MatFp::from_rows(fp, vec![vec![1, 2], vec![3, 4]]);
        let x = m.solve(&[1, 0]).unwrap();
        assert_eq!(m.apply(&x), vec![1, 0]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), MatFp::identity(fp, 2));
        assert_eq!(inv.matmul(&m), MatFp::identity(fp, 2));
    }

    #[test]
    fn singular_has_no_inverse() {
        let fp = f5();
        let m = MatFp::from_rows(fp, vec![vec![1, 2], vec![2, 4]]);
        assert!(m.inverse().is_none());
        assert!(m.solve(&[0, 1]).is_none());
    }
}
