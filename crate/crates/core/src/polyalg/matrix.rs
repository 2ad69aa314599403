//! Exact dense matrices over any [`Scalar`] field, with fraction-free
//! (Bareiss) elimination for rank, kernel bases and linear solving.

use crate::exactnum::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    exemplar: S,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankKernel<S: Scalar> {
    pub rank: usize,
    /// Basis of the right kernel, one vector per free column, in column order.
    pub kernel: Vec<Vec<S>>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn filled(rows: usize, cols: usize, fill: S) -> ExactMatrix<S> {
        ExactMatrix {
            rows,
            cols,
            data: vec![fill.clone(); rows * cols],
            exemplar: fill,
        }
    }

    pub fn from_rows(rows_data: Vec<Vec<S>>, exemplar: S) -> ExactMatrix<S> {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for row in rows_data {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        ExactMatrix {
            rows,
            cols,
            data,
            exemplar,
        }
    }

    pub fn identity(n: usize, exemplar: &S) -> ExactMatrix<S> {
        let mut m = ExactMatrix::filled(n, n, exemplar.s_zero());
        for i in 0..n {
            m.set(i, i, exemplar.s_one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> ExactMatrix<S> {
        let mut out = ExactMatrix::filled(self.cols, self.rows, self.exemplar.s_zero());
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix<S>) -> ExactMatrix<S> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let zero = self.exemplar.s_zero();
        let mut out = ExactMatrix::filled(self.rows, other.cols, zero);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero_val() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero_val() {
                        continue;
                    }
                    let sum = out.get(r, c).s_add(&a.s_mul(b));
                    out.set(r, c, sum);
                }
            }
        }
        out
    }

    pub fn apply(&self, vector: &[S]) -> Vec<S> {
        assert_eq!(vector.len(), self.cols);
        let zero = self.exemplar.s_zero();
        let mut out = vec![zero; self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero_val() || vector[c].is_zero_val() {
                    continue;
                }
                out[r] = out[r].s_add(&a.s_mul(&vector[c]));
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &ExactMatrix<S>) -> ExactMatrix<S> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
            exemplar: self.exemplar.clone(),
        }
    }

    /// Reduced row echelon form together with the pivot columns. The forward
    /// pass is one-step Bareiss (each 2x2 cross-multiplication divided by the
    /// previous pivot, exact in a field); the backward pass rescales to
    /// leading ones.
    fn rref(&self) -> (ExactMatrix<S>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut prev = self.exemplar.s_one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pivot_row) = (r..m.rows).find(|i| !m.get(*i, c).is_zero_val()) else {
                continue;
            };
            if pivot_row != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(r, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let pivot = m.get(r, c).clone();
            for i in (r + 1)..m.rows {
                let below = m.get(i, c).clone();
                for j in c..m.cols {
                    let val = pivot
                        .s_mul(m.get(i, j))
                        .s_sub(&below.s_mul(m.get(r, j)))
                        .s_div(&prev)
                        .expect("previous pivot is nonzero");
                    m.set(i, j, val);
                }
            }
            prev = pivot;
            pivots.push((r, c));
            r += 1;
        }
        // Normalize to leading ones and clear above each pivot.
        for &(pr, pc) in pivots.iter().rev() {
            let inv = m.get(pr, pc).s_inv().expect("pivot is nonzero");
            for j in pc..m.cols {
                m.set(pr, j, m.get(pr, j).s_mul(&inv));
            }
            for i in 0..pr {
                let factor = m.get(i, pc).clone();
                if factor.is_zero_val() {
                    continue;
                }
                for j in pc..m.cols {
                    let val = m.get(i, j).s_sub(&factor.s_mul(m.get(pr, j)));
                    m.set(i, j, val);
                }
            }
        }
        (m, pivots.into_iter().map(|(_, c)| c).collect())
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn rank_kernel(&self) -> RankKernel<S> {
        let (rref, pivot_cols) = self.rref();
        let zero = self.exemplar.s_zero();
        let one = self.exemplar.s_one();
        let mut kernel = Vec::new();
        for j in 0..self.cols {
            if pivot_cols.contains(&j) {
                continue;
            }
            let mut v = vec![zero.clone(); self.cols];
            v[j] = one.clone();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = rref.get(row, j).s_neg();
            }
            kernel.push(v);
        }
        RankKernel {
            rank: pivot_cols.len(),
            kernel,
        }
    }
}

/// One exact solution of `m x = rhs` with free variables set to zero, or None
/// when the system is inconsistent.
pub fn solve_linear<S: Scalar>(m: &ExactMatrix<S>, rhs: &[S]) -> Option<Vec<S>> {
    assert_eq!(rhs.len(), m.rows());
    let zero = rhs
        .first()
        .map(|s| s.s_zero())
        .unwrap_or_else(|| m.exemplar.s_zero());
    let mut augmented = ExactMatrix::filled(m.rows(), m.cols() + 1, zero.clone());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            augmented.set(r, c, m.get(r, c).clone());
        }
        augmented.set(r, m.cols(), rhs[r].clone());
    }
    let (rref, pivot_cols) = augmented.rref();
    if pivot_cols.contains(&m.cols()) {
        return None; // pivot in the constant column
    }
    let mut x = vec![zero; m.cols()];
    for (row, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = rref.get(row, m.cols()).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_int, Rational};

    fn m_i64(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        let data: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|v| rat_int(*v)).collect())
            .collect();
        ExactMatrix::from_rows(data, rat_int(0))
    }

    #[test]
    fn rank_and_kernel_small() {
        let m = m_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let rk = m.rank_kernel();
        assert_eq!(rk.rank, 2);
        assert_eq!(rk.kernel.len(), 1);
        // Kernel vector must be annihilated.
        for v in &rk.kernel {
            assert!(m.apply(v).iter().all(|x| x.is_zero_val()));
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = m_i64(&[&[1, 2, 3, 4], &[0, 1, 1, 0], &[1, 3, 4, 4]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = m_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            solve_linear(&m, &[rat_int(3), rat_int(6)]),
            Some(vec![rat_int(3), rat_int(0)])
        );
        assert_eq!(solve_linear(&m, &[rat_int(3), rat_int(7)]), None);
    }

    #[test]
    fn identity_multiplication() {
        let m = m_i64(&[&[3, 1], &[7, 2]]);
        let id = ExactMatrix::identity(2, &rat_int(0));
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
    }

    use crate::exactnum::rat;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn rank_equals_transpose_rank_on_random_matrices(
            rows in 1usize..=6,
            cols in 1usize..=6,
            entries in proptest::collection::vec((-9i64..=9, 1i64..=4), 36),
        ) {
            let data: Vec<Vec<Rational>> = (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| {
                            let (n, d) = entries[i * 6 + j];
                            rat(n, d)
                        })
                        .collect()
                })
                .collect();
            let m = ExactMatrix::from_rows(data, rat_int(0));
            prop_assert_eq!(m.rank(), m.transpose().rank());
            // rank + nullity = number of columns
            let rk = m.rank_kernel();
            prop_assert_eq!(rk.rank + rk.kernel.len(), cols);
        }
    }
}
