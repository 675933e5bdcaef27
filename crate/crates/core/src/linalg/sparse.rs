use std::collections::BTreeMap;

use num_traits::Zero;

use super::echelon::{self, Echelon, SparseRow};
use super::{AffineSolution, MatrixQ, VectorQ};
use crate::rational::Rational;

/// Row-sparse rational matrix. Used for coboundary operators whose dense
/// form would be wasteful; every result agrees exactly with the dense path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseRow>) -> Self {
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        Self { cols, rows }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> MatrixQ {
        let mut m = MatrixQ::zeros(self.rows.len(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                m.set(i, *c, v.clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rational]) -> VectorQ {
        assert_eq!(v.len(), self.cols);
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .fold(Rational::zero(), |acc, (c, a)| acc + a * &v[*c])
            })
            .collect()
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows.len());
        let rows = crate::par::map(&self.rows, |r| {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, a) in r {
                for (j, b) in &other.rows[*k] {
                    *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        });
        SparseMatrix {
            cols: other.cols,
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in &self.rows {
            e.insert(r.clone());
        }
        e.rank()
    }

    /// Rank of the row subset `indices`.
    pub fn rank_of_rows(&self, indices: &[usize]) -> usize {
        let mut e = Echelon::new(self.cols);
        for &i in indices {
            e.insert(self.rows[i].clone());
        }
        e.rank()
    }

    pub fn nullspace_basis(&self) -> Vec<VectorQ> {
        let mut e = Echelon::new(self.cols);
        for r in &self.rows {
            e.insert(r.clone());
        }
        echelon::kernel_from_rref(&e.into_rref(), self.cols)
    }

    /// Exact solution set of `self·v = b`, `None` when inconsistent.
    pub fn solve_affine(&self, b: &[Rational]) -> Option<AffineSolution> {
        assert_eq!(b.len(), self.rows.len());
        let n = self.cols;
        let mut e = Echelon::new(n + 1);
        for (r, rhs) in self.rows.iter().zip(b) {
            let mut row = r.clone();
            if !rhs.is_zero() {
                row.push((n, rhs.clone()));
            }
            e.insert(row);
        }
        let rref = e.into_rref();
        if rref.iter().any(|(lead, _)| *lead == n) {
            return None;
        }
        let mut particular = vec![Rational::zero(); n];
        for (lead, row) in &rref {
            if let Some((c, v)) = row.last() {
                if *c == n {
                    particular[*lead] = v.clone();
                }
            }
        }
        let homogeneous = echelon::kernel_from_rref(&rref, n + 1)
            .into_iter()
            .filter(|v| v[n].is_zero())
            .map(|mut v| {
                v.truncate(n);
                v
            })
            .collect();
        Some(AffineSolution {
            particular,
            homogeneous,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{nullspace_basis, rank};
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn sparse_and_dense_agree(r in 1usize..6, c in 1usize..6, v in proptest::collection::vec(-2i64..3, 36)) {
            let m = MatrixQ::new(r, c, v.into_iter().take(r * c).map(int).collect()).unwrap();
            let s = m.to_sparse();
            prop_assert_eq!(s.to_dense(), m.clone());
            prop_assert_eq!(s.rank(), rank(&m));
            prop_assert_eq!(s.nullspace_basis(), nullspace_basis(&m));
            let prod = s.mul(&m.transpose().to_sparse());
            prop_assert_eq!(prod.to_dense(), m.mul(&m.transpose()).unwrap());
        }
    }
}
