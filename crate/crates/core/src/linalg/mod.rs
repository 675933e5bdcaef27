//! Dense exact matrices over the rationals and the rank / kernel / solve
//! operations built on [`Echelon`].

mod echelon;
mod sparse;

use std::fmt;

use num_traits::Zero;

pub use echelon::{Echelon, SparseRow};
pub use sparse::SparseMatrix;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type VectorQ = Vec<Rational>;

/// Row-major dense matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl MatrixQ {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = crate::rational::one();
        }
        m
    }

    pub fn from_rows(rows: &[VectorQ]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Convenience for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<VectorQ> = rows
            .iter()
            .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
            .collect();
        Self::from_rows(&rows).expect("ragged rows")
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(dim: usize, columns: &[VectorQ]) -> Result<Self> {
        let mut m = Self::zeros(dim, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.len(),
                });
            }
            for (i, v) in c.iter().enumerate() {
                m.entries[i * m.cols + j] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> VectorQ {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &MatrixQ) -> Result<MatrixQ> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<VectorQ> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn sub(&self, other: &MatrixQ) -> Result<MatrixQ> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.entries.len(),
                found: other.entries.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &Rational) -> MatrixQ {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let rows = (0..self.rows)
            .map(|i| echelon::dense_to_sparse(self.row(i)))
            .collect();
        SparseMatrix::from_sparse_rows(self.cols, rows)
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert_dense(self.row(i));
        }
        e
    }
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixQ {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Solution set of `m·v = b`: `particular + span(homogeneous)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: VectorQ,
    pub homogeneous: Vec<VectorQ>,
}

pub fn rank(m: &MatrixQ) -> usize {
    m.echelon().rank()
}

/// Kernel basis, one vector per free column (increasing), from the reduced
/// row echelon form.
pub fn nullspace_basis(m: &MatrixQ) -> Vec<VectorQ> {
    let rref = m.echelon().into_rref();
    echelon::kernel_from_rref(&rref, m.cols)
}

/// Kernel basis computed with the column order reversed, so that pivots
/// land on high indices and free parameters are the lowest-index
/// unknowns. Same span as [`nullspace_basis`].
pub fn nullspace_basis_low_free(m: &MatrixQ) -> Vec<VectorQ> {
    let n = m.cols;
    let mut e = Echelon::new(n);
    for i in 0..m.rows {
        let row: SparseRow = m
            .row(i)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (n - 1 - c, v.clone()))
            .collect();
        e.insert(row);
    }
    let mut basis: Vec<VectorQ> = echelon::kernel_from_rref(&e.into_rref(), n)
        .into_iter()
        .map(|mut v| {
            v.reverse();
            v
        })
        .collect();
    basis.reverse();
    basis
}

pub fn solve_affine(m: &MatrixQ, b: &[Rational]) -> Result<Option<AffineSolution>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: b.len(),
        });
    }
    Ok(m.to_sparse().solve_affine(b))
}

/// `rank(m^k)` for `k = 1..=max_power`.
pub fn power_rank_sequence(m: &MatrixQ, max_power: usize) -> Result<Vec<usize>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let mut out = Vec::with_capacity(max_power);
    let mut power = m.clone();
    for k in 0..max_power {
        if k > 0 {
            power = power.mul(m)?;
        }
        let r = rank(&power);
        out.push(r);
        if r == 0 {
            out.resize(max_power, 0);
            break;
        }
    }
    Ok(out)
}

/// Rank of a set of vectors of equal length.
pub fn rank_of_vectors(vectors: &[VectorQ]) -> usize {
    let cols = vectors.first().map_or(0, Vec::len);
    let mut e = Echelon::new(cols);
    for v in vectors {
        e.insert_dense(v);
    }
    e.rank()
}
