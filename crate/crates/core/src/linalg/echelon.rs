//! Incremental row echelon form over sparse rational rows.
//!
//! Rows are inserted one at a time and reduced against the pivots found so
//! far (leading-entry elimination only), which keeps fill-in low on the very
//! sparse coboundary matrices. A full reduced row echelon form is produced
//! on demand for nullspace and affine-solve queries.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// A sparse row: strictly increasing column indices, no stored zeros.
pub type SparseRow = Vec<(usize, Rational)>;

/// `row - factor * other`, both sorted by column.
pub(crate) fn axpy(
    row: &[(usize, Rational)],
    factor: &Rational,
    other: &[(usize, Rational)],
) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < other.len() {
        let ca = row.get(a).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = other.get(b).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(row[a].clone());
            a += 1;
        } else if cb < ca {
            out.push((cb, -(factor * &other[b].1)));
            b += 1;
        } else {
            let v = &row[a].1 - factor * &other[b].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

pub(crate) fn dense_to_sparse(row: &[Rational]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    /// leading column -> row whose leading coefficient is 1
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` by leading-entry elimination. Returns the remainder,
    /// which is empty iff `row` lies in the span of the inserted rows.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((lead, coeff)) = row.first() else {
                return row;
            };
            match self.pivots.get(lead) {
                Some(p) => {
                    let coeff = coeff.clone();
                    row = axpy(&row, &coeff, p);
                }
                None => return row,
            }
        }
    }

    /// Reduces every entry of `row` that sits on a pivot column.
    pub fn reduce_fully(&self, row: SparseRow) -> SparseRow {
        let mut row = row;
        let mut from = 0usize;
        loop {
            let hit = row
                .iter()
                .skip_while(|(c, _)| *c < from)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            match hit {
                Some((c, v)) => {
                    row = axpy(&row, &v, &self.pivots[&c]);
                    from = c + 1;
                }
                None => return row,
            }
        }
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.cols));
        let mut rem = self.reduce(row);
        let Some((lead, coeff)) = rem.first().cloned() else {
            return false;
        };
        if !coeff.is_one() {
            let inv = coeff.recip();
            for e in rem.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        self.pivots.insert(lead, rem);
        true
    }

    pub fn insert_dense(&mut self, row: &[Rational]) -> bool {
        self.insert(dense_to_sparse(row))
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Reduced row echelon form: `(pivot column, row)` pairs by increasing
    /// pivot column; each row has a unit pivot and zeros on the other pivot
    /// columns.
    pub fn into_rref(self) -> Vec<(usize, SparseRow)> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (lead, row) in self.pivots.into_iter().rev() {
            let mut row = row;
            let mut from = lead + 1;
            loop {
                let hit = row
                    .iter()
                    .skip_while(|(c, _)| *c < from)
                    .find(|(c, _)| done.contains_key(c))
                    .map(|(c, v)| (*c, v.clone()));
                match hit {
                    Some((c, v)) => {
                        row = axpy(&row, &v, &done[&c]);
                        from = c + 1;
                    }
                    None => break,
                }
            }
            done.insert(lead, row);
        }
        done.into_iter().collect()
    }
}

/// Basis of the kernel read off a reduced row echelon form over `cols`
/// unknowns, one vector per free column in increasing order.
pub(crate) fn kernel_from_rref(rref: &[(usize, SparseRow)], cols: usize) -> Vec<Vec<Rational>> {
    let pivot_set: std::collections::BTreeSet<usize> = rref.iter().map(|(c, _)| *c).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (lead, row) in rref {
            if let Ok(pos) = row.binary_search_by_key(&free, |e| e.0) {
                v[*lead] = -row[pos].1.clone();
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, int(v))).collect()
    }

    #[test]
    fn dependent_rows_do_not_add_rank() {
        let mut e = Echelon::new(3);
        assert!(e.insert(row(&[(0, 1), (1, 2), (2, 3)])));
        assert!(!e.insert(row(&[(0, 2), (1, 4), (2, 6)])));
        assert!(e.insert(row(&[(1, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(&[(0, 1), (2, 3)])));
    }

    #[test]
    fn rref_clears_pivot_columns() {
        let mut e = Echelon::new(3);
        e.insert(row(&[(0, 1), (1, 1), (2, 1)]));
        e.insert(row(&[(1, 1), (2, 2)]));
        let rref = e.into_rref();
        assert_eq!(rref[0], (0, row(&[(0, 1), (2, -1)])));
        assert_eq!(rref[1], (1, row(&[(1, 1), (2, 2)])));
        let k = kernel_from_rref(&rref, 3);
        assert_eq!(k, vec![vec![int(1), int(-2), int(1)]]);
    }
}
