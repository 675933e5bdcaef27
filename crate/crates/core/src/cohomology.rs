//! Chevalley-Eilenberg cochains `C^p(g, g)` with values in the adjoint
//! module, the coboundary operator and the dimensions of `Z^p`, `B^p`, `H^p`.
//!
//! Coboundary convention, for `Φ ∈ C^p` and `p ≥ 0`:
//!
//! ```text
//! δΦ(X_1..X_{p+1}) = Σ_s (−1)^{s+1} [X_s, Φ(.., X̂_s, ..)]
//!                  + Σ_{s<t} (−1)^{s+t} Φ([X_s, X_t], .., X̂_s, .., X̂_t, ..)
//! ```
//!
//! so `δv(X) = [X, v]` in degree 0 and
//! `δf(X, Y) = [f X, Y] + [X, f Y] − f[X, Y]` in degree 1.
//!
//! Flat coordinates: ascending tuples in lexicographic order, and within a
//! tuple the target basis index runs fastest, i.e. coordinate
//! `tuple_rank * n + target`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, SparseVec};
use crate::linalg::{Echelon, MatrixQ, SparseMatrix, SparseRow, VectorQ};
use crate::rational::Rational;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim C^p(g, g) = n·C(n, p)`; zero when `p > n`.
pub fn cochain_dim(n: usize, p: usize) -> usize {
    n * binomial(n, p)
}

/// Ascending `p`-subsets of `0..n` in lexicographic order.
pub fn ascending_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=(n - left) {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(n, p));
    if p <= n {
        rec(0, n, p, &mut Vec::with_capacity(p), &mut out);
    }
    out
}

fn mask(t: &[usize]) -> u128 {
    t.iter().fold(0u128, |m, &i| m | (1u128 << i))
}

/// Bijection between `(ascending tuple, target)` and `0..n·C(n,p)`.
#[derive(Clone, Debug)]
pub struct CochainIndex {
    n: usize,
    p: usize,
    tuples: Vec<Vec<usize>>,
    rank_of: HashMap<u128, usize>,
}

/// Basis dimensions are limited by the tuple bitmask.
pub const MAX_DIM: usize = 128;

impl CochainIndex {
    pub fn new(n: usize, p: usize) -> Self {
        assert!(n <= MAX_DIM, "cochain indexing supports dim <= {MAX_DIM}");
        let tuples = ascending_tuples(n, p);
        let rank_of = tuples
            .iter()
            .enumerate()
            .map(|(r, t)| (mask(t), r))
            .collect();
        Self {
            n,
            p,
            tuples,
            rank_of,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.tuples.len() * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Position of an ascending tuple.
    pub fn tuple_rank(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.p || tuple.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        self.rank_of.get(&mask(tuple)).copied()
    }

    pub fn flat(&self, tuple: &[usize], target: usize) -> Option<usize> {
        if target >= self.n {
            return None;
        }
        self.tuple_rank(tuple).map(|r| r * self.n + target)
    }

    pub fn unflat(&self, coord: usize) -> (&[usize], usize) {
        (&self.tuples[coord / self.n], coord % self.n)
    }
}

/// An alternating `p`-linear map `g^p → g`, stored on ascending tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    dim: usize,
    values: BTreeMap<Vec<usize>, VectorQ>,
}

impl Cochain {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self {
            degree,
            dim,
            values: BTreeMap::new(),
        }
    }

    /// The 0-cochain with constant value `v`.
    pub fn constant(v: VectorQ) -> Self {
        let dim = v.len();
        let mut c = Self::zero(dim, 0);
        c.set(&[], v).expect("empty tuple is ascending");
        c
    }

    /// The 1-cochain of a linear map; column `i` of `m` is the image of `e_i`.
    pub fn from_linear_map(m: &MatrixQ) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let mut c = Self::zero(m.rows(), 1);
        for i in 0..m.cols() {
            c.set(&[i], m.column(i))?;
        }
        Ok(c)
    }

    pub fn to_linear_map(&self) -> Result<MatrixQ> {
        if self.degree != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: self.degree,
            });
        }
        let cols: Vec<VectorQ> = (0..self.dim).map(|i| self.value(&[i])).collect();
        MatrixQ::from_columns(self.dim, &cols)
    }

    pub fn from_flat(dim: usize, degree: usize, flat: &[Rational]) -> Result<Self> {
        let idx = CochainIndex::new(dim, degree);
        if flat.len() != idx.len() {
            return Err(Error::DimensionMismatch {
                expected: idx.len(),
                found: flat.len(),
            });
        }
        let mut c = Self::zero(dim, degree);
        for (r, t) in idx.tuples().iter().enumerate() {
            let v = flat[r * dim..(r + 1) * dim].to_vec();
            if v.iter().any(|x| !x.is_zero()) {
                c.values.insert(t.clone(), v);
            }
        }
        Ok(c)
    }

    pub fn to_flat(&self) -> VectorQ {
        let idx = CochainIndex::new(self.dim, self.degree);
        let mut out = vec![Rational::zero(); idx.len()];
        for (t, v) in &self.values {
            let r = idx.tuple_rank(t).expect("stored tuples are ascending");
            out[r * self.dim..(r + 1) * self.dim].clone_from_slice(v);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero values keyed by ascending tuple.
    pub fn values(&self) -> &BTreeMap<Vec<usize>, VectorQ> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Sets the value on an ascending tuple.
    pub fn set(&mut self, tuple: &[usize], value: VectorQ) -> Result<()> {
        if tuple.len() != self.degree || tuple.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidStructure(format!(
                "tuple {tuple:?} is not an ascending {}-tuple",
                self.degree
            )));
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.dim) {
            return Err(Error::IndexOutOfRange {
                index: bad + 1,
                max: self.dim,
            });
        }
        if value.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: value.len(),
            });
        }
        if value.iter().all(Zero::is_zero) {
            self.values.remove(tuple);
        } else {
            self.values.insert(tuple.to_vec(), value);
        }
        Ok(())
    }

    /// Value on an ascending tuple.
    pub fn value(&self, tuple: &[usize]) -> VectorQ {
        self.values
            .get(tuple)
            .cloned()
            .unwrap_or_else(|| vec![Rational::zero(); self.dim])
    }

    /// Value on basis vectors given in any order (alternation applied).
    pub fn evaluate_basis(&self, args: &[usize]) -> VectorQ {
        match sort_with_sign(args) {
            None => vec![Rational::zero(); self.dim],
            Some((sorted, negative)) => {
                let v = self.value(&sorted);
                if negative {
                    v.into_iter().map(|x| -x).collect()
                } else {
                    v
                }
            }
        }
    }

    pub fn add_scaled(&self, factor: &Rational, other: &Cochain) -> Cochain {
        assert_eq!((self.dim, self.degree), (other.dim, other.degree));
        let flat: VectorQ = self
            .to_flat()
            .iter()
            .zip(other.to_flat())
            .map(|(a, b)| a + factor * b)
            .collect();
        Cochain::from_flat(self.dim, self.degree, &flat).expect("same shape")
    }
}

/// Sorts distinct indices, reporting whether the permutation was odd;
/// `None` when an index repeats.
fn sort_with_sign(args: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = args.to_vec();
    let mut negative = false;
    // insertion sort counts transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, negative))
    }
}

fn sign(odd: bool) -> Rational {
    if odd {
        -crate::rational::one()
    } else {
        crate::rational::one()
    }
}

/// `δ: C^p → C^{p+1}` as a sparse matrix in flat coordinates.
pub fn delta_sparse(g: &LieAlgebra, p: usize) -> SparseMatrix {
    let n = g.dim();
    let src = CochainIndex::new(n, p);
    let dst = CochainIndex::new(n, p + 1);
    let table = g.bracket_table();
    let blocks: Vec<Vec<SparseRow>> =
        crate::par::map(dst.tuples(), |s| delta_rows_for(n, &table, &src, s));
    SparseMatrix::from_sparse_rows(src.len(), blocks.into_iter().flatten().collect())
}

/// The `n` rows `(s, q)`, `q = 0..n`, of the coboundary matrix.
fn delta_rows_for(
    n: usize,
    table: &[SparseVec],
    src: &CochainIndex,
    s: &[usize],
) -> Vec<SparseRow> {
    let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); n];
    let mut add = |row: usize, col: usize, v: Rational| {
        let e = acc[row].entry(col).or_insert_with(Rational::zero);
        *e += v;
    };
    // [X_s, Φ(.., X̂_s, ..)]
    for (pos, &xs) in s.iter().enumerate() {
        let rest: Vec<usize> = s
            .iter()
            .enumerate()
            .filter(|(q, _)| *q != pos)
            .map(|(_, &x)| x)
            .collect();
        let r = src.tuple_rank(&rest).expect("subtuple of ascending tuple");
        let sg = sign(pos % 2 == 1);
        for m in 0..n {
            for (q, c) in &table[xs * n + m] {
                add(*q, r * n + m, &sg * c);
            }
        }
    }
    // Φ([X_s, X_t], ..)
    for a in 0..s.len() {
        for b in (a + 1)..s.len() {
            let br = &table[s[a] * n + s[b]];
            if br.is_empty() {
                continue;
            }
            let rest: Vec<usize> = s
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != a && *q != b)
                .map(|(_, &x)| x)
                .collect();
            let outer = (a + b) % 2 == 1;
            for (r, c) in br {
                if rest.contains(r) {
                    continue;
                }
                let pos = rest.iter().take_while(|&&x| x < *r).count();
                let mut t = rest.clone();
                t.insert(pos, *r);
                let rank = src.tuple_rank(&t).expect("ascending by construction");
                let v = sign(outer ^ (pos % 2 == 1)) * c;
                for m in 0..n {
                    add(m, rank * n + m, v.clone());
                }
            }
        }
    }
    acc.into_iter()
        .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
        .collect()
}

/// Dense matrix of `δ: C^p → C^{p+1}`; rows `cochain_dim(n, p+1)`,
/// columns `cochain_dim(n, p)`.
pub fn delta_matrix(g: &LieAlgebra, p: usize) -> MatrixQ {
    delta_sparse(g, p).to_dense()
}

/// Weight of every basis vector under the diagonal derivations of `g`.
///
/// Each diagonal derivation commutes with `δ`, so the coboundary matrices
/// split into blocks indexed by the weight `w(target) − Σ w(tuple)`; ranks
/// are summed over blocks. With no nonzero diagonal derivation there is a
/// single block.
#[derive(Clone, Debug)]
pub struct WeightGrading {
    basis_weights: Vec<VectorQ>,
}

impl WeightGrading {
    pub fn of(g: &LieAlgebra) -> Self {
        let torus = crate::derivations::diagonal_torus(g);
        let basis_weights = (0..g.dim())
            .map(|i| {
                torus
                    .weight_vectors()
                    .iter()
                    .map(|w| w[i].clone())
                    .collect()
            })
            .collect();
        Self { basis_weights }
    }

    pub fn trivial(dim: usize) -> Self {
        Self {
            basis_weights: vec![Vec::new(); dim],
        }
    }

    pub fn weight(&self, tuple: &[usize], target: usize) -> VectorQ {
        let mut w = self.basis_weights[target].clone();
        for &i in tuple {
            for (a, b) in w.iter_mut().zip(&self.basis_weights[i]) {
                *a -= b;
            }
        }
        w
    }

    /// Row indices of `δ_p` grouped by weight, groups in weight order.
    pub fn row_blocks(&self, n: usize, p: usize) -> Vec<Vec<usize>> {
        let idx = CochainIndex::new(n, p);
        let mut groups: BTreeMap<VectorQ, Vec<usize>> = BTreeMap::new();
        for coord in 0..idx.len() {
            let (t, q) = idx.unflat(coord);
            groups.entry(self.weight(t, q)).or_default().push(coord);
        }
        groups.into_values().collect()
    }
}

/// `rank δ_p`, computed blockwise over the weight grading of `g`.
pub fn delta_rank(g: &LieAlgebra, p: usize) -> usize {
    delta_rank_graded(g, p, &WeightGrading::of(g))
}

pub fn delta_rank_graded(g: &LieAlgebra, p: usize, grading: &WeightGrading) -> usize {
    let n = g.dim();
    if p > n {
        return 0;
    }
    let d = delta_sparse(g, p);
    let blocks = grading.row_blocks(n, p + 1);
    crate::par::map(&blocks, |rows| d.rank_of_rows(rows))
        .into_iter()
        .sum()
}

/// Dimensions of the degree-`p` cochains, cocycles, coboundaries and
/// cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyDims {
    pub p: usize,
    pub dim_c: usize,
    pub dim_z: usize,
    /// `dim B^p = rank δ_{p−1}` (zero for `p = 0`).
    pub dim_b: usize,
    pub dim_h: usize,
}

pub fn cohomology_dims(g: &LieAlgebra, p: usize) -> CohomologyDims {
    cohomology_dims_graded(g, p, &WeightGrading::of(g))
}

pub fn cohomology_dims_graded(g: &LieAlgebra, p: usize, grading: &WeightGrading) -> CohomologyDims {
    let n = g.dim();
    let dim_c = cochain_dim(n, p);
    let dim_z = dim_c - delta_rank_graded(g, p, grading);
    let dim_b = if p == 0 {
        0
    } else {
        delta_rank_graded(g, p - 1, grading)
    };
    CohomologyDims {
        p,
        dim_c,
        dim_z,
        dim_b,
        dim_h: dim_z - dim_b,
    }
}

/// `δc` evaluated directly from the defining formula.
pub fn apply_delta(g: &LieAlgebra, c: &Cochain) -> Result<Cochain> {
    let n = g.dim();
    if c.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.dim(),
        });
    }
    let p = c.degree();
    let mut out = Cochain::zero(n, p + 1);
    for s in ascending_tuples(n, p + 1) {
        let mut v = vec![Rational::zero(); n];
        for (pos, &xs) in s.iter().enumerate() {
            let rest: Vec<usize> = s
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != pos)
                .map(|(_, &x)| x)
                .collect();
            let phi = c.evaluate_basis(&rest);
            let term = g.bracket(&crate::lie::unit(n, xs), &phi)?;
            let sg = sign(pos % 2 == 1);
            for (a, b) in v.iter_mut().zip(term) {
                *a += &sg * b;
            }
        }
        for a in 0..s.len() {
            for b in (a + 1)..s.len() {
                let rest: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|(q, _)| *q != a && *q != b)
                    .map(|(_, &x)| x)
                    .collect();
                let sg = sign((a + b) % 2 == 1);
                for (r, coef) in g.bracket_basis(s[a], s[b]) {
                    let mut args = vec![r];
                    args.extend_from_slice(&rest);
                    let phi = c.evaluate_basis(&args);
                    for (x, y) in v.iter_mut().zip(phi) {
                        *x += &sg * &coef * y;
                    }
                }
            }
        }
        out.set(&s, v)?;
    }
    Ok(out)
}

pub fn is_cocycle(g: &LieAlgebra, c: &Cochain) -> Result<bool> {
    Ok(apply_delta(g, c)?.is_zero())
}

/// A degree `p − 1` preimage of `c` under `δ`, if one exists.
///
/// In degree 0, `B^0 = {0}`: the zero cochain is returned as its own
/// witness and every nonzero 0-cochain gives `None`.
pub fn is_coboundary(g: &LieAlgebra, c: &Cochain) -> Result<Option<Cochain>> {
    let n = g.dim();
    if c.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.dim(),
        });
    }
    if c.degree() == 0 {
        return Ok(c.is_zero().then(|| Cochain::zero(n, 0)));
    }
    let d = delta_sparse(g, c.degree() - 1);
    match d.solve_affine(&c.to_flat()) {
        None => Ok(None),
        Some(sol) => Ok(Some(Cochain::from_flat(
            n,
            c.degree() - 1,
            &sol.particular,
        )?)),
    }
}

/// Number of cohomology classes spanned by `cochains` (all of degree `p`),
/// i.e. `dim (span(cochains) + B^p) / B^p`.
pub fn independent_classes(g: &LieAlgebra, cochains: &[Cochain]) -> Result<usize> {
    let Some(first) = cochains.first() else {
        return Ok(0);
    };
    let p = first.degree();
    let n = g.dim();
    if cochains.iter().any(|c| c.degree() != p || c.dim() != n) {
        return Err(Error::InvalidStructure(
            "cochains of mixed degree or dimension".into(),
        ));
    }
    let mut e = Echelon::new(cochain_dim(n, p));
    if p > 0 {
        // columns of δ_{p−1} span B^p
        let d = delta_sparse(g, p - 1);
        let mut cols: Vec<SparseRow> = vec![Vec::new(); d.cols()];
        for i in 0..d.rows() {
            for (c, v) in d.row(i) {
                cols[*c].push((i, v.clone()));
            }
        }
        for c in cols {
            e.insert(c);
        }
    }
    let base = e.rank();
    for c in cochains {
        e.insert_dense(&c.to_flat());
    }
    Ok(e.rank() - base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::unit;
    use crate::linalg;
    use crate::rational::int;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::with_brackets(3, [((0, 1), vec![(2, int(1))])]).unwrap()
    }

    fn r2() -> LieAlgebra {
        LieAlgebra::with_brackets(2, [((0, 1), vec![(1, int(1))])]).unwrap()
    }

    fn l(n: usize) -> LieAlgebra {
        LieAlgebra::with_brackets(n, (1..n - 1).map(|j| ((0, j), vec![(j + 1, int(1))]))).unwrap()
    }

    #[test]
    fn cochain_dims() {
        assert_eq!(cochain_dim(3, 0), 3);
        assert_eq!(cochain_dim(4, 2), 24);
        assert_eq!(cochain_dim(11, 2), 605);
        assert_eq!(cochain_dim(3, 4), 0);
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for n in 1..9 {
            let s: i64 = (0..=n)
                .map(|p| if p % 2 == 0 { 1 } else { -1 } * cochain_dim(n, p) as i64)
                .sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn index_is_lexicographic_with_target_fastest() {
        let idx = CochainIndex::new(4, 2);
        assert_eq!(idx.tuples()[0], vec![0, 1]);
        assert_eq!(idx.tuples()[5], vec![2, 3]);
        assert_eq!(idx.flat(&[0, 2], 3), Some(4 + 3));
        assert_eq!(idx.flat(&[2, 0], 3), None);
        for c in 0..idx.len() {
            let (t, q) = idx.unflat(c);
            assert_eq!(idx.flat(t, q), Some(c));
        }
    }

    #[test]
    fn abelian_delta_is_zero() {
        let g = LieAlgebra::abelian(3);
        assert!(delta_matrix(&g, 1).is_zero());
        assert!(delta_matrix(&g, 0).is_zero());
    }

    #[test]
    fn degree_zero_stacks_ad_columns() {
        let g = l(4);
        let d = delta_matrix(&g, 0);
        assert_eq!((d.rows(), d.cols()), (16, 4));
        // column for the constant e_j, row (x, q): [e_x, e_j]_q
        for x in 0..4 {
            let ad = g.ad_basis(x);
            for j in 0..4 {
                for q in 0..4 {
                    assert_eq!(d.get(x * 4 + q, j), ad.get(q, j));
                }
            }
        }
    }

    #[test]
    fn delta_squared_vanishes_on_l6() {
        let g = l(6);
        for p in 0..3 {
            let prod = delta_matrix(&g, p + 1).mul(&delta_matrix(&g, p)).unwrap();
            assert!(prod.is_zero(), "p = {p}");
        }
    }

    #[test]
    fn identity_map_on_r2() {
        let g = r2();
        let id = Cochain::from_linear_map(&MatrixQ::identity(2)).unwrap();
        let d = apply_delta(&g, &id).unwrap();
        assert_eq!(d.value(&[0, 1]), vec![int(0), int(1)]);
    }

    #[test]
    fn inner_derivations_are_cocycles() {
        let g = l(6);
        for i in 0..6 {
            let c = Cochain::from_linear_map(&g.ad_basis(i)).unwrap();
            assert!(is_cocycle(&g, &c).unwrap());
        }
        let ad1 = Cochain::from_linear_map(&g.ad_basis(0)).unwrap();
        let pre = is_coboundary(&g, &ad1)
            .unwrap()
            .expect("ad Y1 is a coboundary");
        assert_eq!(apply_delta(&g, &pre).unwrap(), ad1);
        // δv(X) = [X, v] = −ad(v)(X), so the preimage is −Y1 (mod the center)
        let v = pre.value(&[]);
        assert_eq!(v[0], int(-1));
        assert!(v[1..5].iter().all(Zero::is_zero));
    }

    #[test]
    fn zero_cochain() {
        let g = l(5);
        for p in 0..3 {
            assert!(apply_delta(&g, &Cochain::zero(5, p)).unwrap().is_zero());
        }
        assert_eq!(
            is_coboundary(&g, &Cochain::zero(5, 0)).unwrap(),
            Some(Cochain::zero(5, 0))
        );
        assert_eq!(
            is_coboundary(&g, &Cochain::constant(unit(5, 4))).unwrap(),
            None
        );
    }

    #[test]
    fn matrix_agrees_with_formula() {
        let g = heisenberg();
        for p in 0..3 {
            let d = delta_matrix(&g, p);
            let idx = CochainIndex::new(3, p);
            for col in 0..idx.len() {
                let mut flat = vec![Rational::zero(); idx.len()];
                flat[col] = int(1);
                let c = Cochain::from_flat(3, p, &flat).unwrap();
                assert_eq!(apply_delta(&g, &c).unwrap().to_flat(), d.column(col));
            }
        }
    }

    #[test]
    fn dims_examples() {
        assert_eq!(cohomology_dims(&LieAlgebra::abelian(2), 0).dim_h, 2);
        let h1 = cohomology_dims(&l(4), 1);
        assert_eq!(h1.dim_z, 7);
        assert_eq!(h1.dim_b, 3);
        assert_eq!(h1.dim_h, 4);
        assert_eq!(cohomology_dims(&r2(), 0).dim_h, 0);
        assert_eq!(cohomology_dims(&r2(), 1).dim_h, 0);
    }

    #[test]
    fn graded_rank_matches_plain_rank() {
        for g in [l(5), l(6), heisenberg(), r2()] {
            for p in 0..3 {
                let plain = delta_sparse(&g, p).rank();
                assert_eq!(delta_rank(&g, p), plain);
                assert_eq!(
                    delta_rank_graded(&g, p, &WeightGrading::trivial(g.dim())),
                    plain
                );
            }
        }
    }

    #[test]
    fn dense_and_sparse_delta_agree() {
        let g = l(5);
        let d = delta_matrix(&g, 1);
        assert_eq!(linalg::rank(&d), delta_sparse(&g, 1).rank());
        assert_eq!(d.to_sparse(), delta_sparse(&g, 1));
    }

    #[test]
    fn alternation_sign() {
        let mut c = Cochain::zero(3, 2);
        c.set(&[0, 2], unit(3, 1)).unwrap();
        assert_eq!(c.evaluate_basis(&[2, 0]), vec![int(0), int(-1), int(0)]);
        assert!(c.evaluate_basis(&[2, 2]).iter().all(Zero::is_zero));
        assert!(c.set(&[2, 0], unit(3, 1)).is_err());
    }
}
