//! Lie algebras given by structure constants.
//!
//! Basis indices are 0-based everywhere in this crate; documents and labels
//! use the 1-based `Y_1..Y_n` convention and convert at the boundary.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, MatrixQ, SparseRow, VectorQ};
use crate::rational::Rational;

/// `[e_i, e_j]` for one basis pair, as sparse coefficients.
pub type SparseVec = Vec<(usize, Rational)>;

/// A finite-dimensional Lie algebra over the rationals.
///
/// Only pairs `i < j` are stored; `[e_j, e_i]` is the negation and
/// `[e_i, e_i] = 0`. A missing pair means a zero bracket.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    constants: BTreeMap<(usize, usize), SparseVec>,
}

/// One failing basis triple `i < j < k` with its Jacobiator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: VectorQ,
}

impl LieAlgebra {
    /// Builds an algebra from `((i, j), [e_i, e_j])` entries. Pairs may be
    /// given in either order (a reversed pair is negated); repeated pairs
    /// accumulate. Jacobi is not checked here, see [`LieAlgebra::jacobi_check`].
    pub fn new<I>(dim: usize, labels: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), SparseVec)>,
    {
        if labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: labels.len(),
            });
        }
        let mut acc: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for ((i, j), coeffs) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::InvalidStructure(format!(
                    "pair ({i}, {j}) out of range for dim {dim}"
                )));
            }
            if i == j {
                return Err(Error::InvalidStructure(format!(
                    "bracket of basis element {i} with itself"
                )));
            }
            let (key, sign) = if i < j {
                ((i, j), false)
            } else {
                ((j, i), true)
            };
            let slot = acc.entry(key).or_default();
            for (k, c) in coeffs {
                if k >= dim {
                    return Err(Error::InvalidStructure(format!(
                        "target index {k} out of range for dim {dim}"
                    )));
                }
                let c = if sign { -c } else { c };
                *slot.entry(k).or_insert_with(Rational::zero) += c;
            }
        }
        let constants = acc
            .into_iter()
            .map(|(key, m)| {
                (
                    key,
                    m.into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect::<SparseVec>(),
                )
            })
            .filter(|(_, v)| !v.is_empty())
            .collect();
        Ok(Self {
            dim,
            labels,
            constants,
        })
    }

    /// Builds with default labels `Y1..Yn`.
    pub fn with_brackets<I>(dim: usize, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), SparseVec)>,
    {
        Self::new(dim, default_labels("Y", dim), brackets)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            labels: default_labels("Y", dim),
            constants: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Nonzero structure constants, keyed by `(i, j)` with `i < j`.
    pub fn constants(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.constants
    }

    /// `[e_i, e_j]` as sparse coefficients with the sign applied.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.constants.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self
                .constants
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
        }
    }

    /// Single structure constant `c_{ij}^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j)
            .into_iter()
            .find(|(t, _)| *t == k)
            .map(|(_, c)| c)
            .unwrap_or_else(Rational::zero)
    }

    /// Dense table `t[i * dim + j] = [e_i, e_j]` for inner loops.
    pub(crate) fn bracket_table(&self) -> Vec<SparseVec> {
        let n = self.dim;
        let mut t = vec![Vec::new(); n * n];
        for (&(i, j), v) in &self.constants {
            t[i * n + j] = v.clone();
            t[j * n + i] = v.iter().map(|(k, c)| (*k, -c.clone())).collect();
        }
        t
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<VectorQ> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), coeffs) in &self.constants {
            let w = &x[i] * &y[j] - &x[j] * &y[i];
            if w.is_zero() {
                continue;
            }
            for (k, c) in coeffs {
                out[*k] += &w * c;
            }
        }
        Ok(out)
    }

    /// Every basis triple `i < j < k` whose Jacobiator
    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` is nonzero.
    pub fn jacobi_check(&self) -> Vec<JacobiViolation> {
        let n = self.dim;
        let table = self.bracket_table();
        let per_i = crate::par::map_range(0..n, |i| {
            let mut found = Vec::new();
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut res = vec![Rational::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, coef) in &table[a * n + b] {
                            for (q, coef2) in &table[m * n + c] {
                                res[*q] += coef * coef2;
                            }
                        }
                    }
                    if res.iter().any(|v| !v.is_zero()) {
                        found.push(JacobiViolation {
                            triple: (i, j, k),
                            residual: res,
                        });
                    }
                }
            }
            found
        });
        per_i.into_iter().flatten().collect()
    }

    pub fn is_lie_algebra(&self) -> bool {
        self.jacobi_check().is_empty()
    }

    /// Matrix of `x ↦ [y, x]`; column `j` holds `[y, e_j]`.
    pub fn ad_matrix(&self, y: &[Rational]) -> Result<MatrixQ> {
        self.check_len(y)?;
        let n = self.dim;
        let mut m = MatrixQ::zeros(n, n);
        for (&(i, j), coeffs) in &self.constants {
            // [y, e_j] gets y_i [e_i, e_j]; [y, e_i] gets y_j [e_j, e_i]
            for (k, c) in coeffs {
                if !y[i].is_zero() {
                    let v = m.get(*k, j) + &y[i] * c;
                    m.set(*k, j, v);
                }
                if !y[j].is_zero() {
                    let v = m.get(*k, i) - &y[j] * c;
                    m.set(*k, i, v);
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> MatrixQ {
        self.ad_matrix(&unit(self.dim, i)).expect("length matches")
    }

    /// `Z(g) = { x : [x, e_i] = 0 for all i }`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // [x, e_i] = sum_j x_j [e_j, e_i]; one equation per (i, k)
        let mut rows: Vec<VectorQ> = Vec::with_capacity(n * n);
        let table = self.bracket_table();
        for i in 0..n {
            let mut block = vec![vec![Rational::zero(); n]; n];
            for (j, row) in (0..n).map(|j| (j, &table[j * n + i])) {
                for (k, c) in row {
                    block[*k][j] += c;
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|v| !v.is_zero())));
        }
        let basis = if rows.is_empty() {
            (0..n).map(|i| unit(n, i)).collect()
        } else {
            linalg::nullspace_basis(&MatrixQ::from_rows(&rows).expect("uniform rows"))
        };
        Subspace::from_spanning(n, basis)
    }

    /// `[g, s]` for a subspace `s`.
    pub fn bracket_with(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        let mut span = Vec::new();
        for i in 0..n {
            let e = unit(n, i);
            for v in &s.basis {
                span.push(self.bracket(&e, v).expect("length matches"));
            }
        }
        Subspace::from_spanning(n, span)
    }

    /// `C^1(g) = [g, g]`.
    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim;
        Subspace::from_spanning(
            n,
            self.constants
                .values()
                .map(|v| sparse_to_dense(n, v))
                .collect(),
        )
    }

    /// Dimensions of `C^0 = g ⊇ C^1 ⊇ ...`, stopping at the first repeat
    /// (reported once more) or at zero.
    pub fn lower_central_series_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.dim];
        let mut term = Subspace::whole(self.dim);
        loop {
            let next = self.bracket_with(&term);
            let d = next.dim();
            dims.push(d);
            if d == 0 || d == term.dim() {
                return dims;
            }
            term = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series_dims().last() == Some(&0)
    }

    /// `b_1(g) = dim g − dim C^1(g)`.
    pub fn first_betti(&self) -> usize {
        self.dim - self.derived_algebra().dim()
    }

    /// Jordan block sizes of the nilpotent operator `ad(y)`, `y ∉ C^1(g)`.
    pub fn characteristic_sequence_at(&self, y: &[Rational]) -> Result<CharacteristicSequence> {
        self.check_len(y)?;
        if self.derived_algebra().contains(y) {
            return Err(Error::InDerivedAlgebra);
        }
        let ad = self.ad_matrix(y)?;
        let ranks = linalg::power_rank_sequence(&ad, self.dim)?;
        if ranks.last().copied().unwrap_or(0) != 0 {
            return Err(Error::NotNilpotentOperator);
        }
        Ok(CharacteristicSequence::from_power_ranks(self.dim, &ranks))
    }

    /// Searches for a characteristic vector with sequence `(n−1, 1)`.
    ///
    /// Candidates are the basis vectors outside `C^1(g)`, then every
    /// combination with coefficients in {−1, 0, 1} of the generators
    /// complementing `C^1(g)` (skipped when there are more than
    /// [`MAX_COMBINATION_GENERATORS`]). A witness is conclusive; `false`
    /// only means no witness was found.
    pub fn is_filiform(&self) -> FiliformCheck {
        let n = self.dim;
        if n < 2 || !self.is_nilpotent() {
            return FiliformCheck {
                filiform: false,
                witness: None,
            };
        }
        let target = CharacteristicSequence {
            parts: vec![n - 1, 1],
        };
        let derived = self.derived_algebra();
        let gens = derived.complement_generators();
        let hit = |v: &VectorQ| {
            self.characteristic_sequence_at(v)
                .map(|c| c == target)
                .unwrap_or(false)
        };
        for i in 0..n {
            let e = unit(n, i);
            if !derived.contains(&e) && hit(&e) {
                return FiliformCheck {
                    filiform: true,
                    witness: Some(e),
                };
            }
        }
        if gens.len() <= MAX_COMBINATION_GENERATORS {
            let total = 3usize.pow(gens.len() as u32);
            for code in 1..total {
                let mut v = vec![Rational::zero(); n];
                let mut c = code;
                for &g in &gens {
                    let digit = c % 3;
                    c /= 3;
                    v[g] = match digit {
                        1 => crate::rational::one(),
                        2 => -crate::rational::one(),
                        _ => Rational::zero(),
                    };
                }
                if !derived.contains(&v) && hit(&v) {
                    return FiliformCheck {
                        filiform: true,
                        witness: Some(v),
                    };
                }
            }
        }
        FiliformCheck {
            filiform: false,
            witness: None,
        }
    }
}

pub const MAX_COMBINATION_GENERATORS: usize = 6;

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlgebra(dim {}) {{", self.dim)?;
        for (&(i, j), v) in &self.constants {
            let terms: Vec<String> = v
                .iter()
                .map(|(k, c)| format!("{c}*{}", self.labels[*k]))
                .collect();
            writeln!(
                f,
                "  [{}, {}] = {}",
                self.labels[i],
                self.labels[j],
                terms.join(" + ")
            )?;
        }
        write!(f, "}}")
    }
}

pub fn default_labels(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

pub fn unit(n: usize, i: usize) -> VectorQ {
    let mut v = vec![Rational::zero(); n];
    v[i] = crate::rational::one();
    v
}

pub(crate) fn sparse_to_dense(n: usize, v: &[(usize, Rational)]) -> VectorQ {
    let mut out = vec![Rational::zero(); n];
    for (k, c) in v {
        out[*k] += c;
    }
    out
}

/// Result of [`LieAlgebra::is_filiform`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiliformCheck {
    pub filiform: bool,
    pub witness: Option<VectorQ>,
}

/// A linear subspace of `Q^n`, stored by a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<VectorQ>,
}

impl Subspace {
    /// Span of `vectors` (dependent vectors are dropped). The stored basis
    /// is the reduced row echelon form, so equal spans compare equal.
    pub fn from_spanning(ambient_dim: usize, vectors: Vec<VectorQ>) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in &vectors {
            debug_assert_eq!(v.len(), ambient_dim);
            e.insert_dense(v);
        }
        let basis = e
            .into_rref()
            .into_iter()
            .map(|(_, r)| sparse_to_dense(ambient_dim, &r))
            .collect();
        Self { ambient_dim, basis }
    }

    pub fn whole(n: usize) -> Self {
        Self {
            ambient_dim: n,
            basis: (0..n).map(|i| unit(n, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[VectorQ] {
        &self.basis
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for v in &self.basis {
            e.insert_dense(v);
        }
        e
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let row: SparseRow = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        self.echelon().contains(row)
    }

    /// Lowest-index basis vectors `e_i` whose span complements `self`.
    pub fn complement_generators(&self) -> Vec<usize> {
        let mut e = self.echelon();
        (0..self.ambient_dim)
            .filter(|&i| e.insert(vec![(i, crate::rational::one())]))
            .collect()
    }
}

/// Jordan block sizes of a nilpotent operator, non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacteristicSequence {
    pub parts: Vec<usize>,
}

impl CharacteristicSequence {
    /// From `rank(m^k)`, `k = 1..`: the number of blocks of size at least
    /// `k` is `rank(m^{k−1}) − rank(m^k)`.
    pub fn from_power_ranks(dim: usize, ranks: &[usize]) -> Self {
        let mut r = Vec::with_capacity(ranks.len() + 2);
        r.push(dim);
        r.extend_from_slice(ranks);
        r.push(0);
        let at_least: Vec<usize> = r.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for size in (1..=at_least.len()).rev() {
            let exact = at_least[size - 1] - at_least.get(size).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(size, exact));
        }
        Self { parts }
    }
}

impl fmt::Display for CharacteristicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", p.join(", "))
    }
}
