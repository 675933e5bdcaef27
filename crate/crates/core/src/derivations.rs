//! Derivations, inner derivations, diagonal tori and completeness.
//!
//! A derivation `D` is stored as a matrix whose column `i` is `D(e_i)`; its
//! flat coordinates as a 1-cochain are `i * n + k` for the `e_k` component
//! of `D(e_i)`, matching [`crate::cohomology::CochainIndex`].
//!
//! Tori are computed in the given basis only: the result is the space of
//! derivations that are diagonal in that basis, a lower bound for the rank.
//! For the filiform families the standard basis is an eigenbasis of a
//! maximal torus, so there the bound is attained.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{unit, LieAlgebra, Subspace};
use crate::linalg::{self, Echelon, MatrixQ, VectorQ};
use crate::rational::Rational;

/// A linearly independent family of derivations of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    dim: usize,
    basis: Vec<MatrixQ>,
}

impl DerivationSpace {
    pub fn basis(&self) -> &[MatrixQ] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Ambient algebra dimension.
    pub fn algebra_dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, d: &MatrixQ) -> bool {
        let mut e = Echelon::new(self.dim * self.dim);
        for b in &self.basis {
            e.insert_dense(&flatten(b));
        }
        e.contains(crate::linalg::SparseRow::from_iter(
            flatten(d)
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero()),
        ))
    }
}

/// Flat 1-cochain coordinates of a linear map.
pub fn flatten(d: &MatrixQ) -> VectorQ {
    let n = d.rows();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            out.push(d.get(k, i).clone());
        }
    }
    out
}

pub fn unflatten(n: usize, flat: &[Rational]) -> MatrixQ {
    let mut m = MatrixQ::zeros(n, n);
    for i in 0..n {
        for k in 0..n {
            m.set(k, i, flat[i * n + k].clone());
        }
    }
    m
}

/// Exact check of `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` on all pairs.
pub fn is_derivation(g: &LieAlgebra, d: &MatrixQ) -> bool {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return false;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let eij = crate::lie::sparse_to_dense(n, &g.bracket_basis(i, j));
            let lhs = d.mul_vec(&eij).expect("square");
            let a = g.bracket(&d.column(i), &unit(n, j)).expect("len");
            let b = g.bracket(&unit(n, i), &d.column(j)).expect("len");
            if lhs
                .iter()
                .zip(a.iter().zip(&b))
                .any(|(l, (x, y))| l != &(x + y))
            {
                return false;
            }
        }
    }
    true
}

/// The linear system `D[e_i,e_j] − [D e_i, e_j] − [e_i, D e_j] = 0` over
/// all `i < j`, unknowns in flat derivation coordinates.
fn derivation_system(g: &LieAlgebra) -> MatrixQ {
    let n = g.dim();
    let var = |i: usize, k: usize| i * n + k; // coefficient of e_k in D(e_i)
    let table = g.bracket_table();
    let mut rows: Vec<VectorQ> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            // one equation per output component q
            let mut eqs = vec![vec![Rational::zero(); n * n]; n];
            // D[e_i, e_j] = sum_m c_ij^m D(e_m)
            for (m, c) in &table[i * n + j] {
                for q in 0..n {
                    eqs[q][var(*m, q)] += c;
                }
            }
            // − [D e_i, e_j] = − sum_k D_{k,i} [e_k, e_j]
            for k in 0..n {
                for (q, c) in &table[k * n + j] {
                    eqs[*q][var(i, k)] -= c;
                }
                for (q, c) in &table[i * n + k] {
                    eqs[*q][var(j, k)] -= c;
                }
            }
            rows.extend(eqs.into_iter().filter(|r| r.iter().any(|v| !v.is_zero())));
        }
    }
    if rows.is_empty() {
        return MatrixQ::zeros(0, n * n);
    }
    MatrixQ::from_rows(&rows).expect("uniform rows")
}

/// Basis of `Der(g)` (the kernel basis of the derivation system, one
/// element per free coordinate in flat order).
pub fn derivation_basis(g: &LieAlgebra) -> DerivationSpace {
    let n = g.dim();
    let sys = derivation_system(g);
    let basis = if sys.rows() == 0 {
        (0..n * n).map(|c| unflatten(n, &unit(n * n, c))).collect()
    } else {
        linalg::nullspace_basis(&sys)
            .into_iter()
            .map(|v| unflatten(n, &v))
            .collect()
    };
    DerivationSpace { dim: n, basis }
}

/// Basis of `{ad X}`: the `ad(e_i)` that are independent of earlier ones.
pub fn inner_basis(g: &LieAlgebra) -> DerivationSpace {
    let n = g.dim();
    let mut e = Echelon::new(n * n);
    let mut basis = Vec::new();
    for i in 0..n {
        let ad = g.ad_basis(i);
        if e.insert_dense(&flatten(&ad)) {
            basis.push(ad);
        }
    }
    DerivationSpace { dim: n, basis }
}

/// Diagonal derivations, each stored as its diagonal (weight vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusBasis {
    dim: usize,
    weight_vectors: Vec<VectorQ>,
}

impl TorusBasis {
    /// Validates that every diagonal is a derivation of `g` and that the
    /// family is linearly independent.
    pub fn new(g: &LieAlgebra, weight_vectors: Vec<VectorQ>) -> Result<Self> {
        for (idx, w) in weight_vectors.iter().enumerate() {
            if w.len() != g.dim() {
                return Err(Error::DimensionMismatch {
                    expected: g.dim(),
                    found: w.len(),
                });
            }
            if !diagonal_is_derivation(g, w) {
                return Err(Error::NotADerivation { index: idx });
            }
        }
        if linalg::rank_of_vectors(&weight_vectors) != weight_vectors.len() {
            return Err(Error::InvalidStructure(
                "torus basis is linearly dependent".into(),
            ));
        }
        Ok(Self {
            dim: g.dim(),
            weight_vectors,
        })
    }

    pub fn weight_vectors(&self) -> &[VectorQ] {
        &self.weight_vectors
    }

    /// Torus dimension.
    pub fn len(&self) -> usize {
        self.weight_vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight_vectors.is_empty()
    }

    pub fn algebra_dim(&self) -> usize {
        self.dim
    }

    pub fn as_matrices(&self) -> Vec<MatrixQ> {
        self.weight_vectors
            .iter()
            .map(|w| {
                let mut m = MatrixQ::zeros(self.dim, self.dim);
                for (i, v) in w.iter().enumerate() {
                    m.set(i, i, v.clone());
                }
                m
            })
            .collect()
    }
}

/// `diag(d)` is a derivation iff `d_k = d_i + d_j` whenever `c_ij^k ≠ 0`.
pub fn diagonal_is_derivation(g: &LieAlgebra, d: &[Rational]) -> bool {
    g.constants()
        .iter()
        .all(|(&(i, j), coeffs)| coeffs.iter().all(|(k, _)| d[*k] == &d[i] + &d[j]))
}

/// Derivations diagonal in the given basis. Free parameters are taken on
/// the lowest basis indices, so for `L_n` the basis is
/// `(1, 0, 1, 2, ..)` and `(0, 1, 1, 1, ..)`.
pub fn diagonal_torus(g: &LieAlgebra) -> TorusBasis {
    let n = g.dim();
    let mut rows: Vec<VectorQ> = Vec::new();
    for (&(i, j), coeffs) in g.constants() {
        for (k, _) in coeffs {
            let mut r = vec![Rational::zero(); n];
            r[*k] += crate::rational::one();
            r[i] -= crate::rational::one();
            r[j] -= crate::rational::one();
            if r.iter().any(|v| !v.is_zero()) {
                rows.push(r);
            }
        }
    }
    let weight_vectors = if rows.is_empty() {
        (0..n).map(|i| unit(n, i)).collect()
    } else {
        linalg::nullspace_basis_low_free(&MatrixQ::from_rows(&rows).expect("uniform rows"))
    };
    TorusBasis {
        dim: n,
        weight_vectors,
    }
}

/// Weights of the basis vectors under a diagonal torus, plus a generator
/// system of eigenvectors complementing `C^1(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub torus_dim: usize,
    /// `weights[i][a]` is the eigenvalue of torus element `a` on `e_i`.
    pub weights: Vec<VectorQ>,
    /// Lowest-index basis vectors spanning a complement of `C^1(g)`.
    pub generators: Vec<usize>,
    /// Basis vectors on which every torus element vanishes.
    pub zero_weight: Vec<usize>,
}

pub fn weight_system(g: &LieAlgebra, t: &TorusBasis) -> Result<WeightSystem> {
    if t.algebra_dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: t.algebra_dim(),
        });
    }
    let n = g.dim();
    let weights: Vec<VectorQ> = (0..n)
        .map(|i| t.weight_vectors().iter().map(|w| w[i].clone()).collect())
        .collect();
    let generators = g.derived_algebra().complement_generators();
    let zero_weight = (0..n)
        .filter(|&i| weights[i].iter().all(Zero::is_zero))
        .collect();
    Ok(WeightSystem {
        torus_dim: t.len(),
        weights,
        generators,
        zero_weight,
    })
}

/// `h0 = dim Z(g)`, `h1 = dim Der(g) − dim ad(g)`, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessVerdict {
    pub h0: usize,
    pub h1: usize,
    pub complete: bool,
    /// A derivation outside the inner span (present iff `h1 > 0`).
    pub outer_derivation: Option<MatrixQ>,
    /// A nonzero central element (present iff `h0 > 0`).
    pub central_element: Option<VectorQ>,
}

pub fn is_complete(g: &LieAlgebra) -> CompletenessVerdict {
    let center: Subspace = g.center();
    let der = derivation_basis(g);
    let inner = inner_basis(g);
    let h0 = center.dim();
    // saturating: on structure constants failing Jacobi, ad(g) need not lie in Der(g)
    let h1 = der.len().saturating_sub(inner.len());
    let outer_derivation = (h1 > 0).then(|| {
        let mut e = Echelon::new(g.dim() * g.dim());
        for b in inner.basis() {
            e.insert_dense(&flatten(b));
        }
        der.basis()
            .iter()
            .find(|d| !e.contains(sparse_of(&flatten(d))))
            .cloned()
            .expect("h1 > 0 leaves a derivation outside the inner span")
    });
    let central_element = center.basis().first().cloned();
    CompletenessVerdict {
        h0,
        h1,
        complete: h0 == 0 && h1 == 0,
        outer_derivation,
        central_element,
    }
}

fn sparse_of(v: &[Rational]) -> crate::linalg::SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Dimension of the diagonal torus as a lower bound for the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank_lower_bound: usize,
    pub torus: TorusBasis,
    /// Whether a filiform witness was found (then the bound is at most 2).
    pub filiform: bool,
}

pub fn rank_certificate(g: &LieAlgebra) -> Result<RankCertificate> {
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let torus = diagonal_torus(g);
    let filiform = g.is_filiform().filiform;
    if filiform && torus.len() > 2 {
        return Err(Error::RankBoundViolated(torus.len()));
    }
    Ok(RankCertificate {
        rank_lower_bound: torus.len(),
        torus,
        filiform,
    })
}
