//! Filiform families and the complete solvable algebras built from them.
//!
//! Basis `Y_1..Y_n` maps to indices `0..n`. Bracket tables:
//!
//! * `L_n`: `[Y_1, Y_j] = Y_{j+1}`, `2 ≤ j ≤ n−1`.
//! * `Q_n` (`n` even): `[Y_1, Y_j] = Y_{j+1}`, `2 ≤ j ≤ n−2`, and
//!   `[Y_i, Y_{n−i+1}] = (−1)^i Y_n`, `2 ≤ i ≤ n/2`. The chain stops at
//!   `Y_{n−1}`; continuing it to `Y_n` would leave a rank-1 algebra.
//! * `A_n^k(λ)`: `L_n` plus `[Y_i, Y_j] = a_ij Y_{i+j+k−2}` for `2 ≤ i < j`,
//!   `i+j+k−2 ≤ n`, where `a_{i,i+1} = λ_{i−1}` and
//!   `a_ij = a_{i,j+1} + a_{i+1,j}` (see [`coefficient_table`]).
//! * `B_n^k(λ)` (`n` even): `[Y_1, Y_j] = Y_{j+1}` for `2 ≤ j ≤ n−2`,
//!   `[Y_i, Y_{n−i+1}] = (−1)^{i+1} Y_n` for `2 ≤ i ≤ n/2`, and `a_ij`
//!   brackets as for `A` with targets up to `Y_{n−1}`.
//! * `C_n(λ)` (`n = 2m+2`): `[Y_1, Y_j] = Y_{j+1}` for `2 ≤ j ≤ n−2`,
//!   `[Y_i, Y_{n−i+1}] = (−1)^{i−1} Y_n` for `2 ≤ i ≤ m+1`, and
//!   `[Y_i, Y_{n−i−2l+1}] = (−1)^{i+1} λ_l Y_n`, `1 ≤ l ≤ m−1`.
//!
//! Every constructor runs the full Jacobi check before returning.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::cohomology::Cochain;
use crate::derivations::{self, TorusBasis};
use crate::error::{Error, Result};
use crate::lie::{default_labels, LieAlgebra, SparseVec};
use crate::linalg::{self, MatrixQ, VectorQ};
use crate::rational::{self, Rational};

/// Description of one algebra of the corpus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    L {
        n: usize,
    },
    Q {
        n: usize,
    },
    A {
        n: usize,
        k: usize,
        lambda: Vec<Rational>,
    },
    B {
        n: usize,
        k: usize,
        lambda: Vec<Rational>,
    },
    C {
        n: usize,
        lambda: Vec<Rational>,
    },
    /// `A_{k+h+3}^k(λ)` with its diagonal torus adjoined.
    Rh {
        k: usize,
        h: usize,
        lambda: Vec<Rational>,
    },
    /// The inner algebra with its diagonal torus adjoined.
    Semidirect(Box<FamilySpec>),
    Heisenberg,
    /// The 2-dimensional non-abelian algebra `[X, Y] = Y`.
    R2,
    Abelian {
        n: usize,
    },
}

/// Number of λ parameters: `t − 1` for `A` (`t = ⌊(n−k+1)/2⌋`) and
/// `B` (`t = ⌊(n−k)/2⌋`), `m − 1` for `C` (`n = 2m+2`).
pub fn lambda_count_a(n: usize, k: usize) -> usize {
    ((n + 1 - k) / 2).saturating_sub(1)
}

pub fn lambda_count_b(n: usize, k: usize) -> usize {
    ((n - k) / 2).saturating_sub(1)
}

pub fn lambda_count_c(n: usize) -> usize {
    (n.saturating_sub(2) / 2).saturating_sub(1)
}

pub fn lambda_count_rh(h: usize) -> usize {
    h / 2 + 1
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn check_lambda(name: &str, lambda: &[Rational], expected: usize) -> Result<()> {
    if lambda.len() != expected {
        return Err(invalid(format!(
            "{name} takes {expected} lambda parameter(s), got {}",
            lambda.len()
        )));
    }
    if lambda.iter().all(Zero::is_zero) {
        return Err(invalid(format!(
            "{name}: lambda parameters must not all vanish"
        )));
    }
    Ok(())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::L { n } if *n < 3 => Err(invalid("L_n needs n >= 3")),
            FamilySpec::Q { n } if *n < 4 || n % 2 == 1 => Err(invalid("Q_n needs n = 2p >= 4")),
            FamilySpec::A { n, k, lambda } => {
                if *k < 2 || *k + 3 > *n {
                    return Err(invalid("A_n^k needs 2 <= k <= n-3"));
                }
                if lambda_count_a(*n, *k) == 0 {
                    return Err(invalid(
                        "A_n^k needs at least one lambda parameter (n - k >= 3)",
                    ));
                }
                check_lambda("A_n^k", lambda, lambda_count_a(*n, *k))
            }
            FamilySpec::B { n, k, lambda } => {
                if n % 2 == 1 {
                    return Err(invalid("B_n^k needs n even"));
                }
                if *k < 2 || *k + 3 > *n {
                    return Err(invalid("B_n^k needs 2 <= k <= n-3"));
                }
                if lambda_count_b(*n, *k) == 0 {
                    return Err(invalid(
                        "B_n^k needs at least one lambda parameter (n - k >= 4)",
                    ));
                }
                check_lambda("B_n^k", lambda, lambda_count_b(*n, *k))
            }
            FamilySpec::C { n, lambda } => {
                if n % 2 == 1 || *n < 6 {
                    return Err(invalid("C_n needs n = 2m+2 >= 6"));
                }
                check_lambda("C_n", lambda, lambda_count_c(*n))
            }
            FamilySpec::Rh { k, h, lambda } => {
                if k % 2 == 1 || *k < 4 {
                    return Err(invalid("r_h needs k even and >= 4"));
                }
                if *h < 3 || *h > k + 3 {
                    return Err(invalid("r_h needs 3 <= h <= k+3"));
                }
                check_lambda("r_h", lambda, lambda_count_rh(*h))?;
                if lambda[0].is_zero() {
                    return Err(invalid("r_h needs lambda_1 != 0"));
                }
                Ok(())
            }
            FamilySpec::Semidirect(inner) => inner.validate(),
            FamilySpec::Abelian { n } if *n == 0 => Err(invalid("abelian algebra needs n >= 1")),
            _ => Ok(()),
        }
    }

    /// Dimension of the algebra described.
    pub fn dim(&self) -> usize {
        match self {
            FamilySpec::L { n }
            | FamilySpec::Q { n }
            | FamilySpec::A { n, .. }
            | FamilySpec::B { n, .. }
            | FamilySpec::C { n, .. }
            | FamilySpec::Abelian { n } => *n,
            FamilySpec::Rh { k, h, .. } => k + h + 4,
            FamilySpec::Semidirect(inner) => {
                let g =
                    build_family(inner).map(|g| g.dim() + derivations::diagonal_torus(&g).len());
                g.unwrap_or(0)
            }
            FamilySpec::Heisenberg => 3,
            FamilySpec::R2 => 2,
        }
    }

    /// A vector outside `C^1` whose `ad` has Jordan type `(n−1, 1)`:
    /// `Y_1` where the `Y_1`-chain reaches `Y_n` (L, A), `Y_1 + Y_2` where
    /// it stops at `Y_{n−1}` (Q, B, C). `None` for non-filiform specs.
    pub fn characteristic_vector(&self) -> Option<VectorQ> {
        let n = self.dim();
        match self {
            FamilySpec::L { .. } | FamilySpec::A { .. } => Some(crate::lie::unit(n, 0)),
            FamilySpec::Q { .. } | FamilySpec::B { .. } | FamilySpec::C { .. } => {
                let mut v = crate::lie::unit(n, 0);
                v[1] = Rational::one();
                Some(v)
            }
            _ => None,
        }
    }

    /// Divides every λ by `λ_1` (A, B and r_h, where one rescaling of
    /// `Y_1, Y_2` multiplies all λ by the same factor).
    pub fn normalize_lambda(&self) -> Result<FamilySpec> {
        let norm = |lambda: &[Rational]| -> Result<Vec<Rational>> {
            let first = lambda
                .first()
                .filter(|l| !l.is_zero())
                .ok_or_else(|| invalid("cannot normalise: lambda_1 = 0"))?;
            Ok(lambda.iter().map(|l| l / first).collect())
        };
        Ok(match self {
            FamilySpec::A { n, k, lambda } => FamilySpec::A {
                n: *n,
                k: *k,
                lambda: norm(lambda)?,
            },
            FamilySpec::B { n, k, lambda } => FamilySpec::B {
                n: *n,
                k: *k,
                lambda: norm(lambda)?,
            },
            FamilySpec::Rh { k, h, lambda } => FamilySpec::Rh {
                k: *k,
                h: *h,
                lambda: norm(lambda)?,
            },
            FamilySpec::Semidirect(inner) => {
                FamilySpec::Semidirect(Box::new(inner.normalize_lambda()?))
            }
            FamilySpec::C { .. } => {
                return Err(invalid(
                    "C_n parameters rescale with different weights; not normalisable",
                ))
            }
            other => other.clone(),
        })
    }
}

fn fmt_lambda(lambda: &[Rational]) -> String {
    lambda
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::L { n } => write!(f, "L n={n}"),
            FamilySpec::Q { n } => write!(f, "Q n={n}"),
            FamilySpec::A { n, k, lambda } => {
                write!(f, "A n={n} k={k} lambda={}", fmt_lambda(lambda))
            }
            FamilySpec::B { n, k, lambda } => {
                write!(f, "B n={n} k={k} lambda={}", fmt_lambda(lambda))
            }
            FamilySpec::C { n, lambda } => write!(f, "C n={n} lambda={}", fmt_lambda(lambda)),
            FamilySpec::Rh { k, h, lambda } => {
                write!(f, "rh k={k} h={h} lambda={}", fmt_lambda(lambda))
            }
            FamilySpec::Semidirect(inner) => write!(f, "semidirect {inner}"),
            FamilySpec::Heisenberg => write!(f, "heisenberg"),
            FamilySpec::R2 => write!(f, "r2"),
            FamilySpec::Abelian { n } => write!(f, "abelian n={n}"),
        }
    }
}

/// Grammar: `TAG key=value ...`, whitespace separated, where TAG is one of
/// `L Q A B C rh heisenberg r2 abelian`, or `semidirect <spec>`. Keys are
/// `n`, `k`, `h` (integers) and `lambda` (comma separated rationals).
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let tag = words.next().ok_or_else(|| invalid("empty family spec"))?;
        if tag.eq_ignore_ascii_case("semidirect") {
            let rest: Vec<&str> = words.collect();
            return Ok(FamilySpec::Semidirect(Box::new(rest.join(" ").parse()?)));
        }
        let mut keys: BTreeMap<&str, &str> = BTreeMap::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| invalid(format!("expected key=value, got {w:?}")))?;
            if keys.insert(k, v).is_some() {
                return Err(invalid(format!("duplicate key {k:?}")));
            }
        }
        let mut take_usize = |key: &str| -> Result<usize> {
            let v = keys
                .remove(key)
                .ok_or_else(|| invalid(format!("{tag}: missing {key}=")))?;
            v.parse()
                .map_err(|_| invalid(format!("{key}={v:?} is not a count")))
        };
        let spec = match tag {
            "L" => FamilySpec::L {
                n: take_usize("n")?,
            },
            "Q" => FamilySpec::Q {
                n: take_usize("n")?,
            },
            "A" => {
                let (n, k) = (take_usize("n")?, take_usize("k")?);
                FamilySpec::A {
                    n,
                    k,
                    lambda: Vec::new(),
                }
            }
            "B" => {
                let (n, k) = (take_usize("n")?, take_usize("k")?);
                FamilySpec::B {
                    n,
                    k,
                    lambda: Vec::new(),
                }
            }
            "C" => FamilySpec::C {
                n: take_usize("n")?,
                lambda: Vec::new(),
            },
            "rh" | "Rh" => {
                let (k, h) = (take_usize("k")?, take_usize("h")?);
                FamilySpec::Rh {
                    k,
                    h,
                    lambda: Vec::new(),
                }
            }
            "heisenberg" => FamilySpec::Heisenberg,
            "r2" => FamilySpec::R2,
            "abelian" => FamilySpec::Abelian {
                n: take_usize("n")?,
            },
            other => return Err(invalid(format!("unknown family tag {other:?}"))),
        };
        let lambda_text = keys.remove("lambda");
        if let Some(extra) = keys.keys().next() {
            return Err(invalid(format!("unexpected key {extra:?} for {tag}")));
        }
        let parse_lambda = || -> Result<Vec<Rational>> {
            let text = lambda_text.ok_or_else(|| invalid(format!("{tag}: missing lambda=")))?;
            text.split(',')
                .map(|t| rational::parse(t).map_err(|e| invalid(e.to_string())))
                .collect()
        };
        let spec = match spec {
            FamilySpec::A { n, k, .. } => FamilySpec::A {
                n,
                k,
                lambda: parse_lambda()?,
            },
            FamilySpec::B { n, k, .. } => FamilySpec::B {
                n,
                k,
                lambda: parse_lambda()?,
            },
            FamilySpec::C { n, .. } => FamilySpec::C {
                n,
                lambda: parse_lambda()?,
            },
            FamilySpec::Rh { k, h, .. } => FamilySpec::Rh {
                k,
                h,
                lambda: parse_lambda()?,
            },
            other => {
                if lambda_text.is_some() {
                    return Err(invalid(format!("{tag} takes no lambda")));
                }
                other
            }
        };
        Ok(spec)
    }
}

/// The coefficients `a_ij` (keys `(i, j)` are 1-based `Y` indices, `i < j`)
/// and their integer expansion `a_ij = Σ_l α_ij^l λ_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub n: usize,
    pub k: usize,
    /// Highest chain index: `[Y_1, Y_m] = Y_{m+1}` for `m < top`.
    pub top: usize,
    pub entries: BTreeMap<(usize, usize), Rational>,
    /// `lambda_coeffs[(i, j)][l − 1] = α_ij^l`.
    pub lambda_coeffs: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl CoefficientTable {
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Target index `i + j + k − 2` of the `(i, j)` bracket.
    pub fn target(&self, i: usize, j: usize) -> usize {
        i + j + self.k - 2
    }

    /// `Σ_l α_ij^l λ_l` for arbitrary λ.
    pub fn evaluate(&self, lambda: &[Rational]) -> BTreeMap<(usize, usize), Rational> {
        self.lambda_coeffs
            .iter()
            .map(|(&key, alpha)| {
                let v = alpha
                    .iter()
                    .zip(lambda)
                    .fold(Rational::zero(), |acc, (a, l)| acc + a * l);
                (key, v)
            })
            .collect()
    }
}

/// Unknown pairs `(i, j)`, `2 ≤ i < j`, with `i + j + k − 2 ≤ top`.
fn coefficient_unknowns(n: usize, k: usize, top: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 2..=n {
        for j in (i + 1)..=n {
            if i + j + k - 2 <= top {
                out.push((i, j));
            }
        }
    }
    out
}

/// Solves `a_ij = a_{i,j+1} + a_{i+1,j}` (for every unknown whose target
/// is below `top`, terms outside the unknown set are zero and
/// `a_{jj} = 0`) together with the pins `a_{i,i+1} = λ_{i−1}`.
fn solve_coefficients(
    n: usize,
    k: usize,
    top: usize,
    lambda: &[Rational],
) -> Result<BTreeMap<(usize, usize), Rational>> {
    let unknowns = coefficient_unknowns(n, k, top);
    let col: BTreeMap<(usize, usize), usize> =
        unknowns.iter().enumerate().map(|(c, &u)| (u, c)).collect();
    let m = unknowns.len();
    let mut rows: Vec<VectorQ> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for &(i, j) in &unknowns {
        if i + j + k - 2 >= top {
            continue;
        }
        let mut r = vec![Rational::zero(); m];
        r[col[&(i, j)]] += Rational::one();
        for (p, q) in [(i, j + 1), (i + 1, j)] {
            if let Some(&c) = col.get(&(p, q)) {
                r[c] -= Rational::one();
            }
        }
        rows.push(r);
        rhs.push(Rational::zero());
    }
    for (idx, l) in lambda.iter().enumerate() {
        let i = idx + 2;
        let c = *col.get(&(i, i + 1)).ok_or_else(|| {
            invalid(format!(
                "lambda_{} pins a_{i},{} outside the table",
                idx + 1,
                i + 1
            ))
        })?;
        let mut r = vec![Rational::zero(); m];
        r[c] = Rational::one();
        rows.push(r);
        rhs.push(l.clone());
    }
    if m == 0 {
        return Ok(BTreeMap::new());
    }
    let sys = MatrixQ::from_rows(&rows)?;
    let sol = linalg::solve_affine(&sys, &rhs)?
        .ok_or_else(|| Error::Inconsistent(format!("a_ij system for n={n}, k={k}")))?;
    if !sol.homogeneous.is_empty() {
        return Err(Error::Inconsistent(format!(
            "a_ij system for n={n}, k={k} is underdetermined"
        )));
    }
    Ok(unknowns.into_iter().zip(sol.particular).collect())
}

fn table_with_top(n: usize, k: usize, top: usize, lambda: &[Rational]) -> Result<CoefficientTable> {
    let entries = solve_coefficients(n, k, top, lambda)?;
    let count = lambda.len();
    let mut lambda_coeffs: BTreeMap<(usize, usize), Vec<Rational>> = entries
        .keys()
        .map(|&key| (key, Vec::with_capacity(count)))
        .collect();
    for l in 0..count {
        let mut unit = vec![Rational::zero(); count];
        unit[l] = Rational::one();
        for (key, v) in solve_coefficients(n, k, top, &unit)? {
            lambda_coeffs.get_mut(&key).expect("same unknowns").push(v);
        }
    }
    Ok(CoefficientTable {
        n,
        k,
        top,
        entries,
        lambda_coeffs,
    })
}

/// The `a_ij` table of `A_n^k(λ)`.
pub fn coefficient_table(n: usize, k: usize, lambda: &[Rational]) -> Result<CoefficientTable> {
    if k < 2 || k + 3 > n {
        return Err(invalid("coefficient table needs 2 <= k <= n-3"));
    }
    if lambda.len() != lambda_count_a(n, k) {
        return Err(invalid(format!(
            "expected {} lambda parameter(s), got {}",
            lambda_count_a(n, k),
            lambda.len()
        )));
    }
    table_with_top(n, k, n, lambda)
}

/// The `a_ij` table of `B_n^k(λ)` (targets up to `Y_{n−1}`).
pub fn coefficient_table_b(n: usize, k: usize, lambda: &[Rational]) -> Result<CoefficientTable> {
    if k < 2 || k + 3 > n {
        return Err(invalid("coefficient table needs 2 <= k <= n-3"));
    }
    if lambda.len() != lambda_count_b(n, k) {
        return Err(invalid(format!(
            "expected {} lambda parameter(s), got {}",
            lambda_count_b(n, k),
            lambda.len()
        )));
    }
    table_with_top(n, k, n - 1, lambda)
}

type Bracket = ((usize, usize), SparseVec);

/// `[Y_a, Y_b] = c Y_t` with 1-based indices.
fn yb(a: usize, b: usize, t: usize, c: Rational) -> Bracket {
    ((a - 1, b - 1), vec![(t - 1, c)])
}

fn sign_pow(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        rational::one()
    } else {
        -rational::one()
    }
}

fn chain(n: usize, last: usize) -> Vec<Bracket> {
    debug_assert!(last < n);
    (2..=last)
        .map(|j| yb(1, j, j + 1, rational::one()))
        .collect()
}

fn table_brackets(t: &CoefficientTable) -> Vec<Bracket> {
    t.entries
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(&(i, j), v)| yb(i, j, t.target(i, j), v.clone()))
        .collect()
}

fn checked(g: LieAlgebra) -> Result<LieAlgebra> {
    let violations = g.jacobi_check();
    if violations.is_empty() {
        Ok(g)
    } else {
        let triples = violations
            .iter()
            .map(|v| (v.triple.0 + 1, v.triple.1 + 1, v.triple.2 + 1))
            .collect();
        Err(Error::JacobiFailed { triples })
    }
}

pub fn build_l(n: usize) -> Result<LieAlgebra> {
    FamilySpec::L { n }.validate()?;
    checked(LieAlgebra::with_brackets(n, chain(n, n - 1))?)
}

pub fn build_q(n: usize) -> Result<LieAlgebra> {
    FamilySpec::Q { n }.validate()?;
    let mut br = chain(n, n - 2);
    br.extend((2..=n / 2).map(|i| yb(i, n - i + 1, n, sign_pow(i))));
    checked(LieAlgebra::with_brackets(n, br)?)
}

pub fn build_a(n: usize, k: usize, lambda: &[Rational]) -> Result<LieAlgebra> {
    FamilySpec::A {
        n,
        k,
        lambda: lambda.to_vec(),
    }
    .validate()?;
    let t = coefficient_table(n, k, lambda)?;
    let mut br = chain(n, n - 1);
    br.extend(table_brackets(&t));
    checked(LieAlgebra::with_brackets(n, br)?)
}

pub fn build_b(n: usize, k: usize, lambda: &[Rational]) -> Result<LieAlgebra> {
    FamilySpec::B {
        n,
        k,
        lambda: lambda.to_vec(),
    }
    .validate()?;
    let t = coefficient_table_b(n, k, lambda)?;
    let mut br = chain(n, n - 2);
    br.extend((2..=n / 2).map(|i| yb(i, n - i + 1, n, sign_pow(i + 1))));
    br.extend(table_brackets(&t));
    checked(LieAlgebra::with_brackets(n, br)?)
}

pub fn build_c(n: usize, lambda: &[Rational]) -> Result<LieAlgebra> {
    FamilySpec::C {
        n,
        lambda: lambda.to_vec(),
    }
    .validate()?;
    let m = (n - 2) / 2;
    let mut br = chain(n, n - 2);
    br.extend((2..=m + 1).map(|i| yb(i, n - i + 1, n, sign_pow(i - 1))));
    for (l, lam) in lambda.iter().enumerate().map(|(idx, v)| (idx + 1, v)) {
        if lam.is_zero() {
            continue;
        }
        // pairs i < j with i + j = n − 2l + 1
        let s = n + 1 - 2 * l;
        for i in 2..s {
            let j = s - i;
            if i < j {
                br.push(yb(i, j, n, sign_pow(i + 1) * lam));
            }
        }
    }
    checked(LieAlgebra::with_brackets(n, br)?)
}

pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::with_brackets(3, [yb(1, 2, 3, rational::one())]).expect("valid")
}

/// `[X, Y] = Y`.
pub fn r2() -> LieAlgebra {
    LieAlgebra::new(
        2,
        vec!["X".into(), "Y".into()],
        [yb(1, 2, 2, rational::one())],
    )
    .expect("valid")
}

/// `n ⊕ t`: basis of `n` followed by `T_1..T_r`, with
/// `[T_a, X_i] = d_{a,i} X_i` and `[T_a, T_b] = 0`.
pub fn semidirect(n_alg: &LieAlgebra, t: &TorusBasis) -> Result<LieAlgebra> {
    let n = n_alg.dim();
    if t.algebra_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: t.algebra_dim(),
        });
    }
    for (idx, w) in t.weight_vectors().iter().enumerate() {
        if !derivations::diagonal_is_derivation(n_alg, w) {
            return Err(Error::NotADerivation { index: idx });
        }
    }
    let r = t.len();
    let mut labels = n_alg.labels().to_vec();
    labels.extend(default_labels("T", r));
    let mut br: Vec<Bracket> = n_alg
        .constants()
        .iter()
        .map(|(&key, v)| (key, v.clone()))
        .collect();
    for (a, w) in t.weight_vectors().iter().enumerate() {
        for (i, d) in w.iter().enumerate() {
            if !d.is_zero() {
                br.push(((n + a, i), vec![(i, d.clone())]));
            }
        }
    }
    checked(LieAlgebra::new(n + r, labels, br)?)
}

/// `g ⊕ diagonal_torus(g)`.
pub fn with_diagonal_torus(g: &LieAlgebra) -> Result<LieAlgebra> {
    semidirect(g, &derivations::diagonal_torus(g))
}

/// The complete solvable algebra `r_h = A_{k+h+3}^k(λ) ⊕ t` with the data
/// needed for its deformation cocycles.
#[derive(Clone, Debug)]
pub struct RhAlgebra {
    pub k: usize,
    pub h: usize,
    pub lambda: Vec<Rational>,
    pub nilradical: LieAlgebra,
    pub torus: TorusBasis,
    pub algebra: LieAlgebra,
    pub table: CoefficientTable,
}

pub fn build_r_h(k: usize, h: usize, lambda: &[Rational]) -> Result<RhAlgebra> {
    FamilySpec::Rh {
        k,
        h,
        lambda: lambda.to_vec(),
    }
    .validate()?;
    let n = k + h + 3;
    let nilradical = build_a(n, k, lambda)?;
    let table = coefficient_table(n, k, lambda)?;
    let torus = derivations::diagonal_torus(&nilradical);
    let algebra = semidirect(&nilradical, &torus)?;
    Ok(RhAlgebra {
        k,
        h,
        lambda: lambda.to_vec(),
        nilradical,
        torus,
        algebra,
        table,
    })
}

impl RhAlgebra {
    pub fn parameter_count(&self) -> usize {
        self.lambda.len()
    }

    /// `φ_which` (1-based): `(Y_i, Y_j) ↦ α_ij^which Y_{i+j+k−2}`, zero on
    /// the torus. The derivative of the bracket in the direction `λ_which`.
    pub fn deformation_cocycle(&self, which: usize) -> Result<Cochain> {
        if which == 0 || which > self.parameter_count() {
            return Err(Error::IndexOutOfRange {
                index: which,
                max: self.parameter_count(),
            });
        }
        let dim = self.algebra.dim();
        let mut c = Cochain::zero(dim, 2);
        for (&(i, j), alpha) in &self.table.lambda_coeffs {
            let a = &alpha[which - 1];
            if a.is_zero() {
                continue;
            }
            let mut v = vec![Rational::zero(); dim];
            v[self.table.target(i, j) - 1] = a.clone();
            c.set(&[i - 1, j - 1], v)?;
        }
        if c.is_zero() {
            return Err(invalid(format!(
                "phi_{which} has an all-zero coefficient table"
            )));
        }
        Ok(c)
    }

    pub fn deformation_cocycles(&self) -> Result<Vec<Cochain>> {
        (1..=self.parameter_count())
            .map(|w| self.deformation_cocycle(w))
            .collect()
    }
}

/// Builds the algebra a spec describes.
pub fn build_family(spec: &FamilySpec) -> Result<LieAlgebra> {
    spec.validate()?;
    match spec {
        FamilySpec::L { n } => build_l(*n),
        FamilySpec::Q { n } => build_q(*n),
        FamilySpec::A { n, k, lambda } => build_a(*n, *k, lambda),
        FamilySpec::B { n, k, lambda } => build_b(*n, *k, lambda),
        FamilySpec::C { n, lambda } => build_c(*n, lambda),
        FamilySpec::Rh { k, h, lambda } => Ok(build_r_h(*k, *h, lambda)?.algebra),
        FamilySpec::Semidirect(inner) => with_diagonal_torus(&build_family(inner)?),
        FamilySpec::Heisenberg => Ok(heisenberg()),
        FamilySpec::R2 => Ok(r2()),
        FamilySpec::Abelian { n } => Ok(LieAlgebra::abelian(*n)),
    }
}
