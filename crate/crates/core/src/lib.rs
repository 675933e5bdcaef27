//! Exact computations on finite-dimensional Lie algebras over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`] and [`linalg`] provide the exact scalar and the rank /
//!   nullspace / affine-solve kernel every other module relies on.
//! * [`lie`] holds [`LieAlgebra`] (sparse structure constants) together with
//!   Jacobi verification, the center, the lower central series and
//!   characteristic sequences of nilpotent algebras.
//! * [`cohomology`] assembles the Chevalley-Eilenberg coboundary with values
//!   in the adjoint module and computes `dim Z^p`, `dim B^p`, `dim H^p`.
//! * [`derivations`] computes `Der(g)`, inner derivations, diagonal tori,
//!   weight systems and the completeness verdict `H^0 = H^1 = 0`.
//! * [`families`] builds the filiform families `L_n`, `Q_n`, `A_n^k`,
//!   `B_n^k`, `C_n`, semidirect products with tori and the complete
//!   solvable algebras `r_h` together with their deformation cocycles.
//! * [`io`] and [`reproduce`] cover the JSON documents and the batch report.
//!
//! With the default `parallel` feature the batch-style inner loops (Jacobi
//! triples, weight blocks of the coboundary, corpus checks) run on rayon;
//! without it the same code runs sequentially and produces identical output.

pub mod cohomology;
pub mod derivations;
pub mod error;
pub mod families;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod par;
pub mod rational;
pub mod reproduce;

pub use cohomology::{Cochain, CochainIndex, CohomologyDims};
pub use derivations::{
    CompletenessVerdict, DerivationSpace, RankCertificate, TorusBasis, WeightSystem,
};
pub use error::{Error, Result};
pub use families::{CoefficientTable, FamilySpec, RhAlgebra};
pub use lie::{CharacteristicSequence, JacobiViolation, LieAlgebra, Subspace};
pub use linalg::{AffineSolution, MatrixQ, VectorQ};
pub use rational::Rational;
