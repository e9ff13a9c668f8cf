//! Exact cohomology of the modular Lie algebras `sl3` and `gl3` with
//! coefficients in restricted modules over a prime field `F_p`, `p > 3`.
//!
//! The pipeline is
//!
//! 1. [`field`] / [`linalg`]: prime-field arithmetic and exact elimination,
//! 2. [`liealg`]: Chevalley basis, structure constants, weights, Weyl group,
//! 3. [`repr`]: restricted Verma, Weyl, simple, dual and induced modules,
//! 4. [`complex`]: the Chevalley–Eilenberg cochain complex graded by torus weight,
//! 5. [`cohom`]: cohomology dimensions, composition factors and consistency checks.
//!
//! [`suite`] holds the expectation tables the `verify` subcommand runs and
//! [`report`] the JSON/CSV/text serialisation of results.
//!
//! All dimensions are computed over the prime field `F_p`. Ranks of matrices
//! with entries in `F_p` do not change under extension of scalars, so every
//! dimension reported here is also the dimension over the algebraic closure.

pub mod cache;
pub mod cohom;
pub mod complex;
pub mod field;
pub mod liealg;
pub mod linalg;
pub mod report;
pub mod repr;
pub mod suite;

pub use cohom::{CohomologyReport, DegreeReport, Factor};
pub use complex::GradedComplex;
pub use field::{FieldError, PrimeField};
pub use liealg::{AlgebraKind, LieAlgebraSpec, Weight};
pub use linalg::{SparseMat, SubspaceBasis};
pub use repr::{ModuleFamily, ModuleLabel, Representation};

/// Version string baked into cache keys and reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
