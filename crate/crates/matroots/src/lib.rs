//! matroots: exact rational solutions of polynomial matrix equations p(X) = A.
//!
//! Given A ∈ Mₙ(ℚ) with irreducible characteristic polynomial f and a
//! rational polynomial p, solvability of p(X) = A is equivalent to the
//! composition f(p(λ)) having an irreducible factor of degree n over ℚ,
//! and the rational solutions correspond one-to-one to those factors.
//! Everything here is exact: arbitrary-precision rationals, no rounding.
//!
//! The examples directory walks through each capability:
//!
//! - `decide`: solvability without construction
//! - `enumerate`: all rational solutions, one per degree-n factor
//! - `drazin`: the eigenvector-based construction, cross-checked
//! - `factor`: complete factorization over ℚ
//! - `simple`: blockwise solving for squarefree characteristic polynomials
//! - `nonderogatory`: the sufficient-condition report for repeated factors
//! - `element_charpoly`: number field arithmetic and dual char-poly routes
//!
//! A thin `matroots` binary exposes the same operations over JSON problem
//! files; see [`cli`].

pub mod cli;
pub mod factor;
pub mod matrix;
pub mod numberfield;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod solver;
pub mod structured;

pub use factor::{factor_over_q, FactorConfig, FactorError, Factorization};
pub use matrix::{LinAlgError, RatMatrix};
pub use numberfield::{admissible_gammas, FieldError, NFElement, NumberField};
pub use poly::{PolyError, UniPoly};
pub use rational::{parse_rational, Rational};
pub use solver::{
    decide, enumerate_solutions, solve_drazin, solve_from_factor, verify_solution,
    CompanionMatrix, Decision, SolveError, SolveReport,
};
pub use structured::{
    companion_jordan, condition13_holds, is_nonderogatory, is_simple, nondero_report,
    solve_simple, CompanionJordanForm, NonderoReport, NonderoVerdict, StructuredError,
};
