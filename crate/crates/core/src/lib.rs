//! Exact construction and verification of Lax operators and vector-module
//! R-matrices for the quantised orthosymplectic superalgebra `Uq[osp(2|n)]`.
//!
//! All arithmetic happens in the ring of Laurent polynomials in
//! `s = q^(1/2)` with arbitrary-precision rational coefficients; nothing in
//! the crate touches floating point. The main pieces:
//!
//! - [`scalar`]: the coefficient ring.
//! - [`weights`], [`basis`]: roots, weights and the graded basis of the
//!   `(n+2)`-dimensional vector module.
//! - [`matrix`]: sparse graded matrices with the tensor sign calculus baked
//!   into the product.
//! - [`rep`]: the vector representation, coproduct images and adjoint
//!   actions.
//! - [`sigma`]: the sigma-operator table, built by recursion from the simple
//!   values and compared against its closed form.
//! - [`rmatrix`]: assembly of the vector R-matrix and its opposite.
//! - [`verify`]: exact checks (defining relations, Yang-Baxter, fusion,
//!   extra q-Serre, the appendix catalogue, classical point).
//! - [`export`]: deterministic serialization used by the command-line tool.

pub mod basis;
pub mod error;
pub mod export;
pub mod matrix;
pub mod rep;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod sigma;
pub mod verify;
pub mod weights;

pub use basis::BasisTable;
pub use error::Error;
pub use matrix::GradedMatrix;
pub use rep::Rep;
pub use report::{Mode, VerificationReport};
pub use scalar::{Laurent, Rational};
