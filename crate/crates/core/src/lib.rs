//! Operator family of the N-point discrete Fourier transform.
//!
//! The transform Phi intertwines a two-parameter family of cyclic
//! tridiagonal operators; the canonical members A and A^dagger combine
//! into the Hermitian pair X, Y whose commutator closes three related
//! algebras (a cubic one, an Askey-Wilson one, and a Heun-type one),
//! each with its own Casimir. This crate constructs every named
//! operator over two interchangeable scalar backends - exact cyclotomic
//! arithmetic in Q(zeta_M) and complex doubles - and evaluates each
//! algebraic identity as a residual, exactly or against a tolerance.
//!
//! Layout:
//! - [`cyclo`]: the exact field Q(zeta_M) and cyclotomic polynomials
//! - [`scalar`]: the backend abstraction shared by all computations
//! - [`matrix`]: dense matrices and exact Gaussian elimination
//! - [`operators`]: constructors for Phi/F, A, A^dagger, X, Y, C, Z,
//!   Z~, S, W, P_d and the so3(q) generators
//! - [`relations`]: residual checks and structure constants
//! - [`spectral`]: eigenvalue reports, exact ranks, overlaps, the
//!   circulant reduction and the ladder construction
//! - [`report`]: verdicts shared by the relation and spectral checks

pub mod cyclo;
pub mod error;
pub mod matrix;
pub mod operators;
pub mod relations;
pub mod report;
pub mod scalar;
pub mod spectral;

pub use cyclo::{field_order_for, CycloField, CycloScalar};
pub use error::{AlgebraError, Result};
pub use matrix::SquareMatrix;
pub use operators::IntertwinerParams;
pub use relations::{structure_constants, StructureConstants};
pub use report::{RelationId, RelationReport, Verdict};
pub use scalar::{Backend, BackendKind, ExactBackend, FloatBackend, Scalar};
pub use spectral::{LadderReport, OverlapTable, SpectralReport};
