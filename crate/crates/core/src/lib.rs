//! Exact-arithmetic workbench for finite-dimensional algebraic structures
//! over the rational field.
//!
//! The crate represents algebras, bimodules, Hopf algebras, coalgebras and
//! corings by explicit structure constants and decides — emitting
//! machine-checkable certificates — whether the associated functor pairs
//! between module/comodule categories are Frobenius of the first or second
//! kind.  Every computation is carried out in arbitrary-precision rational
//! arithmetic; there are no tolerances anywhere.
//!
//! Module map:
//!
//! - [`exactla`]: dense rational matrices, kernels, solving, Kronecker
//!   products and subspaces — the linear-algebra substrate.
//! - [`algebra`]: finite-dimensional unital associative algebras and
//!   algebra morphisms.
//! - [`bimodule`]: bimodules with commuting actions, balanced tensor
//!   products, hom spaces, centralizers, projectivity and isomorphism
//!   search.
//! - [`frobenius`]: adjoint-pair and Frobenius-pair decision procedures for
//!   module categories, Morita contexts, ring extensions.
//! - [`hopf`]: Hopf algebras, integrals, the fundamental isomorphism and
//!   the Frobenius verdict for the extension of the base field.
//! - [`coalgebra`]: coalgebras, comodules, cotensor products and the
//!   comodule-side decision procedures.
//! - [`coring`]: corings, their comodules, and the Frobenius decision for
//!   the forgetful functor.

pub mod algebra;
pub mod bimodule;
pub mod coalgebra;
pub mod coring;
pub mod error;
pub mod exactla;
pub mod frobenius;
pub mod hopf;
pub mod report;
pub mod verdict;

pub use error::Error;
pub use exactla::{Mat, Scalar, Subspace};
pub use report::CheckReport;
pub use verdict::Verdict;
