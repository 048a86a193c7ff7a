//! Spectral analysis of real skew-symmetric matrices, constructive
//! quasi-orthogonal extensions, and exact integer characteristic-polynomial
//! classification of tournament skew-adjacency matrices.
//!
//! The floating pipeline (`linalg`, `spectral`, `extension`) reduces every
//! eigenproblem on a skew-symmetric `S` to the symmetric positive
//! semidefinite matrix `-S^2 = S^T S`, so the nonzero spectrum
//! `{+-i*lambda_j}` is recovered from real eigenvalues `lambda_j^2`. The
//! exact pipeline (`exactpoly`, `tournament`) works over arbitrary-precision
//! integers and never rounds. `verify` cross-checks the two against each
//! other and against an independent eigenvalue-shift oracle.

pub mod error;
pub mod exactpoly;
pub mod extension;
pub mod linalg;
pub mod rng;
pub mod spectral;
pub mod tournament;
pub mod verify;

pub use error::Error;
