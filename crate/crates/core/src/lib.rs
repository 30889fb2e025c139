#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]
//! Exact super-immanants of supermatrices over supercommutative algebras,
//! supersymmetric Schur polynomials, and machine checks of the identities
//! connecting them.

extern crate alloc;

pub mod error;
pub mod mutation;
pub mod superimm;
pub mod superring;
pub mod supersym;
pub mod symgroup;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigInt;

/// Exact rational coefficients.
pub type Q = num_rational::BigRational;
